// Black-box checks of the command-line binary: output texts, exit codes,
// determinism, and JSON-lines round-tripping. The binary path comes in as
// argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << "\n";
        std::exit(3);
    }
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
        r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

std::string write_tmp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_checks <binary>\n";
        return 3;
    }
    std::string bin = argv[1];

    std::string cubic = write_tmp("slpfactor_cli_cubic.slp",
                                  "inputs Y\n"
                                  "const c2 = 2\n"
                                  "const c1 = 1\n"
                                  "v1 = mul Y Y\n"
                                  "v2 = mul v1 Y\n"
                                  "v3 = mul c2 Y\n"
                                  "v4 = add v2 v3\n"
                                  "v5 = add v4 c1\n"
                                  "output v5\n");
    std::string fh = write_tmp("slpfactor_cli_fh.slp",
                               "inputs X Y\n"
                               "const c1 = 1\n"
                               "v1 = mul Y Y\n"
                               "v2 = add v1 X\n"
                               "v3 = mul v2 v2\n"
                               "v4 = add Y c1\n"
                               "v5 = mul v3 v4\n"
                               "output v5\n");

    // p-adic table of Y^3 + 2Y + 1 for p = Y^2 + 1
    auto padic = run(bin + " padic " + cubic + " --p 'Y^2+1'");
    expect(padic.code == 0, "padic exits 0");
    expect(padic.out == "a0: Y + 1\na1: Y\n", "padic table text");

    // determinism: identical invocations give identical bytes
    auto padic2 = run(bin + " padic " + cubic + " --p 'Y^2+1'");
    expect(padic.out == padic2.out, "padic output is deterministic");

    // JSON-lines output parses and round-trips byte-for-byte
    auto js = run(bin + " --format json-lines padic " + cubic + " --p 'Y^2+1'");
    expect(js.code == 0, "json padic exits 0");
    {
        std::istringstream in(js.out);
        std::string line, rebuilt;
        bool parse_ok = true;
        while (std::getline(in, line)) {
            try {
                rebuilt += nlohmann::json::parse(line).dump() + "\n";
            } catch (...) {
                parse_ok = false;
            }
        }
        expect(parse_ok, "json lines parse");
        expect(rebuilt == js.out, "json round trip is idempotent");
    }

    // factor via Hensel lifting
    auto fac = run(bin + " factor " + fh +
                   " --method hensel --deg-g 2 --mult 2 --g0 Y^2 --h0 'Y+1'");
    expect(fac.code == 0, "hensel factor exits 0");
    expect(fac.out.find("g = Y^2 + X\n") == 0, "hensel factor prints the factor");

    // missing required flag is a usage error
    auto miss = run(bin + " factor " + fh + " --deg-g 2");
    expect(miss.code == 2, "missing --mult exits 2");

    // mathematical failure maps to exit 1
    auto badroot = run(bin + " root " + cubic + " --mult 2");
    expect(badroot.code == 1, "imperfect power exits 1");

    // demo checks
    auto demo = run(bin + " demo-example31");
    expect(demo.code == 0, "demo exits 0");
    expect(demo.out.find("check degree-4-pole: ok") != std::string::npos,
           "demo prints the pole check");
    auto demo2 = run(bin + " demo-example31 --truncate 2");
    expect(demo2.code == 0, "truncated demo exits 0");
    expect(demo2.out.find("skipped") != std::string::npos,
           "truncated demo skips the pole check");
    auto demo3 = run(bin + " demo-example31 --corrupt");
    expect(demo3.code == 1, "corrupted demo exits 1");

    // unparsable circuit file is a usage error
    std::string junk = write_tmp("slpfactor_cli_junk.slp", "inputs X\noutput v9\n");
    auto bad = run(bin + " expand " + junk);
    expect(bad.code == 2, "parse error exits 2");

    if (failures == 0) std::cout << "cli checks passed\n";
    return failures == 0 ? 0 : 1;
}
