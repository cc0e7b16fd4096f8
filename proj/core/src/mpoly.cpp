#include "slpfactor/mpoly.hpp"

#include <cctype>
#include <sstream>

namespace slpfactor {

namespace {

std::string monomial_string(const Expo& e, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += i < names.size() ? names[i] : "X" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

template <class S>
std::string poly_string(const MPoly<S>& p, const std::vector<std::string>& names) {
    if (p.is_zero_poly()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += " + ";
        std::string mono = monomial_string(e, names);
        if (mono.empty()) {
            out += to_string(c);
        } else if (is_one(c)) {
            out += mono;
        } else if (is_one(-c)) {
            out += "-" + mono;
        } else {
            out += to_string(c) + "*" + mono;
        }
    }
    return out;
}

} // namespace

std::string to_string(const MPoly<Rat>& p, const std::vector<std::string>& names) {
    return poly_string(p, names);
}

std::string to_string(const MPoly<EpsScalar>& p,
                      const std::vector<std::string>& names) {
    return poly_string(p, names);
}

MPoly<Rat> parse_mpoly(const std::string& text,
                       const std::vector<std::string>& names) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw ParseError("empty polynomial literal");

    MPoly<Rat> result;
    result.set_arity(names.size());
    std::size_t pos = 0;
    auto match_name = [&](std::size_t at) -> long {
        // Longest match wins so that X12 is not read as X1 followed by junk.
        long best = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < names.size(); ++i) {
            const std::string& nm = names[i];
            if (nm.size() > best_len && t.compare(at, nm.size(), nm) == 0) {
                best = static_cast<long>(i);
                best_len = nm.size();
            }
        }
        return best;
    };
    while (pos < t.size()) {
        Rat sign(1);
        while (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
            if (t[pos] == '-') sign = -sign;
            ++pos;
        }
        if (pos >= t.size()) throw ParseError("dangling sign in '" + text + "'");
        Rat coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(t[pos]))) {
            std::size_t start = pos;
            while (pos < t.size() &&
                   (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '/'))
                ++pos;
            coeff = parse_rat(t.substr(start, pos - start));
            have_coeff = true;
        }
        Expo e(names.size(), 0);
        bool have_var = false;
        while (pos < t.size()) {
            if (t[pos] == '*') {
                ++pos;
                continue;
            }
            long v = match_name(pos);
            if (v < 0) break;
            pos += names[static_cast<std::size_t>(v)].size();
            int expo = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                std::size_t estart = pos;
                while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
                    ++pos;
                if (pos == estart) throw ParseError("missing exponent in '" + text + "'");
                expo = std::stoi(t.substr(estart, pos - estart));
            }
            e[static_cast<std::size_t>(v)] += expo;
            have_var = true;
        }
        if (!have_coeff && !have_var)
            throw ParseError("unexpected token at '" + t.substr(pos) + "'");
        result.add_term(std::move(e), sign * coeff);
        if (pos < t.size() && t[pos] != '+' && t[pos] != '-')
            throw ParseError("unexpected token at '" + t.substr(pos) + "'");
    }
    return result;
}

std::vector<std::string> default_var_names(std::size_t n_x, bool with_y) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n_x; ++i)
        names.push_back("X" + std::to_string(i + 1));
    if (with_y) names.push_back("Y");
    return names;
}

} // namespace slpfactor
