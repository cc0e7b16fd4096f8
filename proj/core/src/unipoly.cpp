#include "slpfactor/unipoly.hpp"

#include <cctype>

namespace slpfactor {

std::string to_string(const RatPoly& p, const std::string& var) {
    if (p.is_zero_poly()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        Rat c = p.coeff(static_cast<std::size_t>(i));
        if (is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += to_string(c);
            continue;
        }
        if (c == Rat(1)) {
        } else if (c == Rat(-1)) {
            out += "-";
        } else {
            out += to_string(c) + "*";
        }
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

RatPoly parse_unipoly(const std::string& text, const std::string& var) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw ParseError("empty polynomial literal");

    std::vector<std::pair<Rat, std::size_t>> terms;
    std::size_t pos = 0;
    while (pos < t.size()) {
        Rat sign(1);
        while (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
            if (t[pos] == '-') sign = -sign;
            ++pos;
        }
        if (pos >= t.size()) throw ParseError("dangling sign in '" + text + "'");
        // coefficient part (digits and '/')
        std::size_t start = pos;
        while (pos < t.size() &&
               (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '/'))
            ++pos;
        Rat coeff(1);
        bool have_coeff = pos > start;
        if (have_coeff) coeff = parse_rat(t.substr(start, pos - start));
        if (pos < t.size() && t[pos] == '*') ++pos;
        std::size_t expo = 0;
        if (pos + var.size() <= t.size() && t.compare(pos, var.size(), var) == 0) {
            pos += var.size();
            expo = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                std::size_t estart = pos;
                while (pos < t.size() &&
                       std::isdigit(static_cast<unsigned char>(t[pos])))
                    ++pos;
                if (pos == estart) throw ParseError("missing exponent in '" + text + "'");
                expo = std::stoul(t.substr(estart, pos - estart));
            }
        } else if (!have_coeff) {
            throw ParseError("unexpected token at '" + t.substr(pos) + "'");
        }
        terms.emplace_back(sign * coeff, expo);
        if (pos < t.size() && t[pos] != '+' && t[pos] != '-')
            throw ParseError("unexpected token at '" + t.substr(pos) + "'");
    }

    std::size_t deg = 0;
    for (auto& [c, e] : terms) deg = std::max(deg, e);
    std::vector<Rat> coeffs(deg + 1, Rat(0));
    for (auto& [c, e] : terms) coeffs[e] += c;
    return RatPoly(std::move(coeffs));
}

} // namespace slpfactor
