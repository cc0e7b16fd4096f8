#include "slpfactor/rat.hpp"

namespace slpfactor {

std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    try {
        Rat q(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

std::optional<Rat> rat_root(const Rat& x, unsigned long e) {
    if (e == 0) return std::nullopt;
    if (sgn(x) < 0 && e % 2 == 0) return std::nullopt;
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), e)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), e)) return std::nullopt;
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

Rat rat_pow(const Rat& x, long e) {
    if (e < 0) return rat_pow(inv(x), -e);
    Rat acc(1), base = x;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace slpfactor
