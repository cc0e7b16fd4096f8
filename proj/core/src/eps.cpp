#include "slpfactor/eps.hpp"

#include <cctype>

namespace slpfactor {

EpsScalar::EpsScalar(RatPoly num, RatPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero_poly()) throw DivisionByZero("eps scalar with zero denominator");
    reduce();
}

void EpsScalar::reduce() {
    if (num_.is_zero_poly()) {
        den_ = RatPoly::constant(Rat(1));
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        RatPoly g = unipoly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divrem(num_, g).first;
            den_ = divrem(den_, g).first;
        }
    }
    // Make the denominator monic.
    if (!(den_.leading() == Rat(1))) {
        Rat s = inv(den_.leading());
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
}

Rat EpsScalar::at_zero() const {
    Rat d0 = den_.coeff(0);
    if (is_zero(d0))
        throw NotDefinedAtZero("element has a pole at eps=0");
    return num_.coeff(0) / d0;
}

long EpsScalar::order() const {
    if (num_.is_zero_poly()) return 0;
    auto ord = [](const RatPoly& p) {
        long i = 0;
        while (is_zero(p.coeff(static_cast<std::size_t>(i)))) ++i;
        return i;
    };
    return ord(num_) - ord(den_);
}

EpsScalar operator+(const EpsScalar& a, const EpsScalar& b) {
    if (a.is_polynomial() && b.is_polynomial()) {
        Rat da = a.den_.coeff(0), db = b.den_.coeff(0);
        return EpsScalar(a.num_.scaled(db) + b.num_.scaled(da),
                         RatPoly::constant(da * db));
    }
    return EpsScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

EpsScalar operator-(const EpsScalar& a, const EpsScalar& b) {
    if (a.is_polynomial() && b.is_polynomial()) {
        Rat da = a.den_.coeff(0), db = b.den_.coeff(0);
        return EpsScalar(a.num_.scaled(db) - b.num_.scaled(da),
                         RatPoly::constant(da * db));
    }
    return EpsScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

EpsScalar operator*(const EpsScalar& a, const EpsScalar& b) {
    return EpsScalar(a.num_ * b.num_, a.den_ * b.den_);
}

EpsScalar operator/(const EpsScalar& a, const EpsScalar& b) {
    if (b.is_zero_val()) throw DivisionByZero("eps scalar division by zero");
    return EpsScalar(a.num_ * b.den_, a.den_ * b.num_);
}

EpsScalar EpsScalar::operator-() const {
    EpsScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

EpsScalar inv(const EpsScalar& x) {
    if (x.is_zero_val()) throw DivisionByZero("inverse of zero eps scalar");
    return EpsScalar(x.den(), x.num());
}

std::string to_string(const EpsScalar& x) {
    if (x.is_polynomial() && x.num().degree() <= 0)
        return to_string(x.num().coeff(0));
    std::string s = "(" + to_string(x.num(), "eps") + ")";
    if (!(x.den() == RatPoly::constant(Rat(1))))
        s += "/(" + to_string(x.den(), "eps") + ")";
    return s;
}

EpsScalar parse_eps_scalar(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw ParseError("empty scalar literal");
    if (t[0] != '(') return EpsScalar(parse_rat(t));
    // (num) or (num)/(den)
    std::size_t depth = 0, close = std::string::npos;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '(') ++depth;
        if (t[i] == ')' && --depth == 0) {
            close = i;
            break;
        }
    }
    if (close == std::string::npos) throw ParseError("unbalanced '(' in '" + text + "'");
    RatPoly num = parse_unipoly(t.substr(1, close - 1), "eps");
    if (close + 1 == t.size())
        return EpsScalar(num, RatPoly::constant(Rat(1)));
    if (t[close + 1] != '/' || close + 2 >= t.size() || t[close + 2] != '(' ||
        t.back() != ')')
        throw ParseError("bad eps scalar literal '" + text + "'");
    RatPoly den = parse_unipoly(t.substr(close + 3, t.size() - close - 4), "eps");
    if (den.is_zero_poly()) throw DivisionByZero("zero denominator in '" + text + "'");
    return EpsScalar(num, den);
}

} // namespace slpfactor
