#include "striple/rational.hpp"

#include <ostream>

namespace striple {

std::pair<Integer, bool> integer_sqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("integer_sqrt: negative input");
    if (n == 0) return {Integer(0), true};
    // Newton iteration x <- (x + n/x)/2 starting above the root; once the
    // iterate stops decreasing it equals floor(sqrt(n)).
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Integer x = 1;
    x <<= (bits + 1) / 2; // x >= sqrt(n)
    for (;;) {
        Integer y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    // exactness correction (guards the n = x^2 - 1 style boundary cases)
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return {x, x * x == n};
}

std::optional<Rational> square_root_exact(const Rational& x) {
    if (x.sgn() < 0) return std::nullopt;
    auto [rn, okn] = integer_sqrt(x.num());
    if (!okn) return std::nullopt;
    auto [rd, okd] = integer_sqrt(x.den());
    if (!okd) return std::nullopt;
    return Rational(rn, rd);
}

Integer height(const Rational& x) {
    Integer an = ::abs(x.num());
    return an > x.den() ? an : x.den();
}

Rational pow(const Rational& base, long exp) {
    if (exp < 0) return pow(Rational(1) / base, -exp);
    Rational r(1), b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

std::string Rational::str() const {
    std::string s = num_.get_str();
    if (den_ != 1) {
        s += '/';
        s += den_.get_str();
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    std::string s(text);
    auto slash = s.find('/');
    auto check_digits = [&](const std::string& part) {
        if (part.empty()) bad();
        size_t i = (part[0] == '-') ? 1 : 0;
        if (i == part.size()) bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') bad();
    };
    if (slash == std::string::npos) {
        check_digits(s);
        return Rational(Integer(s), Integer(1));
    }
    std::string np = s.substr(0, slash), dp = s.substr(slash + 1);
    check_digits(np);
    check_digits(dp);
    return Rational(Integer(np), Integer(dp));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

} // namespace striple
