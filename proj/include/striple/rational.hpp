/**
 * @file rational.hpp
 * @brief Exact rationals on top of GMP integers, with exact square detection.
 *
 * Rational stores numerator/denominator as mpz_class, denominator always > 0,
 * gcd(|num|, den) = 1. Canonicalized after construction and every arithmetic
 * operation, so equality and square tests are decisions on the canonical form.
 * No floating point is used anywhere.
 */
#ifndef STRIPLE_RATIONAL_HPP
#define STRIPLE_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace striple {

using Integer = mpz_class;

// floor(sqrt(n)) by Newton iteration on integers, plus exactness flag.
// Pre: n >= 0.
std::pair<Integer, bool> integer_sqrt(const Integer& n);

class Rational {
private:
    Integer num_;
    Integer den_; // always > 0

    void canonicalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (num_ == 0) { den_ = 1; return; }
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Integer g;
        mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        if (g != 1) { num_ /= g; den_ /= g; }
    }

public:
    // ---- constructors ----
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}
    Rational(const Integer& v) : num_(v), den_(1) {}
    Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }
    Rational(long num, long den) : num_(num), den_(den) { canonicalize(); }

    // ---- accessors ----
    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sgn() const { return mpz_sgn(num_.get_mpz_t()); }

    // ---- comparison ----
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // ---- arithmetic ----
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    // ---- text form "p/q" (or "p") ----
    std::string str() const;
    static Rational parse(std::string_view text);
};

inline Rational abs(const Rational& q) { return q.sgn() < 0 ? -q : q; }

Rational pow(const Rational& base, long exp);

// Exact square root: r >= 0 with r^2 = x, or absent when x is not a rational
// square. In reduced form x >= 0 is a square iff |num| and den both are.
std::optional<Rational> square_root_exact(const Rational& x);

// max(|num|, den) of the reduced form; the search bound metric.
Integer height(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace striple

#endif
