/**
 * @file rational_function.hpp
 * @brief Reduced ratios of polynomials: the scalar fields Q(u), Q(w), Q(t).
 *
 * Canonical form: gcd(num, den) = 1 and den monic. Two rational functions are
 * equal iff their canonical forms are componentwise equal.
 */
#ifndef STRIPLE_RATIONAL_FUNCTION_HPP
#define STRIPLE_RATIONAL_FUNCTION_HPP

#include "striple/errors.hpp"
#include "striple/polynomial.hpp"

namespace striple {

template <class S>
class BasicRationalFunction {
private:
    BasicPolynomial<S> num_;
    BasicPolynomial<S> den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        if (num_.is_zero()) {
            den_ = BasicPolynomial<S>(S(1), den_.var());
            return;
        }
        auto g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        S lc = den_.leading();
        if (!(lc == S(1))) {
            S inv = S(1) / lc;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

public:
    BasicRationalFunction() : num_(), den_(S(1)) {}
    BasicRationalFunction(S c) : num_(std::move(c)), den_(S(1)) {}
    BasicRationalFunction(int c) : num_(S(c)), den_(S(1)) {}
    BasicRationalFunction(BasicPolynomial<S> p)
        : num_(std::move(p)), den_(S(1), num_.var()) {}
    BasicRationalFunction(BasicPolynomial<S> num, BasicPolynomial<S> den)
        : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    static BasicRationalFunction variable(char var = 'u') {
        return BasicRationalFunction(BasicPolynomial<S>::variable(var));
    }

    const BasicPolynomial<S>& num() const { return num_; }
    const BasicPolynomial<S>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    S constant_value() const { return num_.constant_value() / den_.constant_value(); }
    char var() const { return num_.var(); }

    friend bool operator==(const BasicRationalFunction& a, const BasicRationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BasicRationalFunction& a, const BasicRationalFunction& b) {
        return !(a == b);
    }

    friend BasicRationalFunction operator-(const BasicRationalFunction& a) {
        BasicRationalFunction r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend BasicRationalFunction operator+(const BasicRationalFunction& a,
                                           const BasicRationalFunction& b) {
        return BasicRationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BasicRationalFunction operator-(const BasicRationalFunction& a,
                                           const BasicRationalFunction& b) {
        return a + (-b);
    }
    friend BasicRationalFunction operator*(const BasicRationalFunction& a,
                                           const BasicRationalFunction& b) {
        return BasicRationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BasicRationalFunction operator/(const BasicRationalFunction& a,
                                           const BasicRationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return BasicRationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    BasicRationalFunction& operator+=(const BasicRationalFunction& b) { return *this = *this + b; }
    BasicRationalFunction& operator-=(const BasicRationalFunction& b) { return *this = *this - b; }
    BasicRationalFunction& operator*=(const BasicRationalFunction& b) { return *this = *this * b; }
    BasicRationalFunction& operator/=(const BasicRationalFunction& b) { return *this = *this / b; }

    // Specialization at a scalar point; pole_error when the denominator vanishes.
    S operator()(const S& x0) const {
        S dv = den_(x0);
        if (dv == S{}) throw pole_error("rational function has a pole at the given point");
        return num_(x0) / dv;
    }
};

namespace detail {
// Square root in S(x): with gcd(num, den) = 1 and den monic, f = q^2 iff both
// parts are squares.
template <class S>
std::optional<BasicRationalFunction<S>> scalar_sqrt(const BasicRationalFunction<S>& f) {
    if (f.is_zero()) return BasicRationalFunction<S>();
    auto rn = poly_square_root(f.num());
    if (!rn) return std::nullopt;
    auto rd = poly_square_root(f.den());
    if (!rd) return std::nullopt;
    return BasicRationalFunction<S>(*rn, *rd);
}
} // namespace detail

using RationalFunction = BasicRationalFunction<Rational>;

inline std::optional<RationalFunction> square_root_exact(const RationalFunction& f) {
    return detail::scalar_sqrt(f);
}

std::string to_string(const RationalFunction& f);
RationalFunction parse_rational_function(std::string_view text, char var);
std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

} // namespace striple

#endif
