/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over an exact scalar field.
 *
 * BasicPolynomial<S> keeps coefficients in ascending degree with no trailing
 * zero (the zero polynomial is the empty list, degree() == -1 sentinel).
 * The variable label is presentational only and does not enter equality.
 * Degrees in this project stay below ~100, so dense storage is enough.
 */
#ifndef STRIPLE_POLYNOMIAL_HPP
#define STRIPLE_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "striple/rational.hpp"

namespace striple {

template <class S>
class BasicPolynomial {
private:
    std::vector<S> coef_; // ascending, canonical
    char var_ = 'u';

    void trim() {
        while (!coef_.empty() && coef_.back() == S{}) coef_.pop_back();
    }

public:
    BasicPolynomial() = default;
    explicit BasicPolynomial(S c, char var = 'u') : var_(var) {
        if (!(c == S{})) coef_.push_back(std::move(c));
    }
    BasicPolynomial(std::vector<S> ascending, char var = 'u')
        : coef_(std::move(ascending)), var_(var) {
        trim();
    }

    static BasicPolynomial variable(char var = 'u') {
        return BasicPolynomial({S{}, S(1)}, var);
    }
    // c * x^k
    static BasicPolynomial monomial(S c, int k, char var = 'u') {
        std::vector<S> v(static_cast<size_t>(k) + 1, S{});
        v.back() = std::move(c);
        return BasicPolynomial(std::move(v), var);
    }

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; } // -1 for zero
    char var() const { return var_; }
    void set_var(char v) { var_ = v; }
    const std::vector<S>& coefficients() const { return coef_; }

    S coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coef_.size())) return S{};
        return coef_[static_cast<size_t>(k)];
    }
    const S& leading() const { return coef_.back(); }

    bool is_constant() const { return coef_.size() <= 1; }
    S constant_value() const { return coef_.empty() ? S{} : coef_[0]; }

    friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
        return a.coef_ == b.coef_;
    }
    friend bool operator!=(const BasicPolynomial& a, const BasicPolynomial& b) {
        return !(a == b);
    }

    // constants do not pin the variable label; the non-constant operand wins
    static char joint_var(const BasicPolynomial& a, const BasicPolynomial& b) {
        return (a.is_constant() && !b.is_constant()) ? b.var_ : a.var_;
    }

    friend BasicPolynomial operator-(const BasicPolynomial& a) {
        std::vector<S> r(a.coef_.size());
        for (size_t i = 0; i < a.coef_.size(); ++i) r[i] = -a.coef_[i];
        return BasicPolynomial(std::move(r), a.var_);
    }
    friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
        std::vector<S> r(std::max(a.coef_.size(), b.coef_.size()), S{});
        for (size_t i = 0; i < a.coef_.size(); ++i) r[i] = a.coef_[i];
        for (size_t i = 0; i < b.coef_.size(); ++i) r[i] = r[i] + b.coef_[i];
        return BasicPolynomial(std::move(r), joint_var(a, b));
    }
    friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
        return a + (-b);
    }
    friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return BasicPolynomial(S{}, joint_var(a, b));
        std::vector<S> r(a.coef_.size() + b.coef_.size() - 1, S{});
        for (size_t i = 0; i < a.coef_.size(); ++i)
            for (size_t j = 0; j < b.coef_.size(); ++j)
                r[i + j] = r[i + j] + a.coef_[i] * b.coef_[j];
        return BasicPolynomial(std::move(r), joint_var(a, b));
    }
    friend BasicPolynomial operator*(const S& c, const BasicPolynomial& a) {
        std::vector<S> r(a.coef_.size());
        for (size_t i = 0; i < a.coef_.size(); ++i) r[i] = c * a.coef_[i];
        return BasicPolynomial(std::move(r), a.var_);
    }

    // Euclidean division; requires b != 0; deg(rem) < deg(b).
    friend std::pair<BasicPolynomial, BasicPolynomial> divmod(const BasicPolynomial& a,
                                                              const BasicPolynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        BasicPolynomial rem = a;
        std::vector<S> q;
        int db = b.degree();
        if (a.degree() >= db) q.assign(static_cast<size_t>(a.degree() - db) + 1, S{});
        while (!rem.is_zero() && rem.degree() >= db) {
            int k = rem.degree() - db;
            S f = rem.leading() / b.leading();
            q[static_cast<size_t>(k)] = f;
            rem = rem - monomial(f, k, a.var_) * b;
        }
        return {BasicPolynomial(std::move(q), a.var_), rem};
    }

    S operator()(const S& x0) const { // Horner
        S acc{};
        for (size_t i = coef_.size(); i-- > 0;) acc = acc * x0 + coef_[i];
        return acc;
    }

    BasicPolynomial derivative() const {
        if (coef_.size() <= 1) return BasicPolynomial(S{}, var_);
        std::vector<S> r(coef_.size() - 1);
        for (size_t i = 1; i < coef_.size(); ++i) r[i - 1] = S(static_cast<int>(i)) * coef_[i];
        return BasicPolynomial(std::move(r), var_);
    }

    BasicPolynomial monic() const {
        if (is_zero()) return *this;
        return (S(1) / leading()) * *this;
    }

    // substitute x -> p(x)
    BasicPolynomial compose(const BasicPolynomial& p) const {
        BasicPolynomial acc(S{}, var_);
        for (size_t i = coef_.size(); i-- > 0;)
            acc = acc * p + BasicPolynomial(coef_[i], var_);
        return acc;
    }
};

// Monic gcd by the Euclidean algorithm, remainders normalized at each step to
// keep coefficients small. Errors when both inputs are zero.
template <class S>
BasicPolynomial<S> poly_gcd(BasicPolynomial<S> a, BasicPolynomial<S> b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("poly_gcd: gcd(0, 0) undefined");
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

namespace detail {
inline std::optional<Rational> scalar_sqrt(const Rational& x) { return square_root_exact(x); }
} // namespace detail

// Exact polynomial square root: q with q^2 = p, or absent. Needs even degree
// and a leading coefficient that is a square in S. The representative
// returned has leading coefficient detail::scalar_sqrt(p.leading()).
template <class S>
std::optional<BasicPolynomial<S>> poly_square_root(const BasicPolynomial<S>& p) {
    using detail::scalar_sqrt;
    if (p.is_zero()) return BasicPolynomial<S>(S{}, p.var());
    if (p.degree() % 2 != 0) return std::nullopt;
    int n = p.degree() / 2;
    auto lead = scalar_sqrt(p.leading());
    if (!lead) return std::nullopt;
    std::vector<S> q(static_cast<size_t>(n) + 1, S{});
    q[static_cast<size_t>(n)] = *lead;
    S two_lead = S(2) * *lead;
    for (int k = n - 1; k >= 0; --k) {
        // coefficient of x^(n+k) in q^2 is 2 q_n q_k + sum over interior pairs
        S acc = p.coeff(n + k);
        for (int i = k + 1; i <= n - 1; ++i) {
            int j = n + k - i;
            if (j >= 0 && j <= n - 1)
                acc = acc - q[static_cast<size_t>(i)] * q[static_cast<size_t>(j)];
        }
        q[static_cast<size_t>(k)] = acc / two_lead;
    }
    BasicPolynomial<S> root(std::move(q), p.var());
    if (!(root * root == p)) return std::nullopt;
    return root;
}

using Polynomial = BasicPolynomial<Rational>;

// Descending-degree human form ("4*u^4-16*u^2+1"); inverse of parse_polynomial.
std::string to_string(const Polynomial& p);
// Parses the same grammar: signed terms "c", "c*v^k", "v^k", "v" (no parentheses).
Polynomial parse_polynomial(std::string_view text, char var);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace striple

#endif
