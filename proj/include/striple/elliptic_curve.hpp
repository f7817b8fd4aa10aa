/**
 * @file elliptic_curve.hpp
 * @brief Curves y^2 = x^3 + a2 x^2 + a4 x + a6 over Q or over Q(param).
 *
 * One curve shape covers everything in this project. Points are affine pairs
 * or infinity, always exact; the group law is the plain chord-tangent law in
 * affine coordinates.
 */
#ifndef STRIPLE_ELLIPTIC_CURVE_HPP
#define STRIPLE_ELLIPTIC_CURVE_HPP

#include <utility>
#include <vector>

#include "striple/errors.hpp"
#include "striple/rational_function.hpp"

namespace striple {

template <class S>
class CurvePoint {
private:
    bool infinity_;
    S x_, y_;
    CurvePoint() : infinity_(true) {}

public:
    CurvePoint(S x, S y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}
    static CurvePoint at_infinity() { return CurvePoint(); }

    bool is_infinity() const { return infinity_; }
    const S& x() const {
        if (infinity_) throw std::domain_error("point at infinity has no affine x");
        return x_;
    }
    const S& y() const {
        if (infinity_) throw std::domain_error("point at infinity has no affine y");
        return y_;
    }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
};

template <class S>
class EllipticCurve {
private:
    S a2_, a4_, a6_;

public:
    EllipticCurve(S a2, S a4, S a6)
        : a2_(std::move(a2)), a4_(std::move(a4)), a6_(std::move(a6)) {
        if (discriminant() == S{})
            throw singular_curve_error("elliptic curve: cubic has a repeated root");
    }

    const S& a2() const { return a2_; }
    const S& a4() const { return a4_; }
    const S& a6() const { return a6_; }

    // discriminant of x^3 + a2 x^2 + a4 x + a6 (zero iff repeated root)
    S discriminant() const {
        return S(18) * a2_ * a4_ * a6_ - S(4) * a2_ * a2_ * a2_ * a6_ +
               a2_ * a2_ * a4_ * a4_ - S(4) * a4_ * a4_ * a4_ - S(27) * a6_ * a6_;
    }

    S rhs(const S& x) const { return ((x + a2_) * x + a4_) * x + a6_; }

    bool on_curve(const CurvePoint<S>& p) const {
        if (p.is_infinity()) return true;
        return p.y() * p.y() == rhs(p.x());
    }

    friend bool operator==(const EllipticCurve& a, const EllipticCurve& b) {
        return a.a2_ == b.a2_ && a.a4_ == b.a4_ && a.a6_ == b.a6_;
    }
    friend bool operator!=(const EllipticCurve& a, const EllipticCurve& b) { return !(a == b); }

    CurvePoint<S> negate(const CurvePoint<S>& p) const {
        if (p.is_infinity()) return p;
        return CurvePoint<S>(p.x(), -p.y());
    }

    CurvePoint<S> add(const CurvePoint<S>& p, const CurvePoint<S>& q) const {
        if (p.is_infinity()) return q;
        if (q.is_infinity()) return p;
        S lambda{};
        if (p.x() == q.x()) {
            if (p.y() + q.y() == S{}) return CurvePoint<S>::at_infinity();
            lambda = (S(3) * p.x() * p.x() + S(2) * a2_ * p.x() + a4_) / (S(2) * p.y());
        } else {
            lambda = (q.y() - p.y()) / (q.x() - p.x());
        }
        S x3 = lambda * lambda - a2_ - p.x() - q.x();
        S y3 = lambda * (p.x() - x3) - p.y();
        return CurvePoint<S>(std::move(x3), std::move(y3));
    }

    CurvePoint<S> scalar_multiple(long m, const CurvePoint<S>& p) const {
        if (m < 0) return negate(scalar_multiple(-m, p));
        CurvePoint<S> acc = CurvePoint<S>::at_infinity();
        CurvePoint<S> base = p;
        while (m > 0) { // double-and-add
            if (m & 1) acc = add(acc, base);
            m >>= 1;
            if (m) base = add(base, base);
        }
        return acc;
    }

    // True iff mP = O for some 1 <= m <= 12; by Mazur's bound a false answer
    // means P has infinite order. Only meaningful over Q.
    bool is_torsion_mazur(const CurvePoint<S>& p) const {
        if (p.is_infinity()) return true;
        CurvePoint<S> acc = p;
        for (int m = 2; m <= 12; ++m) {
            acc = add(acc, p);
            if (acc.is_infinity()) return true;
        }
        return false;
    }
};

// All points (x, 0) with x in the scalar field. Over Q the cubic's rational
// roots are found completely; over Q(param) roots are searched among divisor
// candidates of the constant term (enough for curves printed in factored
// form), with the a6 = 0 and quadratic-discriminant cases handled exactly.
std::vector<CurvePoint<Rational>> two_torsion_points(const EllipticCurve<Rational>& c);
std::vector<CurvePoint<RationalFunction>> two_torsion_points(
    const EllipticCurve<RationalFunction>& c);

// Kernel {O, (0,0)} quotient of y^2 = x(x^2 + ax + b): the image curve is
// y^2 = x(x^2 - 2ax + (a^2-4b)) and (x, y) maps to (y^2/x^2, y(b - x^2)/x^2).
// Precondition a6 = 0.
template <class S>
struct TwoIsogeny {
    EllipticCurve<S> image;
    S a; // a2 of the source
    S b; // a4 of the source

    CurvePoint<S> map(const CurvePoint<S>& p) const {
        if (p.is_infinity() || (p.x() == S{} && p.y() == S{}))
            return CurvePoint<S>::at_infinity();
        S x2 = p.x() * p.x();
        return CurvePoint<S>(p.y() * p.y() / x2, p.y() * (b - x2) / x2);
    }
};

template <class S>
TwoIsogeny<S> two_isogeny(const EllipticCurve<S>& c) {
    if (!(c.a6() == S{}))
        throw std::domain_error("two_isogeny: curve must have a6 = 0 (rational 2-torsion at the origin)");
    const S& a = c.a2();
    const S& b = c.a4();
    return TwoIsogeny<S>{EllipticCurve<S>(S(-2) * a, a * a - S(4) * b, S{}), a, b};
}

// Coefficient-wise evaluation at x0. Throws pole_error on a pole and
// singular_curve_error when the specialized discriminant vanishes.
EllipticCurve<Rational> specialize_curve(const EllipticCurve<RationalFunction>& c,
                                         const Rational& x0);
CurvePoint<Rational> specialize_point(const CurvePoint<RationalFunction>& p,
                                      const Rational& x0);

// Yun's squarefree decomposition: p = prod comp_i^i with comp_i squarefree.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

} // namespace striple

#endif
