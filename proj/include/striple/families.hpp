/**
 * @file families.hpp
 * @brief The three parametric constructions of strong rational D(-1) pairs
 *        and triples: family A over u, family B over w, family C over t.
 *
 * Family A: b = (4u^4+1)/(4u^2); the condition bc-1 = square is the quartic
 * (16u^4+4)v^4 - 16u^2 v^2 + 4u^4+1 = z^2, bridged to the curve
 * Y^2 = X(X+32u^4+8)(X+16u^4-16u^2+4) with generator P = [-4(4u^4+1), 16u(4u^4+1)].
 * Multiples mP pull back to v, and c = (4v^4+1)/(4v^2) completes {1, b, c}.
 *
 * Family B substitutes u = (14+w^2)/(4w) (the subfamily where the 2-isogenous
 * curve gains the extra point with x = 8(2u^2+1)), clears denominators into a
 * rank-2 curve over Q(w), and combines its two generators.
 *
 * Family C extends a = (t^2+1)/(2t) through the quartic
 * alpha^4 + 2 alpha^2 + 1 - a^2 = gamma^2 and the curve
 * Y^2 = (X+2t^2)(X^2+t^6-2t^4+t^2) with generator R = [1-t^2, t^4-1];
 * pullbacks give b = (alpha^2+1)/a.
 */
#ifndef STRIPLE_FAMILIES_HPP
#define STRIPLE_FAMILIES_HPP

#include <array>
#include <string>
#include <vector>

#include "striple/quartic_bridge.hpp"
#include "striple/verify.hpp"

namespace striple {

struct Provenance {
    std::string family; // "A", "B", "C", "search", "input"
    std::vector<std::pair<std::string, std::string>> params;
};

// Sorted ascending, pairwise distinct, positive; all six strong D(-1)
// conditions verified (with witnesses) at construction.
class StrongTriple {
private:
    std::vector<Rational> elements_;
    Provenance prov_;
    VerificationReport report_;

public:
    StrongTriple(std::vector<Rational> elements, Provenance prov);
    const std::vector<Rational>& elements() const { return elements_; }
    const Provenance& provenance() const { return prov_; }
    const VerificationReport& report() const { return report_; }

    friend bool operator==(const StrongTriple& a, const StrongTriple& b) {
        return a.elements_ == b.elements_;
    }
    friend bool operator<(const StrongTriple& a, const StrongTriple& b) {
        return a.elements_ < b.elements_;
    }
};

class StrongPair {
private:
    std::vector<Rational> elements_;
    Provenance prov_;
    VerificationReport report_;

public:
    StrongPair(Rational a, Rational b, Provenance prov);
    const std::vector<Rational>& elements() const { return elements_; }
    const Provenance& provenance() const { return prov_; }
    const VerificationReport& report() const { return report_; }

    friend bool operator==(const StrongPair& a, const StrongPair& b) {
        return a.elements_ == b.elements_;
    }
    friend bool operator<(const StrongPair& a, const StrongPair& b) {
        return a.elements_ < b.elements_;
    }
};

// (4x^4+1)/(4x^2); b - 1 = ((2x^2-1)/(2x))^2 and b + 1 = ((2x^2+1)/(2x))^2,
// so b^2 - 1 is automatically a square. Errors on x = 0.
template <class S>
S strong_completion_value(const S& x) {
    if (x == S{}) throw degenerate_error("b(x) = (4x^4+1)/(4x^2) has a pole at x = 0");
    S x2 = x * x;
    return (S(4) * x2 * x2 + S(1)) / (S(4) * x2);
}
Rational b_of_u(const Rational& u);
Rational c_of_v(const Rational& v);

// ---- family A ----
template <class S>
EllipticCurve<S> family_A_curve(const S& u) {
    S u2 = u * u, u4 = u * u * u * u;
    S f1 = S(32) * u4 + S(8);
    S f2 = S(16) * u4 - S(16) * u2 + S(4);
    return EllipticCurve<S>(f1 + f2, f1 * f2, S{});
}
template <class S>
CurvePoint<S> family_A_point(const S& u) {
    S g = S(4) * u * u * u * u + S(1);
    return CurvePoint<S>(S(-4) * g, S(16) * u * g);
}
template <class S>
QuarticModel<S> family_A_quartic(const S& u) {
    S u2 = u * u, u4 = u2 * u2;
    return QuarticModel<S>(S(16) * u4 + S(4), S{}, S(-16) * u2, S{}, S(4) * u4 + S(1), u,
                           S(4) * u4 - S(1));
}
template <class S>
BirationalBridge<S> family_A_bridge(const S& u) {
    return build_bridge(family_A_quartic(u), family_A_curve(u));
}

StrongTriple family_A_triple(const Rational& u, long m);
// The same computation over Q(u); components {1, b(u), c(u)}. 2 <= m <= 4.
std::array<RationalFunction, 3> family_A_symbolic(long m);

// ---- family B ----
struct FamilyBModel {
    EllipticCurve<RationalFunction> curve;        // C over Q(w)
    CurvePoint<RationalFunction> p, q;            // lifted generators
    RationalFunction x_scale, y_scale;            // X = 16 w^4 x, Y = 64 w^6 y
    RationalFunction u_of_w;                      // (14 + w^2)/(4w)
};
// Constructs C exactly as printed, lifts the generator x-coordinates (the Y
// chosen has positive leading numerator coefficient) and checks that the
// scaling map carries the family A curve at u = u(w) onto C identically.
FamilyBModel family_B_curve_and_points();

// mP + nQ on C specialized at w, mapped back through the scaling map and the
// family A bridge at u(w); returns {1, b(w), c}.
StrongTriple family_B_triple(const Rational& w, long m, long n);

// ---- family C ----
template <class S>
EllipticCurve<S> family_C_curve(const S& t) {
    S t2 = t * t;
    S quad = t2 * t2 * t2 - S(2) * t2 * t2 + t2;
    return EllipticCurve<S>(S(2) * t2, quad, S(2) * t2 * quad);
}
template <class S>
CurvePoint<S> family_C_point(const S& t) {
    S t2 = t * t;
    return CurvePoint<S>(S(1) - t2, t2 * t2 - S(1));
}
template <class S>
QuarticModel<S> family_C_quartic(const S& t) {
    S a = (t * t + S(1)) / (S(2) * t);
    S alpha0 = (t * t - S(1)) / (S(2) * t);
    return QuarticModel<S>(S(1), S{}, S(2), S{}, S(1) - a * a, alpha0, a * alpha0);
}
template <class S>
BirationalBridge<S> family_C_bridge(const S& t) {
    return build_bridge(family_C_quartic(t), family_C_curve(t));
}

Rational family_C_singleton(const Rational& t);     // a = (t^2+1)/(2t)
Rational family_C_closed_form_b(const Rational& t); // (t^4+18t^2+1)/(8t(t^2+1))
StrongPair family_C_closed_form_pair(const Rational& t);
StrongPair family_C_pair(const Rational& t, long k);

// a_i -> a_i - 1: strong D(-1) tuples become strong Eulerian tuples.
std::vector<Rational> to_eulerian(const std::vector<Rational>& elements);

} // namespace striple

#endif
