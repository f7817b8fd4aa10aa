/**
 * @file quartic_bridge.hpp
 * @brief Birational correspondence between z^2 = quartic(v) with a marked
 *        rational point and a Weierstrass model y^2 = x^3 + a2 x^2 + a4 x + a6.
 *
 * Construction route, in three steps:
 *   1. translate the marked point (v0, z0) to v = 0, so the shifted quartic
 *      a v^4 + b v^3 + c v^2 + d v + e^2 has square constant term (e = z0);
 *   2. for e != 0, the classical maps
 *        x = (2e(z+e) + dv)/v^2,
 *        y = (4e^2(z+e) + 2e(cv^2+dv) - d^2 v^2/(2e))/v^3
 *      land on y^2 + (d/e)xy + 2eb y = x^3 + a2' x^2 + a4' x + a2' a4' with
 *      a2' = c - d^2/(4e^2), a4' = -4e^2 a; completing the square gives the
 *      a1 = a3 = 0 shape. For e = 0 (marked point a root of the quartic) the
 *      degree-3 reduction v = v0 + c1/x applies instead;
 *   3. when a target model is requested, solve for the linear change
 *      x = s X + mu, y = c3 Y from the c4/c6 invariant ratios and verify the
 *      three coefficient identities exactly. The match is verified, never
 *      assumed.
 *
 * Sign conventions: (v, z) and (v, -z) parametrize the same fiber; the bridge
 * reports the representative it computes and never canonicalizes signs.
 */
#ifndef STRIPLE_QUARTIC_BRIDGE_HPP
#define STRIPLE_QUARTIC_BRIDGE_HPP

#include <optional>
#include <string>
#include <utility>

#include "striple/elliptic_curve.hpp"
#include "striple/quad_ext.hpp"

namespace striple {

class target_mismatch_error : public std::domain_error {
public:
    explicit target_mismatch_error(const std::string& msg) : std::domain_error(msg) {}
};

template <class S>
class QuarticModel {
private:
    S a4_, a3_, a2_, a1_, a0_;
    S v0_, z0_;

public:
    // z^2 = a4 v^4 + a3 v^3 + a2 v^2 + a1 v + a0 with marked point (v0, z0)
    QuarticModel(S a4, S a3, S a2, S a1, S a0, S v0, S z0)
        : a4_(std::move(a4)), a3_(std::move(a3)), a2_(std::move(a2)), a1_(std::move(a1)),
          a0_(std::move(a0)), v0_(std::move(v0)), z0_(std::move(z0)) {
        if (!(z0_ * z0_ == (*this)(v0_)))
            throw std::domain_error("quartic model: marked point does not satisfy the equation");
        BasicPolynomial<S> q({a0_, a1_, a2_, a3_, a4_}, 'v');
        if (q.degree() < 3)
            throw std::domain_error("quartic model: degree must be 3 or 4");
        if (poly_gcd(q, q.derivative()).degree() > 0)
            throw std::domain_error("quartic model: polynomial is not squarefree");
    }

    template <class T>
    T operator()(const T& v) const {
        return (((T(a4_) * v + T(a3_)) * v + T(a2_)) * v + T(a1_)) * v + T(a0_);
    }
    S coeff(int k) const {
        switch (k) {
            case 0: return a0_;
            case 1: return a1_;
            case 2: return a2_;
            case 3: return a3_;
            case 4: return a4_;
        }
        throw std::out_of_range("quartic coefficient index");
    }
    const S& marked_v() const { return v0_; }
    const S& marked_z() const { return z0_; }

    bool contains(const S& v, const S& z) const { return z * z == (*this)(v); }
};

template <class S>
class BirationalBridge {
private:
    QuarticModel<S> quartic_;
    EllipticCurve<S> target_;
    // shifted quartic q(v0 + V) = qa V^4 + qb V^3 + qc V^2 + qd V + e^2
    S qa_, qb_, qc_, qd_, e_;
    bool root_route_; // e = 0: degree-3 reduction
    S a1_, a3_;       // cross terms of the intermediate general model
    S s_, mu_, c3_;   // linear change onto the target
    std::string fwd_locus_, bwd_locus_;

    template <class T, class Lift>
    std::pair<T, T> forward_in(const T& v, const T& z, Lift lf) const {
        T shift = v - lf(quartic_.marked_v());
        T x1{}, y1{};
        if (root_route_) {
            // v = v0 + qd/x, z = qd*y/x^2 on y^2 = x^3 + qc x^2 + qd*qb x + qd^2*qa
            x1 = lf(qd_) / shift;
            y1 = lf(qd_) * z / (shift * shift);
        } else {
            T e = lf(e_);
            T two_e = lf(S(2) * e_);
            T x = (two_e * (z + e) + lf(qd_) * shift) / (shift * shift);
            T y = (lf(S(4) * e_ * e_) * (z + e) + two_e * (lf(qc_) * shift + lf(qd_)) * shift -
                   lf(qd_ * qd_ / (S(2) * e_)) * shift * shift) /
                  (shift * shift * shift);
            x1 = x;
            y1 = y + (lf(a1_) * x + lf(a3_)) / T(2);
        }
        return {(x1 - lf(mu_)) / lf(s_), y1 / lf(c3_)};
    }

    template <class T, class Lift>
    std::pair<T, T> backward_in(const T& x, const T& y, Lift lf) const {
        T x1 = lf(s_) * x + lf(mu_);
        T y1 = lf(c3_) * y;
        if (root_route_) {
            T v = lf(quartic_.marked_v()) + lf(qd_) / x1;
            T z = lf(qd_) * y1 / (x1 * x1);
            return {v, z};
        }
        T yg = y1 - (lf(a1_) * x1 + lf(a3_)) / T(2);
        T e = lf(e_);
        T shift = (lf(S(2) * e_) * (x1 + lf(qc_)) - lf(qd_ * qd_ / (S(2) * e_))) / yg;
        T z = (x1 * shift * shift - lf(qd_) * shift - lf(S(2) * e_ * e_)) / lf(S(2) * e_);
        return {lf(quartic_.marked_v()) + shift, z};
    }

    static S lift_id(const S& c) { return c; }

public:
    BirationalBridge(QuarticModel<S> quartic, EllipticCurve<S> target, S qa, S qb, S qc, S qd,
                     S e, bool root_route, S a1, S a3, S s, S mu, S c3, std::string fwd_locus,
                     std::string bwd_locus)
        : quartic_(std::move(quartic)), target_(std::move(target)), qa_(std::move(qa)),
          qb_(std::move(qb)), qc_(std::move(qc)), qd_(std::move(qd)), e_(std::move(e)),
          root_route_(root_route), a1_(std::move(a1)), a3_(std::move(a3)), s_(std::move(s)),
          mu_(std::move(mu)), c3_(std::move(c3)), fwd_locus_(std::move(fwd_locus)),
          bwd_locus_(std::move(bwd_locus)) {}

    const EllipticCurve<S>& target() const { return target_; }
    const QuarticModel<S>& quartic() const { return quartic_; }
    const std::string& forward_exceptional_locus() const { return fwd_locus_; }
    const std::string& backward_exceptional_locus() const { return bwd_locus_; }

    CurvePoint<S> forward(const S& v, const S& z) const {
        if (!quartic_.contains(v, z))
            throw std::domain_error("bridge forward: point not on the quartic");
        if (v == quartic_.marked_v())
            throw exceptional_point_error("bridge forward: exceptional locus (" + fwd_locus_ + ")");
        auto [X, Y] = forward_in<S>(v, z, &lift_id);
        return CurvePoint<S>(std::move(X), std::move(Y));
    }

    // Transfer a curve point back to the quartic; errors carry the locus.
    std::pair<S, S> backward(const CurvePoint<S>& p) const {
        if (p.is_infinity())
            throw exceptional_point_error(
                "bridge backward: point at infinity is exceptional (" + bwd_locus_ + ")");
        if (!target_.on_curve(p))
            throw std::domain_error("bridge backward: point not on the target curve");
        S x1 = s_ * p.x() + mu_;
        if (root_route_) {
            if (x1 == S{})
                throw exceptional_point_error("bridge backward: exceptional locus (" + bwd_locus_ + ")");
        } else {
            S yg = c3_ * p.y() - (a1_ * x1 + a3_) / S(2);
            if (yg == S{})
                throw exceptional_point_error("bridge backward: exceptional locus (" + bwd_locus_ + ")");
        }
        return backward_in<S>(p.x(), p.y(), &lift_id);
    }

    // Map components on the generic point, as elements of S(w)[r]/(r^2 - f(w)):
    // forward on the generic quartic point (w the affine v, r the generic z),
    // backward on the generic curve point (w the affine x, r the generic y).
    using Field = BasicRationalFunction<S>;
    using Ext = QuadExt<Field>;

    std::pair<Ext, Ext> forward_components() const {
        Field w = Field::variable('v');
        Ext z = Ext::generator(quartic_(w));
        Ext v(w);
        auto lf = [](const S& c) { return Ext(Field(c)); };
        return forward_in<Ext>(v, z, lf);
    }
    std::pair<Ext, Ext> backward_components() const {
        Field w = Field::variable('x');
        Field cubic =
            ((w + Field(target_.a2())) * w + Field(target_.a4())) * w + Field(target_.a6());
        Ext y = Ext::generator(cubic);
        Ext x(w);
        auto lf = [](const S& c) { return Ext(Field(c)); };
        return backward_in<Ext>(x, y, lf);
    }

    // Symbolic round-trip on the generic point: backward(forward(v, z)) = (v, z)
    // in the function field of the quartic.
    bool roundtrip_identity_holds() const {
        Field w = Field::variable('v');
        Ext z = Ext::generator(quartic_(w));
        Ext v(w);
        auto lf = [](const S& c) { return Ext(Field(c)); };
        auto [X, Y] = forward_in<Ext>(v, z, lf);
        auto [vb, zb] = backward_in<Ext>(X, Y, lf);
        return vb == v && zb == z;
    }
};

// Build the bridge; when target_form is given the result's target equals it
// exactly or a target_mismatch_error describes the failure.
template <class S>
BirationalBridge<S> build_bridge(const QuarticModel<S>& q,
                                 const std::optional<EllipticCurve<S>>& target_form) {
    // shift the marked point to the origin
    BasicPolynomial<S> poly({q.coeff(0), q.coeff(1), q.coeff(2), q.coeff(3), q.coeff(4)}, 'v');
    BasicPolynomial<S> shifted =
        poly.compose(BasicPolynomial<S>({q.marked_v(), S(1)}, 'v'));
    S qa = shifted.coeff(4), qb = shifted.coeff(3), qc = shifted.coeff(2), qd = shifted.coeff(1);
    S e = q.marked_z();
    bool root_route = (e == S{});

    S a1{}, a3{}, b2{}, b4{}, b6{};
    std::string bwd_locus;
    if (root_route) {
        if (qd == S{})
            throw std::domain_error("build_bridge: marked root is a repeated root");
        // y^2 = x^3 + qc x^2 + qd qb x + qd^2 qa
        b2 = qc;
        b4 = qd * qb;
        b6 = qd * qd * qa;
        bwd_locus = "point at infinity and the fiber x = mu of the marked root";
    } else {
        a1 = qd / e;
        a3 = S(2) * e * qb;
        S a2c = qc - qd * qd / (S(4) * e * e);
        S a4c = S(-4) * e * e * qa;
        S a6c = a2c * a4c;
        b2 = a2c + a1 * a1 / S(4);
        b4 = a4c + a1 * a3 / S(2);
        b6 = a6c + a3 * a3 / S(4);
        bwd_locus = "point at infinity and the fiber where 2y*c3 = a1*(s*x+mu) + a3";
    }

    S s(1), mu{}, c3(1);
    EllipticCurve<S> model(b2, b4, b6);
    if (target_form) {
        const S& t2 = target_form->a2();
        const S& t4 = target_form->a4();
        const S& t6 = target_form->a6();
        auto c4of = [](const S& A, const S& B) { return S(16) * A * A - S(48) * B; };
        auto c6of = [](const S& A, const S& B, const S& C) {
            return S(-64) * A * A * A + S(288) * A * B - S(864) * C;
        };
        S c4b = c4of(b2, b4), c6b = c6of(b2, b4, b6);
        S c4t = c4of(t2, t4), c6t = c6of(t2, t4, t6);
        bool matched = false;
        std::vector<S> candidates;
        if (!(c6b == S{}) && !(c6t == S{}) && !(c4b == S{}) && !(c4t == S{})) {
            candidates.push_back((c6b * c4t) / (c6t * c4b));
        } else if (!(c4t == S{})) {
            if (auto r = detail::scalar_sqrt(c4b / c4t)) {
                candidates.push_back(*r);
                candidates.push_back(-*r);
            }
        }
        for (const S& cand : candidates) {
            S m = (t2 * cand - b2) / S(3);
            bool ok = (t4 * cand * cand == S(3) * m * m + S(2) * b2 * m + b4) &&
                      (t6 * cand * cand * cand == m * m * m + b2 * m * m + b4 * m + b6);
            if (!ok) continue;
            auto root = detail::scalar_sqrt(cand * cand * cand);
            if (!root) continue;
            s = cand;
            mu = m;
            c3 = *root;
            matched = true;
            break;
        }
        if (!matched)
            throw target_mismatch_error(
                "build_bridge: requested target is not related to the quartic's Weierstrass "
                "model by a linear change of coordinates (c4/c6 invariant ratios do not give a "
                "consistent scaling)");
        model = *target_form;
    }

    return BirationalBridge<S>(q, model, qa, qb, qc, qd, e, root_route, a1, a3, s, mu, c3,
                               "v = v0 (the marked fiber)", bwd_locus);
}

template <class S>
BirationalBridge<S> build_bridge(const QuarticModel<S>& q) {
    return build_bridge(q, std::optional<EllipticCurve<S>>{});
}

template <class S>
BirationalBridge<S> build_bridge(const QuarticModel<S>& q, const EllipticCurve<S>& target_form) {
    return build_bridge(q, std::optional<EllipticCurve<S>>(target_form));
}

template <class S>
std::pair<S, S> pullback_point(const BirationalBridge<S>& bridge, const CurvePoint<S>& p) {
    return bridge.backward(p);
}

} // namespace striple

#endif
