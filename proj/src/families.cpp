#include "striple/families.hpp"

#include <algorithm>

namespace striple {

namespace {

std::string describe(const Provenance& prov) {
    std::string s = prov.family;
    for (auto& [k, v] : prov.params) s += " " + k + "=" + v;
    return s;
}

} // namespace

StrongTriple::StrongTriple(std::vector<Rational> elements, Provenance prov)
    : elements_(std::move(elements)), prov_(std::move(prov)) {
    if (elements_.size() != 3)
        throw std::invalid_argument("StrongTriple: exactly three elements required");
    for (auto& e : elements_)
        if (e.sgn() <= 0)
            throw std::invalid_argument("StrongTriple: elements are normalized positive");
    std::sort(elements_.begin(), elements_.end());
    report_ = check_dq_tuple(elements_, Rational(-1), /*strong=*/true);
    if (!report_.verdict)
        throw degenerate_error("StrongTriple: conditions fail for candidate from " +
                               describe(prov_));
}

StrongPair::StrongPair(Rational a, Rational b, Provenance prov)
    : elements_{std::move(a), std::move(b)}, prov_(std::move(prov)) {
    for (auto& e : elements_)
        if (e.sgn() <= 0)
            throw std::invalid_argument("StrongPair: elements are normalized positive");
    std::sort(elements_.begin(), elements_.end());
    report_ = check_dq_tuple(elements_, Rational(-1), /*strong=*/true);
    if (!report_.verdict)
        throw degenerate_error("StrongPair: conditions fail for candidate from " +
                               describe(prov_));
}

Rational b_of_u(const Rational& u) { return strong_completion_value(u); }
Rational c_of_v(const Rational& v) { return strong_completion_value(v); }

StrongTriple family_A_triple(const Rational& u, long m) {
    if (u.is_zero()) throw degenerate_error("family A: u = 0 is a pole of b(u)");
    if (m < 2)
        throw degenerate_error("family A: m = " + std::to_string(m) +
                               " does not provide a triple (the pullback of P has v = u, b = c)");
    auto curve = family_A_curve(u);
    auto bridge = family_A_bridge(u);
    auto mp = curve.scalar_multiple(m, family_A_point(u));
    Rational b = b_of_u(u);
    Rational v, c;
    try {
        auto vz = bridge.backward(mp);
        v = vz.first;
    } catch (const exceptional_point_error& ex) {
        throw degenerate_error("family A: multiple m = " + std::to_string(m) + " at u = " +
                               u.str() + " hits an exceptional point (" + ex.what() + ")");
    }
    c = c_of_v(v);
    if (c == b)
        throw degenerate_error("family A: multiple m = " + std::to_string(m) + " at u = " +
                               u.str() + " collapses to b = c");
    return StrongTriple({Rational(1), b, c},
                        Provenance{"A", {{"u", u.str()}, {"m", std::to_string(m)}}});
}

std::array<RationalFunction, 3> family_A_symbolic(long m) {
    if (m < 2 || m > 4)
        throw std::invalid_argument("family_A_symbolic: m must be between 2 and 4");
    RationalFunction u = RationalFunction::variable('u');
    auto curve = family_A_curve(u);
    auto bridge = family_A_bridge(u);
    auto mp = curve.scalar_multiple(m, family_A_point(u));
    auto [v, z] = bridge.backward(mp);
    return {RationalFunction(1), strong_completion_value(u), strong_completion_value(v)};
}

FamilyBModel family_B_curve_and_points() {
    using RF = RationalFunction;
    auto P = [](const char* text) { return parse_polynomial(text, 'w'); };

    RF a2{P("3*w^8+152*w^6+3272*w^4+29792*w^2+115248")};
    Polynomial bnum = P("w^8+56*w^6+1240*w^4+10976*w^2+38416");
    Polynomial quad = P("w^4+20*w^2+196");
    RF a4 = RF(Polynomial(Rational(2)) * bnum * quad * quad);
    EllipticCurve<RF> curve(a2, a4, RF());

    RF x_p = RF(-bnum);
    RF x_q = RF(P("w^2-14") * P("w^2-14") * quad * quad, P("64*w^2"));
    auto lift = [&](const RF& x) {
        auto y = detail::scalar_sqrt(curve.rhs(x));
        if (!y)
            throw std::logic_error("family B: generator x-coordinate does not lift to the curve");
        return CurvePoint<RF>(x, *y);
    };

    RF w = RF::variable('w');
    RF u_of_w = (w * w + RF(14)) / (RF(4) * w);
    RF x_scale = RF(16) * w * w * w * w;
    RF y_scale = RF(64) * w * w * w * w * w * w;
    auto base = family_A_curve(u_of_w);
    if (!(x_scale * base.a2() == a2) || !(x_scale * x_scale * base.a4() == a4))
        throw std::logic_error("family B: scaling map does not carry the base curve onto C");

    return FamilyBModel{curve, lift(x_p), lift(x_q), x_scale, y_scale, u_of_w};
}

StrongTriple family_B_triple(const Rational& w, long m, long n) {
    if (w.is_zero()) throw degenerate_error("family B: w = 0 is a pole of u(w)");
    if (m == 0 && n == 0) throw degenerate_error("family B: combination (0,0) is the identity");
    auto model = family_B_curve_and_points();
    auto curve = specialize_curve(model.curve, w);
    auto pw = specialize_point(model.p, w);
    auto qw = specialize_point(model.q, w);
    auto combo = curve.add(curve.scalar_multiple(m, pw), curve.scalar_multiple(n, qw));
    if (combo.is_infinity())
        throw degenerate_error("family B: combination (" + std::to_string(m) + "," +
                               std::to_string(n) + ") vanishes at w = " + w.str());
    Rational u = model.u_of_w(w);
    CurvePoint<Rational> on_base(combo.x() / model.x_scale(w), combo.y() / model.y_scale(w));
    auto bridge = family_A_bridge(u);
    Rational b = b_of_u(u);
    Rational c;
    try {
        auto vz = bridge.backward(on_base);
        c = c_of_v(vz.first);
    } catch (const exceptional_point_error& ex) {
        throw degenerate_error("family B: combination (" + std::to_string(m) + "," +
                               std::to_string(n) + ") at w = " + w.str() +
                               " hits an exceptional point (" + ex.what() + ")");
    }
    if (c == b)
        throw degenerate_error("family B: combination (" + std::to_string(m) + "," +
                               std::to_string(n) + ") at w = " + w.str() +
                               " collapses to b = c");
    return StrongTriple({Rational(1), b, c},
                        Provenance{"B",
                                   {{"w", w.str()},
                                    {"m", std::to_string(m)},
                                    {"n", std::to_string(n)}}});
}

Rational family_C_singleton(const Rational& t) {
    if (t.is_zero()) throw degenerate_error("family C: t = 0 is a pole of a(t)");
    return (t * t + Rational(1)) / (Rational(2) * t);
}

Rational family_C_closed_form_b(const Rational& t) {
    if (t.is_zero()) throw degenerate_error("family C: t = 0 is a pole of b(t)");
    Rational t2 = t * t;
    return (t2 * t2 + Rational(18) * t2 + Rational(1)) /
           (Rational(8) * t * (t2 + Rational(1)));
}

namespace {
StrongPair make_family_C_pair(const Rational& t, Rational a, Rational b, std::string k_label) {
    // {a, b} and {-a, -b} are the same pair; normalize positive
    if (a.sgn() < 0) {
        a = -a;
        b = -b;
    }
    if (b == a)
        throw degenerate_error("family C: extension collapses to b = a at t = " + t.str());
    if (b.sgn() <= 0)
        throw degenerate_error("family C: extension is not positive at t = " + t.str());
    return StrongPair(a, b, Provenance{"C", {{"t", t.str()}, {"k", std::move(k_label)}}});
}
} // namespace

StrongPair family_C_closed_form_pair(const Rational& t) {
    if (t.is_zero() || t == Rational(1) || t == Rational(-1))
        throw degenerate_error("family C: t in {0, 1, -1} is excluded (a = +-1)");
    return make_family_C_pair(t, family_C_singleton(t), family_C_closed_form_b(t), "closed-form");
}

StrongPair family_C_pair(const Rational& t, long k) {
    if (t.is_zero() || t == Rational(1) || t == Rational(-1))
        throw degenerate_error("family C: t in {0, 1, -1} is excluded (a = +-1)");
    if (k < 1) throw std::invalid_argument("family C: k must be >= 1");
    auto curve = family_C_curve(t);
    auto bridge = family_C_bridge(t);
    auto kr = curve.scalar_multiple(k, family_C_point(t));
    Rational a = family_C_singleton(t);
    Rational alpha;
    try {
        auto az = bridge.backward(kr);
        alpha = az.first;
    } catch (const exceptional_point_error& ex) {
        throw degenerate_error("family C: multiple k = " + std::to_string(k) + " at t = " +
                               t.str() + " hits an exceptional point (" + ex.what() + ")");
    }
    Rational b = (alpha * alpha + Rational(1)) / a;
    return make_family_C_pair(t, a, b, std::to_string(k));
}

std::vector<Rational> to_eulerian(const std::vector<Rational>& elements) {
    std::vector<Rational> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(e - Rational(1));
    return out;
}

} // namespace striple
