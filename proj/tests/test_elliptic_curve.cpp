#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "striple/elliptic_curve.hpp"
#include "striple/families.hpp"

#include <random>

using namespace striple;

namespace {
using CurveQ = EllipticCurve<Rational>;
using PointQ = CurvePoint<Rational>;

CurveQ curve_at(long u_num, long u_den = 1) {
    return family_A_curve(Rational(u_num, u_den));
}
} // namespace

TEST_CASE("construction rejects singular cubics") {
    CHECK_THROWS_AS(CurveQ(Rational(0), Rational(0), Rational(0)), singular_curve_error);
    // (x-1)^2 (x+2) = x^3 - 3x + 2
    CHECK_THROWS_AS(CurveQ(Rational(0), Rational(-3), Rational(2)), singular_curve_error);
    CHECK_NOTHROW(CurveQ(Rational(0), Rational(-1), Rational(0)));
}

TEST_CASE("on_curve anchors") {
    // the family A generator lies on the family A curve, symbolically over Q(u)
    RationalFunction u = RationalFunction::variable('u');
    auto cu = family_A_curve(u);
    CHECK(cu.on_curve(family_A_point(u)));

    // specialization of the family C generator at t=2: [-3, 15] on y^2=(x+8)(x^2+36)
    auto c6 = family_C_curve(Rational(2));
    CHECK(c6.on_curve(PointQ(Rational(-3), Rational(15))));
    CHECK(c6.on_curve(PointQ(Rational(-3), Rational(-15))));

    // direct substitution fails: 1*41*5 != 1 on the u=1 curve
    auto c1 = curve_at(1);
    CHECK(!c1.on_curve(PointQ(Rational(1), Rational(1))));
    CHECK(c1.on_curve(PointQ::at_infinity()));
}

TEST_CASE("group law basics") {
    auto c = curve_at(1); // Y^2 = X(X+40)(X+4)
    PointQ p(Rational(-20), Rational(80));
    CHECK(c.on_curve(p));
    CHECK(c.scalar_multiple(1, p) == p);
    CHECK(c.scalar_multiple(0, p).is_infinity());
    CHECK(c.add(p, c.negate(p)).is_infinity());
    CHECK(c.add(p, PointQ::at_infinity()) == p);

    auto p2 = c.add(p, p);
    CHECK(c.on_curve(p2));
    CHECK(c.scalar_multiple(2, p) == p2);
    CHECK(c.scalar_multiple(-2, p) == c.negate(p2));
}

TEST_CASE("group law randomized properties") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 8; ++iter) {
        Rational u(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 4) + 1);
        auto c = family_A_curve(u);
        PointQ g = family_A_point(u);
        // random small multiples of the known point
        auto p = c.scalar_multiple(static_cast<long>(rng() % 3) + 1, g);
        auto q = c.scalar_multiple(static_cast<long>(rng() % 3) + 1, c.negate(g));
        auto r = c.scalar_multiple(static_cast<long>(rng() % 2) + 2, g);
        CHECK(c.add(p, q) == c.add(q, p));
        CHECK(c.add(c.add(p, q), r) == c.add(p, c.add(q, r)));
        CHECK(c.on_curve(c.add(p, q)));
    }
}

TEST_CASE("scalar_multiple distributes") {
    auto c = curve_at(2);
    PointQ g = family_A_point(Rational(2));
    for (long m = -5; m <= 5; ++m)
        for (long n = -5; n <= 5; ++n)
            CHECK(c.scalar_multiple(m + n, g) ==
                  c.add(c.scalar_multiple(m, g), c.scalar_multiple(n, g)));
}

TEST_CASE("two_torsion_points over Q") {
    // u=1: Y^2 = X(X+40)(X+4)
    auto pts = two_torsion_points(curve_at(1));
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == PointQ(Rational(-40), Rational(0)));
    CHECK(pts[1] == PointQ(Rational(-4), Rational(0)));
    CHECK(pts[2] == PointQ(Rational(0), Rational(0)));

    // t=2: Y^2 = (X+8)(X^2+36), X^2+36 has no rational root
    auto pts6 = two_torsion_points(family_C_curve(Rational(2)));
    REQUIRE(pts6.size() == 1);
    CHECK(pts6[0] == PointQ(Rational(-8), Rational(0)));

    // irreducible cubic: y^2 = x^3 + 2 has no rational 2-torsion
    CHECK(two_torsion_points(CurveQ(Rational(0), Rational(0), Rational(2))).empty());

    // non-integral roots: y^2 = (x - 1/2)(x - 1/3)(x + 5)
    Rational r1(1, 2), r2(1, 3), r3(-5);
    CurveQ frac(-(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -(r1 * r2 * r3));
    auto ptsf = two_torsion_points(frac);
    REQUIRE(ptsf.size() == 3);
    CHECK(ptsf[0].x() == r3);
    CHECK(ptsf[1].x() == r2);
    CHECK(ptsf[2].x() == r1);
}

TEST_CASE("two_torsion_points over Q(param)") {
    RationalFunction u = RationalFunction::variable('u');
    auto cu = family_A_curve(u); // a6 = 0, factored quadratic splits
    auto pts = two_torsion_points(cu);
    CHECK(pts.size() == 3);
    for (auto& p : pts) CHECK(cu.on_curve(p));

    RationalFunction t = RationalFunction::variable('t');
    auto ct = family_C_curve(t); // root -2t^2 of the nonzero constant term
    auto ptst = two_torsion_points(ct);
    REQUIRE(ptst.size() == 1);
    CHECK(ptst[0].x() == RationalFunction(-2) * t * t);
}

TEST_CASE("is_torsion_mazur") {
    auto c = curve_at(1);
    CHECK(c.is_torsion_mazur(PointQ(Rational(0), Rational(0)))); // order 2
    CHECK(c.is_torsion_mazur(PointQ::at_infinity()));
    // the generator has infinite order
    CHECK(!c.is_torsion_mazur(PointQ(Rational(-20), Rational(80))));
}

TEST_CASE("generator is non-torsion for random parameters") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 20; ++iter) {
        long num = static_cast<long>(rng() % 30) + 1;
        long den = static_cast<long>(rng() % 12) + 1;
        Rational u(rng() % 2 ? num : -num, den);
        if (u.is_zero()) continue;
        auto c = family_A_curve(u);
        CHECK(!c.is_torsion_mazur(family_A_point(u)));
    }
}

TEST_CASE("two_isogeny") {
    // symbolic identity over Q(u): the image of the family A curve has
    // a2 = -2a, a4 = a^2 - 4b = 16(2u^2+1)^4
    RationalFunction u = RationalFunction::variable('u');
    auto cu = family_A_curve(u);
    auto iso = two_isogeny(cu);
    Polynomial expect_a4 =
        Polynomial(Rational(16)) * parse_polynomial("2*u^2+1", 'u') *
        parse_polynomial("2*u^2+1", 'u') * parse_polynomial("2*u^2+1", 'u') *
        parse_polynomial("2*u^2+1", 'u');
    CHECK(iso.image.a4() == RationalFunction(expect_a4));
    CHECK(iso.image.a2() == RationalFunction(parse_polynomial("-96*u^4+32*u^2-24", 'u')));
    CHECK(iso.image.a6() == RationalFunction());

    // kernel maps to infinity
    auto c1 = curve_at(1);
    auto iso1 = two_isogeny(c1);
    CHECK(iso1.map(CurvePoint<Rational>(Rational(0), Rational(0))).is_infinity());
    CHECK(iso1.map(CurvePoint<Rational>::at_infinity()).is_infinity());

    // images of sample points land on the image curve
    PointQ g = family_A_point(Rational(1));
    for (long m = 1; m <= 4; ++m) {
        auto img = iso1.map(c1.scalar_multiple(m, g));
        CHECK(iso1.image.on_curve(img));
    }

    CHECK_THROWS_AS(two_isogeny(CurveQ(Rational(0), Rational(0), Rational(2))),
                    std::domain_error);
}

TEST_CASE("the extra point condition on the isogenous curve") {
    // x = 8(2u^2+1) on the isogenous curve forces 4u^2 - 14 to be a square:
    // the right side equals (4u^2-14) * (8(2u^2+1)(2u^2-1))^2
    RationalFunction u = RationalFunction::variable('u');
    auto iso = two_isogeny(family_A_curve(u));
    RationalFunction x = RationalFunction(8) * (RationalFunction(2) * u * u + RationalFunction(1));
    RationalFunction rhs = ((x + iso.image.a2()) * x + iso.image.a4()) * x;
    RationalFunction factor =
        RationalFunction(8) * (RationalFunction(2) * u * u + RationalFunction(1)) *
        (RationalFunction(2) * u * u - RationalFunction(1));
    CHECK(rhs == (RationalFunction(4) * u * u - RationalFunction(14)) * factor * factor);
}

TEST_CASE("specialization") {
    RationalFunction u = RationalFunction::variable('u');
    auto cu = family_A_curve(u);
    auto c6 = specialize_curve(cu, Rational(6));
    CHECK(c6.a2() == Rational(61644));
    CHECK(c6.a4() == Rational(836402720));
    CHECK(c6.a6() == Rational(0));
    auto p6 = specialize_point(family_A_point(u), Rational(6));
    CHECK(p6 == PointQ(Rational(-20740), Rational(497760)));
    CHECK(c6.on_curve(p6));

    // pole: b(u)-style coefficient with denominator u^2
    RationalFunction with_pole(parse_polynomial("4*u^4+1", 'u'), parse_polynomial("4*u^2", 'u'));
    EllipticCurve<RationalFunction> bad(with_pole, RationalFunction(1), RationalFunction());
    CHECK_THROWS_AS(specialize_curve(bad, Rational(0)), pole_error);

    // singular specialization: y^2 = x(x-1)(x-u) collapses at u = 1
    RationalFunction one(1);
    EllipticCurve<RationalFunction> degen(-(one + u), u, RationalFunction());
    CHECK_THROWS_AS(specialize_curve(degen, Rational(1)), singular_curve_error);
    CHECK_NOTHROW(specialize_curve(degen, Rational(2)));
}

TEST_CASE("specialization commutes with the group law") {
    RationalFunction u = RationalFunction::variable('u');
    auto cu = family_A_curve(u);
    auto g = family_A_point(u);
    for (long m = 1; m <= 4; ++m) {
        auto symbolic = specialize_point(cu.scalar_multiple(m, g), Rational(3));
        auto concrete = specialize_curve(cu, Rational(3))
                            .scalar_multiple(m, specialize_point(g, Rational(3)));
        CHECK(symbolic == concrete);
    }
}

TEST_CASE("squarefree decomposition") {
    auto P = [](const char* s) { return parse_polynomial(s, 't'); };
    // 2 t^4 (t^2-1)^2: components t (mult 4) and t^2-1 (mult 2)
    Polynomial p = Polynomial(Rational(2)) * P("t^4") * P("t^2-1") * P("t^2-1");
    auto comps = squarefree_decomposition(p);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].first == P("t^2-1"));
    CHECK(comps[0].second == 2);
    CHECK(comps[1].first == P("t"));
    CHECK(comps[1].second == 4);
}
