#include "striple/elliptic_curve.hpp"

#include <algorithm>

namespace striple {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// X^3 + A X^2 + B X + C at x
Integer cubic_at(const Integer& a, const Integer& b, const Integer& c, const Integer& x) {
    return ((x + a) * x + b) * x + c;
}

// All integer roots of the monic integer cubic X^3 + A X^2 + B X + C.
// The real line is cut at integer samples bracketing the critical points of
// the cubic; between consecutive samples the cubic is monotone, so a binary
// search per sign change finds every integer root.
std::vector<Integer> integer_cubic_roots(const Integer& a, const Integer& b, const Integer& c) {
    Integer bound = 1;
    bound += std::max(::abs(a), std::max(::abs(b), ::abs(c))); // Cauchy bound
    std::vector<Integer> samples{-bound - 1, bound + 1};
    Integer d = a * a - 3 * b;
    if (d >= 0) {
        Integer s0 = integer_sqrt(d).first;
        for (const Integer& num : {Integer(-a - s0), Integer(-a + s0)}) {
            Integer base = floor_div(num, Integer(3));
            for (int k = -1; k <= 2; ++k) {
                Integer s = base + k;
                if (s > -bound - 1 && s < bound + 1) samples.push_back(s);
            }
        }
    }
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

    std::vector<Integer> roots;
    std::vector<int> signs(samples.size());
    for (size_t i = 0; i < samples.size(); ++i) {
        Integer v = cubic_at(a, b, c, samples[i]);
        signs[i] = mpz_sgn(v.get_mpz_t());
        if (signs[i] == 0) roots.push_back(samples[i]);
    }
    for (size_t i = 0; i + 1 < samples.size(); ++i) {
        Integer lo = samples[i], hi = samples[i + 1];
        if (hi - lo <= 3) {
            for (Integer x = lo + 1; x < hi; ++x)
                if (cubic_at(a, b, c, x) == 0) roots.push_back(x);
            continue;
        }
        if (signs[i] == 0 || signs[i + 1] == 0 || signs[i] == signs[i + 1]) continue;
        int slo = signs[i];
        while (hi - lo > 1) {
            Integer mid = floor_div(lo + hi, Integer(2));
            Integer v = cubic_at(a, b, c, mid);
            int sm = mpz_sgn(v.get_mpz_t());
            if (sm == 0) {
                roots.push_back(mid);
                break;
            }
            (sm == slo ? lo : hi) = mid;
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Rational> quadratic_roots(const Rational& p, const Rational& q) {
    // x^2 + p x + q
    std::vector<Rational> roots;
    auto r = square_root_exact(p * p - Rational(4) * q);
    if (!r) return roots;
    roots.push_back((-p + *r) / Rational(2));
    if (!(*r == Rational(0))) roots.push_back((-p - *r) / Rational(2));
    return roots;
}

std::vector<Rational> rational_cubic_roots(const Rational& a2, const Rational& a4,
                                           const Rational& a6) {
    std::vector<Rational> roots;
    if (a6.is_zero()) {
        roots.push_back(Rational(0));
        for (auto& r : quadratic_roots(a2, a4))
            if (!r.is_zero()) roots.push_back(r);
    } else {
        Integer lam;
        mpz_lcm(lam.get_mpz_t(), a2.den().get_mpz_t(), a4.den().get_mpz_t());
        mpz_lcm(lam.get_mpz_t(), lam.get_mpz_t(), a6.den().get_mpz_t());
        Rational l(lam);
        Integer ia = (a2 * l).num(), ib = (a4 * l * l).num(), ic = (a6 * l * l * l).num();
        for (auto& r : integer_cubic_roots(ia, ib, ic)) roots.push_back(Rational(r) / l);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Integer> small_divisors(Integer n) {
    // positive divisors via trial division (cofactor beyond the cap treated prime)
    n = ::abs(n);
    std::vector<std::pair<Integer, int>> fac;
    for (Integer p = 2; p * p <= n && p < 1000000; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            fac.emplace_back(p, e);
        }
    }
    if (n > 1) fac.emplace_back(n, 1);
    std::vector<Integer> divs{1};
    for (auto& [p, e] : fac) {
        size_t base = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// rational content of a polynomial with Rational coefficients
Rational content(const Polynomial& p) {
    Integer g = 0, l = 1;
    for (const auto& c : p.coefficients()) {
        if (c.is_zero()) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    if (g == 0) return Rational(0);
    return Rational(g, l);
}

} // namespace

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() <= 0) return out;
    Polynomial f = p.monic();
    Polynomial a = poly_gcd(f, f.derivative());
    Polynomial b = divmod(f, a).first;
    Polynomial c = divmod(f.derivative(), a).first;
    Polynomial d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Polynomial ai = poly_gcd(b, d.is_zero() ? b : d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = divmod(b, ai).first;
        c = d.is_zero() ? d : divmod(d, ai).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

std::vector<CurvePoint<Rational>> two_torsion_points(const EllipticCurve<Rational>& c) {
    std::vector<CurvePoint<Rational>> pts;
    for (auto& r : rational_cubic_roots(c.a2(), c.a4(), c.a6()))
        pts.emplace_back(r, Rational(0));
    return pts;
}

std::vector<CurvePoint<RationalFunction>> two_torsion_points(
    const EllipticCurve<RationalFunction>& c) {
    using RF = RationalFunction;
    char var = c.a2().var();
    RF a2 = c.a2(), a4 = c.a4(), a6 = c.a6();
    std::vector<RF> roots;

    auto push_quadratic_roots = [&](const RF& p, const RF& q) {
        auto disc = detail::scalar_sqrt(p * p - RF(4) * q);
        if (!disc) return;
        roots.push_back((-p + *disc) / RF(2));
        if (!(*disc == RF())) roots.push_back((-p - *disc) / RF(2));
    };

    if (a6.is_zero()) {
        roots.push_back(RF());
        push_quadratic_roots(a2, a4);
    } else {
        // clear denominators: x = X / delta turns the cubic monic with
        // polynomial coefficients; roots of a monic polynomial over Q[param]
        // are themselves polynomials dividing the constant term
        Polynomial delta = (RF(1) / (RF(a2.den()) * RF(a4.den()) * RF(a6.den()))).den();
        RF d(delta);
        RF A = a2 * d, B = a4 * d * d, C = a6 * d * d * d;
        std::optional<RF> found;
        Rational cont = content(C.num());
        std::vector<Rational> consts;
        for (auto& dn : small_divisors(cont.num()))
            for (auto& dd : small_divisors(cont.den())) {
                consts.emplace_back(dn, dd);
                consts.emplace_back(-dn, dd);
            }
        auto comps = squarefree_decomposition(C.num());
        // all products of squarefree components within multiplicity
        std::vector<Polynomial> divisors{Polynomial(Rational(1), var)};
        for (auto& [f, m] : comps) {
            size_t base = divisors.size();
            Polynomial fk(Rational(1), var);
            for (int k = 1; k <= m; ++k) {
                fk = fk * f;
                if (fk.degree() > C.num().degree()) break;
                for (size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * fk);
            }
        }
        for (auto& q : consts) {
            for (auto& dv : divisors) {
                RF cand(q * dv);
                if (((cand + A) * cand + B) * cand + C == RF()) { found = cand; break; }
            }
            if (found) break;
        }
        if (found) {
            roots.push_back(*found / d);
            // deflate: remaining quadratic X^2 + (A + r) X + (B + r(A + r))
            RF r = *found;
            RF p1 = A + r, q1 = B + r * (A + r);
            std::vector<RF> before = roots;
            push_quadratic_roots(p1, q1);
            for (size_t i = before.size(); i < roots.size(); ++i) roots[i] = roots[i] / d;
        }
    }
    std::vector<CurvePoint<RationalFunction>> pts;
    for (auto& r : roots) {
        CurvePoint<RationalFunction> p(r, RF());
        bool dup = false;
        for (auto& q : pts) dup = dup || q == p;
        if (!dup && c.on_curve(p)) pts.push_back(p);
    }
    return pts;
}

EllipticCurve<Rational> specialize_curve(const EllipticCurve<RationalFunction>& c,
                                         const Rational& x0) {
    return EllipticCurve<Rational>(c.a2()(x0), c.a4()(x0), c.a6()(x0));
}

CurvePoint<Rational> specialize_point(const CurvePoint<RationalFunction>& p, const Rational& x0) {
    if (p.is_infinity()) return CurvePoint<Rational>::at_infinity();
    return CurvePoint<Rational>(p.x()(x0), p.y()(x0));
}

} // namespace striple
