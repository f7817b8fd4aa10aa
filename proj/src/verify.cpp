#include "striple/verify.hpp"

#include <stdexcept>

namespace striple {

namespace {

void require_usable(const std::vector<Rational>& elements, bool forbid_zero) {
    if (elements.empty()) throw std::invalid_argument("verify: empty tuple");
    for (size_t i = 0; i < elements.size(); ++i) {
        if (forbid_zero && elements[i].is_zero())
            throw std::invalid_argument("verify: tuples consist of nonzero rationals");
        for (size_t j = i + 1; j < elements.size(); ++j)
            if (elements[i] == elements[j])
                throw std::invalid_argument("verify: repeated element " + elements[i].str());
    }
}

bool is_squarefree(long d) {
    if (d == 0) return false;
    if (d < 0) d = -d;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

VerificationReport run_conditions(const std::vector<Rational>& elements, const Rational& q,
                                  bool strong, long d) {
    VerificationReport rep;
    rep.subject = elements;
    rep.q = q;
    rep.strong = strong;
    rep.twist_d = d;
    rep.verdict = true;
    for (size_t i = 0; i < elements.size(); ++i) {
        for (size_t j = i; j < elements.size(); ++j) {
            if (i == j && !strong) continue;
            Condition cond;
            cond.i = i;
            cond.j = j;
            cond.value = elements[i] * elements[j] + q;
            cond.branch = 0;
            if (auto w = square_root_exact(cond.value)) {
                cond.witness = *w;
                cond.branch = 1;
            } else if (d != 1) {
                if (auto w = square_root_exact(Rational(d) * cond.value)) {
                    cond.witness = *w;
                    cond.branch = d;
                }
            }
            if (cond.branch == 0) rep.verdict = false;
            rep.conditions.push_back(std::move(cond));
        }
    }
    return rep;
}

} // namespace

VerificationReport check_dq_tuple(const std::vector<Rational>& elements, const Rational& q,
                                  bool strong) {
    require_usable(elements, /*forbid_zero=*/true);
    return run_conditions(elements, q, strong, 1);
}

VerificationReport check_strong_eulerian(const std::vector<Rational>& elements) {
    std::vector<Rational> shifted;
    shifted.reserve(elements.size());
    for (const auto& x : elements) shifted.push_back(x + Rational(1));
    require_usable(shifted, /*forbid_zero=*/true);
    // x_i x_j + x_i + x_j = (x_i+1)(x_j+1) - 1, so one condition set covers both views
    VerificationReport rep = run_conditions(shifted, Rational(-1), /*strong=*/true, 1);
    rep.shifted = shifted;
    rep.subject = elements;
    return rep;
}

VerificationReport check_quadratic_field_strong(const std::vector<Rational>& elements,
                                                const Rational& q, long d) {
    if (!is_squarefree(d))
        throw std::invalid_argument("verify: twist d must be a nonzero squarefree integer");
    require_usable(elements, /*forbid_zero=*/true);
    return run_conditions(elements, q, /*strong=*/true, d);
}

} // namespace striple
