/**
 * @file verify.hpp
 * @brief Ground-truth predicates for D(q)-m-tuples and Eulerian tuples.
 *
 * Every generator and the search harness report through these checks. Reports
 * list all conditions with exact square witnesses and never short-circuit, so
 * golden files stay stable and diffable.
 */
#ifndef STRIPLE_VERIFY_HPP
#define STRIPLE_VERIFY_HPP

#include <optional>
#include <vector>

#include "striple/rational.hpp"

namespace striple {

struct Condition {
    size_t i, j;    // element indices; i == j marks a diagonal (strong) condition
    Rational value; // a_i * a_j + q
    std::optional<Rational> witness; // r >= 0 with r^2 = value (or d * value)
    long branch;    // 1: value is a square; d: d * value is a square; 0: failed
};

struct VerificationReport {
    std::vector<Rational> subject;
    Rational q;
    bool strong = false;
    long twist_d = 1; // quadratic-field checks allow witnesses for d * value
    std::vector<Condition> conditions;
    bool verdict = false;
    // set by check_strong_eulerian: subject holds the Eulerian elements x_i and
    // shifted holds a_i = x_i + 1, on which the conditions are evaluated
    std::optional<std::vector<Rational>> shifted;
};

// The main predicate: a_i * a_j + q a square for all i < j, and additionally
// for i == j when strong is set. Zero or repeated elements are rejected.
VerificationReport check_dq_tuple(const std::vector<Rational>& elements, const Rational& q,
                                  bool strong);

// x_i x_j + x_i + x_j and x_i^2 + 2 x_i all squares; equivalent to the strong
// D(-1) check on the shifted elements x_i + 1 (zero elements are allowed).
VerificationReport check_strong_eulerian(const std::vector<Rational>& elements);

// Over Q(sqrt(d)): each condition value must be a rational square or d times a
// rational square; the report tags which branch applied. d must be a nonzero
// squarefree integer; d = 1 reduces to check_dq_tuple.
VerificationReport check_quadratic_field_strong(const std::vector<Rational>& elements,
                                                const Rational& q, long d);

} // namespace striple

#endif
