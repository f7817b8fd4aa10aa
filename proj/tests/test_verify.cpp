#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "striple/verify.hpp"

#include <random>

using namespace striple;

namespace {
std::vector<Rational> elems(std::initializer_list<const char*> list) {
    std::vector<Rational> out;
    for (auto* s : list) out.push_back(Rational::parse(s));
    return out;
}
} // namespace

TEST_CASE("check_dq_tuple anchors") {
    // the classical integer D(1)-quadruple
    auto fermat = check_dq_tuple(elems({"1", "3", "8", "120"}), Rational(1), false);
    CHECK(fermat.verdict);
    CHECK(fermat.conditions.size() == 6); // no diagonal conditions

    auto triple = check_dq_tuple(elems({"493/468", "1313/1088", "33137/32912"}), Rational(-1),
                                 true);
    CHECK(triple.verdict);
    CHECK(triple.conditions.size() == 6); // three pairs + three diagonals

    auto bad = check_dq_tuple(elems({"1", "2", "3"}), Rational(-1), true);
    CHECK(!bad.verdict);
    // 1^2 - 1 = 0 is a square but 2^2 - 1 = 3 is not
    for (auto& c : bad.conditions) {
        if (c.i == 0 && c.j == 0) CHECK(c.witness.has_value());
        if (c.i == 1 && c.j == 1) {
            CHECK(!c.witness.has_value());
            CHECK(c.value == Rational(3));
        }
    }
}

TEST_CASE("check_dq_tuple rejects unusable input") {
    CHECK_THROWS_AS(check_dq_tuple(elems({"1", "0"}), Rational(-1), true),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_dq_tuple(elems({"1", "1"}), Rational(-1), true),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_dq_tuple({}, Rational(-1), true), std::invalid_argument);
}

TEST_CASE("witness soundness and full condition listing") {
    auto rep = check_dq_tuple(elems({"1", "5/4", "14645/484"}), Rational(-1), true);
    CHECK(rep.verdict);
    CHECK(rep.conditions.size() == 6);
    for (auto& c : rep.conditions) {
        REQUIRE(c.witness.has_value());
        CHECK(*c.witness * *c.witness == c.value);
        CHECK(c.witness->sgn() >= 0);
    }
}

TEST_CASE("check_strong_eulerian") {
    auto rep = check_strong_eulerian(elems({"0", "1/4", "14161/484"}));
    CHECK(rep.verdict);
    REQUIRE(rep.shifted.has_value());
    CHECK((*rep.shifted)[0] == Rational(1));

    CHECK_THROWS_AS(check_strong_eulerian(elems({"0", "0", "1"})), std::invalid_argument);
    // -1 shifts to 0, which the D(-1) predicate cannot use
    CHECK_THROWS_AS(check_strong_eulerian(elems({"-1", "3"})), std::invalid_argument);
}

TEST_CASE("eulerian shift equivalence on random inputs") {
    std::mt19937_64 rng(61);
    int done = 0;
    while (done < 50) {
        std::vector<Rational> xs;
        for (int i = 0; i < 3; ++i)
            xs.emplace_back(static_cast<long>(rng() % 200) - 100, static_cast<long>(rng() % 20) + 1);
        std::vector<Rational> shifted;
        for (auto& x : xs) shifted.push_back(x + Rational(1));
        try {
            auto lhs = check_strong_eulerian(xs);
            auto rhs = check_dq_tuple(shifted, Rational(-1), true);
            CHECK(lhs.verdict == rhs.verdict);
            ++done;
        } catch (const std::invalid_argument&) {
            // zero or repeated after shift: both views reject identically
            CHECK_THROWS_AS(check_dq_tuple(shifted, Rational(-1), true), std::invalid_argument);
            ++done;
        }
    }
}

TEST_CASE("quadratic field check") {
    auto rep = check_quadratic_field_strong(
        elems({"1", "125/117", "689/400", "14353373/13130325"}), Rational(-1), 26);
    CHECK(rep.verdict);
    // branch pattern: b - 1 is a rational square (b = 689/400);
    // 26(a - 1) and 26(c - 1) are squares (a = 125/117, c = 14353373/13130325)
    for (auto& c : rep.conditions) {
        if (c.i == 0 && c.j == 2) CHECK(c.branch == 1);
        if (c.i == 0 && c.j == 1) CHECK(c.branch == 26);
        if (c.i == 0 && c.j == 3) CHECK(c.branch == 26);
        if (c.i == c.j) CHECK(c.branch == 1); // all diagonals rational
    }

    // d = 1 reduces to the plain check
    auto plain = check_quadratic_field_strong(elems({"1", "5/4", "14645/484"}), Rational(-1), 1);
    CHECK(plain.verdict);
    auto not_plain = check_quadratic_field_strong(
        elems({"1", "125/117", "689/400", "14353373/13130325"}), Rational(-1), 1);
    CHECK(!not_plain.verdict);

    CHECK_THROWS_AS(check_quadratic_field_strong(elems({"1", "5/4"}), Rational(-1), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_quadratic_field_strong(elems({"1", "5/4"}), Rational(-1), 0),
                    std::invalid_argument);
    CHECK_NOTHROW(check_quadratic_field_strong(elems({"1", "5/4"}), Rational(-1), -2));

    // the two-element slice keeps the printed pattern
    auto pair = check_quadratic_field_strong(elems({"125/117", "689/400"}), Rational(-1), 26);
    CHECK(pair.verdict);
}

TEST_CASE("scale covariance") {
    std::mt19937_64 rng(67);
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<Rational> xs;
        for (int i = 0; i < 3; ++i)
            xs.emplace_back(static_cast<long>(rng() % 50) + 1 + i * 60,
                            static_cast<long>(rng() % 9) + 1);
        Rational s(static_cast<long>(rng() % 12) + 1, static_cast<long>(rng() % 5) + 1);
        Rational q(static_cast<long>(rng() % 7) - 3);
        if (q.is_zero()) q = Rational(-1);
        std::vector<Rational> scaled;
        for (auto& x : xs) scaled.push_back(s * x);
        try {
            auto base = check_dq_tuple(xs, q, true);
            auto twisted = check_dq_tuple(scaled, q * s * s, true);
            CHECK(base.verdict == twisted.verdict);
        } catch (const std::invalid_argument&) {
        }
    }
}

TEST_CASE("permutation and negation symmetry") {
    auto base = elems({"1", "5/4", "14645/484"});
    auto rep = check_dq_tuple(base, Rational(-1), true);
    std::vector<Rational> perm{base[2], base[0], base[1]};
    CHECK(check_dq_tuple(perm, Rational(-1), true).verdict == rep.verdict);
    std::vector<Rational> neg;
    for (auto& x : base) neg.push_back(-x);
    CHECK(check_dq_tuple(neg, Rational(-1), true).verdict == rep.verdict);
}
