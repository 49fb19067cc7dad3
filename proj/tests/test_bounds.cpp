#include "hypspec/bounds.hpp"

#include <doctest.h>

using namespace hypspec;

TEST_CASE("Sullivan-Corlette") {
    const auto c2 = make_space(Field::Complex, 2);
    CHECK(sullivan_corlette(c2, 1.0) == doctest::Approx(4));
    CHECK(sullivan_corlette(c2, 4.0) == doctest::Approx(0));
    CHECK(sullivan_corlette(c2, 3.0) == doctest::Approx(3));
    CHECK_THROWS_AS(sullivan_corlette(c2, 4.5), DomainError);
    CHECK_THROWS_AS(sullivan_corlette(c2, -0.1), DomainError);
    for (int k = 0; k <= 10; ++k) CHECK(sullivan_corlette(c2, Rational(k, 5)) == Rational(4));
    CHECK(sullivan_corlette(c2, Rational(21, 10)) < Rational(4));
}

TEST_CASE("lower bound examples") {
    const auto r5 = make_space(Field::Real, 5);
    auto b = theorem_b_lower_bound(r5, 1, 2.5);
    CHECK(b.bound == doctest::Approx(0.75));
    CHECK_FALSE(b.zero_possible);
    CHECK(theorem_b_lower_bound(make_space(Field::Complex, 2), 1, 1.5).bound == doctest::Approx(1));
    b = theorem_b_lower_bound(r5, 2, 2.0);
    CHECK(b.bound == doctest::Approx(0));
    CHECK_FALSE(b.zero_possible);
    CHECK_THROWS_AS(theorem_b_lower_bound(make_space(Field::Octonion, 2), 4, 1.0), UnknownConstant);
}

TEST_CASE("lower bound clamping and isolation") {
    const auto c2 = make_space(Field::Complex, 2); // rho = 2, alpha_2 = 1 in the middle degree
    auto b = theorem_b_lower_bound(c2, 2, Rational(7, 2));
    CHECK(b.raw == Rational(1) - Rational(9, 4));
    CHECK(b.bound == Rational(0));
    CHECK(b.clamped);
    CHECK(b.zero_possible);
    CHECK_FALSE(b.zero_isolated);
    // Exactly at rho + sqrt(alpha): not isolated (strict inequality).
    b = theorem_b_lower_bound(c2, 2, Rational(3));
    CHECK(b.raw == Rational(0));
    CHECK_FALSE(b.zero_isolated);
    b = theorem_b_lower_bound(c2, 2, Rational(29, 10));
    CHECK(b.zero_isolated);
}

TEST_CASE("continuity and monotonicity") {
    for (Field f : {Field::Real, Field::Complex, Field::Quaternion})
        for (int n = 2; n <= 6; ++n) {
            const auto sp = make_space(f, n);
            for (int p = 0; p <= sp.dim; ++p) {
                const Rational alpha = alpha_p(sp, p);
                CHECK(theorem_b_lower_bound(sp, p, sp.rho).raw == alpha);
                Rational prev = alpha;
                for (int k = 0; k <= 16; ++k) {
                    const Rational delta = sp.rho + sp.rho * Rational(k, 16);
                    const Rational cur = theorem_b_lower_bound(sp, p, delta).bound;
                    CHECK(cur <= prev);
                    prev = cur;
                }
            }
        }
}

TEST_CASE("Bochner bound and comparison") {
    CHECK(bochner_lower_bound(make_space(Field::Real, 5), 1, 2.0) == doctest::Approx(0));
    CHECK(bochner_lower_bound(make_space(Field::Complex, 2), 1, 1.0) == doctest::Approx(-2));
    CHECK(bochner_lower_bound(make_space(Field::Complex, 3), 0, 1.0) == doctest::Approx(9));
    CHECK_THROWS_AS(bochner_lower_bound(make_space(Field::Quaternion, 2), 1, 1.0), NotImplemented);

    CHECK(*compare(make_space(Field::Real, 5), 1, 2.0).difference == doctest::Approx(1));
    CHECK(*compare(make_space(Field::Complex, 3), 2, 3.0).difference == doctest::Approx(8));
    CHECK(*compare(make_space(Field::Complex, 3), 0, 5.0).difference == doctest::Approx(0));
    const auto h = compare(make_space(Field::Quaternion, 2), 1, 3.0);
    CHECK_FALSE(h.bochner_bound.has_value());
    CHECK(h.theorem_b_bound == doctest::Approx(17));
}

TEST_CASE("comparison identity holds exactly in rationals") {
    for (Field f : {Field::Real, Field::Complex})
        for (int n = 2; n <= 8; ++n) {
            const auto sp = make_space(f, n);
            for (int p = 0; 2 * p < sp.dim; ++p)
                for (int k = 0; k < 20; ++k) {
                    const Rational delta = (sp.rho * 2 - Rational(p)) * Rational(k, 19);
                    if (delta < Rational(0)) continue;
                    const auto rep = compare(sp, p, delta);
                    const Rational expected = f == Field::Real ? Rational(p) : Rational(p * (p + 2));
                    CHECK(*rep.difference == expected);
                }
        }
}
