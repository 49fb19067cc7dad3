#include "hypspec/error.hpp"
#include "hypspec/scalar_green.hpp"
#include "hypspec/space.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hypspec;

namespace {

SpaceDescriptor space_d(int d, int n) {
    switch (d) {
    case 1: return make_space(Field::Real, n);
    case 2: return make_space(Field::Complex, n);
    case 4: return make_space(Field::Quaternion, n);
    default: return make_space(Field::Octonion, n);
    }
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST_CASE("Gamma-factor constant against reference values") {
    CHECK(rel(plancherel_prefactor(make_space(Field::Real, 2), 1.0), 0.25) < 1e-13);
    CHECK(rel(plancherel_prefactor(make_space(Field::Complex, 2), 1.5), 0.18209548012937793438) < 1e-13);
    CHECK(rel(plancherel_prefactor(make_space(Field::Quaternion, 2), cplx(2, 1)),
              cplx(0.62979798131380911399, 0.48474143035237976294)) < 1e-13);
}

TEST_CASE("kernel values against reference values") {
    struct Case {
        int d, n;
        cplx s;
        double r;
        cplx expected;
    };
    const Case cases[] = {
        {1, 2, 0.5, 0.5, 0.22390380753847232614},
        {1, 4, 1.5, 2.0, 0.0006924052463411818861},
        {2, 2, 1.5, 0.5, 0.12840174746104875276},
        {4, 2, 1.5, 0.5, 1.4768402494713943519},
        {8, 2, 0.5, 2.0, 2.6625157005558626686e-8},
        {1, 3, cplx(2, 1), 0.5, cplx(0.04930222034784599806, -0.026933925730855460341)},
        {2, 3, 1.5, 7.0, 1.4714193949291778767e-14},
        {1, 2, cplx(2, 1), 2.0, cplx(-0.00072392232338417042498, -0.00098046137484883500186)},
        {4, 2, cplx(2, 1), 0.05, cplx(1964915.3241791306581, -2456.6238489307509117)},
    };
    for (const auto& c : cases) {
        INFO("d=" << c.d << " n=" << c.n << " s=" << c.s << " r=" << c.r);
        CHECK(rel(green0_eval(space_d(c.d, c.n), c.s, c.r), c.expected) < 1e-10);
    }
}

TEST_CASE("three-dimensional real case has the elementary closed form") {
    const auto sp = make_space(Field::Real, 3);
    for (cplx s : {cplx(0.5, 0), cplx(2, 0), cplx(1, 3)})
        for (double r : {0.01, 0.3, 1.0, 4.0, 12.0}) {
            const cplx exact = std::exp(-s * r) / (4 * std::numbers::pi * std::sinh(r));
            CHECK(rel(green0_eval(sp, s, r), exact) < 1e-12);
        }
}

TEST_CASE("radial ODE residual") {
    const SpaceDescriptor spaces[] = {make_space(Field::Real, 2),       make_space(Field::Real, 3),
                                      make_space(Field::Real, 6),       make_space(Field::Complex, 2),
                                      make_space(Field::Complex, 4),    make_space(Field::Quaternion, 2),
                                      make_space(Field::Quaternion, 3), make_space(Field::Octonion, 2)};
    for (const auto& sp : spaces)
        for (cplx s : {cplx(0.5, 0), cplx(1.5, 0), cplx(2, 1)})
            for (double r : {0.1, 0.5, 1.0, 2.0, 5.0}) {
                INFO("field=" << field_name(sp.field) << " n=" << sp.n << " s=" << s << " r=" << r);
                CHECK(green0_ode_residual(sp, s, r) < 1e-8);
            }
    // The finite-difference residual is an independent, noisier check of the same equation.
    for (const auto& sp : spaces) CHECK(green0_fd_residual(sp, 1.5, 1.0) < 1e-5);
}

TEST_CASE("small-r behaviour and decay") {
    for (int d : {1, 2, 4, 8})
        for (int n : {2, 3}) {
            if (d == 8 && n != 2) continue;
            const auto sp = space_d(d, n);
            const double r = 1e-4;
            const double ratio = green0_eval(sp, 1.5, r).real() / green0_small_r_asymptote(sp, r);
            INFO("d=" << d << " n=" << n);
            CHECK(ratio == doctest::Approx(1.0).epsilon(d * n == 2 ? 0.1 : 1e-2));

            const double s = 0.75;
            std::vector<Sample> samples;
            for (int k = 0; k <= 20; ++k) {
                const double x = 10.0 + 0.5 * k;
                samples.push_back({x, green0_eval(sp, s, x).real()});
            }
            CHECK(decay_rate_fit(samples) == doctest::Approx(s + to_double(sp.rho)).epsilon(1e-2));
        }
}

TEST_CASE("positivity and monotonicity for real spectral parameter") {
    for (int d : {1, 2, 4})
        for (int n : {2, 3, 5}) {
            const auto sp = space_d(d, n);
            double prev = std::numeric_limits<double>::infinity();
            for (double r = 0.05; r < 15; r += 0.37) {
                const double g = green0_eval(sp, 0.8, r).real();
                CHECK(g > 0);
                CHECK(g < prev);
                prev = g;
            }
        }
}

TEST_CASE("holomorphic in s") {
    const auto sp = make_space(Field::Complex, 3);
    const double h = 1e-5, r = 0.8;
    for (cplx s : {cplx(1.0, 0.5), cplx(2.5, -1.0)}) {
        const cplx dx = (green0_eval(sp, s + h, r) - green0_eval(sp, s - h, r)) / (2 * h);
        const cplx dy = (green0_eval(sp, s + cplx(0, h), r) - green0_eval(sp, s - cplx(0, h), r)) / (2 * h);
        CHECK(std::abs(dy - cplx(0, 1) * dx) < 1e-7 * std::abs(dx));
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(green0_eval(make_space(Field::Real, 3), 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(green0_eval(make_space(Field::Real, 3), 1.0, -1.0), DomainError);
    CHECK_THROWS_AS(green0_eval(make_space(Field::Real, 3), -2.0, 1.0), DomainError);
}
