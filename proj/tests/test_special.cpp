#include "hypspec/error.hpp"
#include "hypspec/hypergeometric.hpp"
#include "hypspec/special.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hypspec;

namespace {

bool close(cplx a, cplx b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)) || std::abs(a - b) <= rel * std::abs(b); }

} // namespace

TEST_CASE("gamma family against the standard library") {
    for (double x : {0.1, 0.5, 1.0, 2.5, 7.25, 30.0, -0.5, -2.75}) {
        CHECK(close(gamma_fn(x), std::tgamma(x), 1e-13));
        CHECK(close(rgamma(x), 1.0 / std::tgamma(x), 1e-13));
    }
    CHECK(std::abs(rgamma(-3.0)) == 0.0);
    CHECK_THROWS_AS(log_gamma(cplx(-2.0, 0.0)), PoleOfGamma);
    CHECK(is_nonpositive_integer(cplx(-4.0, 0.0)));
    CHECK_FALSE(is_nonpositive_integer(cplx(-4.0, 1e-3)));
    CHECK(std::abs(digamma(1.0) + 0.57721566490153286061) < 1e-13);
    CHECK(std::abs(digamma(0.5) + 0.57721566490153286061 + 2 * std::log(2.0)) < 1e-13);
    // Reflection and recurrence in the complex plane.
    const cplx z(0.3, 1.7);
    CHECK(close(gamma_fn(z + 1.0), z * gamma_fn(z), 1e-13));
    CHECK(close(gamma_fn(z) * gamma_fn(1.0 - z), std::numbers::pi / std::sin(std::numbers::pi * z), 1e-12));
    CHECK(close(digamma(z + 1.0), digamma(z) + 1.0 / z, 1e-13));
    // |Gamma(1/2 + iy)|^2 = pi / cosh(pi y)
    CHECK(std::abs(std::norm(gamma_fn(cplx(0.5, 3.0))) - std::numbers::pi / std::cosh(3 * std::numbers::pi)) < 1e-15);
}

TEST_CASE("unit sphere areas") {
    CHECK(unit_sphere_area(2) == doctest::Approx(2 * std::numbers::pi).epsilon(1e-14));
    CHECK(unit_sphere_area(3) == doctest::Approx(4 * std::numbers::pi).epsilon(1e-14));
    CHECK(unit_sphere_area(4) == doctest::Approx(2 * std::numbers::pi * std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("2F1 against high-precision reference values") {
    struct Case {
        cplx a, b, c, z, expected;
    };
    const Case cases[] = {
        {0.5, 1.5, 2.0, 0.3, 1.1396613687192053064},
        {1.0, 1.0, 2.0, 0.5, 1.3862943611198906188},
        {0.25, 0.75, 1.5, -0.95, 0.91355177812742343429},
        {1.5, 2.5, 3.5, 0.95, 13.925720900108687889},
        {0.3, 0.7, 2.0, -5.0, 0.77748216779571772064},
        {cplx(1, 0.5), 2.0, cplx(3, -1), cplx(0.6, 0.7), cplx(0.60583659837228844877, 0.40427421718321650323)},
        {1.0, 2.0, 3.0, 0.99, 7.3771455687952057007},
        {2.0, 3.0, 5.0, 0.97, 17.314967749382444668},
        {0.5, 0.5, 1.0, 0.95, 1.8515049970729283522},
        {1.5, 1.5, 2.0, -20.0, 0.026029855469206751733},
    };
    for (const auto& c : cases) {
        INFO("a=" << c.a << " b=" << c.b << " c=" << c.c << " z=" << c.z);
        const cplx v = gauss_2f1(c.a, c.b, c.c, c.z);
        CHECK(std::abs(v - c.expected) / std::abs(c.expected) < 1e-12);
    }
}

TEST_CASE("2F1 elementary identities") {
    for (double z : {-0.9, -0.3, 0.2, 0.7, 0.95, 0.999}) {
        // 2F1(1,1;2;z) = -log(1-z)/z
        CHECK(std::abs(gauss_2f1(1.0, 1.0, 2.0, z) - (-std::log1p(-z) / z)) < 1e-12 * std::abs(std::log1p(-z) / z));
        // 2F1(a,b;b;z) = (1-z)^{-a}
        CHECK(std::abs(gauss_2f1(0.7, 1.3, 1.3, z) - std::pow(1 - z, -0.7)) < 1e-12 * std::pow(1 - z, -0.7));
        // terminating: 2F1(-2,b;c;z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
        const double b = 1.5, c = 2.5;
        const double poly = 1 - 2 * b * z / c + b * (b + 1) * z * z / (c * (c + 1));
        CHECK(std::abs(gauss_2f1(-2.0, b, c, z) - poly) < 1e-13);
    }
    // The explicit 1-z argument agrees with the implicit one.
    const cplx z(0.98, 0.0);
    CHECK(std::abs(gauss_2f1(0.5, 1.25, 2.0, z, 1.0 - z, GreenEvalConfig{}) - gauss_2f1(0.5, 1.25, 2.0, z)) < 1e-12);
}
