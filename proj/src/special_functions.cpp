#include "hypspec/special.hpp"

#include "hypspec/error.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace hypspec {

namespace {

constexpr double pi = std::numbers::pi;

// Lanczos approximation, g = 7, n = 9.
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cplx log_gamma_right(cplx z) {
    // Valid for Re z >= 0.5.
    z -= 1.0;
    cplx x = lanczos_coef[0];
    for (int i = 1; i < 9; ++i) x += lanczos_coef[i] / (z + double(i));
    const cplx t = z + lanczos_g + 0.5;
    return 0.5 * std::log(2 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

} // namespace

bool is_nonpositive_integer(cplx z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    if (z.real() > tol) return false;
    return std::abs(z.real() - std::round(z.real())) <= tol * std::max(1.0, std::abs(z.real()));
}

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z, 1e-14)) throw PoleOfGamma("Gamma has a pole at z = " + std::to_string(z.real()));
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma_right(1.0 - z);
    }
    return log_gamma_right(z);
}

cplx gamma_fn(cplx z) {
    if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 170.0) return std::tgamma(z.real());
    return std::exp(log_gamma(z));
}

cplx rgamma(cplx z) {
    if (is_nonpositive_integer(z, 1e-14)) return 0.0;
    if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 170.0) return 1.0 / std::tgamma(z.real());
    return std::exp(-log_gamma(z));
}

cplx digamma(cplx z) {
    if (is_nonpositive_integer(z, 1e-14)) throw PoleOfGamma("digamma has a pole at z = " + std::to_string(z.real()));
    cplx shift = 0.0;
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        shift = -pi * std::cos(pi * z) / std::sin(pi * z);
        z = 1.0 - z;
    }
    while (std::abs(z) < 12.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    // Asymptotic expansion with Bernoulli numbers B_2 .. B_16.
    static constexpr std::array<double, 8> b2k = {1.0 / 6,  -1.0 / 30,  1.0 / 42,    -1.0 / 30,
                                                  5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
    const cplx iz2 = 1.0 / (z * z);
    cplx term = iz2, sum = 0.0;
    for (int k = 1; k <= 8; ++k) {
        sum += b2k[k - 1] / double(2 * k) * term;
        term *= iz2;
    }
    return shift + std::log(z) - 0.5 / z - sum;
}

double unit_sphere_area(int m) {
    if (m < 1) throw DomainError("sphere dimension must be positive");
    return 2.0 * std::pow(pi, 0.5 * m) / std::tgamma(0.5 * m);
}

} // namespace hypspec
