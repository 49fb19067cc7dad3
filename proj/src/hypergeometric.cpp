#include "hypspec/hypergeometric.hpp"

#include "hypspec/error.hpp"

#include <cmath>
#include <string>

namespace hypspec {

namespace {

constexpr double integer_tol = 1e-13;
constexpr double near_integer_tol = 1e-5;
constexpr double perturbation = 1e-4;

bool is_integer(cplx z, double tol = integer_tol) {
    return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

cplx series(cplx a, cplx b, cplx c, cplx z, const GreenEvalConfig& cfg) {
    cplx sum = 1.0, term = 1.0;
    int small = 0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        term *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * double(k + 1)) * z;
        sum += term;
        if (term == 0.0) return sum;
        if (std::abs(term) <= cfg.series_tolerance * std::abs(sum)) {
            if (++small >= 2) return sum;
        } else {
            small = 0;
        }
    }
    throw NoConvergence("2F1 series did not converge within " + std::to_string(cfg.max_terms) + " terms");
}

cplx polynomial(cplx a, cplx b, cplx c, cplx z, int degree) {
    cplx sum = 1.0, term = 1.0;
    for (int k = 0; k < degree; ++k) {
        term *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * double(k + 1)) * z;
        sum += term;
    }
    return sum;
}

int terminating_degree(cplx a, cplx b) {
    int deg = -1;
    for (cplx x : {a, b})
        if (is_nonpositive_integer(x, integer_tol)) {
            const int k = int(std::lround(-x.real()));
            deg = deg < 0 ? k : std::min(deg, k);
        }
    return deg;
}

cplx evaluate(cplx a, cplx b, cplx c, cplx z, cplx omz, const GreenEvalConfig& cfg);

// 1 - z transformation, integer m = c - a - b >= 0 (logarithmic case).
cplx one_minus_z_log(cplx a, cplx b, int m, cplx omz, const GreenEvalConfig& cfg) {
    const cplx c = a + b + double(m);
    const cplx logw = std::log(omz);
    cplx finite = 0.0;
    if (m > 0) {
        // Gamma(m) Gamma(c) / (Gamma(a+m) Gamma(b+m)) sum_{k<m} (a)_k (b)_k / (k! (1-m)_k) (1-z)^k
        cplx term = 1.0;
        for (int k = 0; k < m; ++k) {
            finite += term;
            term *= (a + double(k)) * (b + double(k)) / (double(k + 1) * (1.0 - m + double(k))) * omz;
        }
        finite *= std::tgamma(double(m)) * gamma_fn(c) * rgamma(a + double(m)) * rgamma(b + double(m));
    }
    // Logarithmic series.
    const cplx pre = (m % 2 == 0 ? 1.0 : -1.0) * std::pow(omz, double(m)) * gamma_fn(c) * rgamma(a) * rgamma(b);
    cplx sum = 0.0;
    cplx coef = 1.0 / std::tgamma(double(m + 1)); // (a+m)_k (b+m)_k / (k! (k+m)!)
    cplx psi_k1 = digamma(1.0), psi_km1 = digamma(double(m + 1));
    cplx psi_a = digamma(a + double(m)), psi_b = digamma(b + double(m));
    int small = 0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        const cplx term = coef * (logw - psi_k1 - psi_km1 + psi_a + psi_b);
        sum += term;
        if (std::abs(term) <= cfg.series_tolerance * std::abs(sum) && k > 2) {
            if (++small >= 2) return finite - pre * sum;
        } else {
            small = 0;
        }
        coef *= (a + double(m + k)) * (b + double(m + k)) / (double(k + 1) * double(k + m + 1)) * omz;
        psi_k1 += 1.0 / double(k + 1);
        psi_km1 += 1.0 / double(k + m + 1);
        psi_a += 1.0 / (a + double(m + k));
        psi_b += 1.0 / (b + double(m + k));
    }
    throw NoConvergence("logarithmic 2F1 series did not converge");
}

// Connection formula around z = 1.
cplx one_minus_z(cplx a, cplx b, cplx c, cplx z, cplx omz, const GreenEvalConfig& cfg) {
    const cplx m = c - a - b;
    if (is_integer(m)) {
        const int mi = int(std::lround(m.real()));
        if (mi >= 0) return one_minus_z_log(a, b, mi, omz, cfg);
        // Euler transformation flips the sign of m.
        return std::pow(omz, m) * one_minus_z_log(c - a, c - b, -mi, omz, cfg);
    }
    if (is_integer(m, near_integer_tol)) {
        // Near-integer m: average symmetric perturbations in c (second-order accurate).
        const cplx up = one_minus_z(a, b, c + perturbation, z, omz, cfg);
        const cplx dn = one_minus_z(a, b, c - perturbation, z, omz, cfg);
        return 0.5 * (up + dn);
    }
    const cplx t1 = gamma_fn(c) * gamma_fn(m) * rgamma(c - a) * rgamma(c - b) *
                    evaluate(a, b, 1.0 - m, omz, z, cfg);
    const cplx t2 = std::pow(omz, m) * gamma_fn(c) * gamma_fn(-m) * rgamma(a) * rgamma(b) *
                    evaluate(c - a, c - b, 1.0 + m, omz, z, cfg);
    return t1 + t2;
}

// Connection formula around z = infinity; requires a - b non-integer.
cplx inverse_z(cplx a, cplx b, cplx c, cplx z, const GreenEvalConfig& cfg) {
    const cplx iz = 1.0 / z;
    const cplx mz = -z;
    const cplx t1 = gamma_fn(c) * gamma_fn(b - a) * rgamma(b) * rgamma(c - a) * std::pow(mz, -a) *
                    evaluate(a, 1.0 - c + a, 1.0 - b + a, iz, 1.0 - iz, cfg);
    const cplx t2 = gamma_fn(c) * gamma_fn(a - b) * rgamma(a) * rgamma(c - b) * std::pow(mz, -b) *
                    evaluate(b, 1.0 - c + b, 1.0 - a + b, iz, 1.0 - iz, cfg);
    return t1 + t2;
}

cplx evaluate(cplx a, cplx b, cplx c, cplx z, cplx omz, const GreenEvalConfig& cfg) {
    if (z == 0.0) return 1.0;
    if (const int deg = terminating_degree(a, b); deg >= 0) return polynomial(a, b, c, z, deg);
    const double thr = cfg.transformation_threshold;
    if (std::abs(z) <= thr) return series(a, b, c, z, cfg);

    // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; w), w = z/(z-1), 1-w = 1/(1-z).
    const cplx w = z / (z - 1.0);
    const cplx omw = 1.0 / omz;
    if (std::abs(w) <= thr) return std::pow(omz, -a) * series(a, c - b, c, w, cfg);
    if (std::abs(omz) <= thr) return one_minus_z(a, b, c, z, omz, cfg);
    if (std::abs(omw) <= thr) return std::pow(omz, -a) * one_minus_z(a, c - b, c, w, omw, cfg);
    if (std::abs(1.0 / z) <= thr && !is_integer(a - b, near_integer_tol)) return inverse_z(a, b, c, z, cfg);
    if (std::abs(z) < 1.0) return series(a, b, c, z, cfg);
    throw NoConvergence("no convergent representation of 2F1 found for this argument");
}

} // namespace

cplx gauss_2f1(cplx a, cplx b, cplx c, cplx z, cplx one_minus_z, const GreenEvalConfig& cfg) {
    if (is_nonpositive_integer(c, integer_tol)) {
        // Still well defined when the series terminates before the pole is reached.
        const int deg = terminating_degree(a, b);
        const int cpole = int(std::lround(-c.real()));
        if (deg < 0 || deg > cpole) throw PoleOfGamma("2F1 is undefined for non-positive integer c");
        return polynomial(a, b, c, z, deg);
    }
    if (z.imag() == 0.0 && z.real() >= 1.0 && terminating_degree(a, b) < 0)
        throw DomainError("2F1 argument lies on the branch cut [1, inf)");
    // Terminating series in c-a or c-b: use Euler's transformation to expose the polynomial.
    if (terminating_degree(a, b) < 0 && terminating_degree(c - a, c - b) >= 0)
        return std::pow(one_minus_z, c - a - b) * evaluate(c - a, c - b, c, z, one_minus_z, cfg);
    return evaluate(a, b, c, z, one_minus_z, cfg);
}

cplx gauss_2f1(cplx a, cplx b, cplx c, cplx z, const GreenEvalConfig& cfg) {
    return gauss_2f1(a, b, c, z, 1.0 - z, cfg);
}

} // namespace hypspec
