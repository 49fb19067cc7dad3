#pragma once

#include "hypspec/frobenius.hpp"

#include <Eigen/Dense>

#include <vector>

namespace hypspec {

struct PsiConfig {
    double t0 = 1e-3;          ///< innermost point of the downward integration
    double T = 2.0;            ///< matching point with the Frobenius series
    double fit_span = 10.0;    ///< exponent fitted over [t0, fit_span * t0]
    double rtol = 1e-12;
    double fit_tolerance = 1e-2; ///< max rms deviation of the log-log fit
    int samples = 160;
};

struct PsiReport {
    Eigen::MatrixXcd psi;            ///< lim vol(S^{n-1}) t^{n-2} G(t)
    double singularity_exponent = 0; ///< fitted exponent of the recombined solution G
    double raw_exponent = 0;         ///< fitted exponent of the uncombined sum of blocks
    std::vector<cplx> combination;   ///< block weights c_j (c_0 = 1) defining G = sum c_j F_j
    double sigma_min = 0;
    double sigma_max = 0;
    double fit_residual = 0;
};

/// Integrates each block solution from T down to t0 along x = -log t, combines the blocks so
/// that the traceless t^{-n} singularity cancels, and fits G(t) ~ psi / (vol(S^{n-1}) t^{n-2}).
PsiReport psi_extract(const RadialOperator& op, const FrobeniusKernel& kernel, const PsiConfig& cfg = {});

} // namespace hypspec
