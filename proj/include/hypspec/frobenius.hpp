#pragma once

#include "hypspec/radial_operator.hpp"

#include <Eigen/Dense>

#include <vector>

namespace hypspec {

/// A point on the branched cover: s together with y_i = +-sqrt(s^2 + e_i) for every
/// positive eigenvalue e_i of the E element.
struct CoverPoint {
    cplx s;
    std::vector<double> e_values;  ///< distinct positive e_i, increasing
    std::vector<cplx> branch_values;
    double h = 0;                  ///< min(Re s, Re y_i)
    bool physical_sheet = false;   ///< Re s > 0 and every Re y_i > 0
};

/// branch_signs holds +1 / -1 per branch value (empty means all principal).
CoverPoint cover_point(const RadialOperator& op, cplx s, const std::vector<int>& branch_signs = {});
CoverPoint cover_point(int n, int p, cplx s, const std::vector<int>& branch_signs = {});

enum class ResonancePolicy {
    LogTerms, ///< solve resonant rows with polynomial-in-t (logarithmic in q) corrections
    Reject    ///< throw ResonanceDetected whenever a recursion solve is (near-)singular
};

struct FrobeniusConfig {
    int order = 40;
    double resonance_floor = 1e-8;
    ResonancePolicy policy = ResonancePolicy::LogTerms;
    double tail_tolerance = 1e-12;
};

/// Coefficients a_l(t) = sum_m coeffs[l][m] t^m of one exponent block.
struct FrobeniusBlock {
    double e = 0;
    cplx mu;
    Eigen::VectorXd projector; ///< diagonal of P_j
    std::vector<std::vector<Eigen::MatrixXcd>> coeffs;
    int log_rows = 0;          ///< resonant rows solved with logarithmic terms
};

struct FrobeniusKernel {
    CoverPoint point;
    int n = 0;
    int p = 0;
    int order = 0;
    std::vector<FrobeniusBlock> blocks;
    double resonance_margin = 0; ///< smallest |(mu_j + l)^2 - s^2 - e_i| met in the recursion
    int log_terms = 0;
    double valid_from = 0;       ///< t above which the truncated tail is below tail_tolerance
    double tail_ratio = 0;       ///< ratio-test estimate from the last five coefficients
    bool truncation_warning = false;
};

FrobeniusKernel frobenius_solve(const RadialOperator& op, const CoverPoint& pt, const FrobeniusConfig& cfg = {});

struct KernelJet {
    Eigen::MatrixXcd F, dF, ddF;
};

/// F and its first two t-derivatives; block < 0 sums all blocks.
KernelJet kernel_jet(const FrobeniusKernel& kernel, double t, int block = -1);

/// F_p(s, a_t) = sinh(t)^{-(n-1)/2} sum_j e^{-mu_j t} sum_l a_{j,l}(t) e^{-l t}.
Eigen::MatrixXcd kernel_eval(const FrobeniusKernel& kernel, double t);

/// ||F'' - (radial equation)(F, F')||_2 / ||F||_2 at t.
double kernel_ode_residual(const RadialOperator& op, const FrobeniusKernel& kernel, double t);

double operator_norm(const Eigen::MatrixXcd& M);

/// Least-squares decay rate of ||F_p(t)||_2 over the grid.
double decay_check(const FrobeniusKernel& kernel, const std::vector<double>& t_grid);

} // namespace hypspec
