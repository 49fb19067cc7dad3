#pragma once

#include <Eigen/Dense>

#include <vector>

namespace hypspec {

/// Lexicographically ordered p-subsets of {0, ..., n-1}: the basis e_I of Lambda^p(R^n).
std::vector<std::vector<int>> exterior_basis(int n, int p);

/// Matrix of the derivation extension of A in gl(n) to Lambda^p(R^n).
Eigen::MatrixXd exterior_action(int n, int p, const Eigen::MatrixXd& A);

/// E_ji - E_ij in so(n).
Eigen::MatrixXd rotation_generator(int n, int i, int j);

/// Restricted-root data of so(n,1) in its (n+1)-dimensional realization (last index timelike).
struct SoN1RootData {
    Eigen::MatrixXd h0;                       ///< E_{0,n} + E_{n,0}, alpha(h0) = 1
    std::vector<Eigen::MatrixXd> root_vectors; ///< X_r in g_alpha, r = 1..n-1
    std::vector<Eigen::MatrixXd> k_parts;      ///< (X_r + theta X_r)/2, normalized, as n x n blocks
};

SoN1RootData so_n1_root_data(int n);

/// <X, Y> = B(X, Y)/B(h0, h0) on so(n,1) matrices.
double normalized_killing(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y);

struct TauPAction {
    int n = 0;
    int p = 0;
    int dim_v = 0;
    std::vector<Eigen::MatrixXd> y_matrices; ///< tau_p(Y_r), r = 1..n-1
    Eigen::MatrixXd omega_k;                 ///< tau_p(Omega_k), equal to -p(n-p) Id
    Eigen::MatrixXd omega_m;                 ///< tau_p(Omega_m) for m = so(n-1) on indices 1..n-1
    Eigen::MatrixXd y_square_sum;            ///< S = sum_r tau_p(Y_r)^2
};

TauPAction build_tau_p_action(int n, int p);

} // namespace hypspec
