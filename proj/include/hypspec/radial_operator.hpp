#pragma once

#include "hypspec/exterior.hpp"
#include "hypspec/rational.hpp"
#include "hypspec/special.hpp"

#include <Eigen/Dense>

#include <vector>

namespace hypspec {

/// One coefficient W_k of the q = e^{-t} expansion, acting on End(V) as
///   X -> scalar X + two_sided (S X + X S) + sandwich sum_r Y_r X Y_r.
struct WTerm {
    double scalar = 0;
    double two_sided = 0;
    double sandwich = 0;

    bool is_zero() const { return scalar == 0 && two_sided == 0 && sandwich == 0; }
};

/// The radial Hodge Laplacian on tau_p-radial End(V)-valued functions of H^n_R after the
/// conjugation v = sinh(t)^{(n-1)/2} F, written as  v'' = (E + s^2) v + W(e^{-t}) v.
struct RadialOperator {
    int n = 0;
    int p = 0;
    int end_dim = 0;
    TauPAction tau;
    Rational rho;
    Rational alpha_p;      ///< from the constant tables
    Rational c_max;        ///< largest Casimir value among the M-types of tau_p
    Eigen::VectorXd e_diag; ///< the E element, diagonal in the exterior basis
    std::vector<WTerm> w_coeffs; ///< w_coeffs[k-1] = W_k, k = 1..L_w
    std::vector<int> q_powers;   ///< powers k with W_k != 0

    Eigen::MatrixXcd apply_w(int k, const Eigen::MatrixXcd& X) const;
    /// E acts on End(V) by left multiplication.
    Eigen::MatrixXcd apply_e(const Eigen::MatrixXcd& X) const;
    Eigen::MatrixXcd sandwich(const Eigen::MatrixXcd& X) const;
    /// Truncated series sum_k q^k W_k(X).
    Eigen::MatrixXcd w_series(double t, const Eigen::MatrixXcd& X) const;
    /// Closed-form W(e^{-t}) X with hyperbolic functions.
    Eigen::MatrixXcd w_direct(double t, const Eigen::MatrixXcd& X) const;
    /// F'' solved from the unconjugated radial equation (Delta_p - alpha_p + s^2) F = 0.
    Eigen::MatrixXcd second_derivative(cplx s, double t, const Eigen::MatrixXcd& F, const Eigen::MatrixXcd& dF) const;
    /// Same equation with all coefficients multiplied by t^2 (regular as t -> 0).
    Eigen::MatrixXcd scaled_second_derivative(cplx s, double t, const Eigen::MatrixXcd& F,
                                              const Eigen::MatrixXcd& tdF) const;
};

/// Builds the operator for Lambda^p(R^n), expanding coefficients to order L_w in q.
/// Throws AssemblyMismatch if the q^0 part is not rho^2 - alpha_p + D.
RadialOperator build_radial_operator(int n, int p, int L_w);

/// rho^2 - c(sigma_max) read off the spectrum of D = tau_p(Omega_m); exact.
Rational machinery_alpha_p(const TauPAction& tau);

/// Distinct eigenvalues of the E element in increasing order (the first is 0).
std::vector<double> e_spectrum(const RadialOperator& op);

} // namespace hypspec
