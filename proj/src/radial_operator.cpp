#include "hypspec/radial_operator.hpp"

#include "hypspec/error.hpp"
#include "hypspec/space.hpp"

#include <cmath>
#include <set>
#include <string>

namespace hypspec {

namespace {

// Entries of the tau_p matrices are integers; recover them exactly.
std::int64_t exact_integer(double x, const char* what) {
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-9) throw AssemblyMismatch(std::string(what) + " is not integral");
    return static_cast<std::int64_t>(r);
}

bool is_diagonal(const Eigen::MatrixXd& M) {
    return (M - Eigen::MatrixXd(M.diagonal().asDiagonal())).cwiseAbs().maxCoeff() <= 1e-12 || M.size() <= 1;
}

} // namespace

Rational machinery_alpha_p(const TauPAction& tau) {
    if (!is_diagonal(tau.omega_m)) throw AssemblyMismatch("tau_p(Omega_m) is not diagonal in the exterior basis");
    std::int64_t cmax = 0;
    for (int i = 0; i < tau.dim_v; ++i) cmax = std::max(cmax, -exact_integer(tau.omega_m(i, i), "tau_p(Omega_m)"));
    const Rational rho(tau.n - 1, 2);
    return rho * rho - Rational(cmax);
}

Eigen::MatrixXcd RadialOperator::sandwich(const Eigen::MatrixXcd& X) const {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(X.rows(), X.cols());
    for (const auto& Y : tau.y_matrices) out += Y * X * Y;
    return out;
}

Eigen::MatrixXcd RadialOperator::apply_w(int k, const Eigen::MatrixXcd& X) const {
    const WTerm& w = w_coeffs.at(k - 1);
    Eigen::MatrixXcd out = w.scalar * X;
    if (w.two_sided != 0) out += w.two_sided * (tau.y_square_sum * X + X * tau.y_square_sum);
    if (w.sandwich != 0) out += w.sandwich * sandwich(X);
    return out;
}

Eigen::MatrixXcd RadialOperator::apply_e(const Eigen::MatrixXcd& X) const { return e_diag.asDiagonal() * X; }

Eigen::MatrixXcd RadialOperator::w_series(double t, const Eigen::MatrixXcd& X) const {
    const double q = std::exp(-t);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(X.rows(), X.cols());
    double qk = 1;
    for (std::size_t k = 1; k <= w_coeffs.size(); ++k) {
        qk *= q;
        if (!w_coeffs[k - 1].is_zero()) out += qk * apply_w(int(k), X);
    }
    return out;
}

Eigen::MatrixXcd RadialOperator::w_direct(double t, const Eigen::MatrixXcd& X) const {
    const double k = to_double(rho);
    const double csch = 1.0 / std::sinh(t), coth = 1.0 / std::tanh(t);
    const auto& S = tau.y_square_sum;
    return csch * csch * ((k * k - k) * X - S * X - X * S) + 2.0 * coth * csch * sandwich(X);
}

Eigen::MatrixXcd RadialOperator::second_derivative(cplx s, double t, const Eigen::MatrixXcd& F,
                                                   const Eigen::MatrixXcd& dF) const {
    const double coth = 1.0 / std::tanh(t), csch = 1.0 / std::sinh(t);
    const auto& S = tau.y_square_sum;
    const double omega_k = -double(p * (n - p));
    const cplx shift = omega_k - to_double(alpha_p) + s * s;
    return -(n - 1) * coth * dF - coth * coth * (S * F) - csch * csch * (F * S) + 2.0 * coth * csch * sandwich(F) +
           shift * F;
}

Eigen::MatrixXcd RadialOperator::scaled_second_derivative(cplx s, double t, const Eigen::MatrixXcd& F,
                                                          const Eigen::MatrixXcd& tdF) const {
    // t coth t and t csch t stay bounded at 0.
    const double tc = t < 1e-8 ? 1.0 : t / std::tanh(t);
    const double ts = t < 1e-8 ? 1.0 : t / std::sinh(t);
    const auto& S = tau.y_square_sum;
    const double omega_k = -double(p * (n - p));
    const cplx shift = omega_k - to_double(alpha_p) + s * s;
    return -(n - 1) * tc * tdF - tc * tc * (S * F) - ts * ts * (F * S) + 2.0 * tc * ts * sandwich(F) +
           (t * t) * shift * F;
}

RadialOperator build_radial_operator(int n, int p, int L_w) {
    if (L_w < 1) throw DomainError("expansion order L_w must be >= 1");
    RadialOperator op;
    op.n = n;
    op.p = p;
    op.tau = build_tau_p_action(n, p);
    op.end_dim = op.tau.dim_v * op.tau.dim_v;
    const auto space = make_space(Field::Real, n);
    op.rho = space.rho;
    op.alpha_p = alpha_p(space, p);

    // q^0 part of the conjugated operator: rho^2 + Omega_k - S. It must be rho^2 - alpha_p + D.
    const int dv = op.tau.dim_v;
    const Eigen::MatrixXd lhs = op.tau.omega_k - op.tau.y_square_sum;
    if ((lhs - op.tau.omega_m).cwiseAbs().maxCoeff() > 1e-12)
        throw AssemblyMismatch("Omega_k - sum Y_r^2 differs from tau_p(Omega_m)");
    const Rational machinery = machinery_alpha_p(op.tau);
    if (machinery != op.alpha_p)
        throw AssemblyMismatch("alpha_p from the M-type spectrum (" + to_string(machinery) +
                               ") differs from the table value (" + to_string(op.alpha_p) + ")");
    op.c_max = op.rho * op.rho - op.alpha_p;
    op.e_diag.resize(dv);
    for (int i = 0; i < dv; ++i) {
        op.e_diag(i) = to_double(op.c_max) + op.tau.omega_m(i, i);
        if (op.e_diag(i) < -1e-12) throw AssemblyMismatch("E element has a negative eigenvalue");
    }

    // csch^2 t = sum_{m>=1} 4m q^{2m};  coth t csch t = sum_{m>=0} 2(2m+1) q^{2m+1}.
    const double rr = to_double(op.rho);
    const bool has_sandwich = p > 0 && p < n;
    for (int k = 1; k <= L_w; ++k) {
        WTerm w;
        if (k % 2 == 0) {
            const double c = 4.0 * (k / 2);
            w.scalar = c * (rr * rr - rr);
            w.two_sided = p > 0 && p < n ? -c : 0.0;
        } else if (has_sandwich) {
            w.sandwich = 4.0 * k;
        }
        op.w_coeffs.push_back(w);
        if (!w.is_zero()) op.q_powers.push_back(k);
    }
    return op;
}

std::vector<double> e_spectrum(const RadialOperator& op) {
    std::set<double> vals;
    for (int i = 0; i < op.e_diag.size(); ++i) vals.insert(std::round(op.e_diag(i) * 1e9) / 1e9);
    return {vals.begin(), vals.end()};
}

} // namespace hypspec
