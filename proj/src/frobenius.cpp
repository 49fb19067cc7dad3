#include "hypspec/frobenius.hpp"

#include "hypspec/error.hpp"
#include "hypspec/scalar_green.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace hypspec {

CoverPoint cover_point(const RadialOperator& op, cplx s, const std::vector<int>& branch_signs) {
    CoverPoint pt;
    pt.s = s;
    for (double e : e_spectrum(op))
        if (e > 0) pt.e_values.push_back(e);
    if (!branch_signs.empty() && branch_signs.size() != pt.e_values.size())
        throw DomainError("expected " + std::to_string(pt.e_values.size()) + " branch signs, got " +
                          std::to_string(branch_signs.size()));
    pt.h = s.real();
    pt.physical_sheet = s.real() > 0;
    for (std::size_t i = 0; i < pt.e_values.size(); ++i) {
        const cplx y2 = s * s + pt.e_values[i];
        if (std::abs(y2) < 1e-14) throw BranchPoint("s is a ramification point of the cover");
        const int sign = branch_signs.empty() ? 1 : branch_signs[i];
        if (sign != 1 && sign != -1) throw DomainError("branch signs must be +1 or -1");
        const cplx y = double(sign) * std::sqrt(y2);
        pt.branch_values.push_back(y);
        pt.h = std::min(pt.h, y.real());
        pt.physical_sheet = pt.physical_sheet && y.real() > 0;
    }
    return pt;
}

CoverPoint cover_point(int n, int p, cplx s, const std::vector<int>& branch_signs) {
    return cover_point(build_radial_operator(n, p, 1), s, branch_signs);
}

namespace {

using Poly = std::vector<Eigen::MatrixXcd>;

void trim(Poly& P) {
    while (P.size() > 1 && P.back().cwiseAbs().maxCoeff() == 0.0) P.pop_back();
}

double poly_norm(const Poly& P) {
    double m = 0;
    for (const auto& c : P) m = std::max(m, c.cwiseAbs().maxCoeff());
    return m;
}

} // namespace

FrobeniusKernel frobenius_solve(const RadialOperator& op, const CoverPoint& pt, const FrobeniusConfig& cfg) {
    if (cfg.order < 1) throw DomainError("Frobenius truncation order must be >= 1");
    if (int(op.w_coeffs.size()) < cfg.order)
        throw DomainError("radial operator expanded to order " + std::to_string(op.w_coeffs.size()) +
                          " < truncation order " + std::to_string(cfg.order));
    FrobeniusKernel K;
    K.point = pt;
    K.n = op.n;
    K.p = op.p;
    K.order = cfg.order;
    K.resonance_margin = std::numeric_limits<double>::infinity();
    const int dv = op.tau.dim_v;
    const cplx s = pt.s;
    const double floor = cfg.resonance_floor * (1.0 + std::norm(s));

    std::vector<double> blocks_e{0.0};
    for (double e : pt.e_values) blocks_e.push_back(e);
    for (std::size_t j = 0; j < blocks_e.size(); ++j) {
        FrobeniusBlock B;
        B.e = blocks_e[j];
        B.mu = j == 0 ? s : pt.branch_values[j - 1];
        B.projector = Eigen::VectorXd::Zero(dv);
        for (int i = 0; i < dv; ++i)
            if (std::abs(op.e_diag(i) - B.e) < 1e-9) B.projector(i) = 1.0;
        B.coeffs.push_back({Eigen::MatrixXcd(B.projector.cast<cplx>().asDiagonal())});

        for (int l = 1; l <= cfg.order; ++l) {
            // Right-hand side sum_k W_k(a_{l-k}), a polynomial in t.
            std::size_t deg = 1;
            for (int k = 1; k <= l; ++k) deg = std::max(deg, B.coeffs[l - k].size());
            Poly R(deg, Eigen::MatrixXcd::Zero(dv, dv));
            for (int k = 1; k <= l; ++k) {
                if (op.w_coeffs[k - 1].is_zero()) continue;
                const Poly& prev = B.coeffs[l - k];
                for (std::size_t m = 0; m < prev.size(); ++m) R[m] += op.apply_w(k, prev[m]);
            }
            const int M = int(R.size()) - 1;
            const cplx kappa = B.mu + double(l);
            Poly out(M + 3, Eigen::MatrixXcd::Zero(dv, dv));
            // Row i solves (kappa^2 - s^2 - e_i) P - 2 kappa P' + P'' = R.
            for (int i = 0; i < dv; ++i) {
                const cplx lambda = kappa * kappa - s * s - op.e_diag(i);
                K.resonance_margin = std::min(K.resonance_margin, std::abs(lambda));
                double rhs = 0;
                for (const auto& c : R) rhs = std::max(rhs, c.row(i).cwiseAbs().maxCoeff());
                if (std::abs(lambda) > floor) {
                    std::vector<Eigen::RowVectorXcd> c(M + 3, Eigen::RowVectorXcd::Zero(dv));
                    for (int m = M; m >= 0; --m)
                        c[m] = (R[m].row(i) + 2.0 * kappa * double(m + 1) * c[m + 1] -
                                double((m + 2) * (m + 1)) * c[m + 2]) /
                               lambda;
                    for (int m = 0; m <= M; ++m) out[m].row(i) = c[m];
                    continue;
                }
                if (cfg.policy == ResonancePolicy::Reject)
                    throw ResonanceDetected("recursion operator is singular at order l = " + std::to_string(l) +
                                            " (|lambda| = " + std::to_string(std::abs(lambda)) + ")");
                if (rhs == 0.0) continue;
                ++B.log_rows;
                if (std::abs(kappa) > floor) {
                    // Q = P' solves -2 kappa Q + Q' = R; integrate once.
                    std::vector<Eigen::RowVectorXcd> Q(M + 2, Eigen::RowVectorXcd::Zero(dv));
                    for (int m = M; m >= 0; --m) Q[m] = (R[m].row(i) - double(m + 1) * Q[m + 1]) / (-2.0 * kappa);
                    for (int m = 0; m <= M; ++m) out[m + 1].row(i) = Q[m] / double(m + 1);
                } else {
                    // P'' = R; integrate twice.
                    for (int m = 0; m <= M; ++m) out[m + 2].row(i) = R[m].row(i) / double((m + 1) * (m + 2));
                }
            }
            trim(out);
            B.coeffs.push_back(std::move(out));
        }
        K.log_terms += B.log_rows;
        K.blocks.push_back(std::move(B));
    }

    // Tail diagnostics from the last five coefficients.
    double valid_from = 0, ratio = 0;
    for (const auto& B : K.blocks) {
        const double a0 = poly_norm(B.coeffs[0]);
        const double aL = poly_norm(B.coeffs[cfg.order]);
        if (aL > 0) valid_from = std::max(valid_from, std::log(aL / (cfg.tail_tolerance * a0)) / cfg.order);
        if (cfg.order >= 5) {
            const double aL4 = poly_norm(B.coeffs[cfg.order - 4]);
            if (aL4 > 0 && aL > 0) ratio = std::max(ratio, std::pow(aL / aL4, 0.25));
        }
    }
    K.valid_from = valid_from;
    K.tail_ratio = ratio;
    // The q-series must converge at the edge of validity.
    K.truncation_warning = ratio * std::exp(-std::max(valid_from, 1e-3)) >= 1.0;
    return K;
}

KernelJet kernel_jet(const FrobeniusKernel& kernel, double t, int block) {
    if (!(t > 0)) throw DomainError("kernel evaluation requires t > 0");
    const int dv = int(kernel.blocks.front().projector.size());
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(dv, dv), dv1 = v, dv2 = v;
    for (std::size_t j = 0; j < kernel.blocks.size(); ++j) {
        if (block >= 0 && int(j) != block) continue;
        const auto& B = kernel.blocks[j];
        for (std::size_t l = 0; l < B.coeffs.size(); ++l) {
            const cplx kappa = B.mu + double(l);
            const cplx ex = std::exp(-kappa * t);
            if (ex == 0.0) continue;
            const auto& P = B.coeffs[l];
            Eigen::MatrixXcd P0 = Eigen::MatrixXcd::Zero(dv, dv), P1 = P0, P2 = P0;
            double tm = 1;
            for (std::size_t m = 0; m < P.size(); ++m) {
                P0 += tm * P[m];
                tm *= t;
            }
            for (std::size_t m = 1; m < P.size(); ++m) P1 += double(m) * std::pow(t, double(m - 1)) * P[m];
            for (std::size_t m = 2; m < P.size(); ++m) P2 += double(m * (m - 1)) * std::pow(t, double(m - 2)) * P[m];
            v += ex * P0;
            dv1 += ex * (P1 - kappa * P0);
            dv2 += ex * (kappa * kappa * P0 - 2.0 * kappa * P1 + P2);
        }
    }
    // F = phi v with phi = sinh^{-k}.
    const double k = 0.5 * (kernel.n - 1);
    const double sh = std::sinh(t), coth = 1.0 / std::tanh(t);
    const double phi = std::pow(sh, -k);
    const double dphi = -k * coth * phi;
    const double ddphi = (k / (sh * sh) + k * k * coth * coth) * phi;
    return {phi * v, dphi * v + phi * dv1, ddphi * v + 2.0 * dphi * dv1 + phi * dv2};
}

Eigen::MatrixXcd kernel_eval(const FrobeniusKernel& kernel, double t) {
    if (t < kernel.valid_from)
        throw TailBoundExceeded("t = " + std::to_string(t) + " is below the series validity threshold " +
                                std::to_string(kernel.valid_from));
    return kernel_jet(kernel, t).F;
}

double operator_norm(const Eigen::MatrixXcd& M) {
    if (M.size() == 1) return std::abs(M(0, 0));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    return svd.singularValues()(0);
}

double kernel_ode_residual(const RadialOperator& op, const FrobeniusKernel& kernel, double t) {
    if (t < kernel.valid_from) throw TailBoundExceeded("residual requested below the series validity threshold");
    const KernelJet j = kernel_jet(kernel, t);
    const Eigen::MatrixXcd rhs = op.second_derivative(kernel.point.s, t, j.F, j.dF);
    return operator_norm(j.ddF - rhs) / operator_norm(j.F);
}

double decay_check(const FrobeniusKernel& kernel, const std::vector<double>& t_grid) {
    std::vector<Sample> samples;
    for (double t : t_grid) samples.push_back({t, operator_norm(kernel_eval(kernel, t))});
    return decay_rate_fit(samples);
}

} // namespace hypspec
