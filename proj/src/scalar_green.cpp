#include "hypspec/scalar_green.hpp"

#include "hypspec/error.hpp"

#include <cmath>
#include <numbers>

namespace hypspec {

namespace {

struct GreenParams {
    double rho;
    double half_m; ///< d(n-1)/2
    int dn;
};

GreenParams params(const SpaceDescriptor& sp) { return {to_double(sp.rho), 0.5 * sp.m_alpha, sp.dim}; }

} // namespace

cplx plancherel_prefactor(const SpaceDescriptor& space, cplx s) {
    const auto [rho, half_m, dn] = params(space);
    const cplx num = gamma_fn(0.5 * (s + rho)) * gamma_fn(s + half_m);
    const cplx den = rgamma(s + 1.0) * rgamma(0.5 * s + 0.5 * half_m);
    return std::pow(2.0, space.d - 2) * std::pow(std::numbers::pi, -0.5 * (dn - 1)) * num * den;
}

namespace {

struct GreenJet {
    cplx g, dg, ddg;
};

// g_0 and its first two r-derivatives. The closed form is, after a Pfaff transformation,
//   g_0 = kappa f(s) (2 cosh r)^{-(s+rho)} 2F1(A, B; C; w),  w = sech^2 r,
// which keeps the argument in (0, 1] and the value real-positive for real s. The derivatives
// follow from d/dw 2F1(A,B;C;w) = (AB/C) 2F1(A+1,B+1;C+1;w).
GreenJet green0_jet(const SpaceDescriptor& space, cplx s, double r, int order, const GreenEvalConfig& cfg) {
    if (!(r > 0)) throw DomainError("green0_eval requires r > 0");
    const auto [rho, half_m, dn] = params(space);
    if (s.real() <= -half_m) throw DomainError("green0_eval requires Re s > -d(n-1)/2");
    const cplx sigma = s + rho;
    const cplx A = 0.5 * sigma;
    const cplx C = s + 1.0;
    const cplx B = C - (0.5 * (s + 1.0) - 0.5 * half_m);
    const double ch = std::cosh(r), th = std::tanh(r);
    const double w = 1.0 / (ch * ch), omw = th * th;
    const double kappa = dn > 2 ? double(dn - 2) : 1.0;
    const cplx pref = kappa * plancherel_prefactor(space, s) * std::exp(-sigma * std::log(2.0 * ch));
    const cplx F0 = gauss_2f1(A, B, C, w, omw, cfg);
    GreenJet jet{pref * F0, 0.0, 0.0};
    if (order == 0) return jet;

    const cplx F1 = A * B / C * gauss_2f1(A + 1.0, B + 1.0, C + 1.0, w, omw, cfg);
    const cplx F2 = A * (A + 1.0) * B * (B + 1.0) / (C * (C + 1.0)) *
                    gauss_2f1(A + 2.0, B + 2.0, C + 2.0, w, omw, cfg);
    const double dw = -2.0 * w * th;
    const double ddw = 4.0 * w * th * th - 2.0 * w * w;
    const cplx dP = -sigma * th;                      // P'/P
    const cplx ddP = sigma * sigma * th * th - sigma * w; // P''/P
    const cplx Fr = F1 * dw;
    const cplx Frr = F2 * dw * dw + F1 * ddw;
    jet.dg = pref * (dP * F0 + Fr);
    jet.ddg = pref * (ddP * F0 + 2.0 * dP * Fr + Frr);
    return jet;
}

} // namespace

cplx green0_eval(const SpaceDescriptor& space, cplx s, double r, const GreenEvalConfig& cfg) {
    return green0_jet(space, s, r, 0, cfg).g;
}

double green0_ode_residual(const SpaceDescriptor& space, cplx s, double r, const GreenEvalConfig& cfg) {
    if (!(r > 1e-6)) throw DomainError("ODE residual needs r > 1e-6 for a meaningful normalization");
    const auto [rho, half_m, dn] = params(space);
    (void)half_m;
    const GreenJet j = green0_jet(space, s, r, 2, cfg);
    const double coef = (dn - 1) / std::tanh(r) + (space.d - 1) * std::tanh(r);
    const cplx res = j.ddg + coef * j.dg + (rho * rho - s * s) * j.g;
    const double norm = std::abs(j.g);
    if (norm == 0.0 || !std::isfinite(norm)) throw DomainError("ODE residual normalization degenerates");
    return std::abs(res) / norm;
}

double green0_fd_residual(const SpaceDescriptor& space, cplx s, double r, const GreenEvalConfig& cfg) {
    if (!(r > 1e-6)) throw DomainError("ODE residual needs r > 1e-6 for a meaningful normalization");
    const auto [rho, half_m, dn] = params(space);
    (void)half_m;
    const double h = 3e-3 * std::min(r, 1.0);
    auto g = [&](double x) { return green0_eval(space, s, x, cfg); };
    auto derivs = [&](double hh, cplx& d1, cplx& d2) {
        const cplx fm2 = g(r - 2 * hh), fm1 = g(r - hh), f0 = g(r), fp1 = g(r + hh), fp2 = g(r + 2 * hh);
        d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * hh);
        d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * hh * hh);
    };
    cplx d1h, d2h, d1q, d2q;
    derivs(h, d1h, d2h);
    derivs(0.5 * h, d1q, d2q);
    const cplx d1 = (16.0 * d1q - d1h) / 15.0;
    const cplx d2 = (16.0 * d2q - d2h) / 15.0;
    const cplx g0 = g(r);
    const double coef = (dn - 1) / std::tanh(r) + (space.d - 1) * std::tanh(r);
    return std::abs(d2 + coef * d1 + (rho * rho - s * s) * g0) / std::abs(g0);
}

double decay_rate_fit(const std::vector<Sample>& samples) {
    if (samples.size() < 2) throw DegenerateFit("decay fit needs at least two samples");
    double mx = 0, my = 0;
    for (const auto& s : samples) {
        if (!(s.value > 0)) throw DegenerateFit("decay fit needs positive values");
        mx += s.x;
        my += -std::log(s.value);
    }
    mx /= samples.size();
    my /= samples.size();
    double sxx = 0, sxy = 0;
    for (const auto& s : samples) {
        sxx += (s.x - mx) * (s.x - mx);
        sxy += (s.x - mx) * (-std::log(s.value) - my);
    }
    if (!(sxx > 1e-300)) throw DegenerateFit("decay fit abscissae coincide");
    return sxy / sxx;
}

double green0_small_r_asymptote(const SpaceDescriptor& space, double r) {
    if (space.dim == 2) return -std::log(r) / (2 * std::numbers::pi);
    return std::pow(r, 2 - space.dim) / unit_sphere_area(space.dim);
}

} // namespace hypspec
