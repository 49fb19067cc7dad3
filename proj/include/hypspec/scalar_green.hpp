#pragma once

#include "hypspec/hypergeometric.hpp"
#include "hypspec/space.hpp"

#include <vector>

namespace hypspec {

/// The Gamma-factor constant f_{n,d}(s) of the hypergeometric closed form.
cplx plancherel_prefactor(const SpaceDescriptor& space, cplx s);

/// Scalar resolvent kernel g_0(s, r) of (Delta - rho^2 + s^2)^{-1} at geodesic distance r.
cplx green0_eval(const SpaceDescriptor& space, cplx s, double r, const GreenEvalConfig& cfg = {});

/// |g'' + [(dn-1) coth r + (d-1) tanh r] g' + (rho^2 - s^2) g| / |g|, with exact r-derivatives
/// taken through the contiguous hypergeometric functions.
double green0_ode_residual(const SpaceDescriptor& space, cplx s, double r, const GreenEvalConfig& cfg = {});

/// Same residual from Richardson-extrapolated five-point differences; an independent but
/// noisier cross-check (roughly 1e-6 relative near small r in high dimension).
double green0_fd_residual(const SpaceDescriptor& space, cplx s, double r, const GreenEvalConfig& cfg = {});

struct Sample {
    double x;
    double value;
};

/// Least-squares slope of -log(value) against x.
double decay_rate_fit(const std::vector<Sample>& samples);

/// Leading small-r behaviour of g_0: r^{2-dn}/vol(S^{dn-1}), or -log(r)/(2 pi) in dimension two.
double green0_small_r_asymptote(const SpaceDescriptor& space, double r);

} // namespace hypspec
