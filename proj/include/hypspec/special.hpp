#pragma once

#include <complex>

namespace hypspec {

using cplx = std::complex<double>;

/// True when z lies within tol of 0, -1, -2, ...
bool is_nonpositive_integer(cplx z, double tol = 1e-12);

/// log Gamma(z) on some branch; exp() of it is Gamma(z). Throws PoleOfGamma at poles.
cplx log_gamma(cplx z);
cplx gamma_fn(cplx z);
/// 1/Gamma(z), entire; zero at the poles of Gamma.
cplx rgamma(cplx z);
cplx digamma(cplx z);

/// Area of the unit sphere S^{m-1} in R^m.
double unit_sphere_area(int m);

} // namespace hypspec
