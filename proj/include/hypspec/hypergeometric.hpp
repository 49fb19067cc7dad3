#pragma once

#include "hypspec/special.hpp"

namespace hypspec {

struct GreenEvalConfig {
    double series_tolerance = 1e-14;
    int max_terms = 10000;
    double transformation_threshold = 0.9; ///< |z| above which argument transformations are used
};

/// Gauss hypergeometric function 2F1(a, b; c; z).
cplx gauss_2f1(cplx a, cplx b, cplx c, cplx z, const GreenEvalConfig& cfg = {});

/// Same, with 1 - z supplied separately so that arguments close to 1 keep full relative precision.
cplx gauss_2f1(cplx a, cplx b, cplx c, cplx z, cplx one_minus_z, const GreenEvalConfig& cfg);

} // namespace hypspec
