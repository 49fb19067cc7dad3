#pragma once

#include "hypspec/rational.hpp"

#include <string>
#include <variant>

namespace hypspec {

enum class Field { Real, Complex, Quaternion, Octonion };

/// Rank-one hyperbolic space H^n over a normed division algebra.
struct SpaceDescriptor {
    Field field;
    int n;
    int d;        ///< real dimension of the field
    int dim;      ///< real dimension d*n of the space
    int m_alpha;  ///< d(n-1)
    int m_2alpha; ///< d-1
    Rational rho;
};

/// M-type labels: exterior powers of SO(n-1) (real case) or the tau'_{r,s} types (complex case).
struct ExteriorPower {
    int q;
};
struct LefschetzType {
    int r, s;
};
using MTypeLabel = std::variant<ExteriorPower, LefschetzType>;

SpaceDescriptor make_space(Field field, int n);

/// Bottom of the continuous spectrum of the Hodge Laplacian on p-forms.
Rational alpha_p(const SpaceDescriptor& space, int p);

/// Casimir value q(n-1-q) of the exterior power Lambda^q of SO(n-1).
Rational casimir_m_exterior(const SpaceDescriptor& space, int q);

/// Casimir value of tau'_{r,s}; indices with r+s > n are reflected to (n-s, n-r).
Rational casimir_tau_prime(int n, int r, int s);

/// Casimir value of an M-type label on the given space.
Rational casimir(const SpaceDescriptor& space, const MTypeLabel& label);

/// Smallest eigenvalue of the Weitzenboeck curvature term on p-forms.
Rational curvature_term_min(const SpaceDescriptor& space, int p);

Field parse_field(const std::string& name);
std::string field_name(Field field);
int field_dimension(Field field);

} // namespace hypspec
