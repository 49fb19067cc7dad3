#include "hypspec/space.hpp"

#include "hypspec/error.hpp"

#include <algorithm>
#include <cctype>

namespace hypspec {

int field_dimension(Field field) {
    switch (field) {
    case Field::Real: return 1;
    case Field::Complex: return 2;
    case Field::Quaternion: return 4;
    case Field::Octonion: return 8;
    }
    throw DomainError("unknown field");
}

Field parse_field(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "r" || s == "real") return Field::Real;
    if (s == "c" || s == "complex") return Field::Complex;
    if (s == "h" || s == "quaternion" || s == "quaternionic") return Field::Quaternion;
    if (s == "o" || s == "octonion" || s == "octonionic") return Field::Octonion;
    throw DomainError("unknown field '" + name + "' (expected R, C, H or O)");
}

std::string field_name(Field field) {
    switch (field) {
    case Field::Real: return "R";
    case Field::Complex: return "C";
    case Field::Quaternion: return "H";
    case Field::Octonion: return "O";
    }
    return "?";
}

SpaceDescriptor make_space(Field field, int n) {
    if (n < 2) throw DomainError("rank-one space requires n >= 2, got " + std::to_string(n));
    if (field == Field::Octonion && n != 2)
        throw DomainError("the octonionic hyperbolic space exists only for n = 2");
    const int d = field_dimension(field);
    SpaceDescriptor sp{field, n, d, d * n, d * (n - 1), d - 1, Rational(d * (n - 1), 2) + Rational(d - 1)};
    return sp;
}

namespace {

void check_degree(const SpaceDescriptor& space, int p) {
    if (p < 0 || p > space.dim)
        throw DomainError("form degree p = " + std::to_string(p) + " outside [0, " + std::to_string(space.dim) + "]");
}

Rational sq(Rational x) { return x * x; }

} // namespace

Rational alpha_p(const SpaceDescriptor& space, int p) {
    check_degree(space, p);
    // Hodge duality: alpha_p = alpha_{dim-p}.
    if (2 * p > space.dim) p = space.dim - p;
    const int n = space.n;
    switch (space.field) {
    case Field::Real:
        return sq(Rational(n - 1, 2) - Rational(p));
    case Field::Complex:
        return p == n ? Rational(1) : sq(Rational(n - p));
    case Field::Quaternion: {
        if (p == 0) return sq(Rational(2 * n + 1));
        if (p <= (4 * n - 1) / 6) return sq(Rational(2 * n - p)) + Rational(8 * (n - p));
        if (p <= n) return sq(Rational(2 * n + 1 - p));
        if (p < 2 * n) return sq(Rational(2 * n - p));
        return Rational(1);
    }
    case Field::Octonion:
        // Only two values are known: rho^2 = 121 for functions, and 97 for one-forms.
        if (p == 0) return Rational(121);
        if (p == 1) return Rational(97);
        throw UnknownConstant("alpha_p for the octonionic plane is unknown for 2 <= p <= 14 (p = " +
                              std::to_string(p) + ")");
    }
    throw DomainError("unknown field");
}

Rational casimir_m_exterior(const SpaceDescriptor& space, int q) {
    if (space.field != Field::Real) throw DomainError("exterior-power M-types are defined for the real field only");
    if (q < 0 || q > space.n - 1)
        throw DomainError("exterior degree q = " + std::to_string(q) + " outside [0, n-1]");
    return Rational(q * (space.n - 1 - q));
}

Rational casimir_tau_prime(int n, int r, int s) {
    if (n < 1) throw DomainError("casimir_tau_prime requires n >= 1");
    if (r < 0 || s < 0) throw DomainError("tau'_{r,s} requires r, s >= 0");
    if (r + s > 2 * n) throw DomainError("tau'_{r,s} requires r + s <= 2n");
    if (r > n || s > n) throw DomainError("tau'_{r,s} requires r, s <= n");
    if (r + s > n) {
        const int r2 = n - s, s2 = n - r;
        r = r2;
        s = s2;
    }
    return Rational(2 * (r + s) * (n + 1) - 4 * r * s);
}

Rational casimir(const SpaceDescriptor& space, const MTypeLabel& label) {
    if (const auto* e = std::get_if<ExteriorPower>(&label)) return casimir_m_exterior(space, e->q);
    const auto& l = std::get<LefschetzType>(label);
    if (space.field != Field::Complex) throw DomainError("tau'_{r,s} labels are defined for the complex field only");
    return casimir_tau_prime(space.n, l.r, l.s);
}

Rational curvature_term_min(const SpaceDescriptor& space, int p) {
    check_degree(space, p);
    const int n = space.n;
    switch (space.field) {
    case Field::Real:
        return Rational(-p * (space.dim - p));
    case Field::Complex:
        if (p <= n) return Rational(-2 * p * (n + 1));
        return Rational(-2 * (2 * n - p) * (n + 1));
    case Field::Quaternion:
    case Field::Octonion:
        throw NotImplemented("the minimal curvature term is only available for the real and complex fields");
    }
    throw DomainError("unknown field");
}

} // namespace hypspec
