#pragma once

#include "hypspec/error.hpp"
#include "hypspec/rational.hpp"
#include "hypspec/space.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace hypspec {

/// Lower bounds for lambda_0^p on a quotient with critical exponent delta.
/// Scalar is double for measured exponents and Rational for exact identities.
template <class Scalar>
struct BoundsReport {
    SpaceDescriptor space;
    int p = 0;
    Scalar delta{};
    Scalar theorem_b_bound{};   ///< clamped at zero
    Scalar theorem_b_raw{};     ///< before clamping
    bool clamped = false;
    bool zero_possible = false;
    bool zero_isolated = false;
    Scalar sullivan_corlette_lambda00{};
    std::optional<Scalar> bochner_bound;
    std::optional<Scalar> difference; ///< theorem_b_raw - bochner_bound
};

template <class Scalar>
struct TheoremBBound {
    Scalar bound;
    Scalar raw;
    bool clamped;
    bool zero_possible;
    bool zero_isolated;
};

namespace detail {

template <class Scalar>
void check_delta(const SpaceDescriptor& space, const Scalar& delta) {
    const Scalar two_rho = scalar_cast<Scalar>(space.rho * 2);
    if (!(delta >= Scalar(0)) || !(delta <= two_rho))
        throw DomainError("critical exponent must lie in [0, 2 rho] = [0, " + to_string(space.rho * 2) + "]");
}

} // namespace detail

template <class Scalar>
Scalar sullivan_corlette(const SpaceDescriptor& space, const Scalar& delta) {
    detail::check_delta(space, delta);
    const Scalar rho = scalar_cast<Scalar>(space.rho);
    if (delta <= rho) return rho * rho;
    return delta * (rho * 2 - delta);
}

template <class Scalar>
TheoremBBound<Scalar> theorem_b_lower_bound(const SpaceDescriptor& space, int p, const Scalar& delta) {
    detail::check_delta(space, delta);
    const Scalar alpha = scalar_cast<Scalar>(alpha_p(space, p));
    const Scalar rho = scalar_cast<Scalar>(space.rho);
    TheoremBBound<Scalar> out{};
    const Scalar excess = delta - rho;
    out.raw = delta <= rho ? alpha : alpha - excess * excess;
    out.clamped = out.raw < Scalar(0);
    out.bound = out.clamped ? Scalar(0) : out.raw;
    out.zero_possible = 2 * p == space.dim;
    // delta < rho + sqrt(alpha) without taking a square root, so the test stays exact.
    out.zero_isolated = out.zero_possible && (delta <= rho || excess * excess < alpha);
    return out;
}

template <class Scalar>
Scalar bochner_lower_bound(const SpaceDescriptor& space, int p, const Scalar& delta) {
    const Scalar curvature = scalar_cast<Scalar>(curvature_term_min(space, p));
    return sullivan_corlette(space, delta) + curvature;
}

template <class Scalar>
BoundsReport<Scalar> compare(const SpaceDescriptor& space, int p, const Scalar& delta) {
    const auto tb = theorem_b_lower_bound(space, p, delta);
    BoundsReport<Scalar> rep;
    rep.space = space;
    rep.p = p;
    rep.delta = delta;
    rep.theorem_b_bound = tb.bound;
    rep.theorem_b_raw = tb.raw;
    rep.clamped = tb.clamped;
    rep.zero_possible = tb.zero_possible;
    rep.zero_isolated = tb.zero_isolated;
    rep.sullivan_corlette_lambda00 = sullivan_corlette(space, delta);
    if (space.field == Field::Real || space.field == Field::Complex) {
        rep.bochner_bound = bochner_lower_bound(space, p, delta);
        rep.difference = tb.raw - *rep.bochner_bound;
    }
    return rep;
}

} // namespace hypspec
