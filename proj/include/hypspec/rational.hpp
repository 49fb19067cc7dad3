#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <type_traits>

namespace hypspec {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Converts an exact constant into the working scalar of a computation.
template <class Scalar>
Scalar scalar_cast(const Rational& q) {
    if constexpr (std::is_same_v<Scalar, Rational>)
        return q;
    else
        return Scalar(q.numerator()) / Scalar(q.denominator());
}

} // namespace hypspec
