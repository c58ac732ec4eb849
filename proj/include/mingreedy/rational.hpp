#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace mingreedy {

/// Exact rational arithmetic for ratios, bounds, and interval endpoints.
/// Verification paths never touch floating point; doubles are display-only.
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace mingreedy
