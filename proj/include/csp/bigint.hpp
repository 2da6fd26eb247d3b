#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace csp {

/// Exact arbitrary-precision integer. Every count, coefficient and
/// evaluation in this library is a BigInt; no floating point is used
/// anywhere on a verification path.
using BigInt = boost::multiprecision::cpp_int;

inline bool fits_int64(const BigInt& v) {
    return v >= std::numeric_limits<long long>::min() &&
           v <= std::numeric_limits<long long>::max();
}

}  // namespace csp
