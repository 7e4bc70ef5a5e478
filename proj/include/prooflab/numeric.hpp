#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace prooflab {

// Formula-space sizes are doubly exponential in the depth bound, so every
// index and count is arbitrary precision. Speed-up deltas are exact rationals.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace prooflab
