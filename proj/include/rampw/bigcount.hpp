#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rampw {

// Exact nonnegative counts get astronomically large (the existence
// inequality multiplies Gaussian binomials at n ~ 64), so everything is kept
// in arbitrary precision until a final float comparison, if any.
using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace rampw
