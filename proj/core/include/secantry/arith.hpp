#pragma once

// Exact integer and rational arithmetic plus the two combinatorial
// primitives everything else is built from. All values are immutable after
// construction and every function here is pure, so concurrent use needs no
// synchronization.

#include <boost/multiprecision/cpp_int.hpp>

#include "secantry/errors.hpp"

namespace secantry {

// Arbitrary-precision signed integer. No rounding ever occurs and there is
// no machine-word fast path; the sums evaluated here stay exact far beyond
// 10^60.
using BigCount = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept in lowest terms with positive
// denominator by the backing type's canonical form.
using ExactRational = boost::multiprecision::cpp_rational;

// C(n, k) for n >= 0; returns 0 when k < 0 or k > n. Negative n is rejected:
// the formulas served here never need negative tops inside their stated
// hypotheses, so a negative top indicates a caller error.
BigCount binomial(long long n, long long k);

// n! for n >= 0.
BigCount factorial(long long n);

// Floored quotient, defined for any a and b > 0. C++ '/' truncates toward
// zero, which is wrong for the negative numerators that show up in the
// ramification thresholds.
long long floor_div(long long a, long long b);

}  // namespace secantry
