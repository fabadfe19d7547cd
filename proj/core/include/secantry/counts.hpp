#pragma once

// Enumerative counts of (2r-2)-secant (r-2)-planes: the general alternating
// sum C(d, g, r) and the r = 3 closed form, both in exact arithmetic. The
// two routes are independent implementations and must agree wherever both
// are defined; `consistency_check` sweeps a grid and reports any mismatch.

#include <string>
#include <vector>

#include "secantry/arith.hpp"

namespace secantry {

enum class CountFormula { GeneralSum, CayleyR3 };

std::string to_string(CountFormula formula);

struct SecantCount {
    BigCount value;
    long long d = 0;
    long long g = 0;
    long long r = 0;
    CountFormula formula = CountFormula::GeneralSum;
    // Nonempty when evaluated outside the counting theorem's hypotheses; the
    // value is still exact but its enumerative meaning is not guaranteed.
    std::vector<std::string> warnings;
};

// C(d, g, r) = sum_{i=0}^{r-1} (-1)^i/(r-i) C(d-r-i+1, r-1-i) C(d-r-i, r-1-i) C(g, i).
// Intermediates are exact rationals; the reduced sum must come out integral
// and an IntegralityError (a bug, not bad input) is thrown otherwise.
// Evaluation is total: outside r >= 3, d >= 3r-2, g >= 0 it proceeds with
// warning flags instead of failing.
SecantCount castelnuovo(long long d, long long g, long long r);

// C(d, g, 3) = (1/12)(d-2)(d-3)^2(d-4) - (g/2)(d^2 - 7d + 13 - g).
// Integral for every integer d, g; asserted anyway.
SecantCount cayley_r3(long long d, long long g);

struct ConsistencyMismatch {
    long long d = 0;
    long long g = 0;
    BigCount general_sum;
    BigCount closed_form;
};

struct ConsistencyReport {
    long long d_max = 0;
    long long g_max = 0;
    long long checked = 0;
    std::vector<ConsistencyMismatch> mismatches;  // must be empty
};

// Compares both formulas for every (d, g) in [4, d_max] x [0, g_max].
ConsistencyReport consistency_check(long long d_max, long long g_max);

}  // namespace secantry
