#include "secantry/arith.hpp"

namespace secantry {

BigCount binomial(long long n, long long k) {
    if (n < 0) {
        throw PreconditionError("DOMAIN",
                                "binomial: negative top n = " + std::to_string(n));
    }
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount result = 1;
    // Multiply/divide in lockstep; each partial quotient is an exact integer
    // since result holds C(n-k+i, i) after step i.
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

BigCount factorial(long long n) {
    if (n < 0) {
        throw PreconditionError("DOMAIN",
                                "factorial: negative argument n = " + std::to_string(n));
    }
    BigCount result = 1;
    for (long long i = 2; i <= n; ++i) result *= i;
    return result;
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace secantry
