#include "secantry/counts.hpp"

#include "secantry/series.hpp"

namespace secantry {

namespace {

// Binomial as used inside the alternating sum: the generalized convention
// C(n, k) = (-1)^k C(k-n-1, k) for n < 0, which makes the sum agree with the
// closed form as a polynomial identity in d and g. Inside the counting
// hypotheses (d >= 3r-2) every top is nonnegative, so the extension only
// matters for flagged out-of-range evaluation.
BigCount term_binomial(long long n, long long k) {
    if (k < 0) return 0;
    if (n >= 0) return k > n ? BigCount(0) : binomial(n, k);
    BigCount value = binomial(k - n - 1, k);
    return k % 2 ? BigCount(-value) : value;
}

BigCount require_integral(const ExactRational& value, const std::string& what) {
    if (denominator(value) != 1) {
        throw IntegralityError(what + ": reduced value " + value.str() +
                               " is not an integer");
    }
    return numerator(value);
}

std::vector<std::string> hypothesis_warnings(long long d, long long g, long long r) {
    std::vector<std::string> w;
    if (r < 3) w.push_back("r-out-of-range");
    if (d < 3 * r - 2) w.push_back("degree-out-of-range");
    if (g < 0) w.push_back("genus-negative");
    if (g >= 0 && r >= 0 && rho(g, r, d) < 0) w.push_back("rho-negative");
    if (g >= 0 && rho(g, 1, d - 2 * r + 2) < 0) w.push_back("residual-pencil-rho-negative");
    return w;
}

}  // namespace

std::string to_string(CountFormula formula) {
    switch (formula) {
        case CountFormula::GeneralSum: return "GENERAL_SUM";
        case CountFormula::CayleyR3: return "CAYLEY_R3";
    }
    return "GENERAL_SUM";
}

SecantCount castelnuovo(long long d, long long g, long long r) {
    ExactRational total = 0;
    for (long long i = 0; i <= r - 1; ++i) {
        BigCount numer = term_binomial(d - r - i + 1, r - 1 - i) *
                         term_binomial(d - r - i, r - 1 - i) * term_binomial(g, i);
        if (numer == 0) continue;
        ExactRational term(numer, BigCount(r - i));
        if (i % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    SecantCount result;
    result.value = require_integral(total, "castelnuovo(" + std::to_string(d) + ", " +
                                               std::to_string(g) + ", " + std::to_string(r) + ")");
    result.d = d;
    result.g = g;
    result.r = r;
    result.formula = CountFormula::GeneralSum;
    result.warnings = hypothesis_warnings(d, g, r);
    return result;
}

SecantCount cayley_r3(long long d, long long g) {
    const BigCount D = d;
    const BigCount G = g;
    ExactRational quartic(BigCount((D - 2) * (D - 3) * (D - 3) * (D - 4)), BigCount(12));
    ExactRational genus_term(BigCount(G * (D * D - 7 * D + 13 - G)), BigCount(2));

    SecantCount result;
    result.value = require_integral(quartic - genus_term,
                                    "cayley_r3(" + std::to_string(d) + ", " +
                                        std::to_string(g) + ")");
    result.d = d;
    result.g = g;
    result.r = 3;
    result.formula = CountFormula::CayleyR3;
    if (d < 7) result.warnings.push_back("degree-out-of-range");
    if (g < 0) {
        result.warnings.push_back("genus-negative");
    } else {
        if (rho(g, 3, d) < 0) result.warnings.push_back("rho-negative");
        if (rho(g, 1, d - 4) < 0) result.warnings.push_back("residual-pencil-rho-negative");
    }
    return result;
}

ConsistencyReport consistency_check(long long d_max, long long g_max) {
    if (d_max < 4 || g_max < 0) {
        throw PreconditionError("DOMAIN",
                                "consistency_check: needs d_max >= 4 and g_max >= 0");
    }
    ConsistencyReport report;
    report.d_max = d_max;
    report.g_max = g_max;
    for (long long d = 4; d <= d_max; ++d) {
        for (long long g = 0; g <= g_max; ++g) {
            const BigCount sum = castelnuovo(d, g, 3).value;
            const BigCount closed = cayley_r3(d, g).value;
            ++report.checked;
            if (sum != closed) {
                report.mismatches.push_back({d, g, sum, closed});
            }
        }
    }
    return report;
}

}  // namespace secantry
