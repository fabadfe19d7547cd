#include "secantry/ramify.hpp"

#include <algorithm>

#include "secantry/arith.hpp"

namespace secantry {

namespace {

long long adjusted_rho_or_throw(long long g, const SchubertIndex& alpha) {
    if (g < 0) {
        throw PreconditionError("DOMAIN", "ramification bounds: genus must be >= 0");
    }
    return rho(g, alpha.r(), alpha.d()) - alpha.sum();
}

}  // namespace

PowerBound power_bound(long long g, const SchubertIndex& alpha, long long n) {
    if (n < 3) {
        throw PreconditionError("DOMAIN",
                                "power_bound: needs n >= 3 (use square_bound for n = 2)");
    }
    PowerBound b;
    b.n = n;
    b.m = (n + 1) / 2;
    b.rho_adjusted = adjusted_rho_or_throw(g, alpha);
    b.threshold = n * alpha.d() - b.rho_adjusted - g - g / b.m;
    return b;
}

PowerBound square_bound(long long g, const SchubertIndex& alpha) {
    PowerBound b;
    b.n = 2;
    b.m = 1;
    b.rho_adjusted = adjusted_rho_or_throw(g, alpha);
    const long long d = alpha.d();
    const long long first = 2 * d + 2 - 2 * g - b.rho_adjusted + floor_div(g - 1, 2);
    const long long second = 2 * d + 2 - 2 * g - 2 * b.rho_adjusted + 2 * (g / 3);
    b.threshold = std::max(first, second);
    return b;
}

long long riemann_roch_ceiling(long long n, long long d, long long g) noexcept {
    return n * d - g + 1;
}

long long dn_theta_coefficient(long long n) {
    if (n < 1) {
        throw PreconditionError("DOMAIN", "dn_theta_coefficient: needs n >= 1");
    }
    return n * n;
}

}  // namespace secantry
