#pragma once

// Vanishing thresholds for powers of a linear series with prescribed
// ramification at a general point, and the theta-multiple of the higher
// ramification divisor class. The thresholds are certified claims about a
// general pointed curve; genericity itself is not checkable numerically, so
// only the numbers are produced.

#include "secantry/series.hpp"

namespace secantry {

struct PowerBound {
    long long n = 0;          // power of the bundle
    long long m = 0;          // floor((n+1)/2)
    long long threshold = 0;  // strict upper bound: claim holds for 0 < a < threshold
    long long rho_adjusted = 0;
    // The certified claim, for every positive a < threshold:
    // h^0(L^n(-a p)) = nd + 1 - g - a, i.e. the n-th power is unramified
    // through order a at the point.
};

// n >= 3 threshold: nd - rho(g,r,d,alpha) - g - floor(g/m). n = 2 is
// rejected here because the square case has its own sharper bound.
PowerBound power_bound(long long g, const SchubertIndex& alpha, long long n);

// n = 2 threshold: the larger of
//   2d+2-2g - rho(g,r,d,alpha) + floor((g-1)/2)
//   2d+2-2g - 2 rho(g,r,d,alpha) + 2 floor(g/3).
PowerBound square_bound(long long g, const SchubertIndex& alpha);

// nd - g + 1, the outright upper bound no vanishing statement can beat.
long long riemann_roch_ceiling(long long n, long long d, long long g) noexcept;

// Class multiple of the higher ramification divisor of the n-th power: n^2.
long long dn_theta_coefficient(long long n);

}  // namespace secantry
