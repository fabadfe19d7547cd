#pragma once

// Dimension and existence verdicts for the cycles V_e^{e-f}(l) of e-secant
// (e-f-1)-planes attached to a g^r_d on a general curve of genus g. Nothing
// here touches coordinates of an embedded curve; everything is decided from
// the integer parameters alone.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "secantry/series.hpp"

namespace secantry {

// Parameter tuple (g, d, r, e, f) for V_e^{e-f}: degree-e divisors imposing
// at most e - f independent conditions on a g^r_d.
struct SecantProblem {
    long long g = 0;
    long long d = 0;
    long long r = 0;
    long long e = 1;
    long long f = 0;

    SecantProblem(long long g, long long d, long long r, long long e, long long f);

    // r + 1 - e + f, the rank drop each of the f conditions costs. Positive
    // for every valid problem.
    long long rank_drop() const noexcept { return r + 1 - e + f; }
};

enum class SecantStatus {
    EmptyGeneralCurve,   // V_e^{e-f}(l) empty for every l on the general curve
    ExistsExpectedDim,   // some l carries a nonempty V_e^{e-f} of the expected dimension
    HypothesesFail,      // outside the range where the existence machinery applies
    Unknown,             // in range, but no certifying case holds
};

std::string to_string(SecantStatus status);

struct SecantVerdict {
    SecantStatus status = SecantStatus::Unknown;
    long long expected_dim_cycle = 0;   // e - f(r+1-e+f)
    long long expected_dim_family = 0;  // rho(g,r,d) - f(r+1-e+f) + e
    // Truth value of every individual condition consulted, by stable name.
    std::vector<std::pair<std::string, bool>> witnesses;
};

// Lower bound e - f(r+1-e+f) for the dimension of any nonempty component of
// V_e^{e-f}(l).
long long expected_cycle_dim(const SecantProblem& p);

// Upper bound rho(g,r,d) - f(r+1-e+f) + e for the dimension of the locus of
// series carrying an e-secant (e-f-1)-plane.
long long family_dim_bound(const SecantProblem& p);

// Combined verdict. Emptiness fires when either necessary condition
// (family bound >= 0, rho(g, r-e+f, d-e) >= 0) fails; existence fires when
// the existence theorem's hypotheses hold together with one of its four
// certifying cases, or in the (2r-2)-secant (r-2)-plane counting regime.
SecantVerdict secant_verdict(const SecantProblem& p);

// rho(g,r,d) == 0 and e < f(r+1-e+f): every g^r_d on the general curve is
// then secant-plane free.
bool rho_zero_emptiness(const SecantProblem& p);

// Dimension of a nonempty V_e^{e-f}(l) for general l: every component has
// dimension exactly e - f(r+1-e+f). nullopt ("empty-expected") when that
// value is negative, in which case nonemptiness is impossible.
std::optional<long long> coppens_martens_dim(const SecantProblem& p);

// rho(g,r,d) + 2e - 2 - r < 0 guarantees every g^r_d on the general curve is
// (e-1)-very ample. e >= 1 required.
bool very_ample_guaranteed(long long g, long long r, long long d, long long e);

// The uf-secant specialization r = (u-1)(f+1), e = uf. The raw parameter map
// is exposed separately because u = 1 collapses to e = f, which is not a
// valid secant problem.
std::pair<long long, long long> uf_secant_params(long long u, long long f);
SecantProblem uf_secant_problem(long long g, long long d, long long u, long long f);

}  // namespace secantry
