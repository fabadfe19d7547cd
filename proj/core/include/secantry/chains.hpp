#pragma once

// Combinatorial model of limit linear series on a chain of elliptic curves.
// A series on the chain is tracked through the vanishing sequences of its
// aspects at the nodes; passing one component raises every vanishing order
// by 1 except a single stationary one. In the rho-adjusted-zero regime the
// genericity of the node differences pins exactly one stationary index per
// component, so refined limit series are counted by exhaustive path
// enumeration.
//
// Also here: the explicit Schubert-index constructions that glue a secant
// divisor construction on a genus-e component to its complementary aspect,
// with their arithmetic identities.

#include <optional>
#include <vector>

#include "secantry/arith.hpp"
#include "secantry/secant.hpp"
#include "secantry/series.hpp"

namespace secantry {

// A chain of `length` elliptic components carrying a g^r_d, with imposed
// ramification `start` at the marked point on the first component and `end`
// at the far end. The chain has arithmetic genus `length`.
struct ChainSpec {
    long long length;
    long long r;
    long long d;
    SchubertIndex start;
    SchubertIndex end;

    ChainSpec(long long length, long long r, long long d, SchubertIndex start,
              SchubertIndex end);

    static ChainSpec unramified(long long length, long long r, long long d);

    SeriesParams series() const { return SeriesParams(length, r, d); }
    // rho(length, r, d) - sum(start) - sum(end); counting requires 0.
    long long adjusted_rho() const;
};

// One refined limit series: the vanishing sequences at the length+1 node
// slots and the index left unchanged at each of the length steps.
struct ChainPath {
    std::vector<VanishingSequence> sequences;
    std::vector<long long> stationary_indices;
};

// Raise every entry of `a` by one except entry `stay`. Throws COLLISION when
// a[stay-1] + 1 == a[stay] (strict increase would break) and OVERFLOW when
// a[r] + 1 > d with stay != r.
VanishingSequence propagate_step(const VanishingSequence& a, long long stay);

// Same step without exceptions; nullopt on collision or overflow. This is
// what the enumerator calls on every branch.
std::optional<VanishingSequence> try_propagate_step(const VanishingSequence& a,
                                                    long long stay) noexcept;

// Number of refined limit series on the chain, i.e. of paths from
// to_vanishing(start) through `length` propagation steps whose final
// sequence presents at least `end` as complementary ramification. Requires
// adjusted_rho() == 0 (NOT_RHO_ZERO otherwise). Memoized on
// (position, sequence).
BigCount count_chain_series(const ChainSpec& spec);

struct ChainEnumeration {
    std::vector<ChainPath> paths;  // lexicographic in stationary_indices
    bool truncated = false;        // true when `limit` cut the list short
};

ChainEnumeration enumerate_chain_series(const ChainSpec& spec, long long limit);

// The glued construction for a secant problem (g, d, r, e, f):
//   alpha  - index of type (r-e+f, d-e) with balanced entries summing to
//            rho(e, r-e+f, d-e)
//   beta   - index of type (e-f-1, 2e-f-1) with balanced entries summing to e
//   merged - vanishing sequence of type (r, d) interleaving both blocks
//   gamma  - index of type (r, d), the ramification forced on the
//            complementary genus g-e aspect
struct SecantConstruction {
    SecantProblem problem;
    SchubertIndex alpha;
    SchubertIndex beta;
    VanishingSequence merged;
    SchubertIndex gamma;
};

// alpha alone; requires rho(e, r-e+f, d-e) >= 0.
SchubertIndex secant_alpha(const SecantProblem& p);

// beta alone; defined for every valid problem.
SchubertIndex secant_beta(const SecantProblem& p);

// Full construction. Preconditions, each reported by name on failure:
// f(r+1-e+f) >= e, d >= 2e-f-1, rho(e, r-e+f, d-e) >= 0.
SecantConstruction build_secant_construction(const SecantProblem& p);

// Checks the dimension identity
//   rho(g-e, r, d, gamma) == rho(g, r, d) + e - f(r+1-e+f).
// This is an algebraic identity of the construction and must hold on every
// input where the construction itself succeeds.
bool gamma_dimension_identity(const SecantProblem& p);

struct AssumptionChecks {
    // Degree of the twisted difference bundle on the genus-e component,
    // computed literally as (2e-f-1) - (d-e) + (d+f-2e). Telescopes to e-1.
    long long assumption2_degree = 0;
    bool degree_is_genus_minus_one = false;
    // rho(g,r,d) >= f(r+1-e+f) - (g-d+r).
    bool ass4_holds = false;
    // The g-d+r >= e case split, where ass4 is implied by a nonnegative
    // family bound.
    bool gdr_ge_e = false;
};

// Degree bookkeeping for the transversality assumption. Only the arithmetic
// is decidable here; the cohomological statement itself is not.
AssumptionChecks assumption_degree_checks(const SecantProblem& p);

}  // namespace secantry
