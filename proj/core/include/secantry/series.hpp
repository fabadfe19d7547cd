#pragma once

// Numerical formalism for linear series on curves: Schubert indices,
// vanishing sequences, ramification weights and the (adjusted) Brill-Noether
// number. Only the numerical invariants are modeled, never section spaces.
//
// Index and sequence values carry their (r, d) context explicitly. The
// computations downstream switch freely between series types such as
// (r, d) <-> (r-e+f, d-e) <-> (e-f-1, 2e-f-1), and silently mixing those
// contexts is the main bug risk; mismatches fail fast instead.

#include <optional>
#include <vector>

#include "secantry/errors.hpp"

namespace secantry {

// The parameter triple (g, r, d) of a g^r_d. d may be anything (it goes
// negative transiently in residual-series algebra); g and r must be >= 0.
struct SeriesParams {
    long long g = 0;
    long long r = 0;
    long long d = 0;

    SeriesParams(long long g, long long r, long long d);
};

// Ramification sequence 0 <= a0 <= ... <= ar <= d-r of type (r, d).
// r == 0 is allowed; the sequence then has a single entry.
class SchubertIndex {
public:
    SchubertIndex(std::vector<long long> entries, long long d);

    static SchubertIndex zero(long long r, long long d);

    long long r() const noexcept { return static_cast<long long>(entries_.size()) - 1; }
    long long d() const noexcept { return d_; }
    const std::vector<long long>& entries() const noexcept { return entries_; }
    long long operator[](std::size_t i) const { return entries_.at(i); }
    long long sum() const noexcept;

    bool same_context(const SchubertIndex& other) const noexcept {
        return r() == other.r() && d_ == other.d_;
    }

    friend bool operator==(const SchubertIndex&, const SchubertIndex&) = default;

private:
    std::vector<long long> entries_;
    long long d_;
};

// Vanishing sequence 0 <= a0 < a1 < ... < ar <= d of type (r, d).
class VanishingSequence {
public:
    VanishingSequence(std::vector<long long> entries, long long d);

    long long r() const noexcept { return static_cast<long long>(entries_.size()) - 1; }
    long long d() const noexcept { return d_; }
    const std::vector<long long>& entries() const noexcept { return entries_; }
    long long operator[](std::size_t i) const { return entries_.at(i); }
    long long sum() const noexcept;

    friend bool operator==(const VanishingSequence&, const VanishingSequence&) = default;

private:
    std::vector<long long> entries_;
    long long d_;
};

// Brill-Noether number g - (r+1)(g-d+r). The raw overload places no
// constraint on its arguments so that algebraic identities can be evaluated
// at formally negative parameters.
long long rho(long long g, long long r, long long d) noexcept;
long long rho(const SeriesParams& p) noexcept;

// rho(g, r, d) - sum(alpha). The index must have context (r, d) matching p.
long long rho_ramified(const SeriesParams& p, const SchubertIndex& alpha);

// The mutually inverse bijections a_i = alpha_i + i and alpha_i = a_i - i.
VanishingSequence to_vanishing(const SchubertIndex& alpha);
SchubertIndex to_schubert(const VanishingSequence& a);

// Ramification weight sum(a_i - i); zero exactly at unramified points.
long long weight(const VanishingSequence& a) noexcept;

// Reversed-complement sequence c_j = d - a_{r-j}, the vanishing sequence a
// series must present at the far side of a node for refined compatibility.
VanishingSequence complement(const VanishingSequence& a);

// Pointed existence test on a general curve of the given genus: a g^r_d with
// ramification >= alpha at a general point exists iff
//   sum_i max(alpha_i + genus - d + r, 0) <= genus.
// (r, d) come from alpha's context.
bool eh_exists(long long genus, const SchubertIndex& alpha);

// Dimension of the pointed ramification locus when it is nonempty:
// rho(genus, r, d) - sum(alpha). nullopt means empty. A negative virtual
// dimension is never returned as if it were a dimension.
std::optional<long long> eh_dimension(long long genus, const SchubertIndex& alpha);

}  // namespace secantry
