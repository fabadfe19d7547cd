#include "secantry/chains.hpp"

#include <map>
#include <string>

namespace secantry {

namespace {

// Final-sequence acceptance: the complementary Schubert index of `a` must
// dominate `end` entrywise.
bool meets_end_condition(const VanishingSequence& a, const SchubertIndex& end) {
    const auto& e = a.entries();
    const std::size_t n = e.size();
    for (std::size_t j = 0; j < n; ++j) {
        const long long complement_j = a.d() - e[n - 1 - j];
        if (complement_j - static_cast<long long>(j) < end[j]) return false;
    }
    return true;
}

// One layer of the position-indexed memo: sequence -> number of ways to
// reach it at the current component.
using Layer = std::map<std::vector<long long>, BigCount>;

// Depth-first over stationary indices in increasing order, so paths come out
// lexicographically sorted. Returns false once the limit is hit and another
// path exists.
bool enumerate_from(const VanishingSequence& a, long long steps_left,
                    const SchubertIndex& end, long long limit, ChainPath& partial,
                    ChainEnumeration& out) {
    if (steps_left == 0) {
        if (!meets_end_condition(a, end)) return true;
        if (static_cast<long long>(out.paths.size()) >= limit) {
            out.truncated = true;
            return false;
        }
        out.paths.push_back(partial);
        return true;
    }
    for (long long stay = 0; stay <= a.r(); ++stay) {
        auto next = try_propagate_step(a, stay);
        if (!next) continue;
        partial.stationary_indices.push_back(stay);
        partial.sequences.push_back(*next);
        const bool keep_going = enumerate_from(*next, steps_left - 1, end, limit, partial, out);
        partial.sequences.pop_back();
        partial.stationary_indices.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

void require_counting_regime(const ChainSpec& spec) {
    const long long adjusted = spec.adjusted_rho();
    if (adjusted != 0) {
        throw PreconditionError(
            "NOT_RHO_ZERO",
            "chain counting requires rho(length, r, d) - sum(start) - sum(end) == 0, got " +
                std::to_string(adjusted));
    }
}

}  // namespace

ChainSpec::ChainSpec(long long length_, long long r_, long long d_, SchubertIndex start_,
                     SchubertIndex end_)
    : length(length_), r(r_), d(d_), start(std::move(start_)), end(std::move(end_)) {
    if (length < 1) {
        throw PreconditionError("INVARIANT", "ChainSpec: length must be >= 1");
    }
    if (start.r() != r || start.d() != d || end.r() != r || end.d() != d) {
        throw PreconditionError("CONTEXT_MISMATCH",
                                "ChainSpec: start and end must both have type (r, d)");
    }
}

ChainSpec ChainSpec::unramified(long long length, long long r, long long d) {
    return ChainSpec(length, r, d, SchubertIndex::zero(r, d), SchubertIndex::zero(r, d));
}

long long ChainSpec::adjusted_rho() const {
    return rho(length, r, d) - start.sum() - end.sum();
}

VanishingSequence propagate_step(const VanishingSequence& a, long long stay) {
    if (stay < 0 || stay > a.r()) {
        throw PreconditionError("DOMAIN",
                                "propagate_step: stay index " + std::to_string(stay) +
                                    " outside 0.." + std::to_string(a.r()));
    }
    if (stay > 0 && a[static_cast<std::size_t>(stay - 1)] + 1 ==
                        a[static_cast<std::size_t>(stay)]) {
        throw PreconditionError("COLLISION",
                                "propagate_step: raising entry " + std::to_string(stay - 1) +
                                    " collides with stationary entry " + std::to_string(stay));
    }
    if (stay != a.r() && a[static_cast<std::size_t>(a.r())] + 1 > a.d()) {
        throw PreconditionError("OVERFLOW",
                                "propagate_step: top entry would exceed d = " +
                                    std::to_string(a.d()));
    }
    std::vector<long long> next(a.entries());
    for (std::size_t j = 0; j < next.size(); ++j) {
        if (static_cast<long long>(j) != stay) ++next[j];
    }
    return VanishingSequence(std::move(next), a.d());
}

std::optional<VanishingSequence> try_propagate_step(const VanishingSequence& a,
                                                    long long stay) noexcept {
    if (stay < 0 || stay > a.r()) return std::nullopt;
    if (stay > 0 && a[static_cast<std::size_t>(stay - 1)] + 1 ==
                        a[static_cast<std::size_t>(stay)]) {
        return std::nullopt;
    }
    if (stay != a.r() && a[static_cast<std::size_t>(a.r())] + 1 > a.d()) {
        return std::nullopt;
    }
    std::vector<long long> next(a.entries());
    for (std::size_t j = 0; j < next.size(); ++j) {
        if (static_cast<long long>(j) != stay) ++next[j];
    }
    return VanishingSequence(std::move(next), a.d());
}

BigCount count_chain_series(const ChainSpec& spec) {
    require_counting_regime(spec);
    Layer layer;
    layer.emplace(to_vanishing(spec.start).entries(), 1);
    for (long long step = 0; step < spec.length && !layer.empty(); ++step) {
        Layer next_layer;
        for (const auto& [entries, ways] : layer) {
            const VanishingSequence a(entries, spec.d);
            for (long long stay = 0; stay <= a.r(); ++stay) {
                if (auto next = try_propagate_step(a, stay)) {
                    next_layer[next->entries()] += ways;
                }
            }
        }
        layer = std::move(next_layer);
    }
    BigCount total = 0;
    for (const auto& [entries, ways] : layer) {
        if (meets_end_condition(VanishingSequence(entries, spec.d), spec.end)) {
            total += ways;
        }
    }
    return total;
}

ChainEnumeration enumerate_chain_series(const ChainSpec& spec, long long limit) {
    require_counting_regime(spec);
    if (limit < 0) {
        throw PreconditionError("DOMAIN", "enumerate_chain_series: limit must be >= 0");
    }
    ChainEnumeration out;
    const VanishingSequence first = to_vanishing(spec.start);
    ChainPath partial;
    partial.sequences.push_back(first);
    enumerate_from(first, spec.length, spec.end, limit, partial, out);
    return out;
}

SchubertIndex secant_alpha(const SecantProblem& p) {
    const long long reduced_r = p.r - p.e + p.f;
    const long long reduced_d = p.d - p.e;
    const long long rho_alpha = rho(p.e, reduced_r, reduced_d);
    if (rho_alpha < 0) {
        throw PreconditionError("PRECONDITION_FAIL",
                                "secant construction requires rho(e, r-e+f, d-e) >= 0, got " +
                                    std::to_string(rho_alpha));
    }
    const long long denom = p.rank_drop();  // r+1-e+f = reduced_r + 1
    const long long base = rho_alpha / denom;
    const long long c = rho_alpha - base * denom;  // 0 <= c <= reduced_r
    std::vector<long long> entries(static_cast<std::size_t>(reduced_r) + 1, base);
    for (long long j = reduced_r - c + 1; j <= reduced_r; ++j) {
        ++entries[static_cast<std::size_t>(j)];
    }
    return SchubertIndex(std::move(entries), reduced_d);
}

SchubertIndex secant_beta(const SecantProblem& p) {
    const long long width = p.e - p.f;  // number of entries
    const long long base = p.e / width;
    const long long c = p.e - base * width;  // 0 <= c <= width - 1
    std::vector<long long> entries(static_cast<std::size_t>(width), base);
    for (long long j = width - c; j <= width - 1; ++j) {
        ++entries[static_cast<std::size_t>(j)];
    }
    return SchubertIndex(std::move(entries), 2 * p.e - p.f - 1);
}

SecantConstruction build_secant_construction(const SecantProblem& p) {
    if (p.f * p.rank_drop() < p.e) {
        throw PreconditionError("PRECONDITION_FAIL",
                                "secant construction requires f(r+1-e+f) >= e, got " +
                                    std::to_string(p.f * p.rank_drop()) + " < " +
                                    std::to_string(p.e));
    }
    if (p.d < 2 * p.e - p.f - 1) {
        throw PreconditionError("PRECONDITION_FAIL",
                                "secant construction requires d >= 2e-f-1, got d = " +
                                    std::to_string(p.d) + " < " +
                                    std::to_string(2 * p.e - p.f - 1));
    }
    SchubertIndex alpha = secant_alpha(p);
    SchubertIndex beta = secant_beta(p);

    const long long reduced_r = p.r - p.e + p.f;
    const long long shift = p.d - 2 * p.e + p.f + 1;

    // Interleaved vanishing sequence: the alpha block in vanishing form,
    // then the beta block shifted past it. Strict increase across the seam
    // is exactly the f(r+1-e+f) >= e hypothesis.
    std::vector<long long> merged_entries;
    merged_entries.reserve(static_cast<std::size_t>(p.r) + 1);
    for (long long i = 0; i <= reduced_r; ++i) {
        merged_entries.push_back(alpha[static_cast<std::size_t>(i)] + i);
    }
    for (long long j = 0; j <= p.e - p.f - 1; ++j) {
        merged_entries.push_back(beta[static_cast<std::size_t>(j)] + shift + j);
    }
    VanishingSequence merged(std::move(merged_entries), p.d);

    // Complementary ramification on the genus g-e side.
    std::vector<long long> gamma_entries;
    gamma_entries.reserve(static_cast<std::size_t>(p.r) + 1);
    for (long long j = p.e - p.f - 1; j >= 0; --j) {
        gamma_entries.push_back(p.e - beta[static_cast<std::size_t>(j)]);
    }
    for (long long i = reduced_r; i >= 0; --i) {
        gamma_entries.push_back(p.d - p.r - alpha[static_cast<std::size_t>(i)]);
    }
    SchubertIndex gamma(std::move(gamma_entries), p.d);

    return SecantConstruction{p, std::move(alpha), std::move(beta), std::move(merged),
                              std::move(gamma)};
}

bool gamma_dimension_identity(const SecantProblem& p) {
    const SecantConstruction built = build_secant_construction(p);
    const long long lhs = rho(p.g - p.e, p.r, p.d) - built.gamma.sum();
    const long long rhs = rho(p.g, p.r, p.d) + p.e - p.f * p.rank_drop();
    return lhs == rhs;
}

AssumptionChecks assumption_degree_checks(const SecantProblem& p) {
    AssumptionChecks checks;
    // deg L - deg A + twist, written out term by term.
    checks.assumption2_degree = (2 * p.e - p.f - 1) - (p.d - p.e) + (p.d + p.f - 2 * p.e);
    checks.degree_is_genus_minus_one = checks.assumption2_degree == p.e - 1;
    checks.ass4_holds = rho(p.g, p.r, p.d) >= p.f * p.rank_drop() - (p.g - p.d + p.r);
    checks.gdr_ge_e = p.g - p.d + p.r >= p.e;
    return checks;
}

}  // namespace secantry
