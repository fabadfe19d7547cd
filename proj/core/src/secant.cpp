#include "secantry/secant.hpp"

namespace secantry {

SecantProblem::SecantProblem(long long g_, long long d_, long long r_, long long e_,
                             long long f_)
    : g(g_), d(d_), r(r_), e(e_), f(f_) {
    if (g < 0 || r < 0) {
        throw PreconditionError("INVARIANT", "SecantProblem: g and r must be >= 0");
    }
    if (!(0 <= f && f < e)) {
        throw PreconditionError("INVARIANT",
                                "SecantProblem: needs 0 <= f < e, got e = " +
                                    std::to_string(e) + ", f = " + std::to_string(f));
    }
    if (r - e + f < 0) {
        throw PreconditionError("INVARIANT",
                                "SecantProblem: needs r - e + f >= 0, got " +
                                    std::to_string(r - e + f));
    }
}

std::string to_string(SecantStatus status) {
    switch (status) {
        case SecantStatus::EmptyGeneralCurve: return "EMPTY_GENERAL_CURVE";
        case SecantStatus::ExistsExpectedDim: return "EXISTS_EXPECTED_DIM";
        case SecantStatus::HypothesesFail: return "HYPOTHESES_FAIL";
        case SecantStatus::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

long long expected_cycle_dim(const SecantProblem& p) {
    return p.e - p.f * p.rank_drop();
}

long long family_dim_bound(const SecantProblem& p) {
    return rho(p.g, p.r, p.d) - p.f * p.rank_drop() + p.e;
}

SecantVerdict secant_verdict(const SecantProblem& p) {
    SecantVerdict v;
    v.expected_dim_cycle = expected_cycle_dim(p);
    v.expected_dim_family = family_dim_bound(p);

    const long long rho_full = rho(p.g, p.r, p.d);
    const long long rho_residual = rho(p.g, p.r - p.e + p.f, p.d - p.e);

    const bool family_nonneg = v.expected_dim_family >= 0;
    const bool residual_nonneg = rho_residual >= 0;

    // Hypotheses of the existence theorem.
    const bool special_range = p.f * p.rank_drop() >= p.e;
    const bool e_le_g = p.e <= p.g;
    const bool degree_ok = p.d >= 2 * p.e - p.f - 1;
    const bool special_series = p.g - p.d + p.r >= 0;

    // Its four certifying cases.
    const bool case_i = 2 * p.f <= p.e - 1;
    const bool case_ii = (p.e == 2 * p.r - 2) && (p.f == p.r - 1);
    const bool case_iii = p.e < 2 * p.rank_drop();
    const bool case_iv = rho_full >= p.f * p.rank_drop() - (p.g - p.d + p.r);

    // Counting regime for (2r-2)-secant (r-2)-planes: the Castelnuovo count
    // applies for r >= 3, d >= 3r-2, rho(g,r,d) >= 0, rho(g,1,d-2r+2) >= 0,
    // and asserts a finite nonzero family without needing e <= g.
    const bool counting_regime = case_ii && p.r >= 3 && p.d >= 3 * p.r - 2 &&
                                 rho_full >= 0 && residual_nonneg;

    v.witnesses = {
        {"necessary:family-dim-nonnegative", family_nonneg},
        {"necessary:residual-rho-nonnegative", residual_nonneg},
        {"hyp:special-secant-range", special_range},
        {"hyp:e-le-g", e_le_g},
        {"hyp:d-ge-2e-f-1", degree_ok},
        {"hyp:special-series", special_series},
        {"case-i:2f-le-e-1", case_i},
        {"case-ii:castelnuovo", case_ii},
        {"case-iii:e-lt-2(r+1-e+f)", case_iii},
        {"case-iv:rho-ge-defect", case_iv},
        {"counting-regime:2r-2-secant", counting_regime},
        // Context only: range covered by earlier work, not by this verdict.
        {"prior-work-existence-range", p.e >= p.f * p.rank_drop()},
    };

    if (!family_nonneg || !residual_nonneg) {
        v.status = SecantStatus::EmptyGeneralCurve;
        return v;
    }

    const bool base = special_range && e_le_g && degree_ok && special_series;
    if ((base && (case_i || case_ii || case_iii || case_iv)) || counting_regime) {
        v.status = SecantStatus::ExistsExpectedDim;
    } else if (!base) {
        v.status = SecantStatus::HypothesesFail;
    } else {
        v.status = SecantStatus::Unknown;
    }
    return v;
}

bool rho_zero_emptiness(const SecantProblem& p) {
    return rho(p.g, p.r, p.d) == 0 && p.e < p.f * p.rank_drop();
}

std::optional<long long> coppens_martens_dim(const SecantProblem& p) {
    const long long dim = expected_cycle_dim(p);
    if (dim < 0) return std::nullopt;
    return dim;
}

bool very_ample_guaranteed(long long g, long long r, long long d, long long e) {
    if (e < 1) {
        throw PreconditionError("DOMAIN", "very_ample_guaranteed: e must be >= 1");
    }
    if (g < 0 || r < 0) {
        throw PreconditionError("DOMAIN", "very_ample_guaranteed: g, r must be >= 0");
    }
    return rho(g, r, d) + 2 * e - 2 - r < 0;
}

std::pair<long long, long long> uf_secant_params(long long u, long long f) {
    if (u < 1 || f < 2) {
        throw PreconditionError("DOMAIN", "uf_secant_params: needs u >= 1 and f >= 2");
    }
    return {(u - 1) * (f + 1), u * f};
}

SecantProblem uf_secant_problem(long long g, long long d, long long u, long long f) {
    const auto [r, e] = uf_secant_params(u, f);
    // u = 1 gives e = f and fails the f < e invariant below.
    return SecantProblem(g, d, r, e, f);
}

}  // namespace secantry
