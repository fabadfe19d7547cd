#include "secantry/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace secantry {

namespace {

std::string context_string(long long r, long long d) {
    std::ostringstream os;
    os << "(" << r << ", " << d << ")";
    return os.str();
}

}  // namespace

SeriesParams::SeriesParams(long long g_, long long r_, long long d_)
    : g(g_), r(r_), d(d_) {
    if (g < 0 || r < 0) {
        throw PreconditionError("INVARIANT",
                                "SeriesParams: g and r must be nonnegative, got g = " +
                                    std::to_string(g) + ", r = " + std::to_string(r));
    }
}

SchubertIndex::SchubertIndex(std::vector<long long> entries, long long d)
    : entries_(std::move(entries)), d_(d) {
    if (entries_.empty()) {
        throw PreconditionError("INVARIANT", "SchubertIndex: needs r+1 >= 1 entries");
    }
    const long long r = this->r();
    if (d_ < r) {
        throw PreconditionError("INVARIANT",
                                "SchubertIndex: type " + context_string(r, d_) +
                                    " requires d >= r");
    }
    long long prev = 0;
    for (long long v : entries_) {
        if (v < prev) {
            throw PreconditionError("INVARIANT",
                                    "SchubertIndex: entries must be weakly increasing and >= 0");
        }
        prev = v;
    }
    if (entries_.back() > d_ - r) {
        throw PreconditionError("INVARIANT",
                                "SchubertIndex: entry " + std::to_string(entries_.back()) +
                                    " exceeds d - r for type " + context_string(r, d_));
    }
}

SchubertIndex SchubertIndex::zero(long long r, long long d) {
    if (r < 0) {
        throw PreconditionError("INVARIANT", "SchubertIndex: r must be >= 0");
    }
    return SchubertIndex(std::vector<long long>(static_cast<std::size_t>(r) + 1, 0), d);
}

long long SchubertIndex::sum() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

VanishingSequence::VanishingSequence(std::vector<long long> entries, long long d)
    : entries_(std::move(entries)), d_(d) {
    if (entries_.empty()) {
        throw PreconditionError("INVARIANT", "VanishingSequence: needs r+1 >= 1 entries");
    }
    long long prev = -1;
    for (long long v : entries_) {
        if (v <= prev || v < 0) {
            throw PreconditionError("INVARIANT",
                                    "VanishingSequence: entries must be strictly increasing and >= 0");
        }
        prev = v;
    }
    if (entries_.back() > d_) {
        throw PreconditionError("INVARIANT",
                                "VanishingSequence: entry " + std::to_string(entries_.back()) +
                                    " exceeds d = " + std::to_string(d_));
    }
}

long long VanishingSequence::sum() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

long long rho(long long g, long long r, long long d) noexcept {
    return g - (r + 1) * (g - d + r);
}

long long rho(const SeriesParams& p) noexcept { return rho(p.g, p.r, p.d); }

long long rho_ramified(const SeriesParams& p, const SchubertIndex& alpha) {
    if (alpha.r() != p.r || alpha.d() != p.d) {
        throw PreconditionError("CONTEXT_MISMATCH",
                                "rho_ramified: index of type " +
                                    context_string(alpha.r(), alpha.d()) +
                                    " against series of type " + context_string(p.r, p.d));
    }
    return rho(p) - alpha.sum();
}

VanishingSequence to_vanishing(const SchubertIndex& alpha) {
    std::vector<long long> a(alpha.entries());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += static_cast<long long>(i);
    return VanishingSequence(std::move(a), alpha.d());
}

SchubertIndex to_schubert(const VanishingSequence& a) {
    std::vector<long long> alpha(a.entries());
    for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] -= static_cast<long long>(i);
    return SchubertIndex(std::move(alpha), a.d());
}

long long weight(const VanishingSequence& a) noexcept {
    long long w = 0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        w += a.entries()[i] - static_cast<long long>(i);
    }
    return w;
}

VanishingSequence complement(const VanishingSequence& a) {
    const auto& e = a.entries();
    std::vector<long long> c(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) {
        c[j] = a.d() - e[e.size() - 1 - j];
    }
    return VanishingSequence(std::move(c), a.d());
}

bool eh_exists(long long genus, const SchubertIndex& alpha) {
    if (genus < 0) {
        throw PreconditionError("DOMAIN", "eh_exists: genus must be >= 0");
    }
    const long long r = alpha.r();
    const long long d = alpha.d();
    long long total = 0;
    for (long long ai : alpha.entries()) {
        total += std::max(ai + genus - d + r, 0LL);
    }
    return total <= genus;
}

std::optional<long long> eh_dimension(long long genus, const SchubertIndex& alpha) {
    if (!eh_exists(genus, alpha)) return std::nullopt;
    return rho(genus, alpha.r(), alpha.d()) - alpha.sum();
}

}  // namespace secantry
