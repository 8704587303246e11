#include "schemelab/metrics.hpp"

#include <algorithm>

namespace schemelab {

MetricProfile::MetricProfile(const Scheme& s)
    : rank_(s.rank()), domain_(s.domain_size()) {
    const auto m = static_cast<std::size_t>(domain_);
    const auto cols = static_cast<std::size_t>(rank_) + 1;
    card_.assign(m * cols, -1);
    xi_.assign(m * cols, -2);
    if (domain_ <= kPairTableLimit) rho_.assign(m * m, kRhoUndefined);

    auto note_card_conflict = [&](Ordinal a, int k, long long seen, long long now) {
        if (!card_conflict_.empty()) return;
        card_conflict_ = "||" + std::to_string(a) + "||_" + std::to_string(k) +
                         " ambiguous: witnesses give " + std::to_string(seen) + " and " +
                         std::to_string(now);
    };
    auto note_xi_conflict = [&](Ordinal a, int k, int seen, int now) {
        if (!xi_conflict_.empty()) return;
        xi_conflict_ = "Xi_" + std::to_string(a) + "(" + std::to_string(k) +
                       ") ambiguous: witnesses give " + std::to_string(seen) + " and " +
                       std::to_string(now);
    };

    for (int k = 0; k <= rank_; ++k) {
        const auto& lvl = s.level(k);
        const long long r = k >= 1 ? s.type_seq().r(k) : 0;
        const long long block = k >= 1 ? s.type_seq().block(k) : 1;
        for (const auto& f : lvl) {
            for (std::size_t pos = 0; pos < f.size(); ++pos) {
                const auto a = static_cast<std::size_t>(f[pos]);
                auto& card_cell = card_[a * cols + static_cast<std::size_t>(k)];
                const auto card_now = static_cast<long long>(pos);
                if (card_cell == -1)
                    card_cell = card_now;
                else if (card_cell != card_now)
                    note_card_conflict(f[pos], k, card_cell, card_now);

                // Xi at level 0 is 0 by convention; above it, -1 on the root
                // and the block index otherwise.
                const int xi_now =
                    k == 0 ? 0
                           : (static_cast<long long>(pos) < r
                                  ? -1
                                  : static_cast<int>((static_cast<long long>(pos) - r) /
                                                     block));
                auto& xi_cell = xi_[a * cols + static_cast<std::size_t>(k)];
                if (xi_cell == -2)
                    xi_cell = xi_now;
                else if (xi_cell != xi_now)
                    note_xi_conflict(f[pos], k, xi_cell, xi_now);
            }
            if (!rho_.empty()) {
                for (std::size_t i = 0; i < f.size(); ++i)
                    for (std::size_t j = i; j < f.size(); ++j) {
                        auto& cell = rho_[static_cast<std::size_t>(f[i]) * m +
                                          static_cast<std::size_t>(f[j])];
                        if (cell == kRhoUndefined) {
                            cell = static_cast<std::uint16_t>(k);
                            rho_[static_cast<std::size_t>(f[j]) * m +
                                 static_cast<std::size_t>(f[i])] =
                                static_cast<std::uint16_t>(k);
                        }
                    }
            }
        }
    }

    for (std::size_t a = 0; a < m && totality_gap_.empty(); ++a)
        for (std::size_t k = 0; k < cols; ++k)
            if (card_[a * cols + k] == -1) {
                totality_gap_ = "no level-" + std::to_string(k) + " set contains " +
                                std::to_string(a);
                break;
            }
    if (!rho_.empty() && totality_gap_.empty()) {
        for (std::size_t a = 0; a < m && totality_gap_.empty(); ++a)
            for (std::size_t b = a; b < m; ++b)
                if (rho_[a * m + b] == kRhoUndefined) {
                    totality_gap_ = "no set contains both " + std::to_string(a) + " and " +
                                    std::to_string(b);
                    break;
                }
    }
}

int MetricProfile::delta(Ordinal a, Ordinal b) const {
    const auto cols = static_cast<std::size_t>(rank_) + 1;
    const auto* ra = &card_[static_cast<std::size_t>(a) * cols];
    const auto* rb = &card_[static_cast<std::size_t>(b) * cols];
    for (std::size_t k = 0; k < cols; ++k)
        if (ra[k] != rb[k]) return static_cast<int>(k);
    return rank_ + 1;
}

int seq_delta(std::span<const long long> a, std::span<const long long> b, int sentinel) {
    if (a.size() != b.size()) throw LengthMismatchError("seq_delta: length mismatch");
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return static_cast<int>(k);
    return sentinel;
}

int seq_delta(std::span<const int> a, std::span<const int> b, int sentinel) {
    if (a.size() != b.size()) throw LengthMismatchError("seq_delta: length mismatch");
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return static_cast<int>(k);
    return sentinel;
}

namespace {

void check_domain(const Scheme& s, Ordinal a) {
    if (a < 0 || a >= s.domain_size())
        throw OutOfDomainError("ordinal " + std::to_string(a) + " outside domain [0, " +
                               std::to_string(s.domain_size()) + ")");
}

}  // namespace

int rho(const Scheme& s, Ordinal a, Ordinal b) {
    check_domain(s, a);
    check_domain(s, b);
    const auto& prof = s.profile();
    if (prof.has_pair_tables()) {
        const auto v = prof.rho(a, b);
        if (v == MetricProfile::kRhoUndefined)
            throw IllFormedSchemeError("no set contains both " + std::to_string(a) +
                                       " and " + std::to_string(b));
        return v;
    }
    // Large domain: walk the closure chain of the larger ordinal.
    const Ordinal hi = std::max(a, b), lo = std::min(a, b);
    for (int k = 0; k <= s.rank(); ++k) {
        const auto f = s.member_containing(k, hi);
        if (std::binary_search(f.begin(), f.end(), lo)) return k;
    }
    throw IllFormedSchemeError("no set contains both " + std::to_string(a) + " and " +
                               std::to_string(b));
}

int rho_max(const Scheme& s, const OrdinalSet& a) {
    if (a.empty()) throw PreconditionError("rho_max of an empty set");
    int best = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i; j < a.size(); ++j) best = std::max(best, rho(s, a[i], a[j]));
    return best;
}

OrdinalSet closure(const Scheme& s, Ordinal alpha, int k) {
    check_domain(s, alpha);
    if (k < 0 || k > s.rank())
        throw OutOfDomainError("closure level " + std::to_string(k) + " not in [0, " +
                               std::to_string(s.rank()) + "]");
    const auto& prof = s.profile();
    if (prof.has_pair_tables()) {
        OrdinalSet out;
        for (Ordinal xi = 0; xi <= alpha; ++xi)
            if (prof.rho(alpha, xi) <= k) out.push_back(xi);
        return out;
    }
    // Equivalent on well-formed schemes: F n (alpha+1) for a witness F.
    const auto f = s.member_containing(k, alpha);
    OrdinalSet out;
    for (auto x : f) {
        if (x > alpha) break;
        out.push_back(x);
    }
    return out;
}

std::vector<long long> card_fn(const Scheme& s, Ordinal alpha) {
    check_domain(s, alpha);
    const auto& prof = s.profile();
    std::vector<long long> out(static_cast<std::size_t>(s.rank()) + 1);
    for (int k = 0; k <= s.rank(); ++k) out[static_cast<std::size_t>(k)] = prof.card(alpha, k);
    return out;
}

std::vector<int> xi_seq(const Scheme& s, Ordinal alpha) {
    check_domain(s, alpha);
    const auto& prof = s.profile();
    if (!prof.xi_well_defined())
        throw IllFormedSchemeError("Xi is not well defined: " + prof.xi_conflict());
    std::vector<int> out(static_cast<std::size_t>(s.rank()) + 1);
    for (int k = 0; k <= s.rank(); ++k) out[static_cast<std::size_t>(k)] = prof.xi(alpha, k);
    return out;
}

int delta(const Scheme& s, Ordinal a, Ordinal b) {
    check_domain(s, a);
    check_domain(s, b);
    return s.profile().delta(a, b);
}

}  // namespace schemelab
