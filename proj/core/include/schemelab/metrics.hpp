#ifndef SCHEMELAB_METRICS_HPP
#define SCHEMELAB_METRICS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "schemelab/scheme.hpp"

namespace schemelab {

// Per-scheme tables for rho, the k-cardinality functions ||alpha||_k and the
// block-index functions Xi_alpha(k). Built once by a full level scan, so the
// tables reflect *all* witnessing sets; any disagreement between witnesses is
// recorded instead of silently resolved (verifiers report it, the xi
// accessors refuse to serve it).
//
// The pairwise rho table is only materialized for domains up to
// kPairTableLimit; the per-ordinal tables are always available.
class MetricProfile {
public:
    static constexpr long long kPairTableLimit = 4096;
    static constexpr std::uint16_t kRhoUndefined = 0xffff;

    explicit MetricProfile(const Scheme& s);

    int rank() const { return rank_; }
    long long domain() const { return domain_; }

    bool has_pair_tables() const { return !rho_.empty(); }
    // Level of the cheapest common set, or kRhoUndefined if no set holds both.
    std::uint16_t rho(Ordinal a, Ordinal b) const {
        return rho_[static_cast<std::size_t>(a) * static_cast<std::size_t>(domain_) +
                    static_cast<std::size_t>(b)];
    }

    // ||alpha||_k; -1 when no level-k set contains alpha.
    long long card(Ordinal a, int k) const {
        return card_[static_cast<std::size_t>(a) * static_cast<std::size_t>(rank_ + 1) +
                     static_cast<std::size_t>(k)];
    }
    // Xi_alpha(k); -2 when no level-k set contains alpha.
    int xi(Ordinal a, int k) const {
        return xi_[static_cast<std::size_t>(a) * static_cast<std::size_t>(rank_ + 1) +
                   static_cast<std::size_t>(k)];
    }

    // First k with ||a||_k != ||b||_k, or sentinel rank+1 if none.
    int delta(Ordinal a, Ordinal b) const;

    bool xi_well_defined() const { return xi_conflict_.empty(); }
    const std::string& xi_conflict() const { return xi_conflict_; }
    bool card_well_defined() const { return card_conflict_.empty(); }
    const std::string& card_conflict() const { return card_conflict_; }
    // Every ordinal covered at every level, every pair covered at some level.
    bool total() const { return totality_gap_.empty(); }
    const std::string& totality_gap() const { return totality_gap_; }

private:
    int rank_;
    long long domain_;
    std::vector<std::uint16_t> rho_;  // domain x domain, empty above the limit
    std::vector<long long> card_;    // domain x (rank+1)
    std::vector<int> xi_;            // domain x (rank+1)
    std::string xi_conflict_;
    std::string card_conflict_;
    std::string totality_gap_;
};

// Sentinel for Delta on equal inputs: strictly above every level.
inline int delta_sentinel(const Scheme& s) { return s.rank() + 1; }

// First index where the sequences differ, or `sentinel` if none (this is the
// Delta of integer sequences; lengths must match).
int seq_delta(std::span<const long long> a, std::span<const long long> b, int sentinel);
int seq_delta(std::span<const int> a, std::span<const int> b, int sentinel);

// rho(alpha, beta): the least level whose family has a member containing
// both. Uses the pair table when available, canonical descent otherwise.
int rho(const Scheme& s, Ordinal a, Ordinal b);

// rho^A = max rho over pairs from A.
int rho_max(const Scheme& s, const OrdinalSet& a);

// (alpha)_k = {xi <= alpha : rho(alpha, xi) <= k}.
OrdinalSet closure(const Scheme& s, Ordinal alpha, int k);

// ||alpha||_k = |(alpha)_k^-| for k = 0..K.
std::vector<long long> card_fn(const Scheme& s, Ordinal alpha);

// Xi_alpha(0..K). Throws IllFormedSchemeError if witnesses disagree.
std::vector<int> xi_seq(const Scheme& s, Ordinal alpha);

// Delta(alpha, beta) via the cardinality profiles; rank+1 is the sentinel
// standing in for the paper-level "omega" on equal profiles.
int delta(const Scheme& s, Ordinal a, Ordinal b);

}  // namespace schemelab

#endif
