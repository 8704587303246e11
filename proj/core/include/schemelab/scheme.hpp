#ifndef SCHEMELAB_SCHEME_HPP
#define SCHEMELAB_SCHEME_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "schemelab/type_sequence.hpp"

namespace schemelab {

using Ordinal = std::int32_t;
using OrdinalSet = std::vector<Ordinal>;  // strictly increasing

class MetricProfile;

// A finite-rank construction scheme over the ordinal domain [0, m_K):
// levels F_0..F_K of finite sets, same-level members meeting in initial
// segments, each level-(k+1) member carrying its canonical decomposition
// into n_{k+1} level-k pieces overlapping in a root of size r_{k+1}.
//
// The canonical builder emits the single-top scheme (F_K = {[0, m_K)},
// lower levels closed under decomposition). Loaded schemes are only
// shape-checked here; the semantic axioms are the verifiers' job, so
// fault-injected instances can be represented and reported on.
class Scheme {
public:
    struct Decomposition {
        OrdinalSet root;
        std::vector<OrdinalSet> pieces;
    };

    static Scheme build(const TypeSequence& t);

    // Adopts externally supplied levels (e.g. a parsed file). Checks shape
    // only: level count, member sizes, strict monotonicity, domain bounds,
    // no duplicate members, levels sorted.
    static Scheme from_levels(TypeSequence t, std::vector<std::vector<OrdinalSet>> levels);

    const TypeSequence& type_seq() const { return type_seq_; }
    int rank() const { return type_seq_.rank(); }
    Ordinal domain_size() const { return static_cast<Ordinal>(type_seq_.domain_size()); }

    const std::vector<OrdinalSet>& level(int k) const;
    const std::vector<std::vector<OrdinalSet>>& levels() const { return levels_; }
    bool level_contains(int k, const OrdinalSet& f) const;
    int level_of_size(std::size_t set_size) const;  // -1 if no level has this size

    // Canonical decomposition of a level-k member, k >= 1, by the block
    // identity F_i = F[0..r_k) u F[[a_i, a_{i+1})], a_i = r_k + i*(m_{k-1} - r_k).
    Decomposition decompose(int k, const OrdinalSet& f) const;

    // Some level-k member containing alpha, found by canonical descent from
    // the top (root elements descend through piece 0; any witness is as good
    // as any other once well-definedness is verified).
    OrdinalSet member_containing(int k, Ordinal alpha) const;

    // Lazily built metric tables; immutable once computed, shared by copies.
    const MetricProfile& profile() const;

    friend bool operator==(const Scheme& a, const Scheme& b) {
        return a.type_seq_ == b.type_seq_ && a.levels_ == b.levels_;
    }

    Scheme(const Scheme& o);
    Scheme& operator=(const Scheme& o);
    Scheme(Scheme&&) noexcept;
    Scheme& operator=(Scheme&&) noexcept;
    ~Scheme();

private:
    explicit Scheme(TypeSequence t) : type_seq_(std::move(t)) {}
    void check_alpha(Ordinal alpha) const;

    TypeSequence type_seq_;
    std::vector<std::vector<OrdinalSet>> levels_;  // levels_[k] sorted, unique

    mutable std::mutex profile_mutex_;
    mutable std::shared_ptr<const MetricProfile> profile_;
};

}  // namespace schemelab

#endif
