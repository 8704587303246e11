#include "schemelab/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "schemelab/metrics.hpp"

namespace schemelab {

namespace {

// Hard stop for pathological inputs: materializing a scheme whose levels
// hold more sets than this is a mistake, not a use case.
constexpr long long kMaxSchemeSets = 2'000'000;

}  // namespace

Scheme::Scheme(const Scheme& o) : type_seq_(o.type_seq_), levels_(o.levels_) {
    std::lock_guard lock(o.profile_mutex_);
    profile_ = o.profile_;  // immutable and self-contained, safe to share
}

Scheme& Scheme::operator=(const Scheme& o) {
    if (this != &o) {
        type_seq_ = o.type_seq_;
        levels_ = o.levels_;
        std::lock_guard lock(o.profile_mutex_);
        profile_ = o.profile_;
    }
    return *this;
}

Scheme::Scheme(Scheme&& o) noexcept
    : type_seq_(std::move(o.type_seq_)),
      levels_(std::move(o.levels_)),
      profile_(std::move(o.profile_)) {}

Scheme& Scheme::operator=(Scheme&& o) noexcept {
    if (this != &o) {
        type_seq_ = std::move(o.type_seq_);
        levels_ = std::move(o.levels_);
        profile_ = std::move(o.profile_);
    }
    return *this;
}

Scheme::~Scheme() = default;

Scheme Scheme::build(const TypeSequence& t) {
    Scheme s(t);
    const int K = t.rank();
    s.levels_.resize(static_cast<std::size_t>(K) + 1);

    OrdinalSet top(static_cast<std::size_t>(t.domain_size()));
    std::iota(top.begin(), top.end(), 0);
    s.levels_[static_cast<std::size_t>(K)] = {std::move(top)};

    long long total_sets = 1;
    for (int k = K; k >= 1; --k) {
        std::set<OrdinalSet> next;
        for (const auto& f : s.levels_[static_cast<std::size_t>(k)]) {
            auto dec = s.decompose(k, f);
            for (auto& piece : dec.pieces) next.insert(std::move(piece));
        }
        total_sets += static_cast<long long>(next.size());
        if (total_sets > kMaxSchemeSets)
            throw OverflowError("scheme too large to materialize (more than " +
                                std::to_string(kMaxSchemeSets) + " sets)");
        s.levels_[static_cast<std::size_t>(k) - 1].assign(next.begin(), next.end());
    }
    return s;
}

Scheme Scheme::from_levels(TypeSequence t, std::vector<std::vector<OrdinalSet>> levels) {
    const int K = t.rank();
    if (levels.size() != static_cast<std::size_t>(K) + 1)
        throw ParseError("expected " + std::to_string(K + 1) + " levels, got " +
                         std::to_string(levels.size()));
    const long long domain = t.domain_size();
    long long total_sets = 0;
    for (int k = 0; k <= K; ++k) {
        auto& lvl = levels[static_cast<std::size_t>(k)];
        total_sets += static_cast<long long>(lvl.size());
        if (total_sets > kMaxSchemeSets) throw ParseError("scheme file too large");
        for (const auto& f : lvl) {
            if (static_cast<long long>(f.size()) != t.m(k))
                throw ParseError("level " + std::to_string(k) + " member of size " +
                                 std::to_string(f.size()) + ", expected m_" +
                                 std::to_string(k) + " = " + std::to_string(t.m(k)));
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (f[i] < 0 || f[i] >= domain)
                    throw ParseError("ordinal " + std::to_string(f[i]) +
                                     " outside domain [0, " + std::to_string(domain) + ")");
                if (i > 0 && f[i] <= f[i - 1])
                    throw ParseError("level " + std::to_string(k) +
                                     " member not strictly increasing");
            }
        }
        std::sort(lvl.begin(), lvl.end());
        if (std::adjacent_find(lvl.begin(), lvl.end()) != lvl.end())
            throw ParseError("level " + std::to_string(k) + " lists a member twice");
    }
    Scheme s(std::move(t));
    s.levels_ = std::move(levels);
    return s;
}

const std::vector<OrdinalSet>& Scheme::level(int k) const {
    if (k < 0 || k > rank())
        throw OutOfDomainError("level " + std::to_string(k) + " not in [0, " +
                               std::to_string(rank()) + "]");
    return levels_[static_cast<std::size_t>(k)];
}

bool Scheme::level_contains(int k, const OrdinalSet& f) const {
    const auto& lvl = level(k);
    return std::binary_search(lvl.begin(), lvl.end(), f);
}

int Scheme::level_of_size(std::size_t set_size) const {
    for (int k = 0; k <= rank(); ++k)
        if (type_seq_.m(k) == static_cast<long long>(set_size)) return k;
    return -1;
}

Scheme::Decomposition Scheme::decompose(int k, const OrdinalSet& f) const {
    if (k < 1 || k > rank())
        throw OutOfDomainError("decompose: level " + std::to_string(k) +
                               " not in [1, " + std::to_string(rank()) + "]");
    if (static_cast<long long>(f.size()) != type_seq_.m(k))
        throw PreconditionError("decompose: set of size " + std::to_string(f.size()) +
                                " at level " + std::to_string(k));
    const auto r = static_cast<std::size_t>(type_seq_.r(k));
    const auto block = static_cast<std::size_t>(type_seq_.block(k));
    const auto n = static_cast<std::size_t>(type_seq_.n(k));

    Decomposition dec;
    dec.root.assign(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(r));
    dec.pieces.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        OrdinalSet piece = dec.root;
        const auto lo = r + i * block;
        piece.insert(piece.end(), f.begin() + static_cast<std::ptrdiff_t>(lo),
                     f.begin() + static_cast<std::ptrdiff_t>(lo + block));
        dec.pieces.push_back(std::move(piece));
    }
    return dec;
}

void Scheme::check_alpha(Ordinal alpha) const {
    if (alpha < 0 || alpha >= domain_size())
        throw OutOfDomainError("ordinal " + std::to_string(alpha) +
                               " outside domain [0, " + std::to_string(domain_size()) + ")");
}

OrdinalSet Scheme::member_containing(int k, Ordinal alpha) const {
    check_alpha(alpha);
    if (k < 0 || k > rank())
        throw OutOfDomainError("member_containing: level " + std::to_string(k));

    const auto& tops = levels_[static_cast<std::size_t>(rank())];
    auto it = std::find_if(tops.begin(), tops.end(), [&](const OrdinalSet& f) {
        return std::binary_search(f.begin(), f.end(), alpha);
    });
    if (it == tops.end())
        throw IllFormedSchemeError("no top-level set contains " + std::to_string(alpha));

    OrdinalSet cur = *it;
    for (int j = rank(); j > k; --j) {
        const auto r = static_cast<std::size_t>(type_seq_.r(j));
        const auto block = static_cast<std::size_t>(type_seq_.block(j));
        const auto pos = static_cast<std::size_t>(
            std::lower_bound(cur.begin(), cur.end(), alpha) - cur.begin());
        const std::size_t piece_index = pos < r ? 0 : (pos - r) / block;
        auto dec = decompose(j, cur);
        cur = std::move(dec.pieces[piece_index]);
    }
    return cur;
}

const MetricProfile& Scheme::profile() const {
    std::lock_guard lock(profile_mutex_);
    if (!profile_) profile_ = std::make_shared<const MetricProfile>(*this);
    return *profile_;
}

}  // namespace schemelab
