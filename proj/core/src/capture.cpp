#include "schemelab/capture.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "schemelab/metrics.hpp"
#include "schemelab/rng.hpp"

namespace schemelab {

namespace {

std::string set_to_string(const OrdinalSet& f) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << ',';
        os << f[i];
    }
    os << '}';
    return os.str();
}

OrdinalSet intersect(const OrdinalSet& a, const OrdinalSet& b) {
    OrdinalSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::string to_string(CaptureKind kind) {
    return kind == CaptureKind::captured ? "captured" : "delta_captured";
}

RttCheck is_rtt_delta_system(const std::vector<OrdinalSet>& family) {
    RttCheck out;
    if (family.size() < 2) {
        out.reason = "a Delta-system needs at least 2 sets";
        return out;
    }
    for (const auto& x : family)
        if (x.empty()) {
            out.reason = "family contains an empty set";
            return out;
        }
    OrdinalSet root = intersect(family[0], family[1]);
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (intersect(family[i], family[j]) != root) {
                out.reason = "pairwise intersections differ: " +
                             set_to_string(intersect(family[i], family[j])) + " vs " +
                             set_to_string(root);
                return out;
            }
    // R < X \ R: with sorted sets this says R is a prefix of every member.
    for (const auto& x : family)
        if (!std::equal(root.begin(), root.end(), x.begin())) {
            out.reason = "root " + set_to_string(root) + " is not below the tail of " +
                         set_to_string(x);
            return out;
        }
    // Tails linearly ordered by <; an empty tail is ordered vacuously.
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (family[i].size() == root.size() || family[j].size() == root.size())
                continue;
            const Ordinal max_i = family[i].back(), max_j = family[j].back();
            const Ordinal min_i = family[i][root.size()], min_j = family[j][root.size()];
            if (!(max_i < min_j || max_j < min_i)) {
                out.reason = "tails of " + set_to_string(family[i]) + " and " +
                             set_to_string(family[j]) + " interleave";
                return out;
            }
        }
    out.ok = true;
    out.root = std::move(root);
    return out;
}

CaptureCheck check_capture(const Scheme& s, const std::vector<OrdinalSet>& family,
                           int level, CaptureKind kind) {
    if (family.size() < 2)
        throw PreconditionError("capture check needs a family of at least 2 sets");
    const std::size_t msize = family[0].size();
    for (const auto& d : family) {
        if (d.size() != msize)
            throw PreconditionError("capture check needs equal-sized sets");
        if (d.empty()) throw PreconditionError("capture check needs non-empty sets");
        for (auto x : d)
            if (x < 0 || x >= s.domain_size())
                throw OutOfDomainError("ordinal " + std::to_string(x) + " outside domain");
    }
    if (level < 1 || level > s.rank())
        throw PreconditionError("capture level " + std::to_string(level) + " not in [1, " +
                                std::to_string(s.rank()) + "]");

    CaptureCheck out;

    const auto rtt = is_rtt_delta_system(family);
    if (!rtt.ok) {
        out.failure = "clause 1 (root-tail-tail Delta-system): " + rtt.reason;
        return out;
    }
    const auto r = rtt.root.size();

    const auto& prof = s.profile();
    for (std::size_t j = 0; j < family.size(); ++j)
        for (std::size_t a = 0; a < msize; ++a) {
            const int expect = a < r ? -1 : static_cast<int>(j);
            const int got = prof.xi(family[j][a], level);
            if (got != expect) {
                out.failure = "clause 2 (Xi values): Xi_" + std::to_string(family[j][a]) +
                              "(" + std::to_string(level) + ") = " + std::to_string(got) +
                              ", expected " + std::to_string(expect);
                return out;
            }
        }

    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            for (std::size_t a = r; a < msize; ++a) {
                const int d = prof.delta(family[i][a], family[j][a]);
                if (d != level) {
                    out.failure = "clause 3 (coordinatewise Delta): Delta(" +
                                  std::to_string(family[i][a]) + "," +
                                  std::to_string(family[j][a]) + ") = " + std::to_string(d) +
                                  " != " + std::to_string(level);
                    return out;
                }
            }

    if (kind == CaptureKind::captured) {
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i + 1; j < family.size(); ++j)
                for (std::size_t a = r; a < msize; ++a) {
                    const int p = rho(s, family[i][a], family[j][a]);
                    if (p != level) {
                        out.failure = "clause 4 (coordinatewise rho): rho(" +
                                      std::to_string(family[i][a]) + "," +
                                      std::to_string(family[j][a]) + ") = " +
                                      std::to_string(p) + " != " + std::to_string(level);
                        return out;
                    }
                }
    }

    out.ok = true;
    out.witness = CaptureWitness{level, kind, rtt.root, family};
    return out;
}

CaptureWitness canonical_capture(const Scheme& s, const OrdinalSet& f) {
    const int k = s.level_of_size(f.size());
    if (k < 1)
        throw PreconditionError("canonical_capture needs a member of some level >= 1");
    if (!s.level_contains(k, f))
        throw PreconditionError("set " + set_to_string(f) + " is not a level-" +
                                std::to_string(k) + " member");
    const auto dec = s.decompose(k, f);
    std::vector<OrdinalSet> tails;
    tails.reserve(dec.pieces.size());
    for (const auto& piece : dec.pieces)
        tails.emplace_back(piece.begin() + static_cast<std::ptrdiff_t>(dec.root.size()),
                           piece.end());
    auto check = check_capture(s, tails, k, CaptureKind::captured);
    if (!check.ok)
        throw IllFormedSchemeError("canonical decomposition of " + set_to_string(f) +
                                   " is not captured at level " + std::to_string(k) + ": " +
                                   check.failure);
    return check.witness;
}

std::vector<OrdinalSet> canonical_tuple_family(const Scheme& s, const OrdinalSet& f,
                                               int tuple_arity) {
    const int k = s.level_of_size(f.size());
    if (k < 1)
        throw PreconditionError("canonical_tuple_family needs a member of some level >= 1");
    if (tuple_arity < 1 || static_cast<long long>(tuple_arity) > s.type_seq().block(k))
        throw PreconditionError("tuple arity " + std::to_string(tuple_arity) +
                                " exceeds block size " + std::to_string(s.type_seq().block(k)) +
                                " at level " + std::to_string(k));
    const auto dec = s.decompose(k, f);
    std::vector<OrdinalSet> out;
    out.reserve(dec.pieces.size());
    for (const auto& piece : dec.pieces) {
        const auto tail_begin = piece.begin() + static_cast<std::ptrdiff_t>(dec.root.size());
        out.emplace_back(tail_begin, tail_begin + tuple_arity);
    }
    return out;
}

std::vector<CaptureWitness> find_captures(const Scheme& s,
                                          const std::vector<OrdinalSet>& pool,
                                          const std::vector<int>& sizes,
                                          const std::vector<int>& levels,
                                          CaptureKind kind, const SearchOptions& options,
                                          SearchStats* stats) {
    if (stats) *stats = SearchStats{};
    std::vector<CaptureWitness> found;
    if (pool.empty()) return found;

    const std::size_t msize = pool[0].size();
    for (const auto& d : pool) {
        if (d.size() != msize) throw PreconditionError("pool sets must be equal-sized");
        if (d.empty()) throw PreconditionError("pool sets must be non-empty");
        for (auto x : d)
            if (x < 0 || x >= s.domain_size())
                throw OutOfDomainError("pool ordinal " + std::to_string(x) +
                                       " outside domain");
    }

    std::vector<int> wanted_sizes = sizes;
    std::sort(wanted_sizes.begin(), wanted_sizes.end());
    wanted_sizes.erase(std::unique(wanted_sizes.begin(), wanted_sizes.end()),
                       wanted_sizes.end());

    auto total_combinations = [&](std::size_t n, std::size_t k) -> long long {
        long long c = 1;
        for (std::size_t i = 0; i < k; ++i) {
            c = c * static_cast<long long>(n - i) / static_cast<long long>(i + 1);
            if (c > (1LL << 60)) return 1LL << 60;
        }
        return c;
    };

    const auto& prof = s.profile();
    auto try_candidate = [&](std::vector<OrdinalSet> members, int level) {
        std::sort(members.begin(), members.end());
        if (std::adjacent_find(members.begin(), members.end()) != members.end()) return;
        // Clause 2 pins member j to block j at `level`, so the only possible
        // arrangement indexes each member by the Xi value of its first tail
        // element. (Block indices are not monotone in the ordinals, so this
        // is genuinely different from sorting.)
        const auto rtt = is_rtt_delta_system(members);
        if (!rtt.ok) return;
        const std::size_t r = rtt.root.size();
        if (members[0].size() <= r) return;
        std::vector<OrdinalSet> arranged(members.size());
        std::vector<bool> filled(members.size(), false);
        for (auto& m : members) {
            const int v = prof.xi(m[r], level);
            if (v < 0 || v >= static_cast<int>(members.size()) || filled[static_cast<std::size_t>(v)])
                return;
            filled[static_cast<std::size_t>(v)] = true;
            arranged[static_cast<std::size_t>(v)] = std::move(m);
        }
        const auto check = check_capture(s, arranged, level, kind);
        if (check.ok) found.push_back(check.witness);
    };

    Rng rng(options.seed);
    for (const int level : levels) {
        if (level < 1 || level > s.rank()) continue;
        for (const int size : wanted_sizes) {
            if (size < 2 || static_cast<std::size_t>(size) > pool.size()) continue;
            const long long total = total_combinations(pool.size(), static_cast<std::size_t>(size));
            if (stats) stats->total += total;
            if (total <= options.tuple_cap) {
                // All index combinations, lexicographic.
                std::vector<std::size_t> idx(static_cast<std::size_t>(size));
                for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
                while (true) {
                    if (stats) ++stats->enumerated;
                    std::vector<OrdinalSet> members;
                    members.reserve(idx.size());
                    for (auto i : idx) members.push_back(pool[i]);
                    try_candidate(std::move(members), level);

                    // next combination
                    std::size_t pos = idx.size();
                    while (pos > 0 && idx[pos - 1] == pool.size() - idx.size() + pos - 1) --pos;
                    if (pos == 0) break;
                    ++idx[pos - 1];
                    for (std::size_t i = pos; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
                }
            } else {
                if (stats) stats->exhaustive = false;
                for (long long t = 0; t < options.tuple_cap; ++t) {
                    if (stats) ++stats->enumerated;
                    std::set<std::size_t> pick;
                    while (pick.size() < static_cast<std::size_t>(size))
                        pick.insert(static_cast<std::size_t>(
                            rng.below(static_cast<std::uint64_t>(pool.size()))));
                    std::vector<OrdinalSet> members;
                    members.reserve(pick.size());
                    for (auto i : pick) members.push_back(pool[i]);
                    try_candidate(std::move(members), level);
                }
            }
        }
    }

    std::sort(found.begin(), found.end(), [](const CaptureWitness& a, const CaptureWitness& b) {
        return std::tie(a.level, a.kind, a.family) < std::tie(b.level, b.kind, b.family);
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace schemelab
