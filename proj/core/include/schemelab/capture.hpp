#ifndef SCHEMELAB_CAPTURE_HPP
#define SCHEMELAB_CAPTURE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "schemelab/scheme.hpp"

namespace schemelab {

enum class CaptureKind { delta_captured, captured };

std::string to_string(CaptureKind kind);

// A certified (Delta-)captured family: equal-sized sets D_0..D_{n-1} forming
// a root-tail-tail Delta-system whose tail elements sit in the distinct
// canonical blocks at `level`, with coordinatewise Delta (and, for captured,
// rho) equal to `level`.
struct CaptureWitness {
    int level = 0;
    CaptureKind kind = CaptureKind::delta_captured;
    OrdinalSet root;
    std::vector<OrdinalSet> family;

    friend bool operator==(const CaptureWitness&, const CaptureWitness&) = default;
};

struct RttCheck {
    bool ok = false;
    OrdinalSet root;
    std::string reason;
};

// Root-tail-tail Delta-system test: pairwise intersections all equal a root
// R, R lies below every tail, and the tails are linearly ordered.
RttCheck is_rtt_delta_system(const std::vector<OrdinalSet>& family);

struct CaptureCheck {
    bool ok = false;
    CaptureWitness witness;  // meaningful when ok
    std::string failure;     // names the first violated clause otherwise
};

// Certifies the capture clauses for `family` at `level`:
//   1. root-tail-tail Delta-system with root R, |R| = r
//   2. Xi_{D_j(a)}(level) = -1 for a < r and = j for a >= r
//   3. Delta(D_j(a), D_i(a)) = level for i != j, a >= r
//   4. (kind = captured only) rho(D_j(a), D_i(a)) = level on the same range
CaptureCheck check_capture(const Scheme& s, const std::vector<OrdinalSet>& family,
                           int level, CaptureKind kind);

// Packages the canonical decomposition tails of a level-k member (k >= 1) as
// a family captured at level k; check_capture certifies it on the way out.
CaptureWitness canonical_capture(const Scheme& s, const OrdinalSet& f);

// The tails of f's decomposition truncated to their first `tuple_arity`
// positions: the canonical Delta-captured family of tuples at f's level.
std::vector<OrdinalSet> canonical_tuple_family(const Scheme& s, const OrdinalSet& f,
                                               int tuple_arity);

struct SearchOptions {
    long long tuple_cap = 10000;  // combinations enumerated before sampling
    std::uint64_t seed = 0;
};

struct SearchStats {
    long long enumerated = 0;
    long long total = 0;
    bool exhaustive = true;
};

// Searches the pool for families of each requested size, (Delta-)captured at
// each requested level. Combinations are visited in lexicographic index
// order and each candidate is arranged in its only possible valid order (the
// Xi value at the level indexes the members), so the witness list is
// reproducible; it is sorted before return. Pools above the tuple cap are
// sampled with the given seed.
std::vector<CaptureWitness> find_captures(const Scheme& s,
                                          const std::vector<OrdinalSet>& pool,
                                          const std::vector<int>& sizes,
                                          const std::vector<int>& levels,
                                          CaptureKind kind,
                                          const SearchOptions& options = {},
                                          SearchStats* stats = nullptr);

}  // namespace schemelab

#endif
