#ifndef SCHEMELAB_TYPE_SEQUENCE_HPP
#define SCHEMELAB_TYPE_SEQUENCE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "schemelab/errors.hpp"

namespace schemelab {

inline constexpr long long kDefaultDomainCap = 100000;

// Raw triple (m_k, n_{k+1}, r_{k+1}).
struct TypeEntry {
    long long m;
    long long n;
    long long r;
    friend bool operator==(const TypeEntry&, const TypeEntry&) = default;
};

struct AxiomViolation {
    int k;       // index of the offending entry
    char axiom;  // 'a'..'d'
    std::string detail;
};

// Validates the scheme-type axioms over raw triples:
//   (a) m_0 = 1   (b) n_{k+1} >= 2   (c) m_k > r_{k+1} >= 0
//   (d) m_{k+1} = r_{k+1} + (m_k - r_{k+1}) * n_{k+1}
// Returns every violation found, not just the first.
std::vector<AxiomViolation> check_type_entries(const std::vector<TypeEntry>& entries);

// Number of subsets of a base set of `base_size` elements with at most
// `max_size` elements (the width a level enumeration has to cover).
long long count_subsets_up_to(long long base_size, int max_size);

// A validated scheme-type sequence <m_k, n_{k+1}, r_{k+1}>_{k<K} plus m_K.
class TypeSequence {
public:
    // Throws AxiomViolationError (first violation; message lists all) or
    // OverflowError when m_K exceeds `domain_cap`.
    static TypeSequence from_entries(const std::vector<TypeEntry>& entries,
                                     long long domain_cap = kDefaultDomainCap);

    // Derives the m_k recursively from m_0 and the (n, r) pairs, so axiom
    // (d) holds by construction; (a)-(c) are still checked.
    static TypeSequence from_params(long long m0,
                                    const std::vector<std::pair<long long, long long>>& nr,
                                    long long domain_cap = kDefaultDomainCap);

    int rank() const { return static_cast<int>(steps_.size()); }
    long long m(int k) const { return m_.at(static_cast<std::size_t>(k)); }
    // Paper-style subscripts: n(k), r(k) for 1 <= k <= rank().
    long long n(int k) const { return steps_.at(static_cast<std::size_t>(k - 1)).first; }
    long long r(int k) const { return steps_.at(static_cast<std::size_t>(k - 1)).second; }
    long long block(int k) const { return m(k - 1) - r(k); }  // |F_i \ R(F)|
    long long domain_size() const { return m_.back(); }

    std::vector<TypeEntry> entries() const;

    friend bool operator==(const TypeSequence&, const TypeSequence&) = default;

private:
    TypeSequence() = default;
    std::vector<long long> m_;                            // m_0..m_K
    std::vector<std::pair<long long, long long>> steps_;  // (n_{k+1}, r_{k+1})
};

enum class Growth {
    minimal,  // n = 2, r = m_k - 1: slowest possible growth, m_K = K + 1
    coding,   // branching wide enough for the arity-n subset enumeration,
              // including the exponential side condition n_{k+1} >= 2^{m_k}
    width,    // like coding but without the exponential condition; stays
              // enumeration-complete for arity n at every rank
    random,   // seeded random n in [2,6], r in [0, m_k - 1]
};

struct GrowthSpec {
    Growth mode = Growth::minimal;
    int arity = 1;              // coding/width: the n of the enumeration
    std::uint64_t seed = 0;     // random
    long long domain_cap = kDefaultDomainCap;
};

// Throws OverflowError when the requested growth exceeds the domain cap.
TypeSequence generate_type_seq(int rank, const GrowthSpec& spec);

}  // namespace schemelab

#endif
