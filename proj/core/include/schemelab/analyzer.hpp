#ifndef SCHEMELAB_ANALYZER_HPP
#define SCHEMELAB_ANALYZER_HPP

#include <map>
#include <utility>
#include <vector>

#include "schemelab/capture.hpp"
#include "schemelab/coding.hpp"
#include "schemelab/config_type.hpp"
#include "schemelab/report.hpp"

namespace schemelab {

// Pairwise-disjoint ordinal tuples of one arity, each identified with its
// increasing enumeration.
struct OrdinalTupleFamily {
    int arity = 0;
    std::vector<OrdinalSet> members;

    static OrdinalTupleFamily make(int arity, std::vector<OrdinalSet> members);
};

// bar-type(C, D)(i) = 0 iff the coded point of C(i) is lex-below the coded
// point of D(i).
ConfigType bar_type(const Coding& coding, const OrdinalSet& c, const OrdinalSet& d);

// The set of orientation-free classes realized by ordered pairs of distinct
// family members, with the first witnessing pair per class (scan order is
// (i, j) ascending, so witnesses are deterministic).
struct TypeSpectrum {
    int arity = 0;
    std::map<TypeClass, std::pair<std::size_t, std::size_t>> realized;

    long long class_universe() const { return 1LL << (arity - 1); }
    bool contains(const TypeClass& cls) const { return realized.count(cls) > 0; }
};

TypeSpectrum spectrum(const Coding& coding, const OrdinalTupleFamily& family);

// Checks that every orientation-free class of types on 2n coordinates is
// realized inside a Delta-captured family of disjoint 2n-tuples, by the
// index selection the e-coding is built for: normalize the type to at most
// n zeros (first coordinate zero when exactly n), look the zero-set up in
// the enumeration, and validate the chosen pair through bar_type.
Report verify_realization(const Coding& coding, const CaptureWitness& witness);

// Interval tuples [gamma, gamma+width) sharing the pigeonhole invariants
// (rho of the whole tuple, cardinality of gamma at that level). `family`
// holds the largest cell; ties go to the smallest level, then the smallest
// cardinality.
struct IntervalFamily {
    OrdinalTupleFamily family;
    int rho_level = 0;
    long long card_at_level = 0;
    std::map<std::pair<int, long long>, long long> cell_sizes;
};

IntervalFamily interval_family(const Scheme& s, const std::vector<Ordinal>& gammas,
                               int width);

// Evenly spaced gammas 0, width, 2*width, ... fitting inside the domain.
std::vector<Ordinal> spaced_gammas(const Scheme& s, int width);

// The avoidance check on a matched interval family: no ordered pair may
// realize the alternating class (arity 2n+1 under e, 2n+2 under o), and the
// shift invariance Delta(gamma+i, delta+i) = Delta(gamma, delta) must hold
// coordinatewise for every pair.
Report verify_avoidance(const Coding& coding, const IntervalFamily& intervals);

// Under the xi coding, every Delta-captured pair of family members must
// realize a constant bar-type. Non-captured pairs are unconstrained.
Report verify_increasing(const Coding& xi_coding, const OrdinalTupleFamily& family);

}  // namespace schemelab

#endif
