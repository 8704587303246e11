#ifndef SCHEMELAB_VERIFY_HPP
#define SCHEMELAB_VERIFY_HPP

#include <cstdint>

#include "schemelab/report.hpp"
#include "schemelab/scheme.hpp"

namespace schemelab {

struct VerifyOptions {
    // Cofinality is checked over every non-empty subset of the domain up to
    // this size; larger domains get seeded random subsets instead.
    long long cofinality_exhaustive_limit = 20;
    long long cofinality_samples = 10000;
    std::uint64_t seed = 0;
};

// Structural scheme axioms, checked exhaustively:
//   level-sizes, (i) same-level members meet in a common initial segment,
//   (ii) every level-(k+1) member decomposes canonically into present
//   level-k pieces, and cofinality of the whole family.
Report verify_scheme_axioms(const Scheme& s, const VerifyOptions& options = {});

// Ordinal-metric laws over all pairs/triples: om1-om3 (om4 is vacuously true
// on a finite domain and reported as such), the closure identity
// F n (alpha+1) = (alpha)_k for every witness, rho^F = k on every level,
// the Xi laws xi_a..xi_d, and Delta(a,b) = Delta(Xi_a, Xi_b).
// Needs the pairwise rho table, so the domain must fit
// MetricProfile::kPairTableLimit.
Report verify_metric_lemmas(const Scheme& s);

}  // namespace schemelab

#endif
