#include "schemelab/verify.hpp"

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

// E n F must be a common initial segment of both: after the longest common
// prefix the two sets may share nothing.
bool meets_in_initial_segment(const OrdinalSet& e, const OrdinalSet& f) {
    std::size_t p = 0;
    while (p < e.size() && p < f.size() && e[p] == f[p]) ++p;
    std::size_t i = p, j = p;
    while (i < e.size() && j < f.size()) {
        if (e[i] == f[j]) return false;
        if (e[i] < f[j])
            ++i;
        else
            ++j;
    }
    return true;
}

bool subset_of(const OrdinalSet& s, const OrdinalSet& f) {
    std::size_t i = 0, j = 0;
    while (i < s.size() && j < f.size()) {
        if (s[i] == f[j]) {
            ++i;
            ++j;
        } else if (s[i] > f[j]) {
            ++j;
        } else {
            return false;
        }
    }
    return i == s.size();
}

bool contained_in_some_member(const Scheme& s, const OrdinalSet& subset) {
    for (int k = s.rank(); k >= 0; --k) {
        if (static_cast<long long>(subset.size()) > s.type_seq().m(k)) break;
        for (const auto& f : s.level(k))
            if (subset_of(subset, f)) return true;
    }
    return false;
}

}  // namespace

Report verify_scheme_axioms(const Scheme& s, const VerifyOptions& options) {
    Report report;
    report.title = "scheme axioms";
    report.header.push_back("rank=" + std::to_string(s.rank()) +
                            " domain=" + std::to_string(s.domain_size()));
    const int K = s.rank();

    auto& sizes = report.add("level-sizes");
    for (int k = 0; k <= K; ++k) {
        for (const auto& f : s.level(k)) {
            ++sizes.cases;
            if (static_cast<long long>(f.size()) != s.type_seq().m(k))
                sizes.fail("level " + std::to_string(k) + ": " + set_to_string(f) +
                           " has size " + std::to_string(f.size()));
        }
        if (s.level(k).empty())
            sizes.fail("level " + std::to_string(k) + " is empty");
    }

    auto& axiom_i = report.add("axiom-i-initial-segments");
    for (int k = 0; k <= K; ++k) {
        const auto& lvl = s.level(k);
        for (std::size_t i = 0; i < lvl.size(); ++i)
            for (std::size_t j = i + 1; j < lvl.size(); ++j) {
                ++axiom_i.cases;
                if (!meets_in_initial_segment(lvl[i], lvl[j]))
                    axiom_i.fail("level " + std::to_string(k) + ": " +
                                 set_to_string(lvl[i]) + " and " + set_to_string(lvl[j]) +
                                 " do not meet in an initial segment");
            }
    }

    auto& axiom_ii = report.add("axiom-ii-decomposition");
    axiom_ii.note = "pieces derived by the block identity; roots and tail order hold "
                    "by construction";
    for (int k = 1; k <= K; ++k) {
        for (const auto& f : s.level(k)) {
            const auto dec = s.decompose(k, f);
            for (std::size_t i = 0; i < dec.pieces.size(); ++i) {
                ++axiom_ii.cases;
                if (!s.level_contains(k - 1, dec.pieces[i]))
                    axiom_ii.fail("level " + std::to_string(k) + ": piece " +
                                  std::to_string(i) + " = " + set_to_string(dec.pieces[i]) +
                                  " of " + set_to_string(f) + " missing from level " +
                                  std::to_string(k - 1));
            }
        }
    }

    auto& cofinal = report.add("cofinality");
    const long long m = s.domain_size();
    if (m <= options.cofinality_exhaustive_limit) {
        cofinal.note = "exhaustive over all non-empty subsets";
        for (std::uint64_t mask = 1; mask < (1ULL << m); ++mask) {
            OrdinalSet subset;
            for (long long x = 0; x < m; ++x)
                if (mask & (1ULL << x)) subset.push_back(static_cast<Ordinal>(x));
            ++cofinal.cases;
            if (!contained_in_some_member(s, subset))
                cofinal.fail("subset " + set_to_string(subset) + " not contained in any member");
        }
    } else {
        Rng rng(options.seed);
        cofinal.note = "sampled " + std::to_string(options.cofinality_samples) +
                       " subsets, seed=" + std::to_string(options.seed);
        for (long long t = 0; t < options.cofinality_samples; ++t) {
            const auto size = 1 + static_cast<long long>(
                                      rng.below(static_cast<std::uint64_t>(std::min<long long>(m, 10))));
            std::set<Ordinal> pick;
            while (static_cast<long long>(pick.size()) < size)
                pick.insert(static_cast<Ordinal>(rng.below(static_cast<std::uint64_t>(m))));
            OrdinalSet subset(pick.begin(), pick.end());
            ++cofinal.cases;
            if (!contained_in_some_member(s, subset))
                cofinal.fail("subset " + set_to_string(subset) + " not contained in any member");
        }
    }

    return report;
}

Report verify_metric_lemmas(const Scheme& s) {
    const long long m = s.domain_size();
    if (m > MetricProfile::kPairTableLimit)
        throw PreconditionError("metric lemmas need the pairwise rho table; domain " +
                                std::to_string(m) + " exceeds " +
                                std::to_string(MetricProfile::kPairTableLimit));
    const auto& prof = s.profile();
    const int K = s.rank();
    const int sentinel = K + 1;

    Report report;
    report.title = "ordinal-metric lemmas";
    report.header.push_back("rank=" + std::to_string(K) + " domain=" + std::to_string(m));

    auto& well = report.add("profile-well-defined");
    well.cases = m * (K + 1);
    if (!prof.card_well_defined()) well.fail(prof.card_conflict());
    if (!prof.xi_well_defined()) well.fail(prof.xi_conflict());
    if (!prof.total()) well.fail(prof.totality_gap());

    auto& om1 = report.add("om1-zero-iff-equal");
    auto& om2 = report.add("om2-symmetry");
    for (Ordinal a = 0; a < m; ++a)
        for (Ordinal b = a; b < m; ++b) {
            ++om1.cases;
            ++om2.cases;
            const auto r = prof.rho(a, b);
            if (a == b ? r != 0 : r == 0)
                om1.fail("rho(" + std::to_string(a) + "," + std::to_string(b) + ") = " +
                         std::to_string(static_cast<int>(r)));
            if (prof.rho(b, a) != r)
                om2.fail("rho asymmetric at (" + std::to_string(a) + "," +
                         std::to_string(b) + ")");
        }

    auto& om3 = report.add("om3-ultrametric-triangle");
    for (Ordinal a = 0; a < m; ++a)
        for (Ordinal b = a; b < m; ++b)
            for (Ordinal g = a; g < m; ++g) {
                ++om3.cases;
                if (prof.rho(a, b) > std::max(prof.rho(a, g), prof.rho(b, g)))
                    om3.fail("rho(" + std::to_string(a) + "," + std::to_string(b) +
                             ") > max(rho(" + std::to_string(a) + "," + std::to_string(g) +
                             "), rho(" + std::to_string(b) + "," + std::to_string(g) + "))");
            }

    auto& om4 = report.add("om4-finite-closures");
    om4.note = "vacuously true: every closure over a finite domain is finite";
    om4.cases = 0;

    auto& clo_id = report.add("closure-identity");
    for (int k = 0; k <= K; ++k) {
        // Index members by the ordinals they contain to visit each (alpha, k)
        // closure once.
        std::vector<std::vector<std::size_t>> by_ordinal(static_cast<std::size_t>(m));
        const auto& lvl = s.level(k);
        for (std::size_t idx = 0; idx < lvl.size(); ++idx)
            for (auto a : lvl[idx]) by_ordinal[static_cast<std::size_t>(a)].push_back(idx);
        for (Ordinal a = 0; a < m; ++a) {
            if (by_ordinal[static_cast<std::size_t>(a)].empty()) continue;
            OrdinalSet clo;
            for (Ordinal x = 0; x <= a; ++x)
                if (prof.rho(a, x) <= k) clo.push_back(x);
            for (auto idx : by_ordinal[static_cast<std::size_t>(a)]) {
                ++clo_id.cases;
                const auto& f = lvl[idx];
                const auto end = std::upper_bound(f.begin(), f.end(), a);
                if (static_cast<std::size_t>(end - f.begin()) != clo.size() ||
                    !std::equal(f.begin(), end, clo.begin()))
                    clo_id.fail("F n (a+1) != (a)_k for a=" + std::to_string(a) +
                                ", k=" + std::to_string(k) + ", F=" + set_to_string(f));
            }
        }
    }

    auto& rho_level = report.add("rho-level");
    for (int k = 0; k <= K; ++k)
        for (const auto& f : s.level(k)) {
            ++rho_level.cases;
            int worst = 0;
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::size_t j = i; j < f.size(); ++j)
                    worst = std::max(worst, static_cast<int>(prof.rho(f[i], f[j])));
            if (worst != k)
                rho_level.fail("rho^F = " + std::to_string(worst) + " != " +
                               std::to_string(k) + " for F = " + set_to_string(f));
        }

    auto& xi_a = report.add("xi-a-agree-below-delta");
    auto& xi_b = report.add("xi-b-ordered-at-rho");
    auto& xi_c = report.add("xi-c-root-or-agree-above-rho");
    auto& xi_d = report.add("xi-d-split-at-delta");
    auto& transfer = report.add("delta-of-xi");
    std::vector<int> xi_row_a(static_cast<std::size_t>(K) + 1);
    std::vector<int> xi_row_b(static_cast<std::size_t>(K) + 1);
    for (Ordinal a = 0; a < m; ++a)
        for (Ordinal b = a + 1; b < m; ++b) {
            const int p = prof.rho(a, b);
            const int d = prof.delta(a, b);
            for (int k = 0; k <= K; ++k) {
                xi_row_a[static_cast<std::size_t>(k)] = prof.xi(a, k);
                xi_row_b[static_cast<std::size_t>(k)] = prof.xi(b, k);
            }
            const auto pair_name = "(" + std::to_string(a) + "," + std::to_string(b) + ")";

            for (int k = 1; k < d && k <= K; ++k) {
                ++xi_a.cases;
                if (xi_row_a[static_cast<std::size_t>(k)] != xi_row_b[static_cast<std::size_t>(k)])
                    xi_a.fail("Xi disagrees below Delta at k=" + std::to_string(k) +
                              " for " + pair_name);
            }
            if (p >= 1 && p <= K) {
                ++xi_b.cases;
                const int xa = xi_row_a[static_cast<std::size_t>(p)];
                const int xb = xi_row_b[static_cast<std::size_t>(p)];
                if (!(0 <= xa && xa < xb))
                    xi_b.fail("at k=rho=" + std::to_string(p) + " expected 0 <= Xi_a < Xi_b, got " +
                              std::to_string(xa) + ", " + std::to_string(xb) + " for " +
                              pair_name);
            }
            for (int k = p + 1; k <= K; ++k) {
                ++xi_c.cases;
                const int xa = xi_row_a[static_cast<std::size_t>(k)];
                if (xa != -1 && xa != xi_row_b[static_cast<std::size_t>(k)])
                    xi_c.fail("above rho at k=" + std::to_string(k) +
                              " Xi_a is neither -1 nor Xi_b for " + pair_name);
            }
            if (d <= K) {
                ++xi_d.cases;
                const int xa = xi_row_a[static_cast<std::size_t>(d)];
                const int xb = xi_row_b[static_cast<std::size_t>(d)];
                if (!(xa >= 0 && xb >= 0 && xa != xb))
                    xi_d.fail("at k=Delta=" + std::to_string(d) +
                              " expected both >= 0 and distinct, got " + std::to_string(xa) +
                              ", " + std::to_string(xb) + " for " + pair_name);
            }
            ++transfer.cases;
            if (seq_delta(xi_row_a, xi_row_b, sentinel) != d)
                transfer.fail("Delta(a,b) != Delta(Xi_a, Xi_b) for " + pair_name);
        }

    return report;
}

}  // namespace schemelab
