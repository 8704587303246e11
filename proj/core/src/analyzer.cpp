#include "schemelab/analyzer.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "schemelab/metrics.hpp"

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

bool pairwise_disjoint(const OrdinalSet& a, const OrdinalSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

}  // namespace

OrdinalTupleFamily OrdinalTupleFamily::make(int arity, std::vector<OrdinalSet> members) {
    if (arity < 1) throw PreconditionError("tuple arity must be >= 1");
    for (const auto& m : members) {
        if (static_cast<int>(m.size()) != arity)
            throw PreconditionError("family member " + set_to_string(m) +
                                    " does not have arity " + std::to_string(arity));
        for (std::size_t i = 0; i + 1 < m.size(); ++i)
            if (m[i] >= m[i + 1])
                throw PreconditionError("family member " + set_to_string(m) +
                                        " is not strictly increasing");
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!pairwise_disjoint(members[i], members[j]))
                throw NotDisjointError("family members " + set_to_string(members[i]) +
                                       " and " + set_to_string(members[j]) + " intersect");
    OrdinalTupleFamily fam;
    fam.arity = arity;
    fam.members = std::move(members);
    return fam;
}

ConfigType bar_type(const Coding& coding, const OrdinalSet& c, const OrdinalSet& d) {
    if (c.size() != d.size())
        throw LengthMismatchError("bar_type: tuples of different arities");
    if (!pairwise_disjoint(c, d))
        throw NotDisjointError("bar_type: tuples " + set_to_string(c) + " and " +
                               set_to_string(d) + " intersect");
    std::vector<std::uint8_t> bits(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto order = coding.compare(c[i], d[i]);
        if (order.sign == 0)
            throw IllFormedSchemeError("coded points of " + std::to_string(c[i]) + " and " +
                                       std::to_string(d[i]) + " coincide");
        bits[i] = order.sign < 0 ? 0 : 1;
    }
    return ConfigType(std::move(bits));
}

TypeSpectrum spectrum(const Coding& coding, const OrdinalTupleFamily& family) {
    if (family.members.size() < 2)
        throw PreconditionError("spectrum needs at least 2 family members");
    TypeSpectrum sp;
    sp.arity = family.arity;
    for (std::size_t i = 0; i < family.members.size(); ++i)
        for (std::size_t j = 0; j < family.members.size(); ++j) {
            if (i == j) continue;
            const auto cls = norm_class(bar_type(coding, family.members[i], family.members[j]));
            sp.realized.try_emplace(cls, i, j);
        }
    return sp;
}

Report verify_realization(const Coding& coding, const CaptureWitness& witness) {
    if (coding.kind() != CodingKind::e && coding.kind() != CodingKind::o)
        throw PreconditionError("realization runs under the e or o coding");
    const int n = coding.arity();
    const auto& s = coding.scheme();
    const auto& family = witness.family;

    if (family.size() < 2) throw PreconditionError("witness family too small");
    const int w = static_cast<int>(family[0].size());
    // The e coding realizes every class on 2n coordinates, the o coding on
    // 2n+1 (odd arity: one orientation of each class has at most n zeros,
    // with no tie to break).
    const int expected = coding.kind() == CodingKind::e ? 2 * n : 2 * n + 1;
    if (w != expected)
        throw PreconditionError("witness of arity " + std::to_string(w) + ", the " +
                                to_string(coding.kind()) + " coding expects " +
                                std::to_string(expected));
    if (w > 20) throw PreconditionError("realization arity too large");

    Report report;
    report.title = "realization kernel";
    report.header.push_back("level=" + std::to_string(witness.level) +
                            " members=" + std::to_string(family.size()) +
                            " arity=" + std::to_string(w) + " coding=" +
                            to_string(coding.kind()) + "^" + std::to_string(n));

    auto& valid = report.add("witness-revalidation");
    ++valid.cases;
    const auto check = check_capture(s, family, witness.level, CaptureKind::delta_captured);
    if (!check.ok) {
        valid.fail(check.failure);
        throw PreconditionError("witness is not Delta-captured at level " +
                                std::to_string(witness.level) + ": " + check.failure);
    }
    if (!check.witness.root.empty())
        throw PreconditionError("witness members must be pairwise disjoint (empty root)");

    const int l = witness.level;
    const auto* enu = coding.enumeration();
    const auto& prof = s.profile();

    auto& realized = report.add("all-classes-realized");
    auto& revalidate = report.add("witness-pairs-revalidate");

    // One representative per class: the types with first bit 0.
    const std::uint64_t reps = 1ULL << (w - 1);
    for (std::uint64_t bitsval = 0; bitsval < reps; ++bitsval) {
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(w), 0);
        for (int i = 1; i < w; ++i)
            bits[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>((bitsval >> (i - 1)) & 1);
        const ConfigType rep{std::move(bits)};
        ++realized.cases;

        // Proof-shape normalization: at most n zeros, and first coordinate
        // zero when exactly n. The representative starts with 0, so only the
        // "too many zeros" flip can apply.
        const bool flipped = rep.zeros() > static_cast<std::size_t>(n);
        const ConfigType sigma = flipped ? rep.flipped(1) : rep;

        OrdinalSet c;
        for (int i = 0; i < w; ++i)
            if (sigma.bit(static_cast<std::size_t>(i)) == 0)
                c.push_back(static_cast<Ordinal>(prof.card(family[0][static_cast<std::size_t>(i)],
                                                           l - 1)));
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());

        const long long j = enu->index_of(l - 1, c);
        if (j == 0) {
            realized.fail("class " + rep.to_string() + ": zero-set " + set_to_string(c) +
                          " missing from enumeration row " + std::to_string(l - 1));
            continue;
        }
        if (j >= static_cast<long long>(family.size())) {
            realized.fail("class " + rep.to_string() + ": enumeration index " +
                          std::to_string(j) + " beyond family of " +
                          std::to_string(family.size()) + " members");
            continue;
        }

        const auto bar = bar_type(coding, family[0], family[static_cast<std::size_t>(j)]);
        if (!(norm_class(bar) == norm_class(rep))) {
            realized.fail("class " + rep.to_string() + ": pair (0," + std::to_string(j) +
                          ") realizes " + bar.to_string() + " instead");
            continue;
        }

        // Report in the caller's orientation: if the class was flipped for
        // normalization, the pair realizing `rep` itself is the reverse one.
        ++revalidate.cases;
        const auto& first = flipped ? family[static_cast<std::size_t>(j)] : family[0];
        const auto& second = flipped ? family[0] : family[static_cast<std::size_t>(j)];
        if (!(bar_type(coding, first, second) == rep))
            revalidate.fail("witness pair for class " + rep.to_string() +
                            " does not re-validate");
    }

    return report;
}

std::vector<Ordinal> spaced_gammas(const Scheme& s, int width) {
    if (width < 1) throw PreconditionError("interval width must be >= 1");
    std::vector<Ordinal> out;
    for (Ordinal g = 0; g + width <= s.domain_size(); g += width) out.push_back(g);
    return out;
}

IntervalFamily interval_family(const Scheme& s, const std::vector<Ordinal>& gammas,
                               int width) {
    if (width < 1) throw PreconditionError("interval width must be >= 1");
    std::vector<Ordinal> sorted = gammas;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || static_cast<long long>(sorted[i]) + width > s.domain_size())
            throw OutOfDomainError("interval [" + std::to_string(sorted[i]) + ", " +
                                   std::to_string(sorted[i] + width) +
                                   ") outside domain [0, " +
                                   std::to_string(s.domain_size()) + ")");
        if (i > 0 && sorted[i] < sorted[i - 1] + width)
            throw NotDisjointError("intervals at " + std::to_string(sorted[i - 1]) +
                                   " and " + std::to_string(sorted[i]) + " overlap");
    }

    const auto& prof = s.profile();
    std::map<std::pair<int, long long>, std::vector<Ordinal>> cells;
    for (const auto g : sorted) {
        OrdinalSet tuple(static_cast<std::size_t>(width));
        for (int i = 0; i < width; ++i) tuple[static_cast<std::size_t>(i)] = g + i;
        const int k = rho_max(s, tuple);
        const long long a = prof.card(g, k);
        cells[{k, a}].push_back(g);
    }
    if (cells.empty()) throw PreconditionError("no intervals given");

    auto best = cells.begin();
    for (auto it = cells.begin(); it != cells.end(); ++it)
        if (it->second.size() > best->second.size()) best = it;
    // std::map iterates keys ascending, so the first maximal cell already has
    // the smallest level and cardinality.

    IntervalFamily out;
    out.rho_level = best->first.first;
    out.card_at_level = best->first.second;
    std::vector<OrdinalSet> members;
    for (const auto g : best->second) {
        OrdinalSet tuple(static_cast<std::size_t>(width));
        for (int i = 0; i < width; ++i) tuple[static_cast<std::size_t>(i)] = g + i;
        members.push_back(std::move(tuple));
    }
    out.family = OrdinalTupleFamily::make(width, std::move(members));
    for (const auto& [key, list] : cells)
        out.cell_sizes[key] = static_cast<long long>(list.size());
    return out;
}

Report verify_avoidance(const Coding& coding, const IntervalFamily& intervals) {
    const int n = coding.arity();
    int expected_width = 0;
    if (coding.kind() == CodingKind::e)
        expected_width = 2 * n + 1;
    else if (coding.kind() == CodingKind::o)
        expected_width = 2 * n + 2;
    else
        throw PreconditionError("avoidance runs under the e or o coding");

    const auto& family = intervals.family;
    if (family.arity != expected_width)
        throw PreconditionError("interval width " + std::to_string(family.arity) +
                                ", coding " + to_string(coding.kind()) + "^" +
                                std::to_string(n) + " expects " +
                                std::to_string(expected_width));

    const auto& s = coding.scheme();
    Report report;
    report.title = "avoidance kernel";
    report.header.push_back(
        "width=" + std::to_string(expected_width) + " coding=" + to_string(coding.kind()) +
        "^" + std::to_string(n) + " matched-cell k=" + std::to_string(intervals.rho_level) +
        " a=" + std::to_string(intervals.card_at_level) +
        " members=" + std::to_string(family.members.size()));

    auto& cell = report.add("matched-cell-populated");
    cell.cases = static_cast<long long>(family.members.size());
    if (family.members.size() < 2)
        cell.fail("matched cell has fewer than 2 intervals; nothing to compare");

    auto& claim1 = report.add("claim1-shift-invariance");
    for (std::size_t i = 0; i < family.members.size(); ++i)
        for (std::size_t j = i + 1; j < family.members.size(); ++j) {
            const Ordinal g = family.members[i][0];
            const Ordinal d0 = family.members[j][0];
            const int l = delta(s, g, d0);
            for (int t = 0; t < family.arity; ++t) {
                ++claim1.cases;
                if (delta(s, g + t, d0 + t) != l)
                    claim1.fail("Delta(" + std::to_string(g + t) + "," +
                                std::to_string(d0 + t) + ") != Delta(" + std::to_string(g) +
                                "," + std::to_string(d0) + ") = " + std::to_string(l));
            }
        }

    auto& avoid = report.add("alternating-class-absent");
    const auto alternating = norm_class(ConfigType::alternating(
        static_cast<std::size_t>(family.arity)));
    if (family.members.size() >= 2) {
        for (std::size_t i = 0; i < family.members.size(); ++i)
            for (std::size_t j = 0; j < family.members.size(); ++j) {
                if (i == j) continue;
                ++avoid.cases;
                const auto bar = bar_type(coding, family.members[i], family.members[j]);
                if (alternating.contains(bar))
                    avoid.fail("pair (" + set_to_string(family.members[i]) + ", " +
                               set_to_string(family.members[j]) + ") realizes the alternating type " +
                               bar.to_string());
            }

        auto& sanity = report.add("some-class-realized");
        const auto sp = spectrum(coding, family);
        sanity.cases = static_cast<long long>(sp.realized.size());
        sanity.note = std::to_string(sp.realized.size()) + " of " +
                      std::to_string(sp.class_universe()) + " classes realized";
        if (sp.realized.empty()) sanity.fail("spectrum is empty");
    }

    return report;
}

Report verify_increasing(const Coding& xi_coding, const OrdinalTupleFamily& family) {
    if (xi_coding.kind() != CodingKind::xi)
        throw PreconditionError("the increasing-set check runs under the xi coding");
    const auto& s = xi_coding.scheme();

    Report report;
    report.title = "increasing-set kernel";
    report.header.push_back("members=" + std::to_string(family.members.size()) +
                            " arity=" + std::to_string(family.arity));

    auto& constant = report.add("captured-pairs-constant-type");
    const auto& prof = s.profile();
    long long captured_pairs = 0;
    for (std::size_t i = 0; i < family.members.size(); ++i)
        for (std::size_t j = i + 1; j < family.members.size(); ++j) {
            // Members are disjoint, so a Delta-captured pair has an empty
            // root, clause 3 pins the only possible level, and clause 2 pins
            // the order: the member in block 0 comes first.
            const int l = delta(s, family.members[i][0], family.members[j][0]);
            if (l < 1 || l > s.rank()) continue;
            const int vi = prof.xi(family.members[i][0], l);
            const int vj = prof.xi(family.members[j][0], l);
            if (!((vi == 0 && vj == 1) || (vi == 1 && vj == 0))) continue;
            const auto& a = vi == 0 ? family.members[i] : family.members[j];
            const auto& b = vi == 0 ? family.members[j] : family.members[i];
            const auto check = check_capture(s, {a, b}, l, CaptureKind::delta_captured);
            if (!check.ok) continue;
            ++captured_pairs;
            ++constant.cases;
            const auto bar = bar_type(xi_coding, a, b);
            const auto& bits = bar.bits();
            if (std::adjacent_find(bits.begin(), bits.end(), std::not_equal_to<>()) !=
                bits.end())
                constant.fail("captured pair (" + set_to_string(a) + ", " + set_to_string(b) +
                              ") realizes non-constant type " + bar.to_string());
        }
    constant.note = std::to_string(captured_pairs) + " Delta-captured pairs found";

    return report;
}

}  // namespace schemelab
