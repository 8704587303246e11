#include "schemelab/coding.hpp"

#include <algorithm>

#include "schemelab/metrics.hpp"

namespace schemelab {

std::vector<OrdinalSet> subset_enumeration_row(Ordinal base_lo, Ordinal base_hi, int arity,
                                               long long width) {
    const int base = base_hi - base_lo;
    if (base < 0) throw PreconditionError("enumeration base is empty");
    if (count_subsets_up_to(base, arity) > 1'000'000)
        throw PreconditionError("enumeration row too wide: base " + std::to_string(base) +
                                ", arity " + std::to_string(arity));

    // Sizes ascending; within one size, colexicographic (first difference at
    // the largest elements decides).
    auto colex_less = [](const OrdinalSet& a, const OrdinalSet& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    };

    std::vector<OrdinalSet> row;
    for (int size = 0; size <= arity && size <= base; ++size) {
        std::vector<OrdinalSet> of_size;
        OrdinalSet idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = base_lo + i;
        while (true) {
            of_size.push_back(idx);
            if (size == 0) break;
            int pos = size;
            while (pos > 0 && idx[static_cast<std::size_t>(pos - 1)] ==
                                  base_lo + base - size + pos - 1)
                --pos;
            if (pos == 0) break;
            ++idx[static_cast<std::size_t>(pos - 1)];
            for (int i = pos; i < size; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
        std::sort(of_size.begin(), of_size.end(), colex_less);
        row.insert(row.end(), of_size.begin(), of_size.end());
    }
    while (static_cast<long long>(row.size()) < width) row.push_back(row.back());
    return row;
}

SubsetEnumeration SubsetEnumeration::build(const Scheme& s, int arity,
                                           PaddingMode padding) {
    if (arity < 1) throw PreconditionError("enumeration arity must be >= 1");
    SubsetEnumeration enu;
    enu.arity_ = arity;
    enu.padding_ = padding;
    const auto& t = s.type_seq();
    for (int k = 0; k < s.rank(); ++k) {
        const long long block = t.block(k + 1);
        const long long cover = count_subsets_up_to(block, arity);
        const long long width = t.n(k + 1) - 1;
        if (width < cover)
            throw InsufficientWidthError(
                "level " + std::to_string(k) + ": " + std::to_string(cover) +
                " subsets of size <= " + std::to_string(arity) + " to cover, but only " +
                std::to_string(width) + " enumeration slots (n_" + std::to_string(k + 1) +
                " = " + std::to_string(t.n(k + 1)) + ")");
        enu.widths_.push_back(width);
        enu.rows_.push_back(subset_enumeration_row(static_cast<Ordinal>(t.r(k + 1)),
                                                   static_cast<Ordinal>(t.m(k)), arity,
                                                   cover));
    }
    return enu;
}

const OrdinalSet& SubsetEnumeration::at(int k, long long i) const {
    const auto& row = rows_.at(static_cast<std::size_t>(k));
    const long long width = widths_.at(static_cast<std::size_t>(k));
    if (i < 1 || i > width)
        throw OutOfDomainError("enumeration index " + std::to_string(i) +
                               " not in [1, " + std::to_string(width) + "]");
    const auto distinct = static_cast<long long>(row.size());
    long long slot = i;
    if (slot > distinct)
        slot = padding_ == PaddingMode::repeat_last ? distinct
                                                    : (slot - 1) % distinct + 1;
    return row[static_cast<std::size_t>(slot - 1)];
}

long long SubsetEnumeration::row_width(int k) const {
    return widths_.at(static_cast<std::size_t>(k));
}

long long SubsetEnumeration::coverage_count(int k) const {
    return static_cast<long long>(rows_.at(static_cast<std::size_t>(k)).size());
}

long long SubsetEnumeration::index_of(int k, const OrdinalSet& c) const {
    const auto& row = rows_.at(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] == c) return static_cast<long long>(i) + 1;
    return 0;
}

std::string to_string(CodingKind kind) {
    switch (kind) {
        case CodingKind::e: return "e";
        case CodingKind::o: return "o";
        case CodingKind::xi: return "xi";
    }
    return "?";
}

CodingKind coding_kind_from_string(const std::string& name) {
    if (name == "e") return CodingKind::e;
    if (name == "o") return CodingKind::o;
    if (name == "xi") return CodingKind::xi;
    throw ParseError("unknown coding kind '" + name + "' (want e, o or xi)");
}

CodedPoint code_point(const Scheme& s, const SubsetEnumeration* enumeration,
                      CodingKind kind, int arity, Ordinal alpha) {
    if (alpha < 0 || alpha >= s.domain_size())
        throw OutOfDomainError("ordinal " + std::to_string(alpha) + " outside domain");
    if (kind != CodingKind::xi) {
        if (enumeration == nullptr)
            throw PreconditionError("the e and o codings need a subset enumeration");
        if (enumeration->arity() != arity)
            throw PreconditionError("enumeration built for arity " +
                                    std::to_string(enumeration->arity()) + ", requested " +
                                    std::to_string(arity));
    }

    const auto& prof = s.profile();
    if (!prof.xi_well_defined())
        throw IllFormedSchemeError("Xi is not well defined: " + prof.xi_conflict());

    CodedPoint p;
    p.kind = kind;
    p.arity = kind == CodingKind::xi ? 0 : arity;
    p.alpha = alpha;
    p.seq.resize(static_cast<std::size_t>(s.rank()) + 1);

    for (int k = 0; k <= s.rank(); ++k) {
        const int x = prof.xi(alpha, k);
        if (kind == CodingKind::xi) {
            p.seq[static_cast<std::size_t>(k)] = x;
            continue;
        }
        if (x <= 0) {
            p.seq[static_cast<std::size_t>(k)] = 0;
            continue;
        }
        const auto& c = enumeration->at(k - 1, x);
        const long long pos = prof.card(alpha, k - 1);
        const bool member = std::binary_search(c.begin(), c.end(), static_cast<Ordinal>(pos));
        bool positive = member;
        if (!positive && kind == CodingKind::e)
            positive = static_cast<long long>(c.size()) == arity && !c.empty() &&
                       pos < c.front();
        p.seq[static_cast<std::size_t>(k)] = positive ? x : -x;
    }
    return p;
}

LexOrder lex_compare(const CodedPoint& p, const CodedPoint& q) {
    if (p.kind != q.kind || p.arity != q.arity)
        throw KindMismatchError("lex_compare: points of kind " + to_string(p.kind) + "^" +
                                std::to_string(p.arity) + " vs " + to_string(q.kind) + "^" +
                                std::to_string(q.arity));
    if (p.seq.size() != q.seq.size())
        throw KindMismatchError("lex_compare: sequences of different ranks");
    const int sentinel = static_cast<int>(p.seq.size());
    const int d = seq_delta(p.seq, q.seq, sentinel);
    LexOrder out;
    out.delta = d;
    if (d == sentinel)
        out.sign = 0;
    else
        out.sign = p.seq[static_cast<std::size_t>(d)] < q.seq[static_cast<std::size_t>(d)]
                       ? -1
                       : 1;
    return out;
}

Coding::Coding(const Scheme& s, CodingKind kind, int arity)
    : scheme_(&s), kind_(kind), arity_(kind == CodingKind::xi ? 0 : arity) {
    if (kind != CodingKind::xi)
        enumeration_ = std::make_shared<const SubsetEnumeration>(
            SubsetEnumeration::build(s, arity));
    points_.reserve(static_cast<std::size_t>(s.domain_size()));
    for (Ordinal a = 0; a < s.domain_size(); ++a)
        points_.push_back(code_point(s, enumeration_.get(), kind, arity_, a));
}

const CodedPoint& Coding::point(Ordinal alpha) const {
    if (alpha < 0 || alpha >= scheme_->domain_size())
        throw OutOfDomainError("ordinal " + std::to_string(alpha) + " outside domain");
    return points_[static_cast<std::size_t>(alpha)];
}

Report delta_transfer_check(const Scheme& s, const SubsetEnumeration& enumeration,
                            int arity) {
    Report report;
    report.title = "Delta transfer";
    report.header.push_back("rank=" + std::to_string(s.rank()) +
                            " domain=" + std::to_string(s.domain_size()) +
                            " arity=" + std::to_string(arity));

    const int sentinel = delta_sentinel(s);
    const Ordinal m = s.domain_size();

    std::vector<CodedPoint> e_pts, o_pts, xi_pts;
    e_pts.reserve(static_cast<std::size_t>(m));
    o_pts.reserve(static_cast<std::size_t>(m));
    xi_pts.reserve(static_cast<std::size_t>(m));
    for (Ordinal a = 0; a < m; ++a) {
        e_pts.push_back(code_point(s, &enumeration, CodingKind::e, arity, a));
        o_pts.push_back(code_point(s, &enumeration, CodingKind::o, arity, a));
        xi_pts.push_back(code_point(s, nullptr, CodingKind::xi, 0, a));
    }

    auto& diag = report.add("delta-sentinel-on-diagonal");
    for (Ordinal a = 0; a < m; ++a) {
        ++diag.cases;
        if (delta(s, a, a) != sentinel ||
            seq_delta(e_pts[static_cast<std::size_t>(a)].seq,
                      e_pts[static_cast<std::size_t>(a)].seq, sentinel) != sentinel)
            diag.fail("Delta(" + std::to_string(a) + "," + std::to_string(a) +
                      ") is not the sentinel");
    }

    auto& trans = report.add("delta-transfer-all-pairs");
    for (Ordinal a = 0; a < m; ++a)
        for (Ordinal b = a + 1; b < m; ++b) {
            ++trans.cases;
            const int d = delta(s, a, b);
            const int de = seq_delta(e_pts[static_cast<std::size_t>(a)].seq,
                                     e_pts[static_cast<std::size_t>(b)].seq, sentinel);
            const int dq = seq_delta(o_pts[static_cast<std::size_t>(a)].seq,
                                     o_pts[static_cast<std::size_t>(b)].seq, sentinel);
            const int dx = seq_delta(xi_pts[static_cast<std::size_t>(a)].seq,
                                     xi_pts[static_cast<std::size_t>(b)].seq, sentinel);
            if (d != de || d != dq || d != dx)
                trans.fail("pair (" + std::to_string(a) + "," + std::to_string(b) +
                           "): Delta=" + std::to_string(d) + " e=" + std::to_string(de) +
                           " o=" + std::to_string(dq) + " xi=" + std::to_string(dx));
        }

    return report;
}

}  // namespace schemelab
