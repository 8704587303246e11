#ifndef SCHEMELAB_CODING_HPP
#define SCHEMELAB_CODING_HPP

#include <memory>
#include <string>
#include <vector>

#include "schemelab/report.hpp"
#include "schemelab/scheme.hpp"

namespace schemelab {

// How the slack slots past the distinct subsets are filled. The realized
// spectra should not depend on this; `cycle` exists to A/B that.
enum class PaddingMode { repeat_last, cycle };

// Per level k < K, the indexed list C^k_1 .. C^k_{n_{k+1}-1} of subsets of
// m_k \ r_{k+1} with at most `arity` elements: every such subset appears
// (listed by size, then colexicographically), the slack is padding, and
// index 0 stays unused.
class SubsetEnumeration {
public:
    // Throws InsufficientWidthError when some n_{k+1} - 1 is smaller than
    // the number of subsets to cover.
    static SubsetEnumeration build(const Scheme& s, int arity,
                                   PaddingMode padding = PaddingMode::repeat_last);

    int arity() const { return arity_; }
    int rows() const { return static_cast<int>(rows_.size()); }  // rows 0..K-1

    // C^k_i for 1 <= i <= n_{k+1} - 1.
    const OrdinalSet& at(int k, long long i) const;
    long long row_width(int k) const;      // n_{k+1} - 1
    long long coverage_count(int k) const;  // distinct subsets before padding

    // Index of `c` in row k (first occurrence), or 0 if absent.
    long long index_of(int k, const OrdinalSet& c) const;

private:
    int arity_ = 0;
    PaddingMode padding_ = PaddingMode::repeat_last;
    std::vector<std::vector<OrdinalSet>> rows_;  // distinct subsets, in order
    std::vector<long long> widths_;              // n_{k+1} - 1; tail is padding
};

// Row shape without a scheme: all subsets of {base_lo, .., base_hi - 1} of
// size <= arity in (size, colex) order, padded by repetition to `width`.
std::vector<OrdinalSet> subset_enumeration_row(Ordinal base_lo, Ordinal base_hi, int arity,
                                               long long width);

enum class CodingKind { e, o, xi };

std::string to_string(CodingKind kind);
CodingKind coding_kind_from_string(const std::string& name);

struct CodedPoint {
    CodingKind kind = CodingKind::xi;
    int arity = 0;  // the n of e^n / o^n; 0 for the xi coding
    Ordinal alpha = 0;
    std::vector<long long> seq;  // entries for k = 0..K

    friend bool operator==(const CodedPoint&, const CodedPoint&) = default;
};

// The integer sequence of alpha under the requested coding. `enumeration`
// may be null for the xi coding and must match `arity` otherwise.
CodedPoint code_point(const Scheme& s, const SubsetEnumeration* enumeration,
                      CodingKind kind, int arity, Ordinal alpha);

struct LexOrder {
    int sign = 0;   // -1, 0, +1
    int delta = 0;  // first differing index; sentinel when equal
};

// Order decided at the first differing coordinate, the Delta of the
// sequences. Throws KindMismatchError on kind or arity mismatch.
LexOrder lex_compare(const CodedPoint& p, const CodedPoint& q);

// A whole coded family over the scheme's domain, points computed eagerly.
// Holds a reference to the scheme; keep the scheme alive while coding.
class Coding {
public:
    Coding(const Scheme& s, CodingKind kind, int arity);

    const Scheme& scheme() const { return *scheme_; }
    CodingKind kind() const { return kind_; }
    int arity() const { return arity_; }
    const SubsetEnumeration* enumeration() const { return enumeration_.get(); }

    const CodedPoint& point(Ordinal alpha) const;
    LexOrder compare(Ordinal a, Ordinal b) const { return lex_compare(point(a), point(b)); }

private:
    const Scheme* scheme_;
    CodingKind kind_;
    int arity_;
    std::shared_ptr<const SubsetEnumeration> enumeration_;
    std::vector<CodedPoint> points_;
};

// Delta(alpha,beta) = Delta(e_alpha,e_beta) = Delta(o_alpha,o_beta)
// = Delta(Xi_alpha,Xi_beta) over every pair of the domain.
Report delta_transfer_check(const Scheme& s, const SubsetEnumeration& enumeration, int arity);

}  // namespace schemelab

#endif
