#ifndef SCHEMELAB_CONFIG_TYPE_HPP
#define SCHEMELAB_CONFIG_TYPE_HPP

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schemelab/errors.hpp"

namespace schemelab {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& q);       // "p/q"
Rational parse_rational(const std::string& s);  // accepts "p/q" and "p"

// A configuration type: a function tau : n -> 2, recording coordinatewise
// which of two disjoint increasing tuples is smaller. Types arising from
// tuple comparison always have length >= 1; the empty type exists only as
// the neutral element of concatenation.
class ConfigType {
public:
    ConfigType() = default;
    explicit ConfigType(std::vector<std::uint8_t> bits);

    static ConfigType alternating(std::size_t n);  // 0,1,0,1,...
    static ConfigType constant(std::size_t n, int bit);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int bit(std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    // tau^i(j) = |i - tau(j)|: identity for i = 0, complement for i = 1.
    ConfigType flipped(int i) const;

    std::size_t zeros() const;
    std::string to_string() const;  // "0101"

    friend bool operator==(const ConfigType&, const ConfigType&) = default;
    std::strong_ordering operator<=>(const ConfigType& o) const {
        return bits_ <=> o.bits_;
    }

private:
    std::vector<std::uint8_t> bits_;
};

ConfigType concat(const ConfigType& s0, const ConfigType& s1);

// The orientation-free class ||tau|| = {tau, tau^1}, stored through the
// canonical representative (the member whose first bit is 0).
class TypeClass {
public:
    explicit TypeClass(const ConfigType& t);

    const ConfigType& representative() const { return rep_; }
    std::pair<ConfigType, ConfigType> members() const;
    bool contains(const ConfigType& t) const;

    friend bool operator==(const TypeClass&, const TypeClass&) = default;
    std::strong_ordering operator<=>(const TypeClass& o) const = default;

private:
    ConfigType rep_;
};

// A strictly increasing tuple of rationals, identified with its increasing
// enumeration. Exact arithmetic keeps every comparison decidable.
class Tuple {
public:
    explicit Tuple(std::vector<Rational> points);

    std::size_t size() const { return points_.size(); }
    const Rational& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Rational>& points() const { return points_; }
    bool disjoint_from(const Tuple& other) const;

    friend bool operator==(const Tuple&, const Tuple&) = default;

private:
    std::vector<Rational> points_;
};

struct Interval {  // open interval (lo, hi)
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo < x && x < hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

bool intervals_disjoint(const Interval& a, const Interval& b);

// A Vietoris basic box: n pairwise-disjoint open rational intervals.
class OpenBox {
public:
    explicit OpenBox(std::vector<Interval> intervals);

    std::size_t size() const { return intervals_.size(); }
    const Interval& operator[](std::size_t i) const { return intervals_[i]; }
    const std::vector<Interval>& intervals() const { return intervals_; }
    bool contains(const Tuple& t) const;

    friend bool operator==(const OpenBox&, const OpenBox&) = default;

private:
    std::vector<Interval> intervals_;
};

// type(a,b)(i) = 0 iff a(i) < b(i). Throws LengthMismatchError,
// NotDisjointError.
ConfigType type_of(const Tuple& a, const Tuple& b);

ConfigType flip(const ConfigType& tau, int i);
TypeClass norm_class(const ConfigType& tau);

// Open boxes U around a and V around b with disjoint unions and
// type(U,V) = type(a,b). Interval endpoints are midpoints of adjacent
// distinct coordinates of a and b (outermost endpoints offset by 1).
std::pair<OpenBox, OpenBox> separate(const Tuple& a, const Tuple& b);

// type(U,V) when it is defined: every u in U and v in V realize the same
// type. Partial definedness is normal, so the miss is a value, not an error.
std::optional<ConfigType> type_of_boxes(const OpenBox& u, const OpenBox& v);

}  // namespace schemelab

#endif
