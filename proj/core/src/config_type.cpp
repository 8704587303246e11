#include "schemelab/config_type.hpp"

#include <algorithm>
#include <sstream>

namespace schemelab {

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q.numerator() << '/' << q.denominator();
    return os.str();
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s), 1);
        const long long num = std::stoll(s.substr(0, slash));
        const long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw ParseError("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational: '" + s + "'");
    } catch (const std::out_of_range&) {
        throw ParseError("rational out of range: '" + s + "'");
    }
}

ConfigType::ConfigType(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
        if (b > 1) throw PreconditionError("config type entries must be 0 or 1");
}

ConfigType ConfigType::alternating(std::size_t n) {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>(i % 2);
    return ConfigType(std::move(bits));
}

ConfigType ConfigType::constant(std::size_t n, int bit) {
    return ConfigType(std::vector<std::uint8_t>(n, static_cast<std::uint8_t>(bit)));
}

ConfigType ConfigType::flipped(int i) const {
    std::vector<std::uint8_t> out(bits_.size());
    for (std::size_t j = 0; j < bits_.size(); ++j)
        out[j] = static_cast<std::uint8_t>(std::abs(i - static_cast<int>(bits_[j])));
    return ConfigType(std::move(out));
}

std::size_t ConfigType::zeros() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 0));
}

std::string ConfigType::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

ConfigType concat(const ConfigType& s0, const ConfigType& s1) {
    std::vector<std::uint8_t> bits = s0.bits();
    bits.insert(bits.end(), s1.bits().begin(), s1.bits().end());
    return ConfigType(std::move(bits));
}

TypeClass::TypeClass(const ConfigType& t)
    : rep_(!t.empty() && t.bit(0) == 1 ? t.flipped(1) : t) {}

std::pair<ConfigType, ConfigType> TypeClass::members() const {
    return {rep_, rep_.flipped(1)};
}

bool TypeClass::contains(const ConfigType& t) const {
    return t == rep_ || t == rep_.flipped(1);
}

Tuple::Tuple(std::vector<Rational> points) : points_(std::move(points)) {
    if (points_.empty()) throw PreconditionError("tuple must be non-empty");
    for (std::size_t i = 0; i + 1 < points_.size(); ++i)
        if (!(points_[i] < points_[i + 1]))
            throw PreconditionError("tuple must be strictly increasing");
}

bool Tuple::disjoint_from(const Tuple& other) const {
    // Both sorted: one merge pass.
    std::size_t i = 0, j = 0;
    while (i < points_.size() && j < other.points_.size()) {
        if (points_[i] == other.points_[j]) return false;
        if (points_[i] < other.points_[j])
            ++i;
        else
            ++j;
    }
    return true;
}

bool intervals_disjoint(const Interval& a, const Interval& b) {
    // Open intervals: touching endpoints still disjoint.
    return a.hi <= b.lo || b.hi <= a.lo;
}

OpenBox::OpenBox(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    for (const auto& iv : intervals_)
        if (!(iv.lo < iv.hi)) throw PreconditionError("interval must satisfy lo < hi");
    for (std::size_t i = 0; i < intervals_.size(); ++i)
        for (std::size_t j = i + 1; j < intervals_.size(); ++j)
            if (!intervals_disjoint(intervals_[i], intervals_[j]))
                throw PreconditionError("box intervals must be pairwise disjoint");
}

bool OpenBox::contains(const Tuple& t) const {
    if (t.size() != intervals_.size()) return false;
    for (std::size_t i = 0; i < intervals_.size(); ++i)
        if (!intervals_[i].contains(t[i])) return false;
    return true;
}

ConfigType type_of(const Tuple& a, const Tuple& b) {
    if (a.size() != b.size())
        throw LengthMismatchError("type_of: tuples of lengths " +
                                  std::to_string(a.size()) + " and " +
                                  std::to_string(b.size()));
    if (!a.disjoint_from(b))
        throw NotDisjointError("type_of: tuples share a point");
    std::vector<std::uint8_t> bits(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) bits[i] = a[i] < b[i] ? 0 : 1;
    return ConfigType(std::move(bits));
}

ConfigType flip(const ConfigType& tau, int i) { return tau.flipped(i); }

TypeClass norm_class(const ConfigType& tau) { return TypeClass(tau); }

std::pair<OpenBox, OpenBox> separate(const Tuple& a, const Tuple& b) {
    if (a.size() != b.size())
        throw LengthMismatchError("separate: tuples of different lengths");
    if (!a.disjoint_from(b))
        throw NotDisjointError("separate: tuples share a point");

    std::vector<Rational> all = a.points();
    all.insert(all.end(), b.points().begin(), b.points().end());
    std::sort(all.begin(), all.end());

    // One interval per merged point; neighbours share only an (excluded)
    // endpoint, so all 2n intervals are pairwise disjoint and the
    // coordinatewise order of any selection matches the order of the points.
    auto interval_for = [&](const Rational& x) {
        auto pos = std::lower_bound(all.begin(), all.end(), x);
        const Rational lo = pos == all.begin() ? x - 1 : (*(pos - 1) + x) / 2;
        const Rational hi = pos + 1 == all.end() ? x + 1 : (x + *(pos + 1)) / 2;
        return Interval{lo, hi};
    };

    std::vector<Interval> ua, vb;
    ua.reserve(a.size());
    vb.reserve(b.size());
    for (const auto& x : a.points()) ua.push_back(interval_for(x));
    for (const auto& x : b.points()) vb.push_back(interval_for(x));
    return {OpenBox(std::move(ua)), OpenBox(std::move(vb))};
}

std::optional<ConfigType> type_of_boxes(const OpenBox& u, const OpenBox& v) {
    if (u.size() != v.size()) return std::nullopt;
    const std::size_t n = u.size();

    // Union of all intervals of u must miss the union of all intervals of v.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!intervals_disjoint(u[i], v[j])) return std::nullopt;

    // A box's intervals are pairwise disjoint, hence totally ordered; the
    // i-th element of any selected tuple comes from the i-th smallest
    // interval, so compare after sorting each side.
    auto order = [](const OpenBox& box) {
        std::vector<std::size_t> idx(box.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t x, std::size_t y) { return box[x].lo < box[y].lo; });
        return idx;
    };
    const auto ui = order(u);
    const auto vi = order(v);

    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Interval& a = u[ui[i]];
        const Interval& b = v[vi[i]];
        if (a.hi <= b.lo)
            bits[i] = 0;
        else if (b.hi <= a.lo)
            bits[i] = 1;
        else
            return std::nullopt;
    }
    return ConfigType(std::move(bits));
}

}  // namespace schemelab
