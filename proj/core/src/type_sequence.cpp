#include "schemelab/type_sequence.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "schemelab/rng.hpp"

namespace schemelab {

namespace {

std::string violation_message(const std::vector<AxiomViolation>& vs) {
    std::ostringstream os;
    os << "type sequence violates scheme axioms:";
    for (const auto& v : vs) os << "\n  k=" << v.k << " (" << v.axiom << "): " << v.detail;
    return os.str();
}

constexpr long long kSaturated = std::numeric_limits<long long>::max() / 4;

// r + (m - r) * n, saturating: inputs come from files and may be anything.
long long next_m(long long m, long long n, long long r) {
    const __int128 v = static_cast<__int128>(r) + static_cast<__int128>(m - r) * n;
    if (v > kSaturated) return kSaturated;
    if (v < -kSaturated) return -kSaturated;
    return static_cast<long long>(v);
}

}  // namespace

std::vector<AxiomViolation> check_type_entries(const std::vector<TypeEntry>& entries) {
    std::vector<AxiomViolation> out;
    if (entries.empty()) {
        out.push_back({0, 'a', "empty type sequence"});
        return out;
    }
    if (entries[0].m != 1)
        out.push_back({0, 'a', "m_0 = " + std::to_string(entries[0].m) + ", must be 1"});
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto& e = entries[k];
        if (e.n < 2)
            out.push_back({static_cast<int>(k), 'b',
                           "n_" + std::to_string(k + 1) + " = " + std::to_string(e.n) +
                               " < 2"});
        if (e.r < 0 || e.r >= e.m)
            out.push_back({static_cast<int>(k), 'c',
                           "r_" + std::to_string(k + 1) + " = " + std::to_string(e.r) +
                               " not in [0, m_" + std::to_string(k) + " = " +
                               std::to_string(e.m) + ")"});
        if (k + 1 < entries.size()) {
            const long long expect = next_m(e.m, e.n, e.r);
            if (entries[k + 1].m != expect)
                out.push_back({static_cast<int>(k), 'd',
                               "m_" + std::to_string(k + 1) + " = " +
                                   std::to_string(entries[k + 1].m) + ", recursion gives " +
                                   std::to_string(expect)});
        }
    }
    return out;
}

long long count_subsets_up_to(long long base_size, int max_size) {
    long long total = 0;
    long long binom = 1;  // C(base_size, s)
    for (int s = 0; s <= max_size && s <= base_size; ++s) {
        if (total > kSaturated - binom) return kSaturated;
        total += binom;
        const __int128 nb = static_cast<__int128>(binom) * (base_size - s) / (s + 1);
        if (nb > kSaturated) return kSaturated;
        binom = static_cast<long long>(nb);
    }
    return total;
}

TypeSequence TypeSequence::from_entries(const std::vector<TypeEntry>& entries,
                                        long long domain_cap) {
    const auto violations = check_type_entries(entries);
    if (!violations.empty())
        throw AxiomViolationError(violations[0].k, violations[0].axiom,
                                  violation_message(violations));
    TypeSequence t;
    for (const auto& e : entries) {
        t.m_.push_back(e.m);
        t.steps_.emplace_back(e.n, e.r);
    }
    const auto& last = entries.back();
    t.m_.push_back(next_m(last.m, last.n, last.r));
    if (t.m_.back() > domain_cap)
        throw OverflowError("m_K = " + std::to_string(t.m_.back()) +
                            " exceeds domain cap " + std::to_string(domain_cap));
    return t;
}

TypeSequence TypeSequence::from_params(
    long long m0, const std::vector<std::pair<long long, long long>>& nr,
    long long domain_cap) {
    std::vector<TypeEntry> entries;
    long long m = m0;
    for (const auto& [n, r] : nr) {
        entries.push_back({m, n, r});
        if (r < m && n >= 1) {
            m = next_m(m, n, r);
            if (m > domain_cap)
                throw OverflowError("m_" + std::to_string(entries.size()) + " = " +
                                    std::to_string(m) + " exceeds domain cap " +
                                    std::to_string(domain_cap));
        }
    }
    return from_entries(entries, domain_cap);
}

std::vector<TypeEntry> TypeSequence::entries() const {
    std::vector<TypeEntry> out;
    out.reserve(static_cast<std::size_t>(rank()));
    for (int k = 0; k < rank(); ++k) out.push_back({m(k), n(k + 1), r(k + 1)});
    return out;
}

TypeSequence generate_type_seq(int rank, const GrowthSpec& spec) {
    if (rank < 1) throw PreconditionError("rank must be >= 1");
    if ((spec.mode == Growth::coding || spec.mode == Growth::width) && spec.arity < 1)
        throw PreconditionError("coding arity must be >= 1");

    Rng rng(spec.seed);
    std::vector<std::pair<long long, long long>> nr;
    long long m = 1;
    for (int k = 0; k < rank; ++k) {
        long long n = 2, r = 0;
        switch (spec.mode) {
            case Growth::minimal:
                n = 2;
                r = m - 1;
                break;
            case Growth::coding:
            case Growth::width: {
                // Tail blocks of size up to 2n+4: big enough to host the
                // arity-2n captured families and the width-(2n+2) interval
                // tuples the entangledness checks consume.
                const long long block = std::min<long long>(m, 2 * spec.arity + 4);
                r = m - block;
                n = std::max<long long>(count_subsets_up_to(block, spec.arity) + 1, 2);
                if (spec.mode == Growth::coding) {
                    if (m >= 40)  // 2^m alone dwarfs any sane domain cap
                        throw OverflowError("coding growth overflows at k=" +
                                            std::to_string(k) + ": n_{k+1} >= 2^" +
                                            std::to_string(m));
                    n = std::max(n, 1LL << m);
                }
                break;
            }
            case Growth::random:
                n = rng.range(2, 6);
                r = rng.range(0, m - 1);
                break;
        }
        nr.emplace_back(n, r);
        m = next_m(m, n, r);
        if (m > spec.domain_cap)
            throw OverflowError("m_" + std::to_string(k + 1) + " = " + std::to_string(m) +
                                " exceeds domain cap " + std::to_string(spec.domain_cap));
    }
    return TypeSequence::from_params(1, nr, spec.domain_cap);
}

}  // namespace schemelab
