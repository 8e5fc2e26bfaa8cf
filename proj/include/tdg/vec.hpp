#pragma once

// Vectors over R^n: dot products, the quadratic norm, isotropic-vector
// counting O(R,n), and the explicit orthogonal clique constructions built
// from a pair (a,b) with a^2 + b^2 = 0.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "tdg/ring.hpp"

namespace tdg {

class RingVector {
public:
    RingVector(const Ring& ring, std::vector<std::uint64_t> coord_indices)
        : ring_(&ring), coords_(std::move(coord_indices)) {
        if (coords_.empty()) throw std::invalid_argument("vector dimension must be >= 1");
        for (auto c : coords_)
            if (c >= ring.cardinality()) throw std::invalid_argument("coordinate out of range");
    }

    static RingVector from_elements(const Ring& ring, const std::vector<RingElement>& elems) {
        std::vector<std::uint64_t> idx;
        idx.reserve(elems.size());
        for (const auto& e : elems) idx.push_back(ring.element_index(e));
        return RingVector(ring, std::move(idx));
    }

    const Ring& ring() const noexcept { return *ring_; }
    std::size_t dim() const noexcept { return coords_.size(); }
    std::uint64_t coord(std::size_t i) const { return coords_.at(i); }
    const std::vector<std::uint64_t>& coords() const noexcept { return coords_; }
    RingElement coord_element(std::size_t i) const { return ring_->element_at(coords_.at(i)); }

    friend bool operator==(const RingVector& a, const RingVector& b) {
        return a.ring_->same_ring(*b.ring_) && a.coords_ == b.coords_;
    }
    friend bool operator<(const RingVector& a, const RingVector& b) { return a.coords_ < b.coords_; }

private:
    const Ring* ring_;
    std::vector<std::uint64_t> coords_;
};

// dot product as an element index
inline std::uint64_t dot_index(const Ring& r, const std::vector<std::uint64_t>& a,
                               const std::vector<std::uint64_t>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = r.add(acc, r.mul(a[i], b[i]));
    return acc;
}

inline RingElement dot(const RingVector& a, const RingVector& b) {
    if (!a.ring().same_ring(b.ring())) throw std::invalid_argument("vector ring mismatch");
    if (a.dim() != b.dim()) throw std::invalid_argument("vector dimension mismatch");
    return a.ring().element_at(dot_index(a.ring(), a.coords(), b.coords()));
}

inline RingElement norm(const RingVector& a) { return dot(a, a); }

inline std::uint64_t norm_index(const Ring& r, const std::vector<std::uint64_t>& a) {
    return dot_index(r, a, a);
}

struct IsotropyCensus {
    std::uint64_t total_solutions = 0;  // solutions of sum x_i^2 = 0, zero vector included
    std::uint64_t nontrivial = 0;       // O(R,n)
};

inline std::uint64_t checked_vector_count(const Ring& r, unsigned n, std::uint64_t cap) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (total > cap / r.cardinality() + 1) throw cap_exceeded("|R|^n exceeds configured cap");
        total *= r.cardinality();
    }
    if (total > cap) throw cap_exceeded("|R|^n exceeds configured cap");
    return total;
}

inline IsotropyCensus isotropy_census(const Ring& r, unsigned n,
                                      std::uint64_t cap = std::uint64_t{1} << 20) {
    checked_vector_count(r, n, cap);
    const std::uint64_t card = r.cardinality();
    std::vector<std::uint64_t> sq(card);
    for (std::uint64_t e = 0; e < card; ++e) sq[e] = r.mul(e, e);
    // walk R^n with an odometer, keeping partial norm sums per position
    std::vector<std::uint64_t> coord(n, 0), partial(n + 1, 0);
    std::uint64_t count = 0;
    while (true) {
        for (unsigned i = 0; i < n; ++i) partial[i + 1] = r.add(partial[i], sq[coord[i]]);
        if (partial[n] == 0) ++count;
        unsigned pos = n;
        while (pos > 0 && coord[pos - 1] + 1 == card) coord[--pos] = 0;
        if (pos == 0) break;
        ++coord[pos - 1];
    }
    return {count, count - 1};
}

// counts solutions of sum x_i^2 = 0 over a field and reports divisibility
// of the count by the characteristic (guaranteed when the degree 2 is < n)
inline std::pair<std::uint64_t, bool> chevalley_warning_check(const Ring& r, unsigned n,
                                                              std::uint64_t cap = std::uint64_t{1} << 20) {
    if (!r.is_field()) throw std::invalid_argument("chevalley_warning_check requires a field");
    if (n <= 2) throw std::invalid_argument("chevalley_warning_check requires n > 2");
    auto census = isotropy_census(r, n, cap);
    return {census.total_solutions, census.total_solutions % r.characteristic() == 0};
}

// lexicographically least (a,b) != (0,0) with a^2 + b^2 = 0, if any
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> find_isotropic_pair(const Ring& r) {
    const std::uint64_t card = r.cardinality();
    for (std::uint64_t a = 0; a < card; ++a)
        for (std::uint64_t b = 0; b < card; ++b) {
            if (a == 0 && b == 0) continue;
            if (r.add(r.mul(a, a), r.mul(b, b)) == 0) return std::make_pair(a, b);
        }
    return std::nullopt;
}

// Clique of pairwise-orthogonal vectors built from an isotropic pair (a,b):
// basis vectors a_i = a e_{2i-1} + b e_{2i} for i = 1..floor(n/2).  For field
// specs the full span of the basis is taken; otherwise all 0/1 combinations.
// Zero is dropped and e_n appended when n is odd.  The returned set is
// re-verified pairwise orthogonal before returning.
inline std::vector<RingVector> isotropic_pair_clique(const Ring& r, unsigned n,
                                                     std::uint64_t a, std::uint64_t b) {
    if (n < 2) throw std::invalid_argument("isotropic_pair_clique requires n >= 2");
    if (a == 0 && b == 0) throw std::invalid_argument("(a,b) must be nonzero");
    if (r.add(r.mul(a, a), r.mul(b, b)) != 0)
        throw std::invalid_argument("a^2 + b^2 must be 0");
    const unsigned m = n / 2;
    const bool field = r.is_field();
    const std::uint64_t combos = [&] {
        std::uint64_t c = 1;
        for (unsigned i = 0; i < m; ++i) c *= field ? r.cardinality() : 2;
        return c;
    }();
    std::set<std::vector<std::uint64_t>> members;
    std::vector<std::uint64_t> coeff(m, 0);
    const std::uint64_t coeff_card = field ? r.cardinality() : 2;
    for (std::uint64_t it = 0; it < combos; ++it) {
        std::vector<std::uint64_t> v(n, 0);
        for (unsigned i = 0; i < m; ++i) {
            v[2 * i] = r.mul(coeff[i], a);
            v[2 * i + 1] = r.mul(coeff[i], b);
        }
        if (std::any_of(v.begin(), v.end(), [](std::uint64_t c) { return c != 0; }))
            members.insert(std::move(v));
        unsigned pos = m;
        while (pos > 0 && coeff[pos - 1] + 1 == coeff_card) coeff[--pos] = 0;
        if (pos == 0) break;
        ++coeff[pos - 1];
    }
    if (n % 2 == 1) {
        std::vector<std::uint64_t> en(n, 0);
        en[n - 1] = r.one_index();
        members.insert(std::move(en));
    }
    std::vector<RingVector> out;
    out.reserve(members.size());
    for (const auto& v : members) out.emplace_back(r, v);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (dot_index(r, out[i].coords(), out[j].coords()) != 0)
                throw std::logic_error("isotropic_pair_clique: members not pairwise orthogonal");
    return out;
}

}  // namespace tdg
