#pragma once

// Builders for the three graph families and the tensor (categorical)
// product.  Vertex ids follow the mixed-radix order of R^n with the
// leftmost coordinate most significant; TD drops the zero vector, so its
// vertex id is the vector index minus one.

#include <string>
#include <vector>

#include "tdg/graph.hpp"
#include "tdg/ring.hpp"
#include "tdg/vec.hpp"

namespace tdg {

inline std::uint64_t vector_index(const Ring& r, const std::vector<std::uint64_t>& coords) {
    std::uint64_t idx = 0;
    for (auto c : coords) idx = idx * r.cardinality() + c;
    return idx;
}

inline std::vector<std::uint64_t> vector_at(const Ring& r, unsigned n, std::uint64_t idx) {
    std::vector<std::uint64_t> coords(n);
    for (unsigned i = n; i-- > 0;) {
        coords[i] = idx % r.cardinality();
        idx /= r.cardinality();
    }
    return coords;
}

inline std::string vector_label(const Ring& r, const std::vector<std::uint64_t>& coords) {
    std::vector<std::string> parts;
    parts.reserve(coords.size());
    bool all_single = true;
    for (auto c : coords) {
        parts.push_back(r.element_name(c));
        all_single &= parts.back().size() == 1;
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i && !all_single) out += '|';
        out += parts[i];
    }
    return out;
}

namespace detail {

// shared core: vertices are the vectors with index in [first, |R|^n),
// edges between distinct orthogonal vectors
inline Graph build_dot_graph(const Ring& r, unsigned n, bool closed, const Limits& lim) {
    const std::uint64_t total = checked_vector_count(r, n, lim.build_vertex_cap + (closed ? 0 : 1));
    const std::uint64_t first = closed ? 0 : 1;
    const std::uint64_t nverts = total - first;
    if (nverts > lim.build_vertex_cap) throw cap_exceeded("vertex count exceeds cap");
    Graph g(static_cast<std::uint32_t>(nverts), closed ? GraphVariant::tdbar : GraphVariant::td,
            r.render(), n);
    std::vector<std::vector<std::uint64_t>> coords(nverts);
    for (std::uint64_t v = 0; v < nverts; ++v) {
        coords[v] = vector_at(r, n, v + first);
        g.set_label(static_cast<std::uint32_t>(v), vector_label(r, coords[v]));
    }
    for (std::uint64_t u = 0; u < nverts; ++u) {
        if (closed && norm_index(r, coords[u]) == 0) g.set_loop(static_cast<std::uint32_t>(u));
        for (std::uint64_t v = u + 1; v < nverts; ++v)
            if (dot_index(r, coords[u], coords[v]) == 0)
                g.add_edge(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    }
    return g;
}

}  // namespace detail

inline Graph build_td(const Ring& r, unsigned n, const Limits& lim = {}) {
    return detail::build_dot_graph(r, n, /*closed=*/false, lim);
}

inline Graph build_td_closed(const Ring& r, unsigned n, const Limits& lim = {}) {
    return detail::build_dot_graph(r, n, /*closed=*/true, lim);
}

// zero-divisor graph: vertices are the nonzero zero divisors in element
// order, edges between distinct elements with product zero
inline Graph build_zdg(const Ring& r, const Limits& lim = {}) {
    if (r.cardinality() > lim.build_vertex_cap) throw cap_exceeded("|R| exceeds cap");
    std::vector<std::uint64_t> zd;
    for (std::uint64_t e = 1; e < r.cardinality(); ++e)
        if (r.is_zero_divisor(e)) zd.push_back(e);
    Graph g(static_cast<std::uint32_t>(zd.size()), GraphVariant::zdg, r.render(), 1);
    for (std::size_t i = 0; i < zd.size(); ++i) g.set_label(static_cast<std::uint32_t>(i), r.element_name(zd[i]));
    for (std::size_t i = 0; i < zd.size(); ++i)
        for (std::size_t j = i + 1; j < zd.size(); ++j)
            if (r.mul(zd[i], zd[j]) == 0)
                g.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    return g;
}

// tensor (categorical) product; loops act as self-adjacency, so a loop at u
// together with an edge v -- v' yields the edge (u,v) -- (u,v'), and loops
// multiply: loop at (u,v) iff loops at both u and v
inline Graph tensor_product(const Graph& a, const Graph& b) {
    const std::uint64_t nv = std::uint64_t{a.vertex_count()} * b.vertex_count();
    if (nv > std::uint32_t(-1)) throw cap_exceeded("tensor product too large");
    Graph g(static_cast<std::uint32_t>(nv), GraphVariant::tensor,
            a.ring_spec() + "*" + b.ring_spec(), a.dim() == b.dim() ? a.dim() : 0);
    auto id = [&](std::uint32_t u, std::uint32_t v) {
        return static_cast<std::uint32_t>(std::uint64_t{u} * b.vertex_count() + v);
    };
    auto self_or_edge = [](const Graph& h, std::uint32_t x, std::uint32_t y) {
        return x == y ? h.has_loop(x) : h.has_edge(x, y);
    };
    for (std::uint32_t u = 0; u < a.vertex_count(); ++u)
        for (std::uint32_t v = 0; v < b.vertex_count(); ++v) {
            g.set_label(id(u, v), "(" + a.label(u) + "," + b.label(v) + ")");
            if (a.has_loop(u) && b.has_loop(v)) g.set_loop(id(u, v));
        }
    for (std::uint64_t x = 0; x < nv; ++x)
        for (std::uint64_t y = x + 1; y < nv; ++y) {
            const std::uint32_t u1 = static_cast<std::uint32_t>(x / b.vertex_count());
            const std::uint32_t v1 = static_cast<std::uint32_t>(x % b.vertex_count());
            const std::uint32_t u2 = static_cast<std::uint32_t>(y / b.vertex_count());
            const std::uint32_t v2 = static_cast<std::uint32_t>(y % b.vertex_count());
            if (self_or_edge(a, u1, u2) && self_or_edge(b, v1, v2))
                g.add_edge(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
        }
    return g;
}

}  // namespace tdg
