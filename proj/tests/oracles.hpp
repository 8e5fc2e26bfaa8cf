#pragma once

// Brute-force oracles used by the tests.  Everything here recomputes from
// first principles on small instances and stays independent of the solver
// code paths it checks.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "tdg/build.hpp"
#include "tdg/graph.hpp"
#include "tdg/invariants.hpp"
#include "tdg/ring.hpp"
#include "tdg/vec.hpp"

namespace oracle {

// neighbor count of a vector in TD(R,n) straight from the definition,
// using the element (digit) arithmetic route rather than index tables
inline std::uint64_t brute_degree(const tdg::Ring& r, unsigned n,
                                  const std::vector<std::uint64_t>& a) {
    const std::uint64_t total = [&] {
        std::uint64_t t = 1;
        for (unsigned i = 0; i < n; ++i) t *= r.cardinality();
        return t;
    }();
    std::vector<tdg::RingElement> ae;
    for (auto c : a) ae.push_back(r.element_at(c));
    std::uint64_t count = 0;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        auto b = tdg::vector_at(r, n, idx);
        if (b == a) continue;
        tdg::RingElement acc = r.element_at(0);
        for (unsigned i = 0; i < n; ++i) acc = r.add(acc, r.mul(ae[i], r.element_at(b[i])));
        if (r.is_zero(acc)) ++count;
    }
    return count;
}

// minimum dominating set by subset enumeration in increasing size
inline std::uint32_t brute_domination(const tdg::Graph& g) {
    const std::uint32_t n = g.vertex_count();
    std::vector<std::uint32_t> comb;
    for (std::uint32_t k = 0; k <= n; ++k) {
        comb.assign(k, 0);
        // iterate k-combinations of {0..n-1}
        std::vector<std::uint32_t> idx(k);
        for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            if (k == 0 || idx[0] <= n - k) {
                if (tdg::dominates(g, idx)) return k;
            }
            if (k == 0) break;
            std::int32_t pos = static_cast<std::int32_t>(k) - 1;
            while (pos >= 0 && idx[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (std::uint32_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return n;
}

inline void brute_clique_rec(const tdg::Graph& g, std::uint32_t from,
                             std::vector<std::uint32_t>& cur, std::uint32_t& best) {
    best = std::max(best, static_cast<std::uint32_t>(cur.size()));
    for (std::uint32_t v = from; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (auto u : cur) ok &= g.has_edge(u, v);
        if (!ok) continue;
        cur.push_back(v);
        brute_clique_rec(g, v + 1, cur, best);
        cur.pop_back();
    }
}

inline std::uint32_t brute_clique(const tdg::Graph& g) {
    std::uint32_t best = 0;
    std::vector<std::uint32_t> cur;
    brute_clique_rec(g, 0, cur, best);
    return best;
}

// isomorphism by trying every vertex permutation (<= 8 vertices)
inline bool brute_isomorphic_rec(const tdg::Graph& g, const tdg::Graph& h,
                                 std::vector<std::uint32_t>& map, std::vector<bool>& used,
                                 std::uint32_t v) {
    const std::uint32_t n = g.vertex_count();
    if (v == n) return true;
    for (std::uint32_t c = 0; c < n; ++c) {
        if (used[c]) continue;
        if (g.has_loop(v) != h.has_loop(c)) continue;
        bool ok = true;
        for (std::uint32_t u = 0; u < v && ok; ++u)
            ok = g.has_edge(v, u) == h.has_edge(c, map[u]);
        if (!ok) continue;
        map[v] = c;
        used[c] = true;
        if (brute_isomorphic_rec(g, h, map, used, v + 1)) return true;
        used[c] = false;
    }
    return false;
}

inline bool brute_isomorphic(const tdg::Graph& g, const tdg::Graph& h) {
    if (g.vertex_count() != h.vertex_count()) return false;
    std::vector<std::uint32_t> map(g.vertex_count());
    std::vector<bool> used(g.vertex_count(), false);
    return brute_isomorphic_rec(g, h, map, used, 0);
}

// all-pairs shortest paths by Floyd-Warshall; returns nullopt when some
// pair is unreachable
inline std::optional<std::uint32_t> brute_diameter(const tdg::Graph& g) {
    const std::uint32_t n = g.vertex_count();
    const std::uint32_t inf = ~std::uint32_t{0} / 4;
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
    for (std::uint32_t v = 0; v < n; ++v) d[v][v] = 0;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = 0; v < n; ++v)
            if (g.has_edge(u, v)) d[u][v] = 1;
    for (std::uint32_t k = 0; k < n; ++k)
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    std::uint32_t best = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            if (d[i][j] >= inf) return std::nullopt;
            best = std::max(best, d[i][j]);
        }
    return best;
}

// shortest cycle through each edge: girth = min over edges (u,v) of
// dist(u,v) in the graph with that edge removed, plus one
inline std::optional<std::uint32_t> brute_girth(const tdg::Graph& g) {
    const std::uint32_t n = g.vertex_count();
    const std::uint32_t inf = ~std::uint32_t{0};
    std::uint32_t best = inf;
    for (auto [eu, ev] : g.edges()) {
        std::vector<std::uint32_t> dist(n, inf);
        std::vector<std::uint32_t> queue{eu};
        dist[eu] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::uint32_t v = queue[qi];
            for (std::uint32_t u = 0; u < n; ++u) {
                if (!g.has_edge(v, u) || dist[u] != inf) continue;
                if ((v == eu && u == ev) || (v == ev && u == eu)) continue;  // removed edge
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
        if (dist[ev] != inf) best = std::min(best, dist[ev] + 1);
    }
    if (best == inf) return std::nullopt;
    return best;
}

// deterministic xorshift generator for randomized checks
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 1) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace oracle
