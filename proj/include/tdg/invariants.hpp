#pragma once

// Exact graph invariants: degree summaries and the closed-form degree
// predictions, component classification, domination number (branch and
// bound over closed neighborhoods), clique / independence / clique-loop
// numbers (pivot-free coloring-bounded max clique), diameter and girth.
// Every solver re-verifies the witness it returns; all tie-breaking is by
// lowest vertex id, so identical inputs give identical witnesses.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "tdg/build.hpp"
#include "tdg/graph.hpp"
#include "tdg/ring.hpp"

namespace tdg {

using Bits = std::vector<std::uint64_t>;

namespace bits {

inline std::uint32_t popcount(const Bits& b) {
    std::uint32_t c = 0;
    for (auto w : b) c += static_cast<std::uint32_t>(__builtin_popcountll(w));
    return c;
}
inline bool test(const Bits& b, std::uint32_t i) { return (b[i / 64] >> (i % 64)) & 1; }
inline void set(Bits& b, std::uint32_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
inline void reset(Bits& b, std::uint32_t i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
inline std::uint32_t count_and_not(const Bits& a, const Bits& mask) {
    std::uint32_t c = 0;
    for (std::size_t w = 0; w < a.size(); ++w)
        c += static_cast<std::uint32_t>(__builtin_popcountll(a[w] & ~mask[w]));
    return c;
}
inline bool none(const Bits& b) {
    for (auto w : b)
        if (w) return false;
    return true;
}
inline int lowest(const Bits& b) {
    for (std::size_t w = 0; w < b.size(); ++w)
        if (b[w]) return static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(b[w])));
    return -1;
}

}  // namespace bits

struct SolveResult {
    std::int64_t value = 0;
    std::vector<std::uint32_t> witness;
};

// ---- degrees ----

struct DegreeSummary {
    std::vector<std::uint32_t> per_vertex;
    std::vector<std::uint32_t> sorted_desc;
    std::uint32_t min = 0;
    std::uint32_t max = 0;
};

inline DegreeSummary degree_sequence(const Graph& g) {
    DegreeSummary s;
    s.per_vertex.resize(g.vertex_count());
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) s.per_vertex[v] = g.degree(v);
    s.sorted_desc = s.per_vertex;
    std::sort(s.sorted_desc.begin(), s.sorted_desc.end(), std::greater<>());
    if (!s.sorted_desc.empty()) {
        s.max = s.sorted_desc.front();
        s.min = s.sorted_desc.back();
    }
    return s;
}

// ---- closed-form degree prediction for TD(R,n) vertices ----
//
// (i)  some coordinate is a unit: |R|^{n-1} - 1, or - 2 when the norm is 0
// (ii) every leaf is a field:      |R|^n / prod |F_i|^{tau_i} - 1 or - 2,
//      tau_i = 0 iff the i-th field column of the vector is all zero
// (iii) two-factor products reduce to the factors' degrees
// Anything else has no closed form and the caller falls back to counting.
inline std::optional<std::int64_t> predicted_degree(const Ring& r, unsigned n,
                                                    const std::vector<std::uint64_t>& coords) {
    if (coords.size() != n || n == 0) throw std::invalid_argument("bad vector dimension");
    bool all_zero = std::all_of(coords.begin(), coords.end(), [](std::uint64_t c) { return c == 0; });
    if (all_zero) throw std::invalid_argument("predicted_degree needs a nonzero vector");

    const bool norm_zero = norm_index(r, coords) == 0;

    bool has_unit = std::any_of(coords.begin(), coords.end(),
                                [&](std::uint64_t c) { return r.is_unit(c); });
    if (has_unit) {
        std::int64_t pw = 1;
        for (unsigned i = 0; i + 1 < n; ++i) pw *= static_cast<std::int64_t>(r.cardinality());
        return pw - (norm_zero ? 2 : 1);
    }

    if (r.leaves_all_fields()) {
        std::int64_t total = 1;
        for (unsigned i = 0; i < n; ++i) total *= static_cast<std::int64_t>(r.cardinality());
        std::int64_t denom = 1;
        for (std::size_t li = 0; li < r.leaf_count(); ++li) {
            bool column_zero = true;
            for (auto c : coords) column_zero &= r.leaf_value_of(c, li) == 0;
            if (!column_zero) denom *= static_cast<std::int64_t>(r.leaf_cardinality(li));
        }
        return total / denom - (norm_zero ? 2 : 1);
    }

    if (r.leaf_count() == 2) {
        Ring ra({r.leaves()[0]});
        Ring rb({r.leaves()[1]});
        std::vector<std::uint64_t> a(n), b(n);
        for (unsigned i = 0; i < n; ++i) {
            a[i] = r.leaf_value_of(coords[i], 0);
            b[i] = r.leaf_value_of(coords[i], 1);
        }
        const bool a_zero = std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
        const bool b_zero = std::all_of(b.begin(), b.end(), [](std::uint64_t c) { return c == 0; });
        auto power = [n](std::uint64_t base) {
            std::int64_t p = 1;
            for (unsigned i = 0; i < n; ++i) p *= static_cast<std::int64_t>(base);
            return p;
        };
        if (a_zero) {
            auto db = predicted_degree(rb, n, b);
            if (!db) return std::nullopt;
            return norm_index(rb, b) != 0 ? power(ra.cardinality()) * (1 + *db) - 1
                                          : power(ra.cardinality()) * (2 + *db) - 2;
        }
        if (b_zero) {
            auto da = predicted_degree(ra, n, a);
            if (!da) return std::nullopt;
            return norm_index(ra, a) != 0 ? power(rb.cardinality()) * (1 + *da) - 1
                                          : power(rb.cardinality()) * (2 + *da) - 2;
        }
        auto da = predicted_degree(ra, n, a);
        auto db = predicted_degree(rb, n, b);
        if (!da || !db) return std::nullopt;
        const bool na = norm_index(ra, a) == 0;
        const bool nb = norm_index(rb, b) == 0;
        if (!na && !nb) return (1 + *da) * (1 + *db) - 1;
        if (na && !nb) return (2 + *da) * (1 + *db) - 1;
        if (!na && nb) return (1 + *da) * (2 + *db) - 1;
        return (2 + *da) * (2 + *db) - 2;
    }

    return std::nullopt;
}

// ---- connected components with exact classification ----

struct ComponentSummary {
    std::vector<std::uint32_t> vertices;
    bool complete = false;                                          // K_m
    std::optional<std::pair<std::uint32_t, std::uint32_t>> bipartite;  // complete bipartite K_{a,b}
};

inline std::vector<ComponentSummary> connected_components(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<ComponentSummary> out;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        ComponentSummary cs;
        std::queue<std::uint32_t> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            std::uint32_t v = q.front();
            q.pop();
            cs.vertices.push_back(v);
            for (std::uint32_t u = 0; u < n; ++u)
                if (g.has_edge(v, u) && comp[u] < 0) {
                    comp[u] = id;
                    q.push(u);
                }
        }
        std::sort(cs.vertices.begin(), cs.vertices.end());

        // complete: every pair inside adjacent
        cs.complete = true;
        for (std::size_t i = 0; i < cs.vertices.size() && cs.complete; ++i)
            for (std::size_t j = i + 1; j < cs.vertices.size() && cs.complete; ++j)
                cs.complete = g.has_edge(cs.vertices[i], cs.vertices[j]);

        // complete bipartite: proper 2-coloring with every cross pair adjacent
        if (cs.vertices.size() >= 2) {
            std::vector<int> side(n, -1);
            side[cs.vertices[0]] = 0;
            std::queue<std::uint32_t> bq;
            bq.push(cs.vertices[0]);
            bool two_colorable = true;
            while (!bq.empty() && two_colorable) {
                std::uint32_t v = bq.front();
                bq.pop();
                for (std::uint32_t u : cs.vertices)
                    if (g.has_edge(v, u)) {
                        if (side[u] < 0) {
                            side[u] = 1 - side[v];
                            bq.push(u);
                        } else if (side[u] == side[v]) {
                            two_colorable = false;
                            break;
                        }
                    }
            }
            if (two_colorable) {
                std::vector<std::uint32_t> part[2];
                for (auto v : cs.vertices) part[side[v] == 1 ? 1 : 0].push_back(v);
                bool complete_bip = !part[0].empty() && !part[1].empty();
                for (auto u : part[0])
                    for (auto v : part[1])
                        complete_bip &= g.has_edge(u, v);
                if (complete_bip) {
                    auto a = static_cast<std::uint32_t>(part[0].size());
                    auto b = static_cast<std::uint32_t>(part[1].size());
                    cs.bipartite = std::make_pair(std::min(a, b), std::max(a, b));
                }
            }
        }
        out.push_back(std::move(cs));
    }
    return out;
}

// ---- domination ----

inline bool dominates(const Graph& g, const std::vector<std::uint32_t>& set) {
    const std::uint32_t n = g.vertex_count();
    std::vector<bool> cov(n, false);
    for (auto d : set) {
        cov[d] = true;
        for (std::uint32_t u = 0; u < n; ++u)
            if (g.has_edge(d, u)) cov[u] = true;
    }
    return std::all_of(cov.begin(), cov.end(), [](bool b) { return b; });
}

namespace detail {

struct DomSolver {
    const Graph& g;
    std::uint32_t n, words;
    std::vector<Bits> closed;
    std::vector<std::uint32_t> closed_size;
    Bits full;
    std::uint32_t max_cover = 1;  // Delta + 1
    std::uint32_t best;
    std::vector<std::uint32_t> best_set, cur;

    explicit DomSolver(const Graph& graph) : g(graph), n(graph.vertex_count()), words(graph.words_per_row()) {
        closed.resize(n);
        closed_size.resize(n);
        full.assign(words, 0);
        for (std::uint32_t v = 0; v < n; ++v) {
            closed[v].assign(g.row(v).begin(), g.row(v).end());
            bits::set(closed[v], v);
            closed_size[v] = bits::popcount(closed[v]);
            max_cover = std::max(max_cover, closed_size[v]);
            bits::set(full, v);
        }
        best = n + 1;
    }

    std::vector<std::uint32_t> greedy() const {
        Bits covered(words, 0);
        std::vector<std::uint32_t> out;
        std::uint32_t uncovered = n;
        while (uncovered) {
            std::uint32_t pick = 0, gain = 0;
            for (std::uint32_t v = 0; v < n; ++v) {
                std::uint32_t gn = bits::count_and_not(closed[v], covered);
                if (gn > gain) { gain = gn; pick = v; }
            }
            out.push_back(pick);
            for (std::uint32_t w = 0; w < words; ++w) covered[w] |= closed[pick][w];
            uncovered -= gain;
        }
        return out;
    }

    void search(Bits& covered, std::uint32_t uncovered) {
        if (uncovered == 0) {
            if (cur.size() < best) {
                best = static_cast<std::uint32_t>(cur.size());
                best_set = cur;
            }
            return;
        }
        const std::uint32_t lb = (uncovered + max_cover - 1) / max_cover;
        if (cur.size() + lb >= best) return;
        // branch on the uncovered vertex with the fewest dominator options
        std::uint32_t pick = n;
        std::uint32_t pick_options = ~std::uint32_t{0};
        for (std::uint32_t v = 0; v < n; ++v)
            if (!bits::test(covered, v) && closed_size[v] < pick_options) {
                pick_options = closed_size[v];
                pick = v;
            }
        // candidate dominators of pick, largest new coverage first
        std::vector<std::pair<std::uint32_t, std::uint32_t>> cands;  // (-gain sorted, id)
        for (std::uint32_t u = 0; u < n; ++u)
            if (bits::test(closed[pick], u))
                cands.emplace_back(bits::count_and_not(closed[u], covered), u);
        std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        for (const auto& [gain, u] : cands) {
            Bits next = covered;
            for (std::uint32_t w = 0; w < words; ++w) next[w] |= closed[u][w];
            cur.push_back(u);
            search(next, uncovered - gain);
            cur.pop_back();
        }
    }
};

}  // namespace detail

inline Graph induced_subgraph(const Graph& g, const std::vector<std::uint32_t>& vertices) {
    Graph sub(static_cast<std::uint32_t>(vertices.size()), GraphVariant::other, g.ring_spec(),
              g.dim());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        sub.set_label(static_cast<std::uint32_t>(i), g.label(vertices[i]));
        if (g.has_loop(vertices[i])) sub.set_loop(static_cast<std::uint32_t>(i));
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j]))
                sub.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    }
    return sub;
}

namespace detail {

// minimum dominating set of a connected graph, reported only when the
// minimum is <= cap (searching above the cap is pruned away)
inline std::optional<SolveResult> domination_connected(const Graph& g, std::uint32_t cap) {
    DomSolver s(g);
    auto ub = s.greedy();
    if (ub.size() <= cap) {
        s.best = static_cast<std::uint32_t>(ub.size());
        s.best_set = ub;
    } else {
        s.best = cap + 1;
    }
    Bits covered(s.words, 0);
    s.search(covered, g.vertex_count());
    if (s.best > cap) return std::nullopt;
    return SolveResult{s.best, s.best_set};
}

}  // namespace detail

// exact minimum dominating set; domination decomposes over connected
// components, so each component is solved on its own
inline SolveResult domination_number(const Graph& g, const Limits& lim = {}) {
    if (g.vertex_count() > lim.solver_cap) throw cap_exceeded("domination solver cap exceeded");
    if (g.vertex_count() == 0) return {0, {}};
    SolveResult total{0, {}};
    for (const auto& comp : connected_components(g)) {
        Graph sub = induced_subgraph(g, comp.vertices);
        auto res = detail::domination_connected(sub, sub.vertex_count());
        total.value += res->value;
        for (auto v : res->witness) total.witness.push_back(comp.vertices[v]);
    }
    std::sort(total.witness.begin(), total.witness.end());
    if (!dominates(g, total.witness)) throw std::logic_error("domination witness failed verification");
    return total;
}

// decision form: a dominating set of size <= k, or nullopt if none exists
inline std::optional<SolveResult> domination_at_most(const Graph& g, std::uint32_t k,
                                                     const Limits& lim = {}) {
    if (g.vertex_count() > lim.solver_cap) throw cap_exceeded("domination solver cap exceeded");
    if (g.vertex_count() == 0) return SolveResult{0, {}};
    SolveResult total{0, {}};
    for (const auto& comp : connected_components(g)) {
        if (total.value > k) return std::nullopt;
        Graph sub = induced_subgraph(g, comp.vertices);
        auto room = static_cast<std::uint32_t>(k - total.value);
        auto res = detail::domination_connected(sub, std::min(room, sub.vertex_count()));
        if (!res) return std::nullopt;
        total.value += res->value;
        for (auto v : res->witness) total.witness.push_back(comp.vertices[v]);
    }
    if (total.value > k) return std::nullopt;
    std::sort(total.witness.begin(), total.witness.end());
    if (!dominates(g, total.witness)) throw std::logic_error("domination witness failed verification");
    return total;
}

// ---- cliques ----

inline bool is_clique(const Graph& g, const std::vector<std::uint32_t>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[i] == set[j] || !g.has_edge(set[i], set[j])) return false;
    return true;
}

inline bool is_independent(const Graph& g, const std::vector<std::uint32_t>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[i] == set[j] || g.has_edge(set[i], set[j])) return false;
    return true;
}

namespace detail {

struct CliqueSolver {
    const Graph& g;
    std::uint32_t n, words;
    std::vector<Bits> adj;
    std::uint32_t best = 0;
    std::vector<std::uint32_t> best_set, cur;

    explicit CliqueSolver(const Graph& graph)
        : g(graph), n(graph.vertex_count()), words(graph.words_per_row()) {
        adj.resize(n);
        for (std::uint32_t v = 0; v < n; ++v) adj[v].assign(g.row(v).begin(), g.row(v).end());
    }

    // greedy coloring bound, classes filled in ascending vertex id
    void expand(Bits P) {
        std::vector<std::uint32_t> order, color;
        Bits left = P;
        std::uint32_t cls = 0;
        while (!bits::none(left)) {
            ++cls;
            Bits avail = left;
            while (true) {
                int v = bits::lowest(avail);
                if (v < 0) break;
                order.push_back(static_cast<std::uint32_t>(v));
                color.push_back(cls);
                bits::reset(left, static_cast<std::uint32_t>(v));
                bits::reset(avail, static_cast<std::uint32_t>(v));
                for (std::uint32_t w = 0; w < words; ++w) avail[w] &= ~adj[v][w];
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (cur.size() + color[i] <= best) return;
            const std::uint32_t v = order[i];
            cur.push_back(v);
            Bits next(words);
            for (std::uint32_t w = 0; w < words; ++w) next[w] = P[w] & adj[v][w];
            if (bits::none(next)) {
                if (cur.size() > best) {
                    best = static_cast<std::uint32_t>(cur.size());
                    best_set = cur;
                }
            } else {
                expand(next);
            }
            cur.pop_back();
            bits::reset(P, v);
        }
    }
};

}  // namespace detail

inline SolveResult clique_number(const Graph& g, const Limits& lim = {}) {
    if (g.vertex_count() > lim.solver_cap) throw cap_exceeded("clique solver cap exceeded");
    if (g.vertex_count() == 0) return {0, {}};
    detail::CliqueSolver s(g);
    Bits all(g.words_per_row(), 0);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) bits::set(all, v);
    s.expand(all);
    std::sort(s.best_set.begin(), s.best_set.end());
    if (!is_clique(g, s.best_set)) throw std::logic_error("clique witness failed verification");
    return {s.best, s.best_set};
}

inline Graph complement(const Graph& g) {
    Graph c(g.vertex_count(), GraphVariant::other, g.ring_spec(), g.dim());
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) c.set_label(v, g.label(v));
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
        for (std::uint32_t v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

inline SolveResult independence_number(const Graph& g, const Limits& lim = {}) {
    if (g.vertex_count() > lim.complement_cap) throw cap_exceeded("independence solver cap exceeded");
    Limits inner = lim;
    inner.solver_cap = std::max(inner.solver_cap, inner.complement_cap);
    auto res = clique_number(complement(g), inner);
    if (!is_independent(g, res.witness)) throw std::logic_error("independence witness failed verification");
    return res;
}

// maximum clique restricted to loop vertices; a single loop vertex is a
// clique-loop of size 1
inline SolveResult clique_loop_number(const Graph& g, const Limits& lim = {}) {
    auto loops = g.loop_vertices();
    if (loops.size() > lim.loop_clique_cap) throw cap_exceeded("clique-loop solver cap exceeded");
    if (loops.empty()) return {0, {}};
    Graph sub = induced_subgraph(g, loops);
    auto res = clique_number(sub, lim);
    for (auto& v : res.witness) v = loops[v];
    for (auto v : res.witness)
        if (!g.has_loop(v)) throw std::logic_error("clique-loop witness failed verification");
    if (!is_clique(g, res.witness) && res.witness.size() > 1)
        throw std::logic_error("clique-loop witness failed verification");
    return res;
}

// ---- distances ----

inline std::vector<std::uint32_t> bfs_distances(const Graph& g, std::uint32_t src) {
    const std::uint32_t inf = ~std::uint32_t{0};
    std::vector<std::uint32_t> dist(g.vertex_count(), inf);
    std::queue<std::uint32_t> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        std::uint32_t v = q.front();
        q.pop();
        for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
            if (g.has_edge(v, u) && dist[u] == inf) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return dist;
}

// nullopt = infinite (disconnected)
inline std::optional<std::uint32_t> diameter(const Graph& g, const Limits& lim = {}) {
    if (g.vertex_count() > lim.solver_cap) throw cap_exceeded("diameter cap exceeded");
    const std::uint32_t inf = ~std::uint32_t{0};
    std::uint32_t best = 0;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, v);
        for (auto d : dist) {
            if (d == inf) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

// nullopt = infinite (acyclic); loops are ignored
inline std::optional<std::uint32_t> girth(const Graph& g, const Limits& lim = {}) {
    if (g.vertex_count() > lim.solver_cap) throw cap_exceeded("girth cap exceeded");
    const std::uint32_t inf = ~std::uint32_t{0};
    std::uint32_t best = inf;
    for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
        std::vector<std::uint32_t> dist(g.vertex_count(), inf), parent(g.vertex_count(), inf);
        std::queue<std::uint32_t> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            std::uint32_t v = q.front();
            q.pop();
            for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
                if (!g.has_edge(v, u)) continue;
                if (dist[u] == inf) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    q.push(u);
                } else if (parent[v] != u) {
                    best = std::min(best, dist[v] + dist[u] + 1);
                }
            }
        }
    }
    if (best == inf) return std::nullopt;
    return best;
}

}  // namespace tdg
