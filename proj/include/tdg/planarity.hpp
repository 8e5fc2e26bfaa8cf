#pragma once

// Planarity testing.  Fast rejection by the |E| <= 3|V| - 6 bound, then the
// Boyer-Myrvold edge-addition test.  Nonplanar graphs yield a Kuratowski
// subgraph which is independently classified here (suppress degree-2
// vertices, then match K_5 or K_{3,3}); planar graphs get their embedding
// certified through an Euler face count.  Loops are ignored.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/planar_face_traversal.hpp>

#include "tdg/graph.hpp"
#include "tdg/invariants.hpp"

namespace tdg {

enum class KuratowskiKind { none, k5, k33 };

struct PlanarityResult {
    bool planar = false;
    bool edge_bound_reject = false;  // |E| > 3|V| - 6 shortcut fired
    std::vector<std::pair<std::uint32_t, std::uint32_t>> kuratowski_edges;
    KuratowskiKind kind = KuratowskiKind::none;
    std::uint32_t faces = 0;  // embedding face count when planar
};

// Suppresses degree-2 vertices of the witness subgraph and matches the
// result against K_5 / K_{3,3}.  Returns none when the edge set is not a
// clean subdivision of either.
inline KuratowskiKind classify_kuratowski(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    std::map<std::uint32_t, std::set<std::uint32_t>> adj;
    for (auto [u, v] : edges) {
        if (u == v) return KuratowskiKind::none;
        if (!adj[u].insert(v).second) return KuratowskiKind::none;  // duplicate edge
        adj[v].insert(u);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = adj.begin(); it != adj.end(); ++it) {
            if (it->second.size() != 2) continue;
            std::uint32_t v = it->first;
            auto nb = it->second.begin();
            std::uint32_t a = *nb++;
            std::uint32_t b = *nb;
            if (a == b || adj[a].count(b)) return KuratowskiKind::none;
            adj[a].erase(v);
            adj[b].erase(v);
            adj[a].insert(b);
            adj[b].insert(a);
            adj.erase(it);
            changed = true;
            break;
        }
    }
    if (adj.size() == 5) {
        for (const auto& [v, nb] : adj)
            if (nb.size() != 4) return KuratowskiKind::none;
        return KuratowskiKind::k5;
    }
    if (adj.size() == 6) {
        for (const auto& [v, nb] : adj)
            if (nb.size() != 3) return KuratowskiKind::none;
        // bipartition: a vertex plus its two non-neighbors on one side
        auto first = adj.begin()->first;
        std::set<std::uint32_t> side_a{first};
        for (const auto& [v, nb] : adj)
            if (v != first && !adj[first].count(v)) side_a.insert(v);
        if (side_a.size() != 3) return KuratowskiKind::none;
        for (const auto& [v, nb] : adj) {
            bool in_a = side_a.count(v) > 0;
            for (auto u : nb)
                if (side_a.count(u) == in_a) return KuratowskiKind::none;
        }
        return KuratowskiKind::k33;
    }
    return KuratowskiKind::none;
}

namespace detail {

struct FaceCounter : boost::planar_face_traversal_visitor {
    std::uint32_t faces = 0;
    void begin_face() { ++faces; }
};

using PlanarBGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::no_property,
                                           boost::property<boost::edge_index_t, int>>;

inline bool edge_set_planar(std::uint32_t nv,
                            const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    PlanarBGraph bg(nv);
    int eidx = 0;
    for (auto [u, v] : edges) {
        auto [ed, ok] = boost::add_edge(u, v, bg);
        boost::put(boost::edge_index, bg, ed, eidx++);
    }
    return boost::boyer_myrvold_planarity_test(bg);
}

// strip the witness down to an edge-minimal nonplanar subgraph: removing
// any further edge would make it planar, which leaves exactly a Kuratowski
// subdivision
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> minimize_witness(
    std::uint32_t nv, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto trial = edges;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
            if (!edge_set_planar(nv, trial)) {
                edges = std::move(trial);
                changed = true;
                break;
            }
        }
    }
    return edges;
}

}  // namespace detail

inline PlanarityResult is_planar(const Graph& g, const Limits& lim = {}) {
    if (g.vertex_count() > lim.solver_cap) throw cap_exceeded("planarity cap exceeded");
    PlanarityResult res;
    const std::uint32_t nv = g.vertex_count();
    const auto edge_list = g.edges();
    const std::size_t ne = edge_list.size();
    res.edge_bound_reject = nv >= 3 && ne > 3 * static_cast<std::size_t>(nv) - 6;

    if (ne == 0) {
        res.planar = true;
        return res;
    }

    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;
    BGraph bg(nv);
    int eidx = 0;
    for (auto [u, v] : edge_list) {
        auto [ed, ok] = boost::add_edge(u, v, bg);
        boost::put(boost::edge_index, bg, ed, eidx++);
    }

    using Edge = boost::graph_traits<BGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> embedding(nv);
    std::vector<Edge> kuratowski;
    res.planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding.data(),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

    if (res.planar) {
        if (res.edge_bound_reject)
            throw std::logic_error("edge bound rejected a planar graph");
        detail::FaceCounter counter;
        boost::planar_face_traversal(bg, embedding.data(), counter);
        // per-component Euler: a connected planar embedding has 2 - V + E faces
        std::uint32_t expected = 0;
        for (const auto& comp : connected_components(g)) {
            std::size_t ce = 0;
            for (std::size_t i = 0; i < comp.vertices.size(); ++i)
                for (std::size_t j = i + 1; j < comp.vertices.size(); ++j)
                    if (g.has_edge(comp.vertices[i], comp.vertices[j])) ++ce;
            if (ce > 0)
                expected += static_cast<std::uint32_t>(2 + ce - comp.vertices.size());
        }
        if (counter.faces != expected)
            throw std::logic_error("planar embedding failed the Euler face check");
        res.faces = counter.faces;
        return res;
    }

    for (auto e : kuratowski) {
        auto u = static_cast<std::uint32_t>(boost::source(e, bg));
        auto v = static_cast<std::uint32_t>(boost::target(e, bg));
        res.kuratowski_edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(res.kuratowski_edges.begin(), res.kuratowski_edges.end());
    res.kuratowski_edges.erase(
        std::unique(res.kuratowski_edges.begin(), res.kuratowski_edges.end()),
        res.kuratowski_edges.end());
    res.kuratowski_edges = detail::minimize_witness(nv, std::move(res.kuratowski_edges));
    std::sort(res.kuratowski_edges.begin(), res.kuratowski_edges.end());
    res.kind = classify_kuratowski(res.kuratowski_edges);
    if (res.kind == KuratowskiKind::none)
        throw std::logic_error("nonplanar graph without a verifiable Kuratowski witness");
    return res;
}

}  // namespace tdg
