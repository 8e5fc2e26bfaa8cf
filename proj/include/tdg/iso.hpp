#pragma once

// Exact graph isomorphism for desk-scale instances: iterative color
// refinement seeded with (loop flag, degree), then backtracking over the
// refined classes.  Loops must map to loops; a witness bijection is
// returned whenever the graphs are isomorphic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tdg/graph.hpp"

namespace tdg {

struct IsoResult {
    bool isomorphic = false;
    std::vector<std::uint32_t> mapping;  // g vertex -> h vertex
};

// explicit bijection verifier: edges and loops preserved in both directions
inline bool check_isomorphism(const Graph& g, const Graph& h,
                              const std::vector<std::uint32_t>& mapping) {
    const std::uint32_t n = g.vertex_count();
    if (h.vertex_count() != n || mapping.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (auto m : mapping) {
        if (m >= n || hit[m]) return false;
        hit[m] = true;
    }
    for (std::uint32_t u = 0; u < n; ++u) {
        if (g.has_loop(u) != h.has_loop(mapping[u])) return false;
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (g.has_edge(u, v) != h.has_edge(mapping[u], mapping[v])) return false;
    }
    return true;
}

namespace detail {

inline std::vector<std::vector<std::uint32_t>> refine_colors(const Graph& g, const Graph& h,
                                                             bool& feasible) {
    const std::uint32_t n = g.vertex_count();
    std::vector<std::vector<std::uint32_t>> color(2, std::vector<std::uint32_t>(n, 0));
    const Graph* gs[2] = {&g, &h};

    // initial palette: (loop, degree), shared between the two graphs
    {
        std::map<std::pair<bool, std::uint32_t>, std::uint32_t> palette;
        for (int s = 0; s < 2; ++s)
            for (std::uint32_t v = 0; v < n; ++v)
                palette.emplace(std::make_pair(gs[s]->has_loop(v), gs[s]->degree(v)),
                                static_cast<std::uint32_t>(palette.size()));
        std::uint32_t next = 0;
        for (auto& kv : palette) kv.second = next++;
        for (int s = 0; s < 2; ++s)
            for (std::uint32_t v = 0; v < n; ++v)
                color[s][v] = palette.at({gs[s]->has_loop(v), gs[s]->degree(v)});
    }

    feasible = true;
    for (std::uint32_t round = 0; round < n; ++round) {
        // signature: own color plus sorted neighbor colors
        std::map<std::vector<std::uint32_t>, std::uint32_t> palette;
        std::vector<std::vector<std::uint32_t>> sig(2);
        for (int s = 0; s < 2; ++s) {
            sig[s].resize(n);
            for (std::uint32_t v = 0; v < n; ++v) {
                std::vector<std::uint32_t> key;
                key.push_back(color[s][v]);
                for (std::uint32_t u = 0; u < n; ++u)
                    if (gs[s]->has_edge(v, u)) key.push_back(color[s][u]);
                std::sort(key.begin() + 1, key.end());
                auto [it, _] = palette.emplace(std::move(key), 0);
                sig[s][v] = 0;
                (void)it;
            }
        }
        std::uint32_t next = 0;
        for (auto& kv : palette) kv.second = next++;
        bool changed = false;
        for (int s = 0; s < 2; ++s)
            for (std::uint32_t v = 0; v < n; ++v) {
                std::vector<std::uint32_t> key;
                key.push_back(color[s][v]);
                for (std::uint32_t u = 0; u < n; ++u)
                    if (gs[s]->has_edge(v, u)) key.push_back(color[s][u]);
                std::sort(key.begin() + 1, key.end());
                std::uint32_t c = palette.at(key);
                if (c != color[s][v]) changed = true;
                sig[s][v] = c;
            }
        color = sig;
        // histogram mismatch means no isomorphism can exist
        std::vector<std::uint32_t> ha(next, 0), hb(next, 0);
        for (std::uint32_t v = 0; v < n; ++v) { ++ha[color[0][v]]; ++hb[color[1][v]]; }
        if (ha != hb) { feasible = false; return color; }
        if (!changed) break;
    }
    return color;
}

inline bool iso_backtrack(const Graph& g, const Graph& h,
                          const std::vector<std::uint32_t>& cg, const std::vector<std::uint32_t>& ch,
                          std::uint32_t v, std::vector<std::uint32_t>& map_gh,
                          std::vector<bool>& used) {
    const std::uint32_t n = g.vertex_count();
    if (v == n) return true;
    for (std::uint32_t cand = 0; cand < n; ++cand) {
        if (used[cand] || ch[cand] != cg[v]) continue;
        bool ok = true;
        for (std::uint32_t u = 0; u < v && ok; ++u)
            ok = g.has_edge(v, u) == h.has_edge(cand, map_gh[u]);
        if (!ok) continue;
        map_gh[v] = cand;
        used[cand] = true;
        if (iso_backtrack(g, h, cg, ch, v + 1, map_gh, used)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace detail

inline IsoResult is_isomorphic(const Graph& g, const Graph& h, const Limits& lim = {}) {
    if (g.vertex_count() > lim.solver_cap || h.vertex_count() > lim.solver_cap)
        throw cap_exceeded("isomorphism solver cap exceeded");
    if (g.vertex_count() != h.vertex_count()) return {};
    bool feasible = false;
    auto colors = detail::refine_colors(g, h, feasible);
    if (!feasible) return {};
    std::vector<std::uint32_t> mapping(g.vertex_count());
    std::vector<bool> used(g.vertex_count(), false);
    if (!detail::iso_backtrack(g, h, colors[0], colors[1], 0, mapping, used)) return {};
    if (!check_isomorphism(g, h, mapping))
        throw std::logic_error("is_isomorphic produced an invalid witness");
    return {true, std::move(mapping)};
}

}  // namespace tdg
