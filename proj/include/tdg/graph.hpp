#pragma once

// Dense simple-graph container with an optional loop set.  Adjacency is a
// symmetric bit matrix with the diagonal excluded; loops are carried in a
// separate bit row.  Dot product graphs are dense, so no sparse variant.

#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace tdg {

struct Limits {
    std::uint64_t build_vertex_cap = std::uint64_t{1} << 20;
    std::uint32_t solver_cap = 4096;       // isomorphism, domination, clique, diameter, planarity
    std::uint32_t complement_cap = 1024;   // independence via complement clique
    std::uint32_t loop_clique_cap = 1024;  // clique-loop solver, counts loop vertices
};

enum class GraphVariant { td, tdbar, zdg, tensor, other };

inline const char* variant_name(GraphVariant v) {
    switch (v) {
        case GraphVariant::td: return "td";
        case GraphVariant::tdbar: return "tdbar";
        case GraphVariant::zdg: return "zdg";
        case GraphVariant::tensor: return "tensor";
        default: return "other";
    }
}

class Graph {
public:
    Graph(std::uint32_t vertices, GraphVariant variant = GraphVariant::other,
          std::string ring_spec = "", unsigned dim = 0)
        : n_(vertices),
          words_((vertices + 63) / 64),
          adj_(static_cast<std::size_t>(n_) * words_, 0),
          loops_(words_, 0),
          labels_(vertices),
          variant_(variant),
          ring_spec_(std::move(ring_spec)),
          dim_(dim) {}

    std::uint32_t vertex_count() const noexcept { return n_; }
    std::uint32_t words_per_row() const noexcept { return words_; }
    GraphVariant variant() const noexcept { return variant_; }
    const std::string& ring_spec() const noexcept { return ring_spec_; }
    unsigned dim() const noexcept { return dim_; }

    void add_edge(std::uint32_t u, std::uint32_t v) {
        if (u == v) throw std::invalid_argument("no self edges in adjacency; use set_loop");
        bit_set(adj_, row_offset(u) + v / 64, v % 64);
        bit_set(adj_, row_offset(v) + u / 64, u % 64);
    }
    bool has_edge(std::uint32_t u, std::uint32_t v) const {
        if (u == v) return false;
        return bit_test(adj_, row_offset(u) + v / 64, v % 64);
    }
    void set_loop(std::uint32_t v) { bit_set(loops_, v / 64, v % 64); }
    bool has_loop(std::uint32_t v) const { return bit_test(loops_, v / 64, v % 64); }

    std::span<const std::uint64_t> row(std::uint32_t v) const {
        return {adj_.data() + row_offset(v), words_};
    }
    std::span<const std::uint64_t> loop_bits() const { return {loops_.data(), words_}; }

    std::uint32_t degree(std::uint32_t v) const {
        std::uint32_t d = 0;
        for (std::uint32_t w = 0; w < words_; ++w)
            d += static_cast<std::uint32_t>(__builtin_popcountll(adj_[row_offset(v) + w]));
        return d;
    }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (std::uint32_t v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    std::vector<std::uint32_t> loop_vertices() const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t v = 0; v < n_; ++v)
            if (has_loop(v)) out.push_back(v);
        return out;
    }
    std::size_t loop_count() const { return loop_vertices().size(); }

    std::vector<std::uint32_t> neighbors(std::uint32_t v) const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t u = 0; u < n_; ++u)
            if (has_edge(v, u)) out.push_back(u);
        return out;
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
        for (std::uint32_t u = 0; u < n_; ++u)
            for (std::uint32_t v = u + 1; v < n_; ++v)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    void set_label(std::uint32_t v, std::string s) { labels_.at(v) = std::move(s); }
    const std::string& label(std::uint32_t v) const { return labels_.at(v); }

private:
    std::size_t row_offset(std::uint32_t v) const { return static_cast<std::size_t>(v) * words_; }
    static void bit_set(std::vector<std::uint64_t>& bits, std::size_t word, unsigned pos) {
        bits[word] |= std::uint64_t{1} << pos;
    }
    static bool bit_test(const std::vector<std::uint64_t>& bits, std::size_t word, unsigned pos) {
        return (bits[word] >> pos) & 1;
    }

    std::uint32_t n_;
    std::uint32_t words_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint64_t> loops_;
    std::vector<std::string> labels_;
    GraphVariant variant_;
    std::string ring_spec_;
    unsigned dim_;
};

// ---- exports: byte-stable for identical inputs ----

inline std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph \"" << variant_name(g.variant());
    if (!g.ring_spec().empty()) os << ' ' << g.ring_spec() << " n=" << g.dim();
    os << "\" {\n";
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        os << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
        if (g.has_loop(u)) os << "  " << u << " -- " << u << ";\n";
        for (std::uint32_t v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) os << "  " << u << " -- " << v << ";\n";
    }
    os << "}\n";
    return os.str();
}

inline std::string to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["spec"] = g.ring_spec();
    j["n"] = g.dim();
    j["variant"] = variant_name(g.variant());
    auto& verts = j["vertices"] = nlohmann::ordered_json::array();
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) verts.push_back(g.label(v));
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    auto& loops = j["loops"] = nlohmann::ordered_json::array();
    for (auto v : g.loop_vertices()) loops.push_back(g.label(v));
    return j.dump(2) + "\n";
}

inline std::string to_table(const Graph& g) {
    std::ostringstream os;
    os << "variant: " << variant_name(g.variant()) << "\n";
    os << "spec: " << g.ring_spec() << "\n";
    os << "n: " << g.dim() << "\n";
    os << "vertices (" << g.vertex_count() << "):";
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) os << ' ' << g.label(v);
    os << "\n";
    auto es = g.edges();
    os << "edges (" << es.size() << "):\n";
    for (const auto& [u, v] : es) os << "  " << g.label(u) << " -- " << g.label(v) << "\n";
    auto ls = g.loop_vertices();
    os << "loops (" << ls.size() << "):";
    for (auto v : ls) os << ' ' << g.label(v);
    os << "\n";
    return os.str();
}

}  // namespace tdg
