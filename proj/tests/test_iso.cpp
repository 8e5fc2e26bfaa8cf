#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tdg/build.hpp"
#include "tdg/iso.hpp"
#include "tdg/ring.hpp"

using tdg::Graph;
using tdg::Ring;

namespace {

Graph random_graph(oracle::Rng& rng, std::uint32_t n, int edge_pct, bool loops) {
    Graph g(n);
    for (std::uint32_t v = 0; v < n; ++v) g.set_label(v, std::to_string(v));
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (rng.below(100) < static_cast<std::uint64_t>(edge_pct)) g.add_edge(u, v);
    if (loops)
        for (std::uint32_t v = 0; v < n; ++v)
            if (rng.below(100) < 30) g.set_loop(v);
    return g;
}

Graph relabel(const Graph& g, const std::vector<std::uint32_t>& perm) {
    Graph h(g.vertex_count());
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) h.set_label(perm[v], g.label(v));
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
        if (g.has_loop(u)) h.set_loop(perm[u]);
        for (std::uint32_t v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
    }
    return h;
}

}  // namespace

TEST_CASE("a graph is isomorphic to itself via the identity") {
    auto g = tdg::build_td(Ring::parse("Z2"), 2);
    auto res = tdg::is_isomorphic(g, g);
    REQUIRE(res.isomorphic);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) CHECK(res.mapping[v] == v);
}

TEST_CASE("TD(Z2,4) and TD(GF(4),2) have 15 vertices each but differ") {
    auto a = tdg::build_td(Ring::parse("Z2"), 4);
    auto b = tdg::build_td(Ring::parse("GF(4)"), 2);
    REQUIRE(a.vertex_count() == 15);
    REQUIRE(b.vertex_count() == 15);
    CHECK_FALSE(tdg::is_isomorphic(a, b).isomorphic);
}

TEST_CASE("engine agrees with permutation search on small graphs") {
    oracle::Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.below(5));
        auto g = random_graph(rng, n, 40, trial % 2 == 0);
        auto h = random_graph(rng, n, 40, trial % 2 == 0);
        bool expect = oracle::brute_isomorphic(g, h);
        auto res = tdg::is_isomorphic(g, h);
        INFO("trial " << trial << " n=" << n);
        REQUIRE(res.isomorphic == expect);
        if (res.isomorphic) CHECK(tdg::check_isomorphism(g, h, res.mapping));
    }
}

TEST_CASE("relabeled graphs are recognized with a valid witness") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t n = 4 + static_cast<std::uint32_t>(rng.below(20));
        auto g = random_graph(rng, n, 35, true);
        std::vector<std::uint32_t> perm(n);
        for (std::uint32_t v = 0; v < n; ++v) perm[v] = v;
        for (std::uint32_t v = n; v-- > 1;) std::swap(perm[v], perm[rng.below(v + 1)]);
        auto h = relabel(g, perm);
        auto res = tdg::is_isomorphic(g, h);
        REQUIRE(res.isomorphic);
        CHECK(tdg::check_isomorphism(g, h, res.mapping));
    }
}

TEST_CASE("loops must map to loops") {
    Graph g(2), h(2);
    g.add_edge(0, 1);
    h.add_edge(0, 1);
    g.set_loop(0);
    h.set_loop(0);
    h.set_loop(1);
    CHECK_FALSE(tdg::is_isomorphic(g, h).isomorphic);
    Graph h2(2);
    h2.add_edge(0, 1);
    h2.set_loop(1);
    auto res = tdg::is_isomorphic(g, h2);
    REQUIRE(res.isomorphic);
    CHECK(res.mapping[0] == 1);
}

TEST_CASE("isomorphism is reflexive and symmetric on a sample") {
    oracle::Rng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = random_graph(rng, 6 + static_cast<std::uint32_t>(rng.below(6)), 45, true);
        auto h = random_graph(rng, g.vertex_count(), 45, true);
        CHECK(tdg::is_isomorphic(g, g).isomorphic);
        CHECK(tdg::is_isomorphic(g, h).isomorphic == tdg::is_isomorphic(h, g).isomorphic);
    }
}

TEST_CASE("isomorphism solver cap") {
    tdg::Limits lim;
    lim.solver_cap = 4;
    auto g = tdg::build_td(Ring::parse("Z2"), 3);
    CHECK_THROWS_AS(tdg::is_isomorphic(g, g, lim), tdg::cap_exceeded);
}
