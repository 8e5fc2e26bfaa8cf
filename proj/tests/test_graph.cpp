#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "tdg/build.hpp"
#include "tdg/graph.hpp"
#include "tdg/iso.hpp"
#include "tdg/ring.hpp"

using tdg::Graph;
using tdg::Ring;

namespace {

std::set<std::pair<std::string, std::string>> edge_labels(const Graph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [u, v] : g.edges()) {
        auto a = g.label(u), b = g.label(v);
        out.insert({std::min(a, b), std::max(a, b)});
    }
    return out;
}

}  // namespace

TEST_CASE("TD(Z2,3) matches the 7-vertex reference graph") {
    auto z2 = Ring::parse("Z2");
    auto g = tdg::build_td(z2, 3);
    REQUIRE(g.vertex_count() == 7);
    REQUIRE(g.edge_count() == 9);
    REQUIRE(g.loop_count() == 0);

    std::set<std::pair<std::string, std::string>> expect{
        {"010", "100"}, {"001", "100"}, {"001", "010"}, {"011", "100"}, {"010", "101"},
        {"001", "110"}, {"110", "111"}, {"101", "111"}, {"011", "111"}};
    CHECK(edge_labels(g) == expect);

    auto degs = std::multiset<std::uint32_t>{};
    for (std::uint32_t v = 0; v < 7; ++v) degs.insert(g.degree(v));
    CHECK(degs == std::multiset<std::uint32_t>{3, 3, 3, 3, 2, 2, 2});
}

TEST_CASE("TD(Z2,2) structure") {
    auto g = tdg::build_td(Ring::parse("Z2"), 2);
    REQUIRE(g.vertex_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(edge_labels(g) == std::set<std::pair<std::string, std::string>>{{"01", "10"}});
    // vertex 11 isolated
    CHECK(g.degree(2) == 0);
    CHECK(g.label(2) == "11");
}

TEST_CASE("TD(F,1) is the empty graph on q-1 vertices") {
    for (auto spec : {"Z5", "GF(4)", "Z7"}) {
        auto f = Ring::parse(spec);
        auto g = tdg::build_td(f, 1);
        CHECK(g.vertex_count() == f.cardinality() - 1);
        CHECK(g.edge_count() == 0);
    }
}

TEST_CASE("closed graph carries loops at isotropic vectors") {
    auto g = tdg::build_td_closed(Ring::parse("Z2"), 3);
    REQUIRE(g.vertex_count() == 8);
    std::set<std::string> loops;
    for (auto v : g.loop_vertices()) loops.insert(g.label(v));
    CHECK(loops == std::set<std::string>{"000", "110", "101", "011"});

    CHECK(tdg::build_td_closed(Ring::parse("Z3"), 3).loop_count() == 9);

    auto z3n1 = tdg::build_td_closed(Ring::parse("Z3"), 1);
    REQUIRE(z3n1.loop_count() == 1);
    CHECK(z3n1.label(z3n1.loop_vertices()[0]) == "0");
}

TEST_CASE("closed graph loop set is exactly the norm-zero set") {
    for (auto [spec, n] : std::vector<std::pair<const char*, unsigned>>{
             {"Z4", 2}, {"Z6", 2}, {"GF(4)", 2}, {"Z2xZ3", 2}, {"Z5", 2}}) {
        auto r = Ring::parse(spec);
        auto g = tdg::build_td_closed(r, n);
        auto census = tdg::isotropy_census(r, n);
        CHECK(g.loop_count() == census.total_solutions);
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
            auto coords = tdg::vector_at(r, n, v);
            CHECK(g.has_loop(v) == (tdg::norm_index(r, coords) == 0));
            CHECK_FALSE(g.has_edge(v, v));
        }
    }
}

TEST_CASE("zero-divisor graphs") {
    auto g6 = tdg::build_zdg(Ring::parse("Z6"));
    REQUIRE(g6.vertex_count() == 3);
    CHECK(edge_labels(g6) == std::set<std::pair<std::string, std::string>>{{"2", "3"}, {"3", "4"}});

    auto g4 = tdg::build_zdg(Ring::parse("Z4"));
    REQUIRE(g4.vertex_count() == 1);
    CHECK(g4.label(0) == "2");
    CHECK(g4.edge_count() == 0);

    auto g22 = tdg::build_zdg(Ring::parse("Z2xZ2"));
    REQUIRE(g22.vertex_count() == 2);
    CHECK(g22.edge_count() == 1);

    auto g9 = tdg::build_zdg(Ring::parse("Z9"));
    REQUIRE(g9.vertex_count() == 2);
    CHECK(edge_labels(g9) == std::set<std::pair<std::string, std::string>>{{"3", "6"}});
}

TEST_CASE("tensor product basics") {
    // two loopless K_2 factors give two disjoint edges
    Graph k2(2);
    k2.set_label(0, "a");
    k2.set_label(1, "b");
    k2.add_edge(0, 1);
    auto t = tdg::tensor_product(k2, k2);
    REQUIRE(t.vertex_count() == 4);
    CHECK(t.edge_count() == 2);
    CHECK(t.has_edge(0, 3));  // (a,a)-(b,b)
    CHECK(t.has_edge(1, 2));  // (a,b)-(b,a)
    CHECK_FALSE(t.has_edge(0, 1));
    CHECK(t.loop_count() == 0);

    // loops multiply
    for (auto [ra, rb, n] : std::vector<std::tuple<const char*, const char*, unsigned>>{
             {"Z2", "Z3", 2}, {"Z2", "Z2", 2}, {"Z3", "GF(4)", 1}}) {
        auto a = tdg::build_td_closed(Ring::parse(ra), n);
        auto b = tdg::build_td_closed(Ring::parse(rb), n);
        auto prod = tdg::tensor_product(a, b);
        CHECK(prod.vertex_count() == a.vertex_count() * b.vertex_count());
        CHECK(prod.loop_count() == a.loop_count() * b.loop_count());
    }

    // a loop at u together with an edge v -- v' induces (u,v) -- (u,v')
    Graph loopy(2);
    loopy.set_label(0, "u");
    loopy.set_label(1, "w");
    loopy.set_loop(0);
    auto lt = tdg::tensor_product(loopy, k2);
    CHECK(lt.has_edge(0, 1));        // (u,a)-(u,b)
    CHECK_FALSE(lt.has_edge(2, 3));  // w has no loop
}

TEST_CASE("closed graph of a product ring is the tensor product of the factors") {
    auto z6 = Ring::parse("Z6");
    auto z2 = Ring::parse("Z2");
    auto z3 = Ring::parse("Z3");
    auto g = tdg::build_td_closed(z6, 2);
    auto t = tdg::tensor_product(tdg::build_td_closed(z2, 2), tdg::build_td_closed(z3, 2));
    REQUIRE(g.vertex_count() == 36);
    REQUIRE(t.vertex_count() == 36);

    // bijection induced by a -> (a mod 2, a mod 3) on coordinates
    auto to_tensor = [&](std::uint32_t v) {
        auto coords = tdg::vector_at(z6, 2, v);
        std::uint64_t u = 0, w = 0;
        for (auto c : coords) {
            u = u * 2 + c % 2;
            w = w * 3 + c % 3;
        }
        return static_cast<std::uint32_t>(u * 9 + w);
    };
    std::vector<std::uint32_t> mapping(36);
    for (std::uint32_t v = 0; v < 36; ++v) mapping[v] = to_tensor(v);
    CHECK(tdg::check_isomorphism(g, t, mapping));

    // the isomorphism engine agrees and produces its own valid witness
    auto iso = tdg::is_isomorphic(g, t);
    REQUIRE(iso.isomorphic);
    CHECK(tdg::check_isomorphism(g, t, iso.mapping));
}

TEST_CASE("vertex ids follow the mixed-radix order") {
    auto z2 = Ring::parse("Z2");
    auto g = tdg::build_td(z2, 3);
    // TD drops the zero vector, so id = index - 1
    CHECK(g.label(0) == "001");
    CHECK(g.label(6) == "111");
    auto gc = tdg::build_td_closed(z2, 3);
    CHECK(gc.label(0) == "000");
    CHECK(gc.label(7) == "111");

    auto z2z3 = Ring::parse("Z2xZ3");
    auto h = tdg::build_td(z2z3, 2);
    CHECK(h.label(0) == "(0,0)|(0,1)");
}

TEST_CASE("build caps") {
    tdg::Limits lim;
    lim.build_vertex_cap = 100;
    CHECK_THROWS_AS(tdg::build_td(Ring::parse("Z2"), 20, lim), tdg::cap_exceeded);
    CHECK_THROWS_AS(tdg::build_td_closed(Ring::parse("Z11"), 3, lim), tdg::cap_exceeded);
    CHECK_NOTHROW(tdg::build_td(Ring::parse("Z2"), 3, lim));
}

TEST_CASE("exports are byte-stable and well-formed") {
    auto g = tdg::build_td(Ring::parse("Z2"), 3);
    auto dot1 = tdg::to_dot(g);
    auto dot2 = tdg::to_dot(tdg::build_td(Ring::parse("Z2"), 3));
    CHECK(dot1 == dot2);
    CHECK(dot1.find("graph \"td Z2 n=3\"") == 0);
    CHECK(dot1.find("0 [label=\"001\"]") != std::string::npos);

    auto j = nlohmann::json::parse(tdg::to_json(g));
    CHECK(j["spec"] == "Z2");
    CHECK(j["n"] == 3);
    CHECK(j["variant"] == "td");
    CHECK(j["vertices"].size() == 7);
    CHECK(j["edges"].size() == 9);
    CHECK(j["loops"].empty());

    auto gc = tdg::build_td_closed(Ring::parse("Z2"), 3);
    auto dotc = tdg::to_dot(gc);
    CHECK(dotc.find("6 -- 6;") != std::string::npos);  // loop at 110 rendered as self edge
}
