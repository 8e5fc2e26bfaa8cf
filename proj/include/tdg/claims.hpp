#pragma once

// Claim registry: every structural identity about dot product graphs that
// this library is expected to verify, each one evaluated on desk-scale
// instances against independent exhaustive computation.  A claim is never
// assumed true: refutations are first-class results, and instances known
// to come out refuted are flagged as erratum candidates so the run stays
// green while the discrepancy remains visible in the reports.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tdg/build.hpp"
#include "tdg/graph.hpp"
#include "tdg/invariants.hpp"
#include "tdg/iso.hpp"
#include "tdg/planarity.hpp"
#include "tdg/ring.hpp"
#include "tdg/vec.hpp"

namespace tdg {

enum class CheckStatus { confirmed, refuted, skipped };

struct CheckReport {
    std::string claim;
    std::string params;
    CheckStatus status = CheckStatus::skipped;
    bool erratum_candidate = false;  // refutation anticipated and recorded as such
    std::string observed;
    std::string expected;
    std::string witness;
    std::string reason;  // for skipped
    std::int64_t runtime_ms = 0;
};

struct Budget {
    bool full = false;  // include instances slower than the default sweep
};

struct ClaimDef {
    std::string id;
    std::string statement;
    std::function<void(const Budget&, std::vector<CheckReport>&)> run;
};

struct Summary {
    int confirmed = 0;
    int refuted_expected = 0;
    int refuted_unexpected = 0;
    int skipped = 0;
};

inline Summary summarize(const std::vector<CheckReport>& reports) {
    Summary s;
    for (const auto& r : reports) {
        switch (r.status) {
            case CheckStatus::confirmed: ++s.confirmed; break;
            case CheckStatus::refuted: r.erratum_candidate ? ++s.refuted_expected : ++s.refuted_unexpected; break;
            case CheckStatus::skipped: ++s.skipped; break;
        }
    }
    return s;
}

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::confirmed: return "confirmed";
        case CheckStatus::refuted: return "refuted";
        default: return "skipped";
    }
}

inline std::string report_json_line(const CheckReport& r, bool include_runtime = true) {
    nlohmann::ordered_json j;
    j["claim"] = r.claim;
    j["params"] = r.params;
    j["status"] = status_name(r.status);
    j["erratum_candidate"] = r.erratum_candidate;
    j["observed"] = r.observed;
    j["expected"] = r.expected;
    j["witness"] = r.witness;
    j["reason"] = r.reason;
    if (include_runtime) j["runtime_ms"] = r.runtime_ms;
    return j.dump();
}

inline std::string summary_json_line(const Summary& s) {
    nlohmann::ordered_json j;
    j["summary"]["confirmed"] = s.confirmed;
    j["summary"]["refuted_expected"] = s.refuted_expected;
    j["summary"]["refuted_unexpected"] = s.refuted_unexpected;
    j["summary"]["skipped"] = s.skipped;
    return j.dump();
}

// glob over claim ids: '*' and '?' only
inline bool glob_match(const std::string& pattern, const std::string& text) {
    std::size_t p = 0, t = 0, star = std::string::npos, star_t = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == text[t] || pattern[p] == '?')) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            star_t = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++star_t;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

namespace claims {

// ---- shared helpers ----

inline const Ring& ring_of(const std::string& spec) {
    static std::map<std::string, Ring> cache;
    auto it = cache.find(spec);
    if (it == cache.end()) it = cache.emplace(spec, Ring::parse(spec)).first;
    return it->second;
}

inline const Graph& graph_of(const std::string& spec, unsigned n, GraphVariant variant) {
    static std::map<std::string, Graph> cache;
    std::string key = spec + "|" + std::to_string(n) + "|" + variant_name(variant);
    auto it = cache.find(key);
    if (it == cache.end()) {
        const Ring& r = ring_of(spec);
        Graph g = variant == GraphVariant::td    ? build_td(r, n)
                  : variant == GraphVariant::tdbar ? build_td_closed(r, n)
                                                   : build_zdg(r);
        it = cache.emplace(key, std::move(g)).first;
    }
    return it->second;
}

inline std::int64_t gamma_of(const std::string& spec, unsigned n) {
    static std::map<std::string, std::int64_t> cache;
    std::string key = spec + "|" + std::to_string(n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, domination_number(graph_of(spec, n, GraphVariant::td)).value).first;
    return it->second;
}

inline std::string label_set(const Graph& g, const std::vector<std::uint32_t>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ',';
        out += g.label(vs[i]);
    }
    return out + "}";
}

template <typename F>
inline void instance(std::vector<CheckReport>& out, const std::string& claim,
                     const std::string& params, F&& body) {
    CheckReport r;
    r.claim = claim;
    r.params = params;
    auto start = std::chrono::steady_clock::now();
    body(r);
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    out.push_back(std::move(r));
}

inline void equality(CheckReport& r, std::int64_t observed, std::int64_t expected,
                     bool erratum_if_refuted = false) {
    r.observed = std::to_string(observed);
    r.expected = std::to_string(expected);
    if (observed == expected) {
        r.status = CheckStatus::confirmed;
    } else {
        r.status = CheckStatus::refuted;
        r.erratum_candidate = erratum_if_refuted;
    }
}

inline void lower_bound(CheckReport& r, std::int64_t observed, std::int64_t bound) {
    r.observed = std::to_string(observed);
    r.expected = ">= " + std::to_string(bound);
    r.status = observed >= bound ? CheckStatus::confirmed : CheckStatus::refuted;
}

inline void upper_bound(CheckReport& r, std::int64_t observed, std::int64_t bound) {
    r.observed = std::to_string(observed);
    r.expected = "<= " + std::to_string(bound);
    r.status = observed <= bound ? CheckStatus::confirmed : CheckStatus::refuted;
}

inline std::string field_spec(std::uint64_t q) {
    return detail::is_prime_u64(q) ? "Z" + std::to_string(q) : "GF(" + std::to_string(q) + ")";
}

inline std::uint64_t pow_u64(std::uint64_t base, unsigned e) {
    std::uint64_t p = 1;
    while (e--) p *= base;
    return p;
}

// natural pairing of a product-ring vector with the pair of factor vectors
inline std::vector<std::uint32_t> pairing_map(const Ring& rs, const Ring& r, const Ring& s,
                                              unsigned n) {
    const std::uint64_t total = pow_u64(rs.cardinality(), n);
    std::vector<std::uint32_t> mapping(total);
    for (std::uint64_t v = 0; v < total; ++v) {
        auto coords = vector_at(rs, n, v);
        std::uint64_t u = 0, w = 0;
        for (auto c : coords) {
            u = u * r.cardinality() + c / s.cardinality();
            w = w * s.cardinality() + c % s.cardinality();
        }
        mapping[v] = static_cast<std::uint32_t>(u * pow_u64(s.cardinality(), n) + w);
    }
    return mapping;
}

// all fields of size <= 27, the default sweep for field-indexed claims
inline const std::vector<std::uint64_t>& small_field_sizes() {
    static std::vector<std::uint64_t> q{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27};
    return q;
}

// ---- section: closed graph structure and loop counts ----

inline void claim_tensor_decomposition(const Budget&, std::vector<CheckReport>& out) {
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"Z2", "Z3"}, {"Z2", "Z2"}, {"Z3", "GF(4)"}};
    for (const auto& [ra, rb] : pairs)
        for (unsigned n : {1u, 2u}) {
            instance(out, "tensor-decomposition",
                     "R=" + ra + " S=" + rb + " n=" + std::to_string(n), [&](CheckReport& r) {
                         const Ring& rr = ring_of(ra);
                         const Ring& rs = ring_of(rb);
                         const Ring& prod = ring_of(ra + "x" + rb);
                         const Graph& g = graph_of(ra + "x" + rb, n, GraphVariant::tdbar);
                         Graph t = tensor_product(graph_of(ra, n, GraphVariant::tdbar),
                                                  graph_of(rb, n, GraphVariant::tdbar));
                         auto mapping = pairing_map(prod, rr, rs, n);
                         bool ok = check_isomorphism(g, t, mapping);
                         r.observed = ok ? "isomorphic" : "not isomorphic";
                         r.expected = "isomorphic";
                         r.witness = "componentwise pairing bijection";
                         r.status = ok ? CheckStatus::confirmed : CheckStatus::refuted;
                     });
        }
    // Z6 is kept unfactored, so its closed graph being the tensor product of
    // the Z2 and Z3 closed graphs is a genuine isomorphism, reached both by
    // the explicit residue map and by the search engine
    for (unsigned n : {1u, 2u}) {
        instance(out, "tensor-decomposition", "R=Z2 S=Z3 n=" + std::to_string(n) + " via=Z6",
                 [&](CheckReport& r) {
                     const Ring& z6 = ring_of("Z6");
                     const Graph& g = graph_of("Z6", n, GraphVariant::tdbar);
                     Graph t = tensor_product(graph_of("Z2", n, GraphVariant::tdbar),
                                              graph_of("Z3", n, GraphVariant::tdbar));
                     const std::uint64_t total = pow_u64(6, n);
                     std::vector<std::uint32_t> crt(total);
                     for (std::uint64_t v = 0; v < total; ++v) {
                         auto coords = vector_at(z6, n, v);
                         std::uint64_t u = 0, w = 0;
                         for (auto c : coords) {
                             u = u * 2 + c % 2;
                             w = w * 3 + c % 3;
                         }
                         crt[v] = static_cast<std::uint32_t>(u * pow_u64(3, n) + w);
                     }
                     bool crt_ok = check_isomorphism(g, t, crt);
                     auto engine = is_isomorphic(g, t);
                     bool engine_ok = engine.isomorphic && check_isomorphism(g, t, engine.mapping);
                     r.observed = std::string(crt_ok ? "crt bijection verified" : "crt bijection failed") +
                                  ", engine " + (engine_ok ? "agrees" : "disagrees");
                     r.expected = "crt bijection verified, engine agrees";
                     r.witness = "a -> (a mod 2, a mod 3) on every coordinate";
                     r.status = crt_ok && engine_ok ? CheckStatus::confirmed : CheckStatus::refuted;
                 });
    }
}

inline void claim_loop_product(const Budget&, std::vector<CheckReport>& out) {
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"Z2", "Z3"}, {"Z2", "Z2"}, {"Z3", "GF(4)"}};
    for (const auto& [ra, rb] : pairs)
        for (unsigned n : {1u, 2u}) {
            instance(out, "loop-product", "R=" + ra + " S=" + rb + " n=" + std::to_string(n),
                     [&](CheckReport& r) {
                         const Graph& ga = graph_of(ra, n, GraphVariant::tdbar);
                         const Graph& gb = graph_of(rb, n, GraphVariant::tdbar);
                         const Graph& gp = graph_of(ra + "x" + rb, n, GraphVariant::tdbar);
                         Graph t = tensor_product(ga, gb);
                         std::int64_t prod = static_cast<std::int64_t>(ga.loop_count() * gb.loop_count());
                         bool ok = static_cast<std::int64_t>(t.loop_count()) == prod &&
                                   static_cast<std::int64_t>(gp.loop_count()) == prod;
                         r.observed = "tensor=" + std::to_string(t.loop_count()) +
                                      " product-ring=" + std::to_string(gp.loop_count());
                         r.expected = std::to_string(prod) + " (factor loop counts multiplied)";
                         r.status = ok ? CheckStatus::confirmed : CheckStatus::refuted;
                     });
        }
}

inline void claim_loop_count_closed(const Budget&, std::vector<CheckReport>& out) {
    for (const char* spec : {"Z2", "Z3", "Z4", "Z6", "GF(4)", "Z2xZ2"})
        for (unsigned n : {1u, 2u, 3u}) {
            instance(out, "loop-count-closed",
                     std::string("R=") + spec + " n=" + std::to_string(n), [&](CheckReport& r) {
                         const Graph& g = graph_of(spec, n, GraphVariant::tdbar);
                         auto census = isotropy_census(ring_of(spec), n);
                         equality(r, static_cast<std::int64_t>(g.loop_count()),
                                  static_cast<std::int64_t>(census.nontrivial + 1));
                     });
        }
}

inline void claim_loop_count_odd_prime(const Budget& budget, std::vector<CheckReport>& out) {
    std::vector<std::uint64_t> primes{3, 5, 7};
    if (budget.full) primes.push_back(11);
    for (std::uint64_t p : primes)
        for (unsigned n : {3u, 5u}) {
            instance(out, "loop-count-odd-prime",
                     "p=" + std::to_string(p) + " n=" + std::to_string(n), [&](CheckReport& r) {
                         auto census = isotropy_census(ring_of("Z" + std::to_string(p)), n);
                         equality(r, static_cast<std::int64_t>(census.total_solutions),
                                  static_cast<std::int64_t>(pow_u64(p, n - 1)));
                     });
        }
}

inline void claim_loop_count_char2(const Budget&, std::vector<CheckReport>& out) {
    for (std::uint64_t q : {2, 4, 8})
        for (unsigned n : {2u, 3u}) {
            instance(out, "loop-count-char2",
                     "q=" + std::to_string(q) + " n=" + std::to_string(n), [&](CheckReport& r) {
                         auto census = isotropy_census(ring_of(field_spec(q)), n);
                         equality(r, static_cast<std::int64_t>(census.total_solutions),
                                  static_cast<std::int64_t>(pow_u64(q, n - 1)));
                     });
        }
}

inline void claim_chevalley_warning(const Budget&, std::vector<CheckReport>& out) {
    for (std::uint64_t q : small_field_sizes()) {
        instance(out, "chevalley-warning", "q=" + std::to_string(q) + " n=3", [&](CheckReport& r) {
            auto [count, divisible] = chevalley_warning_check(ring_of(field_spec(q)), 3);
            r.observed = std::to_string(count) + (divisible ? " divisible" : " not divisible");
            r.expected = "count divisible by the characteristic";
            r.status = divisible ? CheckStatus::confirmed : CheckStatus::refuted;
        });
    }
}

inline void claim_o_f_2_formula(const Budget& budget, std::vector<CheckReport>& out) {
    auto sizes = small_field_sizes();
    if (budget.full)
        for (std::uint64_t q : {29, 31, 32, 37, 41, 43, 47, 49}) sizes.push_back(q);
    for (std::uint64_t q : sizes) {
        instance(out, "O-F-2-formula", "q=" + std::to_string(q), [&](CheckReport& r) {
            std::int64_t expect = q % 2 == 0 ? static_cast<std::int64_t>(q - 1)
                                  : q % 4 == 1 ? static_cast<std::int64_t>(2 * (q - 1))
                                               : 0;
            auto census = isotropy_census(ring_of(field_spec(q)), 2);
            equality(r, static_cast<std::int64_t>(census.nontrivial), expect);
        });
    }
}

// ---- section: degrees and rigidity ----

inline void claim_unit_coordinate_degree(const Budget&, std::vector<CheckReport>& out) {
    for (const char* spec : {"Z4", "Z6", "Z2xZ2"})
        for (unsigned n : {2u, 3u}) {
            instance(out, "unit-coordinate-degree",
                     std::string("R=") + spec + " n=" + std::to_string(n), [&](CheckReport& r) {
                         const Ring& ring = ring_of(spec);
                         const Graph& g = graph_of(spec, n, GraphVariant::td);
                         const std::int64_t base =
                             static_cast<std::int64_t>(pow_u64(ring.cardinality(), n - 1));
                         std::uint32_t checked = 0, mismatches = 0;
                         for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
                             auto coords = vector_at(ring, n, v + 1);
                             bool unit = std::any_of(coords.begin(), coords.end(),
                                                     [&](std::uint64_t c) { return ring.is_unit(c); });
                             if (!unit) continue;
                             ++checked;
                             std::int64_t expect =
                                 base - (norm_index(ring, coords) == 0 ? 2 : 1);
                             if (g.degree(v) != expect) ++mismatches;
                         }
                         r.observed = std::to_string(checked) + " vertices checked, " +
                                      std::to_string(mismatches) + " mismatches";
                         r.expected = "degree |R|^{n-1} - 1, minus one more when the norm is 0";
                         r.status = mismatches == 0 && checked > 0 ? CheckStatus::confirmed
                                                                   : CheckStatus::refuted;
                     });
        }
}

inline void claim_field_regularity(const Budget&, std::vector<CheckReport>& out) {
    auto run_case = [&](const char* tag, std::uint64_t q, unsigned n,
                        std::vector<std::int64_t> expect_degrees) {
        instance(out, "field-regularity",
                 std::string("case=") + tag + " q=" + std::to_string(q) + " n=" + std::to_string(n),
                 [&](CheckReport& r) {
                     const Graph& g = graph_of(field_spec(q), n, GraphVariant::td);
                     auto degs = degree_sequence(g);
                     std::set<std::uint32_t> distinct(degs.per_vertex.begin(), degs.per_vertex.end());
                     std::set<std::int64_t> expect(expect_degrees.begin(), expect_degrees.end());
                     std::string got;
                     for (auto d : distinct) got += (got.empty() ? "" : ",") + std::to_string(d);
                     std::string want;
                     for (auto d : expect) want += (want.empty() ? "" : ",") + std::to_string(d);
                     r.observed = "degrees {" + got + "}";
                     r.expected = "degrees {" + want + "}";
                     bool ok = distinct.size() == expect.size();
                     for (auto d : distinct) ok &= expect.count(static_cast<std::int64_t>(d)) > 0;
                     r.status = ok ? CheckStatus::confirmed : CheckStatus::refuted;
                 });
    };
    for (std::uint64_t q : {2, 3, 4, 5})  // n > 2: semi-regular q^{n-1}-1, q^{n-1}-2
        run_case("a", q, 3,
                 {static_cast<std::int64_t>(q * q) - 1, static_cast<std::int64_t>(q * q) - 2});
    for (std::uint64_t q : {3, 7, 11})  // n = 2, q = 3 mod 4: regular
        run_case("b", q, 2, {static_cast<std::int64_t>(q) - 1});
    for (std::uint64_t q : {5, 13, 9})  // n = 2, q = 1 mod 4: semi-regular
        run_case("c", q, 2, {static_cast<std::int64_t>(q) - 1, static_cast<std::int64_t>(q) - 2});
    for (std::uint64_t q : {2, 4, 8})  // n = 2, characteristic 2: semi-regular
        run_case("d", q, 2, {static_cast<std::int64_t>(q) - 1, static_cast<std::int64_t>(q) - 2});
    for (std::uint64_t q : {5, 4, 7}) {  // n = 1: empty graph on q-1 vertices
        instance(out, "field-regularity", "case=e q=" + std::to_string(q) + " n=1",
                 [&](CheckReport& r) {
                     const Graph& g = graph_of(field_spec(q), 1, GraphVariant::td);
                     bool ok = g.vertex_count() == q - 1 && g.edge_count() == 0;
                     r.observed = std::to_string(g.vertex_count()) + " vertices, " +
                                  std::to_string(g.edge_count()) + " edges";
                     r.expected = std::to_string(q - 1) + " vertices, 0 edges";
                     r.status = ok ? CheckStatus::confirmed : CheckStatus::refuted;
                 });
    }
}

inline void claim_td_f2_structure(const Budget& budget, std::vector<CheckReport>& out) {
    std::vector<std::uint64_t> sizes{2, 3, 4, 5, 7, 9};
    if (budget.full) {
        sizes.push_back(11);
        sizes.push_back(13);
    }
    for (std::uint64_t q : sizes) {
        instance(out, "td-f2-structure", "q=" + std::to_string(q), [&](CheckReport& r) {
            const Ring& f = ring_of(field_spec(q));
            const Graph& g = graph_of(field_spec(q), 2, GraphVariant::td);
            const std::uint64_t o = isotropy_census(f, 2).nontrivial;
            const std::uint64_t want_complete = o ? o / (q - 1) : 0;
            const std::uint64_t want_bipartite =
                o ? (q * q - 1 - o) / (2 * (q - 1)) : (q + 1) / 2;
            std::uint64_t complete = 0, bipartite = 0, other = 0;
            for (const auto& c : connected_components(g)) {
                if (c.vertices.size() == q - 1 && c.complete)
                    ++complete;
                else if (c.vertices.size() == 2 * (q - 1) && c.bipartite &&
                         *c.bipartite == std::make_pair(static_cast<std::uint32_t>(q - 1),
                                                        static_cast<std::uint32_t>(q - 1)))
                    ++bipartite;
                else
                    ++other;
            }
            r.observed = std::to_string(complete) + " complete, " + std::to_string(bipartite) +
                         " complete bipartite, " + std::to_string(other) + " other";
            r.expected = std::to_string(want_complete) + " complete K_{q-1}, " +
                         std::to_string(want_bipartite) + " bipartite K_{q-1,q-1}, 0 other";
            r.status = complete == want_complete && bipartite == want_bipartite && other == 0
                           ? CheckStatus::confirmed
                           : CheckStatus::refuted;
        });
    }
}

inline void claim_field_rigidity(const Budget&, std::vector<CheckReport>& out) {
    const std::vector<std::array<std::string, 4>> pairs{
        {"Z2", "4", "GF(4)", "2"},
        {"Z2", "6", "GF(8)", "2"},
        {"Z2", "6", "GF(4)", "3"},
        {"GF(4)", "3", "GF(8)", "2"},
    };
    for (const auto& [f1, n1, f2, n2] : pairs) {
        instance(out, "field-rigidity", "F=" + f1 + " n=" + n1 + " vs E=" + f2 + " m=" + n2,
                 [&](CheckReport& r) {
                     const Graph& a = graph_of(f1, std::stoul(n1), GraphVariant::td);
                     const Graph& b = graph_of(f2, std::stoul(n2), GraphVariant::td);
                     bool iso = is_isomorphic(a, b).isomorphic;
                     r.observed = iso ? "isomorphic" : "not isomorphic";
                     r.expected = "not isomorphic (equal vertex counts, different fields)";
                     r.status = !iso ? CheckStatus::confirmed : CheckStatus::refuted;
                 });
    }
}

inline void claim_reduced_rigidity(const Budget&, std::vector<CheckReport>& out) {
    for (auto [spec, n] : std::vector<std::pair<const char*, unsigned>>{
             {"Z2xZ3", 2}, {"Z2xZ2", 2}, {"Z3xZ3", 2}, {"Z2xZ3", 3}}) {
        instance(out, "reduced-rigidity",
                 std::string("R=") + spec + " n=" + std::to_string(n) + " min-degree",
                 [&](CheckReport& r) {
                     const Ring& ring = ring_of(spec);
                     const Graph& g = graph_of(spec, n, GraphVariant::td);
                     auto degs = degree_sequence(g);
                     std::int64_t base = static_cast<std::int64_t>(pow_u64(ring.cardinality(), n - 1));
                     bool ok = degs.min == base - 1 || degs.min == base - 2;
                     r.observed = "min degree " + std::to_string(degs.min);
                     r.expected = std::to_string(base - 1) + " or " + std::to_string(base - 2);
                     r.status = ok ? CheckStatus::confirmed : CheckStatus::refuted;
                 });
    }
    instance(out, "reduced-rigidity", "R=Z2xZ2 n=2 vs S=Z2 m=4", [&](CheckReport& r) {
        bool iso = is_isomorphic(graph_of("Z2xZ2", 2, GraphVariant::td),
                                 graph_of("Z2", 4, GraphVariant::td))
                       .isomorphic;
        r.observed = iso ? "isomorphic" : "not isomorphic";
        r.expected = "not isomorphic (|R| != |S| forces distinct graphs)";
        r.status = !iso ? CheckStatus::confirmed : CheckStatus::refuted;
    });
}

inline void claim_field_vs_ring_rigidity(const Budget&, std::vector<CheckReport>& out) {
    const std::vector<std::array<std::string, 4>> pairs{
        {"Z2", "4", "Z4", "2"},    {"Z2", "4", "Z2xZ2", "2"}, {"GF(4)", "2", "Z4", "2"},
        {"GF(4)", "2", "Z2xZ2", "2"}, {"Z3", "2", "Z9", "1"},
    };
    for (const auto& [f, n, ring, m] : pairs) {
        instance(out, "field-vs-ring-rigidity", "F=" + f + " n=" + n + " vs R=" + ring + " m=" + m,
                 [&](CheckReport& r) {
                     const Graph& a = graph_of(f, std::stoul(n), GraphVariant::td);
                     const Graph& b = graph_of(ring, std::stoul(m), GraphVariant::td);
                     bool iso = is_isomorphic(a, b).isomorphic;
                     r.observed = iso ? "isomorphic" : "not isomorphic";
                     r.expected = "not isomorphic (a field plane is rigid among all rings)";
                     r.status = !iso ? CheckStatus::confirmed : CheckStatus::refuted;
                 });
    }
}

inline void claim_reduced_degree_formula(const Budget&, std::vector<CheckReport>& out) {
    for (const char* spec : {"Z2xZ3", "Z2xZ2"}) {
        instance(out, "reduced-degree-formula", std::string("R=") + spec + " n=2",
                 [&](CheckReport& r) {
                     const Ring& ring = ring_of(spec);
                     const Graph& g = graph_of(spec, 2, GraphVariant::td);
                     std::uint32_t mismatches = 0, missing = 0;
                     for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
                         auto coords = vector_at(ring, 2, v + 1);
                         auto predicted = predicted_degree(ring, 2, coords);
                         if (!predicted) { ++missing; continue; }
                         if (*predicted != g.degree(v)) ++mismatches;
                     }
                     r.observed = std::to_string(g.vertex_count()) + " vertices, " +
                                  std::to_string(mismatches) + " mismatches, " +
                                  std::to_string(missing) + " without formula";
                     r.expected = "formula applies everywhere and matches the graph";
                     r.status = mismatches == 0 && missing == 0 ? CheckStatus::confirmed
                                                                : CheckStatus::refuted;
                 });
    }
}

inline void claim_product_degree_remark(const Budget&, std::vector<CheckReport>& out) {
    instance(out, "product-degree-remark", "R=Z2 S=Z3 n=2", [&](CheckReport& r) {
        const Ring& rr = ring_of("Z2");
        const Ring& rs = ring_of("Z3");
        const Ring& prod = ring_of("Z2xZ3");
        const Graph& gr = graph_of("Z2", 2, GraphVariant::td);
        const Graph& gs = graph_of("Z3", 2, GraphVariant::td);
        const Graph& gp = graph_of("Z2xZ3", 2, GraphVariant::td);
        const unsigned n = 2;
        auto factor_degree = [&](const Graph& g, const Ring& ring,
                                 const std::vector<std::uint64_t>& coords) -> std::int64_t {
            return g.degree(static_cast<std::uint32_t>(vector_index(ring, coords) - 1));
        };
        std::uint32_t mismatches = 0;
        for (std::uint32_t v = 0; v < gp.vertex_count(); ++v) {
            auto coords = vector_at(prod, n, v + 1);
            std::vector<std::uint64_t> a(n), b(n);
            for (unsigned i = 0; i < n; ++i) {
                a[i] = prod.leaf_value_of(coords[i], 0);
                b[i] = prod.leaf_value_of(coords[i], 1);
            }
            bool a_zero = a == std::vector<std::uint64_t>(n, 0);
            bool b_zero = b == std::vector<std::uint64_t>(n, 0);
            std::int64_t expect;
            if (a_zero) {
                std::int64_t db = factor_degree(gs, rs, b);
                expect = norm_index(rs, b) != 0 ? 4 * (1 + db) - 1 : 4 * (2 + db) - 2;
            } else if (b_zero) {
                std::int64_t da = factor_degree(gr, rr, a);
                expect = norm_index(rr, a) != 0 ? 9 * (1 + da) - 1 : 9 * (2 + da) - 2;
            } else {
                std::int64_t da = factor_degree(gr, rr, a);
                std::int64_t db = factor_degree(gs, rs, b);
                bool na = norm_index(rr, a) == 0, nb = norm_index(rs, b) == 0;
                if (!na && !nb) expect = (1 + da) * (1 + db) - 1;
                else if (na && !nb) expect = (2 + da) * (1 + db) - 1;
                else if (!na && nb) expect = (1 + da) * (2 + db) - 1;
                else expect = (2 + da) * (2 + db) - 2;
            }
            if (gp.degree(v) != expect) ++mismatches;
        }
        r.observed = std::to_string(gp.vertex_count()) + " vertices, " +
                     std::to_string(mismatches) + " mismatches";
        r.expected = "every product degree matches the factor-degree formula";
        r.status = mismatches == 0 ? CheckStatus::confirmed : CheckStatus::refuted;
    });
}

// ---- section: domination ----

inline void claim_domination_field(const Budget& budget, std::vector<CheckReport>& out) {
    std::vector<std::pair<std::uint64_t, unsigned>> insts{
        {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}, {5, 3}};
    if (budget.full) {
        insts.push_back({7, 2});
        insts.push_back({7, 3});
    }
    for (auto [q, n] : insts) {
        instance(out, "domination-field", "q=" + std::to_string(q) + " n=" + std::to_string(n),
                 [&, q = q, n = n](CheckReport& r) {
                     std::int64_t expect = (q == 2 && n == 3) ? 2 : static_cast<std::int64_t>(q) + 1;
                     std::int64_t got = gamma_of(field_spec(q), n);
                     // the stated value q+1 fails at q=2, n=2, where the graph
                     // is a single edge plus an isolated vertex
                     equality(r, got, expect, /*erratum_if_refuted=*/q == 2 && n == 2);
                 });
    }
}

inline void claim_domination_nonfield_remark(const Budget&, std::vector<CheckReport>& out) {
    for (const char* spec : {"Z4", "Z6"})
        for (unsigned n : {2u, 3u}) {
            instance(out, "domination-nonfield-remark",
                     std::string("R=") + spec + " n=" + std::to_string(n), [&](CheckReport& r) {
                         const Ring& ring = ring_of(spec);
                         const Graph& g = graph_of(spec, n, GraphVariant::td);
                         // D = {(a,1,0,...) : a in R} plus {(1,0,...,0)}
                         std::vector<std::uint32_t> d;
                         for (std::uint64_t a = 0; a < ring.cardinality(); ++a) {
                             std::vector<std::uint64_t> coords(n, 0);
                             coords[0] = a;
                             coords[1] = ring.one_index();
                             d.push_back(static_cast<std::uint32_t>(vector_index(ring, coords) - 1));
                         }
                         std::vector<std::uint64_t> e1(n, 0);
                         e1[0] = ring.one_index();
                         d.push_back(static_cast<std::uint32_t>(vector_index(ring, e1) - 1));
                         bool dom = dominates(g, d);
                         if (!dom) {
                             // name one vertex left undominated
                             std::vector<bool> cov(g.vertex_count(), false);
                             for (auto x : d) {
                                 cov[x] = true;
                                 for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
                                     if (g.has_edge(x, u)) cov[u] = true;
                             }
                             for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
                                 if (!cov[u]) {
                                     r.witness = g.label(u) + " undominated";
                                     break;
                                 }
                         }
                         r.observed = dom ? "dominating" : "not dominating";
                         r.expected = "not dominating (rx + 1 = 0 unsolvable for a nonunit r)";
                         r.status = !dom ? CheckStatus::confirmed : CheckStatus::refuted;
                     });
        }
}

inline std::vector<std::uint64_t> nonunits(const Ring& r) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 0; a < r.cardinality(); ++a)
        if (!r.is_unit(a)) out.push_back(a);
    return out;
}

inline void claim_domination_bound_squared(const Budget&, std::vector<CheckReport>& out) {
    for (const char* spec : {"Z4", "Z6", "Z2xZ2"})
        for (unsigned n : {2u, 3u}) {
            instance(out, "domination-bound-squared",
                     std::string("R=") + spec + " n=" + std::to_string(n), [&](CheckReport& r) {
                         const Ring& ring = ring_of(spec);
                         const Graph& g = graph_of(spec, n, GraphVariant::td);
                         auto nu = nonunits(ring);
                         std::int64_t bound =
                             static_cast<std::int64_t>(nu.size() * nu.size()) - 1;
                         // constructed set {(r,s,0,...): r,s nonunits, not both 0}
                         std::vector<std::uint32_t> d;
                         for (auto a : nu)
                             for (auto b : nu) {
                                 if (a == 0 && b == 0) continue;
                                 std::vector<std::uint64_t> coords(n, 0);
                                 coords[0] = a;
                                 coords[1] = b;
                                 d.push_back(static_cast<std::uint32_t>(vector_index(ring, coords) - 1));
                             }
                         bool construction_dominates = dominates(g, d);
                         std::int64_t gamma = gamma_of(spec, n);
                         r.observed = "gamma=" + std::to_string(gamma) + ", constructed set " +
                                      (construction_dominates ? "dominates" : "fails");
                         r.expected = "gamma <= " + std::to_string(bound) + " and the set dominates";
                         r.witness = "|D| = " + std::to_string(d.size());
                         r.status = construction_dominates && gamma <= bound
                                        ? CheckStatus::confirmed
                                        : CheckStatus::refuted;
                     });
        }
}

inline void claim_domination_bound_linear(const Budget&, std::vector<CheckReport>& out) {
    for (const char* spec : {"Z4", "Z6", "Z2xZ2"})
        for (unsigned n : {2u, 3u}) {
            instance(out, "domination-bound-linear",
                     std::string("R=") + spec + " n=" + std::to_string(n), [&](CheckReport& r) {
                         const Ring& ring = ring_of(spec);
                         const Graph& g = graph_of(spec, n, GraphVariant::td);
                         auto nu = nonunits(ring);
                         std::int64_t bound = static_cast<std::int64_t>(nu.size()) +
                                              static_cast<std::int64_t>(ring.cardinality()) - 2;
                         // A1 = nonzero nonunits in slot 1, A2 = same in slot 2,
                         // A3 = {(u,1,0,...) : u a unit}
                         std::vector<std::uint32_t> d;
                         for (auto a : nu)
                             if (a != 0) {
                                 std::vector<std::uint64_t> c1(n, 0), c2(n, 0);
                                 c1[0] = a;
                                 c2[1] = a;
                                 d.push_back(static_cast<std::uint32_t>(vector_index(ring, c1) - 1));
                                 d.push_back(static_cast<std::uint32_t>(vector_index(ring, c2) - 1));
                             }
                         for (std::uint64_t u = 0; u < ring.cardinality(); ++u)
                             if (ring.is_unit(u)) {
                                 std::vector<std::uint64_t> coords(n, 0);
                                 coords[0] = u;
                                 coords[1] = ring.one_index();
                                 d.push_back(static_cast<std::uint32_t>(vector_index(ring, coords) - 1));
                             }
                         bool construction_dominates = dominates(g, d);
                         std::int64_t gamma = gamma_of(spec, n);
                         r.observed = "gamma=" + std::to_string(gamma) + ", constructed set " +
                                      (construction_dominates ? "dominates" : "fails");
                         r.expected = "gamma <= " + std::to_string(bound) + " and the set dominates";
                         r.witness = "|D| = " + std::to_string(d.size());
                         r.status = construction_dominates && gamma <= bound
                                        ? CheckStatus::confirmed
                                        : CheckStatus::refuted;
                     });
        }
}

inline void claim_mekis_bound(const Budget&, std::vector<CheckReport>& out) {
    struct Pair {
        const char* a;
        const char* b;
        unsigned n;
        GraphVariant variant;
    };
    for (auto [a, b, n, variant] : {Pair{"Z2", "Z3", 2, GraphVariant::tdbar},
                                    Pair{"Z2", "Z2", 2, GraphVariant::tdbar},
                                    Pair{"Z2", "Z3", 2, GraphVariant::td},
                                    Pair{"Z3", "Z3", 2, GraphVariant::td}}) {
        instance(out, "mekis-bound",
                 std::string("G=") + variant_name(variant) + "(" + a + "," + std::to_string(n) +
                     ") H=" + variant_name(variant) + "(" + b + "," + std::to_string(n) + ")",
                 [&, a = a, b = b, n = n, variant = variant](CheckReport& r) {
                     const Graph& ga = graph_of(a, n, variant);
                     const Graph& gb = graph_of(b, n, variant);
                     Graph t = tensor_product(ga, gb);
                     auto gam_a = domination_number(ga).value;
                     auto gam_b = domination_number(gb).value;
                     auto gam_t = domination_number(t).value;
                     r.witness = "gamma(G)=" + std::to_string(gam_a) +
                                 " gamma(H)=" + std::to_string(gam_b);
                     lower_bound(r, gam_t, gam_a + gam_b - 1);
                 });
    }
}

inline void claim_domination_monotone(const Budget& budget, std::vector<CheckReport>& out) {
    for (const char* spec : {"Z2", "Z3", "Z4"})
        for (unsigned n : {3u, 4u}) {
            instance(out, "domination-monotone",
                     std::string("R=") + spec + " n=" + std::to_string(n) + " vs n=" +
                         std::to_string(n - 1),
                     [&, n = n](CheckReport& r) {
                         std::int64_t hi = gamma_of(spec, n);
                         std::int64_t lo = gamma_of(spec, n - 1);
                         r.observed = "gamma(n)=" + std::to_string(hi) +
                                      " gamma(n-1)=" + std::to_string(lo);
                         r.expected = "gamma(n) <= gamma(n-1)";
                         if (hi <= lo) {
                             r.status = CheckStatus::confirmed;
                         } else {
                             r.status = CheckStatus::refuted;
                             // gamma returns to q+1 = 3 at (Z2, n=4) after the
                             // exceptional value 2 at n=3, so the inequality
                             // genuinely reverses there
                             r.erratum_candidate = std::string(spec) == "Z2" && n == 4;
                         }
                     });
        }
}

inline void claim_nu_lower_bound(const Budget& budget, std::vector<CheckReport>& out) {
    for (const char* spec : {"Z6", "Z4xZ3"})
        for (unsigned n : {2u, 3u}) {
            instance(out, "nu-lower-bound", std::string("R=") + spec + " n=" + std::to_string(n),
                     [&](CheckReport& r) {
                         const Ring& ring = ring_of(spec);
                         const Graph& g = graph_of(spec, n, GraphVariant::td);
                         const std::uint64_t nu = ring.nu();
                         auto small = domination_at_most(g, static_cast<std::uint32_t>(nu - 1));
                         r.observed = small ? "dominating set of size " + std::to_string(small->value)
                                            : "no dominating set of size " + std::to_string(nu - 1);
                         r.expected = "gamma >= nu = " + std::to_string(nu);
                         r.status = small ? CheckStatus::refuted : CheckStatus::confirmed;
                     });
        }
}

// ---- section: cliques and independence ----

inline void claim_clique_alpha_n2(const Budget&, std::vector<CheckReport>& out) {
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        const std::string spec = field_spec(q);
        instance(out, "clique-alpha-n2", "q=" + std::to_string(q) + " alpha", [&](CheckReport& r) {
            const std::uint64_t o = isotropy_census(ring_of(spec), 2).nontrivial;
            std::int64_t expect = o ? static_cast<std::int64_t>(o / (q - 1) + (q * q - 1 - o) / 2)
                                    : static_cast<std::int64_t>((q * q - 1) / 2);
            auto alpha = independence_number(graph_of(spec, 2, GraphVariant::td));
            equality(r, alpha.value, expect);
        });
        instance(out, "clique-alpha-n2", "q=" + std::to_string(q) + " omega-as-stated",
                 [&, q = q](CheckReport& r) {
                     // as stated: q-1 when q = 3 mod 4, else 2; the orientation is
                     // transposed, so the mismatch is an anticipated erratum
                     std::int64_t stated = q % 4 == 3 ? static_cast<std::int64_t>(q - 1) : 2;
                     auto omega = clique_number(graph_of(spec, 2, GraphVariant::td));
                     equality(r, omega.value, stated, /*erratum_if_refuted=*/true);
                 });
        instance(out, "clique-alpha-n2", "q=" + std::to_string(q) + " omega-transposed",
                 [&, q = q](CheckReport& r) {
                     const std::uint64_t o = isotropy_census(ring_of(spec), 2).nontrivial;
                     std::int64_t expect = o ? std::max<std::int64_t>(2, static_cast<std::int64_t>(q - 1)) : 2;
                     auto omega = clique_number(graph_of(spec, 2, GraphVariant::td));
                     equality(r, omega.value, expect);
                 });
    }
}

inline void claim_clique_domain(const Budget&, std::vector<CheckReport>& out) {
    for (std::uint64_t q : {3, 7, 11}) {
        instance(out, "clique-domain", "q=" + std::to_string(q) + " n=2", [&](CheckReport& r) {
            const std::string spec = field_spec(q);
            if (isotropy_census(ring_of(spec), 2).nontrivial != 0) {
                r.status = CheckStatus::skipped;
                r.reason = "precondition O(F,2)=0 not met";
                return;
            }
            auto omega = clique_number(graph_of(spec, 2, GraphVariant::td));
            r.witness = label_set(graph_of(spec, 2, GraphVariant::td), omega.witness);
            equality(r, omega.value, 2);
        });
    }
}

inline void claim_clique_lower_field(const Budget&, std::vector<CheckReport>& out) {
    for (const char* spec : {"Z5", "GF(4)"})
        for (unsigned n : {2u, 3u}) {
            instance(out, "clique-lower-field",
                     std::string("F=") + spec + " n=" + std::to_string(n), [&](CheckReport& r) {
                         const Ring& f = ring_of(spec);
                         auto pair = find_isotropic_pair(f);
                         if (!pair) {
                             r.status = CheckStatus::skipped;
                             r.reason = "no isotropic pair";
                             return;
                         }
                         auto clique = isotropic_pair_clique(f, n, pair->first, pair->second);
                         const Graph& g = graph_of(spec, n, GraphVariant::td);
                         std::vector<std::uint32_t> ids;
                         for (const auto& v : clique)
                             ids.push_back(static_cast<std::uint32_t>(vector_index(f, v.coords()) - 1));
                         bool clique_in_graph = is_clique(g, ids);
                         std::uint64_t bound = pow_u64(f.cardinality(), n / 2) - 1 + (n % 2);
                         r.observed = "verified clique of size " + std::to_string(clique.size());
                         r.expected = "clique of size >= " + std::to_string(bound);
                         r.witness = "(a,b)=(" + f.element_name(pair->first) + "," +
                                     f.element_name(pair->second) + ")";
                         r.status = clique_in_graph && clique.size() >= bound
                                        ? CheckStatus::confirmed
                                        : CheckStatus::refuted;
                     });
        }
}

inline void claim_clique_lower_ring(const Budget&, std::vector<CheckReport>& out) {
    for (const char* spec : {"Z2", "Z4", "Z2xZ2"})
        for (unsigned n : {2u, 3u}) {
            instance(out, "clique-lower-ring",
                     std::string("R=") + spec + " n=" + std::to_string(n), [&](CheckReport& r) {
                         const Ring& ring = ring_of(spec);
                         if (isotropy_census(ring, 2).nontrivial == 0) {
                             r.status = CheckStatus::skipped;
                             r.reason = "precondition O(R,2) != 0 not met";
                             return;
                         }
                         auto pair = find_isotropic_pair(ring);
                         auto clique = isotropic_pair_clique(ring, n, pair->first, pair->second);
                         const Graph& g = graph_of(spec, n, GraphVariant::td);
                         std::vector<std::uint32_t> ids;
                         for (const auto& v : clique)
                             ids.push_back(static_cast<std::uint32_t>(vector_index(ring, v.coords()) - 1));
                         bool clique_in_graph = is_clique(g, ids);
                         std::uint64_t bound = pow_u64(2, n / 2) - 1 + (n % 2);
                         r.observed = "verified clique of size " + std::to_string(clique.size()) +
                                      " (distinct 0/1 combinations)";
                         r.expected = "clique of size >= " + std::to_string(bound);
                         r.witness = "(a,b)=(" + ring.element_name(pair->first) + "," +
                                     ring.element_name(pair->second) + ")";
                         r.status = clique_in_graph && clique.size() >= bound
                                        ? CheckStatus::confirmed
                                        : CheckStatus::refuted;
                     });
        }
}

inline void claim_clique_to_independence(const Budget&, std::vector<CheckReport>& out) {
    // small instances with exact independence numbers
    for (const char* spec : {"Z2", "Z3"}) {
        instance(out, "clique-to-independence", std::string("R=") + spec + " n=2",
                 [&](CheckReport& r) {
                     const Ring& ring = ring_of(spec);
                     auto omega = clique_number(graph_of(spec, 2, GraphVariant::td)).value;
                     auto alpha = independence_number(graph_of(spec, 3, GraphVariant::td)).value;
                     std::int64_t scaled =
                         static_cast<std::int64_t>(ring.cardinality() - 1) * (omega + 1);
                     bool plain = omega + 1 <= alpha;
                     bool with_scale = scaled <= alpha;
                     r.observed = "omega=" + std::to_string(omega) + " alpha=" + std::to_string(alpha);
                     r.expected = "omega+1 <= alpha and (|R|-1)(omega+1) <= alpha";
                     r.status = plain && with_scale ? CheckStatus::confirmed : CheckStatus::refuted;
                 });
    }
    // Z5: the scaled independent set is constructed explicitly and verified,
    // avoiding an exact solve on the 124-vertex graph
    instance(out, "clique-to-independence", "R=Z5 n=2 constructive", [&](CheckReport& r) {
        const Ring& ring = ring_of("Z5");
        const Graph& g3 = graph_of("Z5", 3, GraphVariant::td);
        auto omega = clique_number(graph_of("Z5", 2, GraphVariant::td));
        // the maximum clique here lies on an isotropic line, so each member
        // has norm 0 and the scaled construction applies to all of it
        std::vector<std::uint32_t> delta;
        for (auto w : omega.witness) {
            auto coords = vector_at(ring, 2, w + 1);
            if (norm_index(ring, coords) != 0) continue;
            for (std::uint64_t beta = 1; beta < 5; ++beta) {
                std::vector<std::uint64_t> ext{coords[0], coords[1], beta};
                delta.push_back(static_cast<std::uint32_t>(vector_index(ring, ext) - 1));
            }
        }
        for (std::uint64_t beta = 1; beta < 5; ++beta) {
            std::vector<std::uint64_t> e3{0, 0, beta};
            delta.push_back(static_cast<std::uint32_t>(vector_index(ring, e3) - 1));
        }
        bool independent = is_independent(g3, delta);
        std::int64_t scaled = 4 * (omega.value + 1);
        r.observed = "independent set of size " + std::to_string(delta.size()) +
                     (independent ? " verified" : " invalid");
        r.expected = "alpha >= (|R|-1)(omega+1) = " + std::to_string(scaled) +
                     " and alpha >= omega+1 = " + std::to_string(omega.value + 1);
        r.status = independent && static_cast<std::int64_t>(delta.size()) >= scaled
                       ? CheckStatus::confirmed
                       : CheckStatus::refuted;
    });
}

inline void claim_tensor_clique_min(const Budget&, std::vector<CheckReport>& out) {
    struct Pair {
        const char* a;
        const char* b;
        GraphVariant variant;
    };
    for (auto [a, b, variant] : {Pair{"Z2", "Z3", GraphVariant::td},
                                 Pair{"Z2", "Z3", GraphVariant::tdbar},
                                 Pair{"Z2", "Z2", GraphVariant::tdbar},
                                 Pair{"Z5", "Z3", GraphVariant::td}}) {
        std::string params = std::string("G=") + variant_name(variant) + "(" + a +
                             ",2) H=" + variant_name(variant) + "(" + b + ",2)";
        instance(out, "tensor-clique-min", params,
                 [&, a = a, b = b, variant = variant](CheckReport& r) {
                     const Graph& ga = graph_of(a, 2, variant);
                     const Graph& gb = graph_of(b, 2, variant);
                     Graph t = tensor_product(ga, gb);
                     auto wa = clique_number(ga).value;
                     auto wb = clique_number(gb).value;
                     auto wt = clique_number(t).value;
                     // with loops the product can exceed the stated minimum,
                     // so on the closed graphs a refutation is the expected
                     // outcome and is recorded rather than asserted away
                     bool loopy = variant == GraphVariant::tdbar;
                     r.witness = "omega(G)=" + std::to_string(wa) + " omega(H)=" + std::to_string(wb);
                     equality(r, wt, std::min(wa, wb), /*erratum_if_refuted=*/loopy);
                 });
    }
}

inline void claim_tensor_clique_loop(const Budget&, std::vector<CheckReport>& out) {
    for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"Z2", "Z3"}, {"Z2", "Z2"}, {"Z5", "Z3"}}) {
        instance(out, "tensor-clique-loop",
                 std::string("G=tdbar(") + a + ",2) H=tdbar(" + b + ",2)", [&](CheckReport& r) {
                     const Graph& ga = graph_of(a, 2, GraphVariant::tdbar);
                     const Graph& gb = graph_of(b, 2, GraphVariant::tdbar);
                     Graph t = tensor_product(ga, gb);
                     auto la = clique_loop_number(ga).value;
                     auto lb = clique_loop_number(gb).value;
                     auto lt = clique_loop_number(t);
                     bool product_law = lt.value == la * lb;
                     // the clique-loop witness is itself a clique, so it also
                     // certifies omega(G x H) >= loop product
                     bool clique_ok = lt.witness.size() <= 1 || is_clique(t, lt.witness);
                     r.observed = "loop-clique=" + std::to_string(lt.value);
                     r.expected = "= " + std::to_string(la) + "*" + std::to_string(lb) +
                                  " and a clique of that size exists";
                     r.status = product_law && clique_ok ? CheckStatus::confirmed
                                                         : CheckStatus::refuted;
                 });
    }
}

inline void claim_clique_loop_field(const Budget& budget, std::vector<CheckReport>& out) {
    std::vector<std::string> fields{"Z5", "GF(4)", "Z13"};
    if (budget.full) fields.push_back("Z17");
    for (const std::string& spec : fields)
        for (unsigned n : {2u, 3u}) {
            if (spec == "Z17" && n == 3) continue;  // 4913 vertices, over the build cap sweep
            instance(out, "clique-loop-field", "F=" + spec + " n=" + std::to_string(n),
                     [&](CheckReport& r) {
                         const Ring& f = ring_of(spec);
                         if (isotropy_census(f, 2).nontrivial == 0) {
                             r.status = CheckStatus::skipped;
                             r.reason = "precondition O(F,2) != 0 not met";
                             return;
                         }
                         const Graph& g = graph_of(spec, n, GraphVariant::tdbar);
                         auto res = clique_loop_number(g);
                         r.witness = label_set(g, res.witness);
                         equality(r, res.value,
                                  static_cast<std::int64_t>(pow_u64(f.cardinality(), n / 2)));
                     });
        }
}

inline void claim_gamma_complete_structures(const Budget&, std::vector<CheckReport>& out) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
        instance(out, "gamma-complete-structures", "q=" + std::to_string(q), [&](CheckReport& r) {
            const Graph& g = graph_of(field_spec(q), 2, GraphVariant::td);
            std::int64_t from_structure = 0;
            bool classified = true;
            for (const auto& c : connected_components(g)) {
                if (c.complete)
                    from_structure += 1;
                else if (c.bipartite)
                    from_structure += (c.bipartite->first == 1) ? 1 : 2;
                else
                    classified = false;
            }
            std::int64_t direct = domination_number(g).value;
            r.observed = "structure=" + std::to_string(from_structure) +
                         " direct=" + std::to_string(direct);
            r.expected = "equal values from both routes";
            r.status = classified && from_structure == direct ? CheckStatus::confirmed
                                                              : CheckStatus::refuted;
        });
    }
}

// ---- section: planarity and embeddings ----

inline void claim_planarity_classification(const Budget&, std::vector<CheckReport>& out) {
    struct Inst {
        const char* spec;
        unsigned n;
        bool planar;
    };
    for (auto [spec, n, expect_planar] : {Inst{"Z2", 2, true}, Inst{"Z2", 3, true},
                                          Inst{"Z3", 2, true}, Inst{"Z2", 4, false},
                                          Inst{"Z3", 3, false}, Inst{"Z4", 2, false},
                                          Inst{"Z5", 2, false}, Inst{"GF(4)", 2, false},
                                          Inst{"Z6", 2, false}}) {
        instance(out, "planarity-classification",
                 std::string("R=") + spec + " n=" + std::to_string(n),
                 [&, spec = spec, n = n, expect_planar = expect_planar](CheckReport& r) {
                     const Graph& g = graph_of(spec, n, GraphVariant::td);
                     auto res = is_planar(g);
                     bool ok = res.planar == expect_planar;
                     if (!res.planar) {
                         bool witness_ok = res.kind != KuratowskiKind::none;
                         for (auto [u, v] : res.kuratowski_edges) witness_ok &= g.has_edge(u, v);
                         ok &= witness_ok;
                         r.witness = std::string(res.kind == KuratowskiKind::k5 ? "K5" : "K33") +
                                     " subdivision, " +
                                     std::to_string(res.kuratowski_edges.size()) + " edges";
                     }
                     r.observed = res.planar ? "planar" : "nonplanar";
                     r.expected = expect_planar ? "planar" : "nonplanar with verified witness";
                     r.status = ok ? CheckStatus::confirmed : CheckStatus::refuted;
                 });
    }
}

inline void claim_zdg_embedding(const Budget&, std::vector<CheckReport>& out) {
    for (const char* spec : {"Z6", "Z4", "Z2xZ2"})
        for (unsigned n : {2u, 3u}) {
            instance(out, "zdg-embedding", std::string("R=") + spec + " n=" + std::to_string(n),
                     [&](CheckReport& r) {
                         const Ring& ring = ring_of(spec);
                         const Graph& zdg = graph_of(spec, 1, GraphVariant::zdg);
                         const Graph& g = graph_of(spec, n, GraphVariant::td);
                         std::vector<std::uint64_t> zd;
                         for (std::uint64_t e = 1; e < ring.cardinality(); ++e)
                             if (ring.is_zero_divisor(e)) zd.push_back(e);
                         bool induced = true;
                         std::set<std::uint32_t> all_ids;
                         for (unsigned slot = 0; slot < n; ++slot) {
                             for (std::size_t i = 0; i < zd.size(); ++i) {
                                 std::vector<std::uint64_t> ci(n, 0);
                                 ci[slot] = zd[i];
                                 auto vi = static_cast<std::uint32_t>(vector_index(ring, ci) - 1);
                                 all_ids.insert(vi);
                                 for (std::size_t j = i + 1; j < zd.size(); ++j) {
                                     std::vector<std::uint64_t> cj(n, 0);
                                     cj[slot] = zd[j];
                                     auto vj = static_cast<std::uint32_t>(vector_index(ring, cj) - 1);
                                     induced &= g.has_edge(vi, vj) ==
                                                zdg.has_edge(static_cast<std::uint32_t>(i),
                                                             static_cast<std::uint32_t>(j));
                                 }
                             }
                         }
                         bool disjoint = all_ids.size() == zd.size() * n;
                         r.observed = std::string(induced ? "induced copies" : "copy mismatch") +
                                      ", " + (disjoint ? "pairwise disjoint" : "overlapping");
                         r.expected = "n pairwise disjoint induced copies of the zero-divisor graph";
                         r.status = induced && disjoint ? CheckStatus::confirmed : CheckStatus::refuted;
                     });
        }
}

inline void skipped_claim(std::vector<CheckReport>& out, const std::string& id,
                          const std::string& reason) {
    CheckReport r;
    r.claim = id;
    r.params = "-";
    r.status = CheckStatus::skipped;
    r.reason = reason;
    out.push_back(r);
}

}  // namespace claims

inline const std::vector<ClaimDef>& claim_registry() {
    static const std::vector<ClaimDef> registry = [] {
        using namespace claims;
        std::vector<ClaimDef> defs;
        auto add = [&](std::string id, std::string statement,
                       std::function<void(const Budget&, std::vector<CheckReport>&)> run) {
            defs.push_back({std::move(id), std::move(statement), std::move(run)});
        };
        add("tensor-decomposition",
            "the closed graph of a product ring is the tensor product of the factors' closed graphs",
            claim_tensor_decomposition);
        add("loop-product", "loop counts multiply under ring products", claim_loop_product);
        add("loop-count-closed", "the closed graph has O(R,n) + 1 loops", claim_loop_count_closed);
        add("loop-count-odd-prime",
            "over a prime field of odd order with n odd the loop count is p^{n-1}",
            claim_loop_count_odd_prime);
        add("loop-count-char2",
            "over a field of characteristic 2 the loop count is q^{n-1}", claim_loop_count_char2);
        add("chevalley-warning",
            "for n > 2 the number of solutions of sum x_i^2 = 0 over a field is divisible by the characteristic",
            claim_chevalley_warning);
        add("O-F-2-formula",
            "O(F,2) is 0, 2(q-1), or q-1 according to q mod 4 and the parity of q",
            claim_o_f_2_formula);
        add("unit-coordinate-degree",
            "a vertex with an invertible coordinate has degree |R|^{n-1} - 1, or - 2 when isotropic",
            claim_unit_coordinate_degree);
        add("field-regularity",
            "field planes are regular or semi-regular with the stated degree pairs",
            claim_field_regularity);
        add("td-f2-structure",
            "TD(F,2) is a disjoint union of complete and complete bipartite components in the stated counts",
            claim_td_f2_structure);
        add("field-rigidity",
            "field planes with equal vertex counts but different parameters are non-isomorphic",
            claim_field_rigidity);
        add("reduced-rigidity",
            "reduced rings: minimum degree takes one of two values, and equal vertex counts with different |R| force non-isomorphism",
            claim_reduced_rigidity);
        add("field-vs-ring-rigidity",
            "a field plane is not isomorphic to the plane of any non-field ring of matching size",
            claim_field_vs_ring_rigidity);
        add("reduced-degree-formula",
            "for products of fields the column formula gives every vertex degree",
            claim_reduced_degree_formula);
        add("product-degree-remark",
            "degrees in a product plane factor through the component degrees",
            claim_product_degree_remark);
        add("domination-field",
            "gamma(TD(F,n)) = q + 1 except the single exceptional case q=2, n=3 where it is 2",
            claim_domination_field);
        add("domination-nonfield-remark",
            "over a non-field the line construction {(a,1,0,...)} u {(1,0,...)} fails to dominate",
            claim_domination_nonfield_remark);
        add("domination-bound-squared",
            "gamma <= |R-U(R)|^2 - 1 via the two-slot nonunit construction",
            claim_domination_bound_squared);
        add("domination-bound-linear",
            "gamma <= |R-U(R)| + |R| - 2 via the three-family construction",
            claim_domination_bound_linear);
        add("mekis-bound", "gamma(G x H) >= gamma(G) + gamma(H) - 1 on tensor products",
            claim_mekis_bound);
        add("domination-monotone", "gamma(TD(R,n)) <= gamma(TD(R,n-1)) for n >= 3",
            claim_domination_monotone);
        add("nu-lower-bound",
            "gamma(TD(R,n)) is at least the largest residue field size over maximal ideals",
            claim_nu_lower_bound);
        add("subspace-union-bound",
            "a vector space is not a union of fewer than |F| proper subspaces",
            [](const Budget&, std::vector<CheckReport>& out) {
                skipped_claim(out, "subspace-union-bound", "infinite-scope");
            });
        add("domination-infinite-field",
            "gamma(TD(F,n)) is finite exactly for finite fields",
            [](const Budget&, std::vector<CheckReport>& out) {
                skipped_claim(out, "domination-infinite-field", "infinite-scope");
            });
        add("domination-infinite-ideal",
            "an infinite residue field at a maximal ideal forces infinite domination number",
            [](const Budget&, std::vector<CheckReport>& out) {
                skipped_claim(out, "domination-infinite-ideal", "infinite-scope");
            });
        add("clique-alpha-n2",
            "clique and independence numbers of TD(F,2), with both orientations of the stated clique split evaluated",
            claim_clique_alpha_n2);
        add("clique-domain", "integral domain with O(R,n)=0: the clique number equals n",
            claim_clique_domain);
        add("clique-lower-field",
            "fields with O(F,2) != 0 carry an orthogonal clique of size |F|^{floor(n/2)} - 1, plus e_n when n is odd",
            claim_clique_lower_field);
        add("clique-lower-ring",
            "rings with O(R,2) != 0 carry an orthogonal clique of size 2^{floor(n/2)} - 1, plus e_n when n is odd",
            claim_clique_lower_ring);
        add("clique-lower-ring-better",
            "sharper exponential clique lower bound from external machinery",
            [](const Budget&, std::vector<CheckReport>& out) {
                skipped_claim(out, "clique-lower-ring-better",
                              "no in-scope formula; referenced construction not reproduced");
            });
        add("clique-to-independence",
            "a clique in dimension n lifts to an independent set in dimension n+1, with the (|R|-1)-scaled variant for isotropic cliques",
            claim_clique_to_independence);
        add("independence-infinite", "alpha(TD(R,n)) is finite exactly for finite rings",
            [](const Budget&, std::vector<CheckReport>& out) {
                skipped_claim(out, "independence-infinite", "infinite-scope");
            });
        add("tensor-clique-min",
            "omega(G x H) = min(omega(G), omega(H)) for simple graphs; evaluated on closed graphs where loops break it",
            claim_tensor_clique_min);
        add("tensor-clique-loop",
            "loop-clique numbers multiply under tensor products and bound the product clique number",
            claim_tensor_clique_loop);
        add("clique-loop-field",
            "omega-loop of the closed field plane is |F|^{floor(n/2)} when O(F,2) != 0",
            claim_clique_loop_field);
        add("gamma-complete-structures",
            "gamma(TD(F,2)) recomputed from the component structure matches the direct solver",
            claim_gamma_complete_structures);
        add("planarity-classification",
            "exactly three planar dot product graphs exist; every other tested instance yields a Kuratowski witness",
            claim_planarity_classification);
        add("zdg-embedding",
            "the zero-divisor graph embeds as n pairwise disjoint induced copies",
            claim_zdg_embedding);
        return defs;
    }();
    return registry;
}

inline std::vector<CheckReport> run_claims(const std::string& filter, const Budget& budget = {}) {
    std::vector<CheckReport> out;
    for (const auto& def : claim_registry())
        if (glob_match(filter, def.id)) def.run(budget, out);
    return out;
}

inline std::size_t count_matching_claims(const std::string& filter) {
    std::size_t n = 0;
    for (const auto& def : claim_registry())
        if (glob_match(filter, def.id)) ++n;
    return n;
}

}  // namespace tdg
