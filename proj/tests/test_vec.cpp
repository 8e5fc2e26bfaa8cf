#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "tdg/ring.hpp"
#include "tdg/vec.hpp"

using tdg::Ring;
using tdg::RingVector;

namespace {

tdg::RingVector vec(const Ring& r, std::vector<std::uint64_t> coords) {
    return tdg::RingVector(r, std::move(coords));
}

bool is_zero_elem(const Ring& r, const tdg::RingElement& e) { return r.is_zero(e); }

}  // namespace

TEST_CASE("dot product examples") {
    auto z2 = Ring::parse("Z2");
    // 110 . 111 = 0 and 100 . 110 = 1
    CHECK(is_zero_elem(z2, tdg::dot(vec(z2, {1, 1, 0}), vec(z2, {1, 1, 1}))));
    CHECK_FALSE(is_zero_elem(z2, tdg::dot(vec(z2, {1, 0, 0}), vec(z2, {1, 1, 0}))));

    auto z7 = Ring::parse("Z7");
    auto e1 = vec(z7, {1, 0, 0});
    auto e2 = vec(z7, {0, 1, 0});
    CHECK(is_zero_elem(z7, tdg::dot(e1, e2)));

    CHECK_THROWS_AS(tdg::dot(vec(z2, {1, 0}), vec(z2, {1, 0, 0})), std::invalid_argument);
    auto z3 = Ring::parse("Z3");
    CHECK_THROWS_AS(tdg::dot(vec(z2, {1, 0}), vec(z3, {1, 0})), std::invalid_argument);
}

TEST_CASE("norm examples") {
    auto z2 = Ring::parse("Z2");
    CHECK(is_zero_elem(z2, tdg::norm(vec(z2, {1, 1, 0}))));
    CHECK_FALSE(is_zero_elem(z2, tdg::norm(vec(z2, {1, 1, 1}))));
    auto z3 = Ring::parse("Z3");
    CHECK(is_zero_elem(z3, tdg::norm(vec(z3, {1, 1, 1}))));
}

TEST_CASE("isotropy census") {
    auto z5 = Ring::parse("Z5");
    auto c = tdg::isotropy_census(z5, 2);
    CHECK(c.nontrivial == 8);  // 2(|F|-1) for |F| = 1 mod 4
    CHECK(c.total_solutions == 9);

    auto z3 = Ring::parse("Z3");
    CHECK(tdg::isotropy_census(z3, 2).nontrivial == 0);
    CHECK(tdg::isotropy_census(z3, 3).total_solutions == 9);  // p^{n-1}

    CHECK_THROWS_AS(tdg::isotropy_census(z3, 20, 1000), tdg::cap_exceeded);
}

TEST_CASE("square-sum solution counts divide by the characteristic") {
    auto z3 = Ring::parse("Z3");
    CHECK(tdg::chevalley_warning_check(z3, 3) == std::make_pair(std::uint64_t{9}, true));
    auto z5 = Ring::parse("Z5");
    CHECK(tdg::chevalley_warning_check(z5, 3) == std::make_pair(std::uint64_t{25}, true));
    auto f4 = Ring::parse("GF(4)");
    CHECK(tdg::chevalley_warning_check(f4, 3) == std::make_pair(std::uint64_t{16}, true));

    CHECK_THROWS_AS(tdg::chevalley_warning_check(z3, 2), std::invalid_argument);
    CHECK_THROWS_AS(tdg::chevalley_warning_check(Ring::parse("Z6"), 3), std::invalid_argument);
}

TEST_CASE("O(F,2) matches the three-way case split for all fields up to 27") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27}) {
        auto spec = tdg::detail::is_prime_u64(q) ? "Z" + std::to_string(q)
                                                 : "GF(" + std::to_string(q) + ")";
        auto f = Ring::parse(spec);
        std::uint64_t expect = q % 2 == 0 ? q - 1 : (q % 4 == 1 ? 2 * (q - 1) : 0);
        INFO("field of size " << q);
        CHECK(tdg::isotropy_census(f, 2).nontrivial == expect);
    }
}

TEST_CASE("isotropic pairs exist exactly when |F| != 3 mod 4") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
        auto spec = tdg::detail::is_prime_u64(q) ? "Z" + std::to_string(q)
                                                 : "GF(" + std::to_string(q) + ")";
        auto f = Ring::parse(spec);
        auto pair = tdg::find_isotropic_pair(f);
        INFO("field of size " << q);
        CHECK(pair.has_value() == (q % 4 != 3));
        if (pair) CHECK(f.add(f.mul(pair->first, pair->first), f.mul(pair->second, pair->second)) == 0);
    }
}

TEST_CASE("orthogonal clique construction, field case") {
    auto z5 = Ring::parse("Z5");
    // 1^2 + 2^2 = 5 = 0
    auto c2 = tdg::isotropic_pair_clique(z5, 2, 1, 2);
    CHECK(c2.size() == 4);  // |F|^{n/2} - 1

    auto c3 = tdg::isotropic_pair_clique(z5, 3, 1, 2);
    CHECK(c3.size() == 5);  // e_3 appended for odd n
    bool has_e3 = false;
    for (const auto& v : c3) has_e3 |= v.coords() == std::vector<std::uint64_t>{0, 0, 1};
    CHECK(has_e3);
}

TEST_CASE("orthogonal clique construction, 0/1 combinations") {
    auto z2 = Ring::parse("Z2");
    auto c = tdg::isotropic_pair_clique(z2, 3, 1, 1);
    // span of (1,1,0) minus zero plus e_3: exactly {110, 001}
    REQUIRE(c.size() == 2);
    std::set<std::vector<std::uint64_t>> got;
    for (const auto& v : c) got.insert(v.coords());
    CHECK(got == std::set<std::vector<std::uint64_t>>{{0, 0, 1}, {1, 1, 0}});

    auto z4 = Ring::parse("Z4");
    auto c4 = tdg::isotropic_pair_clique(z4, 3, 0, 2);  // 0^2 + 2^2 = 0
    CHECK(c4.size() == 2);                              // 2^{n/2} - 1 plus e_3

    CHECK_THROWS_AS(tdg::isotropic_pair_clique(z4, 2, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(tdg::isotropic_pair_clique(z4, 2, 1, 1), std::invalid_argument);  // 1+1 != 0
}

TEST_CASE("clique members are isotropic apart from an appended e_n") {
    for (auto [spec, n] : std::vector<std::pair<const char*, unsigned>>{
             {"Z5", 2}, {"Z5", 3}, {"Z5", 4}, {"GF(4)", 3}, {"Z2", 3}, {"Z4", 2}, {"Z2xZ2", 3}}) {
        auto r = Ring::parse(spec);
        auto pair = tdg::find_isotropic_pair(r);
        REQUIRE(pair.has_value());
        auto clique = tdg::isotropic_pair_clique(r, n, pair->first, pair->second);
        INFO(spec << " n=" << n);
        std::vector<std::uint64_t> en(n, 0);
        en[n - 1] = r.one_index();
        for (const auto& v : clique) {
            if (n % 2 == 1 && v.coords() == en) continue;
            CHECK(tdg::norm_index(r, v.coords()) == 0);
        }
        // expected sizes from the construction
        std::uint64_t base = 1;
        for (unsigned i = 0; i < n / 2; ++i) base *= r.is_field() ? r.cardinality() : 2;
        CHECK(clique.size() == base - 1 + (n % 2));
    }
}

TEST_CASE("dot is symmetric and bilinear") {
    // exhaustive symmetry on vector spaces up to 4096 vectors
    for (auto [spec, n] : std::vector<std::pair<const char*, unsigned>>{
             {"Z8", 4}, {"GF(16)", 3}, {"Z6", 2}, {"Z5", 3}}) {
        auto r = Ring::parse(spec);
        const std::uint64_t total = [&] {
            std::uint64_t t = 1;
            for (unsigned i = 0; i < n; ++i) t *= r.cardinality();
            return t;
        }();
        REQUIRE(total <= 4096);
        for (std::uint64_t i = 0; i < total; ++i) {
            auto a = tdg::vector_at(r, n, i);
            for (std::uint64_t j = i; j < total; ++j) {
                auto b = tdg::vector_at(r, n, j);
                REQUIRE(tdg::dot_index(r, a, b) == tdg::dot_index(r, b, a));
            }
        }
    }

    // exhaustive additivity and scalar pull-out on small spaces
    for (auto [spec, n] : std::vector<std::pair<const char*, unsigned>>{{"Z4", 2}, {"Z2", 3}, {"GF(4)", 2}}) {
        auto r = Ring::parse(spec);
        std::uint64_t total = 1;
        for (unsigned i = 0; i < n; ++i) total *= r.cardinality();
        REQUIRE(total <= 256);
        auto add_vec = [&](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
            std::vector<std::uint64_t> out(n);
            for (unsigned i = 0; i < n; ++i) out[i] = r.add(a[i], b[i]);
            return out;
        };
        for (std::uint64_t i = 0; i < total; ++i)
            for (std::uint64_t j = 0; j < total; ++j)
                for (std::uint64_t k = 0; k < total; ++k) {
                    auto a = tdg::vector_at(r, n, i), b = tdg::vector_at(r, n, j),
                         c = tdg::vector_at(r, n, k);
                    REQUIRE(tdg::dot_index(r, add_vec(a, b), c) ==
                            r.add(tdg::dot_index(r, a, c), tdg::dot_index(r, b, c)));
                }
        for (std::uint64_t s = 0; s < r.cardinality(); ++s)
            for (std::uint64_t i = 0; i < total; ++i)
                for (std::uint64_t j = 0; j < total; ++j) {
                    auto a = tdg::vector_at(r, n, i), b = tdg::vector_at(r, n, j);
                    std::vector<std::uint64_t> sa(n);
                    for (unsigned t = 0; t < n; ++t) sa[t] = r.mul(s, a[t]);
                    REQUIRE(tdg::dot_index(r, sa, b) == r.mul(s, tdg::dot_index(r, a, b)));
                }
    }

    // randomized spot checks on a larger space
    auto r = Ring::parse("Z2xGF(9)");
    oracle::Rng rng(42);
    const unsigned n = 3;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint64_t> a(n), b(n);
        for (unsigned i = 0; i < n; ++i) {
            a[i] = rng.below(r.cardinality());
            b[i] = rng.below(r.cardinality());
        }
        REQUIRE(tdg::dot_index(r, a, b) == tdg::dot_index(r, b, a));
    }
}
