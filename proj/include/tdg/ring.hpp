#pragma once

// Exact arithmetic over finite commutative rings with identity.
// A ring is described by a flat product of leaves, each leaf either
// Z_n (integers mod n) or GF(p^k) (polynomial quotient by a monic
// irreducible modulus over Z_p).  Elements are canonical digit tuples;
// every element also has a stable mixed-radix index (leftmost leaf most
// significant) used for enumeration and graph vertex numbering.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tdg {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t pos, const std::string& msg)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg),
          pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

class cap_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ZnLeaf {
    std::uint64_t modulus = 0;
};

struct GfLeaf {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::vector<std::uint32_t> poly;  // monic modulus polynomial, low degree first, size k+1
};

using RingLeaf = std::variant<ZnLeaf, GfLeaf>;

// Canonical element representative: one digit per Zn leaf (the residue),
// k digits per GF(p^k) leaf (coefficients, low degree first).
struct RingElement {
    std::vector<std::uint32_t> digits;
    friend bool operator==(const RingElement&, const RingElement&) = default;
};

struct MaximalIdealInfo {
    std::size_t leaf = 0;
    std::uint64_t residue_size = 0;  // |R/m|
};

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// q = p^k with p prime, k >= 1; returns (p, k) or nullopt
inline std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        std::uint32_t k = 0;
        std::uint64_t m = q;
        while (m % p == 0) { m /= p; ++k; }
        if (m != 1) return std::nullopt;
        return std::make_pair(p, k);
    }
    return std::make_pair(q, 1u);  // q itself prime
}

// remainder of f by monic g over Z_p; true iff remainder is zero
inline bool poly_divisible(std::vector<std::uint32_t> f, const std::vector<std::uint32_t>& g,
                           std::uint64_t p) {
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint64_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        if (lead) {
            for (std::size_t j = 0; j <= dg; ++j) {
                std::uint64_t v = f[shift + j] + p - (lead * g[j]) % p;
                f[shift + j] = static_cast<std::uint32_t>(v % p);
            }
        }
        f.pop_back();
    }
    return std::all_of(f.begin(), f.end(), [](std::uint32_t c) { return c == 0; });
}

inline bool poly_irreducible(const std::vector<std::uint32_t>& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    // trial division by every monic polynomial of degree 1..k/2
    for (std::size_t d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t m = 0; m < count; ++m) {
            std::vector<std::uint32_t> g(d + 1);
            std::uint64_t t = m;
            for (std::size_t j = 0; j < d; ++j) { g[j] = static_cast<std::uint32_t>(t % p); t /= p; }
            g[d] = 1;
            if (poly_divisible(f, g, p)) return false;
        }
    }
    return true;
}

// lexicographically least monic irreducible of degree k over Z_p,
// coefficient tuples (c_0,...,c_{k-1}) compared low degree first
inline std::vector<std::uint32_t> least_irreducible(std::uint64_t p, std::uint32_t k) {
    if (k == 1) return {0, 1};  // x
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t m = 0; m < count; ++m) {
        std::vector<std::uint32_t> f(k + 1);
        std::uint64_t t = m;
        for (std::uint32_t j = k; j-- > 0;) {  // c_0 most significant in m: lex order on (c_0,c_1,...)
            f[j] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        f[k] = 1;
        if (poly_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable for prime p
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) { a %= b; std::swap(a, b); }
    return a;
}

}  // namespace detail

class Ring {
public:
    static constexpr std::uint64_t kOpTableLimit = 1024;  // |R| up to which add/mul tables are built

    explicit Ring(std::vector<RingLeaf> leaves) : leaves_(std::move(leaves)) {
        if (leaves_.empty()) throw std::invalid_argument("ring needs at least one leaf");
        validate_leaves();
        init_layout();
        if (cardinality_ <= kOpTableLimit) build_tables();
    }

    // grammar: ring := atom ("x" atom)* ; atom := "Z" INT | "GF(" INT ")"
    static Ring parse(std::string_view text) {
        std::vector<RingLeaf> leaves;
        std::size_t i = 0;
        auto parse_int = [&](const char* what) -> std::uint64_t {
            std::size_t start = i;
            std::uint64_t v = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
                if (v > (std::uint64_t{1} << 31)) throw parse_error(start, std::string(what) + " too large");
                ++i;
            }
            if (i == start) throw parse_error(i, std::string("expected ") + what);
            return v;
        };
        while (true) {
            if (i >= text.size()) throw parse_error(i, "expected ring atom");
            if (text[i] == 'Z') {
                ++i;
                std::size_t at = i;
                std::uint64_t m = parse_int("modulus");
                if (m < 2) throw parse_error(at, "modulus must be >= 2");
                leaves.push_back(ZnLeaf{m});
            } else if (text.compare(i, 3, "GF(") == 0) {
                i += 3;
                std::size_t at = i;
                std::uint64_t q = parse_int("field size");
                auto pk = detail::prime_power(q);
                if (!pk) throw parse_error(at, "GF argument must be a prime power");
                if (i >= text.size() || text[i] != ')') throw parse_error(i, "expected ')'");
                ++i;
                auto [p, k] = *pk;
                leaves.push_back(GfLeaf{static_cast<std::uint32_t>(p), k, detail::least_irreducible(p, k)});
            } else {
                throw parse_error(i, "expected ring atom");
            }
            if (i == text.size()) break;
            if (text[i] != 'x') throw parse_error(i, "expected 'x' or end of input");
            ++i;
        }
        return Ring(std::move(leaves));
    }

    std::string render() const {
        std::string out;
        for (std::size_t i = 0; i < leaves_.size(); ++i) {
            if (i) out += 'x';
            if (const auto* zn = std::get_if<ZnLeaf>(&leaves_[i])) {
                out += 'Z';
                out += std::to_string(zn->modulus);
            } else {
                const auto& gf = std::get<GfLeaf>(leaves_[i]);
                std::uint64_t q = 1;
                for (std::uint32_t j = 0; j < gf.k; ++j) q *= gf.p;
                out += "GF(" + std::to_string(q) + ")";
            }
        }
        return out;
    }

    const std::vector<RingLeaf>& leaves() const noexcept { return leaves_; }
    std::uint64_t cardinality() const noexcept { return cardinality_; }
    std::uint64_t characteristic() const noexcept { return characteristic_; }

    bool is_field() const {
        if (leaves_.size() != 1) return false;
        if (std::holds_alternative<GfLeaf>(leaves_[0])) return true;
        return detail::is_prime_u64(std::get<ZnLeaf>(leaves_[0]).modulus);
    }

    // every finite product of fields (leaf-wise) is reduced
    bool leaves_all_fields() const {
        for (const auto& lf : leaves_) {
            if (const auto* zn = std::get_if<ZnLeaf>(&lf)) {
                if (!detail::is_prime_u64(zn->modulus)) return false;
            }
        }
        return true;
    }

    // ---- index arithmetic (element index in [0, cardinality)) ----

    std::uint64_t zero_index() const noexcept { return 0; }
    std::uint64_t one_index() const noexcept { return one_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        check_index(a); check_index(b);
        if (!add_tab_.empty()) return add_tab_[a * cardinality_ + b];
        return op_structural(a, b, /*mul=*/false);
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        check_index(a); check_index(b);
        if (!mul_tab_.empty()) return mul_tab_[a * cardinality_ + b];
        return op_structural(a, b, /*mul=*/true);
    }
    std::uint64_t neg(std::uint64_t a) const {
        check_index(a);
        if (!neg_tab_.empty()) return neg_tab_[a];
        RingElement e = element_at(a);
        return element_index(neg(e));
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

    bool is_unit(std::uint64_t a) const {
        check_index(a);
        if (!unit_tab_.empty()) return unit_tab_[a] != 0;
        return is_unit(element_at(a));
    }
    bool is_zero_divisor(std::uint64_t a) const { return a != 0 && !is_unit(a); }

    // ---- element (digit) arithmetic; validates shape against this ring ----

    RingElement add(const RingElement& a, const RingElement& b) const {
        check_shape(a); check_shape(b);
        RingElement r = a;
        for (std::size_t li = 0; li < leaves_.size(); ++li)
            leaf_add(li, r.digits.data() + offset_[li], b.digits.data() + offset_[li]);
        return r;
    }
    RingElement mul(const RingElement& a, const RingElement& b) const {
        check_shape(a); check_shape(b);
        RingElement r;
        r.digits.assign(width_, 0);
        for (std::size_t li = 0; li < leaves_.size(); ++li)
            leaf_mul(li, a.digits.data() + offset_[li], b.digits.data() + offset_[li],
                     r.digits.data() + offset_[li]);
        return r;
    }
    RingElement neg(const RingElement& a) const {
        check_shape(a);
        RingElement r = a;
        for (std::size_t li = 0; li < leaves_.size(); ++li) {
            std::uint64_t rad = radix_[li];
            std::uint32_t* d = r.digits.data() + offset_[li];
            for (std::size_t j = 0; j < digit_count_[li]; ++j)
                d[j] = static_cast<std::uint32_t>((rad - d[j]) % rad);
        }
        return r;
    }

    bool is_unit(const RingElement& a) const {
        check_shape(a);
        for (std::size_t li = 0; li < leaves_.size(); ++li) {
            const std::uint32_t* d = a.digits.data() + offset_[li];
            if (const auto* zn = std::get_if<ZnLeaf>(&leaves_[li])) {
                if (detail::gcd_u64(d[0], zn->modulus) != 1) return false;
            } else {
                bool nonzero = false;
                for (std::size_t j = 0; j < digit_count_[li]; ++j) nonzero |= d[j] != 0;
                if (!nonzero) return false;
            }
        }
        return true;
    }
    bool is_zero(const RingElement& a) const {
        check_shape(a);
        return std::all_of(a.digits.begin(), a.digits.end(), [](std::uint32_t d) { return d == 0; });
    }
    bool is_zero_divisor(const RingElement& a) const { return !is_zero(a) && !is_unit(a); }

    // ---- enumeration: mixed radix, leftmost leaf most significant ----

    RingElement element_at(std::uint64_t idx) const {
        check_index(idx);
        RingElement e;
        e.digits.assign(width_, 0);
        for (std::size_t li = 0; li < leaves_.size(); ++li) {
            std::uint64_t local = (idx / place_[li]) % leaf_card_[li];
            decode_local(li, local, e.digits.data() + offset_[li]);
        }
        return e;
    }

    std::uint64_t element_index(const RingElement& a) const {
        check_shape(a);
        std::uint64_t idx = 0;
        for (std::size_t li = 0; li < leaves_.size(); ++li)
            idx += encode_local(li, a.digits.data() + offset_[li]) * place_[li];
        return idx;
    }

    // element of a single leaf, lifted into this ring with zeros elsewhere
    std::uint64_t leaf_value_of(std::uint64_t idx, std::size_t leaf) const {
        check_index(idx);
        return (idx / place_[leaf]) % leaf_card_[leaf];
    }

    std::size_t leaf_count() const noexcept { return leaves_.size(); }
    std::uint64_t leaf_cardinality(std::size_t li) const { return leaf_card_[li]; }

    // ---- structural queries ----

    std::vector<MaximalIdealInfo> residue_field_sizes() const {
        std::vector<MaximalIdealInfo> out;
        for (std::size_t li = 0; li < leaves_.size(); ++li) {
            if (const auto* zn = std::get_if<ZnLeaf>(&leaves_[li])) {
                std::uint64_t m = zn->modulus;
                for (std::uint64_t p = 2; p <= m; ++p) {
                    if (m % p) continue;
                    out.push_back({li, p});
                    while (m % p == 0) m /= p;
                }
            } else {
                out.push_back({li, leaf_card_[li]});
            }
        }
        return out;
    }

    // nu = sup of residue field sizes over maximal ideals
    std::uint64_t nu() const {
        std::uint64_t best = 0;
        for (const auto& mi : residue_field_sizes()) best = std::max(best, mi.residue_size);
        return best;
    }

    std::string element_name(std::uint64_t idx) const {
        RingElement e = element_at(idx);
        if (leaves_.size() == 1) return leaf_name(0, e.digits.data());
        std::string out = "(";
        for (std::size_t li = 0; li < leaves_.size(); ++li) {
            if (li) out += ',';
            out += leaf_name(li, e.digits.data() + offset_[li]);
        }
        out += ')';
        return out;
    }

    bool same_ring(const Ring& other) const { return render() == other.render(); }

private:
    void validate_leaves() {
        for (auto& lf : leaves_) {
            if (auto* zn = std::get_if<ZnLeaf>(&lf)) {
                if (zn->modulus < 2) throw std::invalid_argument("Zn modulus must be >= 2");
            } else {
                auto& gf = std::get<GfLeaf>(lf);
                if (!detail::is_prime_u64(gf.p)) throw std::invalid_argument("GF characteristic must be prime");
                if (gf.k < 1) throw std::invalid_argument("GF degree must be >= 1");
                if (gf.poly.size() != gf.k + 1 || gf.poly.back() != 1)
                    throw std::invalid_argument("GF modulus polynomial must be monic of degree k");
                for (auto c : gf.poly)
                    if (c >= gf.p) throw std::invalid_argument("GF modulus coefficients must be reduced mod p");
                if (!detail::poly_irreducible(gf.poly, gf.p))
                    throw std::invalid_argument("GF modulus polynomial is reducible");
            }
        }
    }

    void init_layout() {
        const std::size_t t = leaves_.size();
        offset_.resize(t);
        digit_count_.resize(t);
        radix_.resize(t);
        leaf_card_.resize(t);
        place_.resize(t);
        cardinality_ = 1;
        characteristic_ = 1;
        width_ = 0;
        for (std::size_t li = 0; li < t; ++li) {
            offset_[li] = width_;
            std::uint64_t card, ch;
            if (const auto* zn = std::get_if<ZnLeaf>(&leaves_[li])) {
                digit_count_[li] = 1;
                radix_[li] = zn->modulus;
                card = zn->modulus;
                ch = zn->modulus;
            } else {
                const auto& gf = std::get<GfLeaf>(leaves_[li]);
                digit_count_[li] = gf.k;
                radix_[li] = gf.p;
                card = 1;
                for (std::uint32_t j = 0; j < gf.k; ++j) card *= gf.p;
                ch = gf.p;
            }
            leaf_card_[li] = card;
            width_ += digit_count_[li];
            if (cardinality_ > (std::uint64_t{1} << 62) / card)
                throw std::invalid_argument("ring cardinality too large");
            cardinality_ *= card;
            characteristic_ = characteristic_ / detail::gcd_u64(characteristic_, ch) * ch;
        }
        // place value: leftmost leaf most significant
        std::uint64_t place = 1;
        for (std::size_t li = t; li-- > 0;) {
            place_[li] = place;
            place *= leaf_card_[li];
        }
        // index of the multiplicative identity
        one_ = 0;
        for (std::size_t li = 0; li < t; ++li) one_ += place_[li];  // local index of 1 is 1 in every leaf
    }

    void build_tables() {
        const std::uint64_t c = cardinality_;
        neg_tab_.resize(c);
        unit_tab_.resize(c);
        add_tab_.resize(c * c);
        mul_tab_.resize(c * c);
        std::vector<RingElement> elems(c);
        for (std::uint64_t i = 0; i < c; ++i) {
            elems[i] = element_at(i);
            neg_tab_[i] = static_cast<std::uint32_t>(element_index(neg(elems[i])));
            unit_tab_[i] = is_unit(elems[i]) ? 1 : 0;
        }
        for (std::uint64_t i = 0; i < c; ++i)
            for (std::uint64_t j = 0; j < c; ++j) {
                add_tab_[i * c + j] = static_cast<std::uint32_t>(element_index(add(elems[i], elems[j])));
                mul_tab_[i * c + j] = static_cast<std::uint32_t>(element_index(mul(elems[i], elems[j])));
            }
    }

    std::uint64_t op_structural(std::uint64_t a, std::uint64_t b, bool mul_op) const {
        RingElement ea = element_at(a), eb = element_at(b);
        return element_index(mul_op ? mul(ea, eb) : add(ea, eb));
    }

    void leaf_add(std::size_t li, std::uint32_t* a, const std::uint32_t* b) const {
        const std::uint64_t rad = radix_[li];
        for (std::size_t j = 0; j < digit_count_[li]; ++j)
            a[j] = static_cast<std::uint32_t>((std::uint64_t{a[j]} + b[j]) % rad);
    }

    void leaf_mul(std::size_t li, const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
        if (const auto* zn = std::get_if<ZnLeaf>(&leaves_[li])) {
            out[0] = static_cast<std::uint32_t>((std::uint64_t{a[0]} * b[0]) % zn->modulus);
            return;
        }
        const auto& gf = std::get<GfLeaf>(leaves_[li]);
        const std::uint64_t p = gf.p;
        const std::uint32_t k = gf.k;
        std::vector<std::uint64_t> prod(2 * k - 1, 0);
        for (std::uint32_t i = 0; i < k; ++i) {
            if (!a[i]) continue;
            for (std::uint32_t j = 0; j < k; ++j) prod[i + j] += std::uint64_t{a[i]} * b[j];
        }
        for (auto& v : prod) v %= p;
        for (std::uint32_t d = 2 * k - 2; d >= k && d < prod.size(); --d) {
            const std::uint64_t lead = prod[d];
            if (lead) {
                prod[d] = 0;
                for (std::uint32_t j = 0; j < k; ++j)
                    prod[d - k + j] = (prod[d - k + j] + (p - (lead * gf.poly[j]) % p)) % p;
            }
            if (d == k) break;
        }
        for (std::uint32_t j = 0; j < k; ++j) out[j] = static_cast<std::uint32_t>(prod[j]);
    }

    void decode_local(std::size_t li, std::uint64_t local, std::uint32_t* out) const {
        const std::uint64_t rad = radix_[li];
        for (std::size_t j = 0; j < digit_count_[li]; ++j) {
            out[j] = static_cast<std::uint32_t>(local % rad);
            local /= rad;
        }
    }

    std::uint64_t encode_local(std::size_t li, const std::uint32_t* d) const {
        const std::uint64_t rad = radix_[li];
        std::uint64_t local = 0;
        for (std::size_t j = digit_count_[li]; j-- > 0;) local = local * rad + d[j];
        return local;
    }

    std::string leaf_name(std::size_t li, const std::uint32_t* d) const {
        if (std::holds_alternative<ZnLeaf>(leaves_[li])) return std::to_string(d[0]);
        // GF element as polynomial in x, high degree first
        std::string out;
        for (std::size_t j = digit_count_[li]; j-- > 0;) {
            if (!d[j]) continue;
            if (!out.empty()) out += '+';
            if (j == 0) {
                out += std::to_string(d[j]);
            } else {
                if (d[j] != 1) out += std::to_string(d[j]);
                out += 'x';
                if (j > 1) out += '^' + std::to_string(j);
            }
        }
        return out.empty() ? "0" : out;
    }

    void check_index(std::uint64_t a) const {
        if (a >= cardinality_) throw std::invalid_argument("element index out of range for ring " + render());
    }
    void check_shape(const RingElement& a) const {
        if (a.digits.size() != width_)
            throw std::invalid_argument("element shape mismatch for ring " + render());
        for (std::size_t li = 0; li < leaves_.size(); ++li)
            for (std::size_t j = 0; j < digit_count_[li]; ++j)
                if (a.digits[offset_[li] + j] >= radix_[li])
                    throw std::invalid_argument("element digit out of range for ring " + render());
    }

    std::vector<RingLeaf> leaves_;
    std::uint64_t cardinality_ = 1;
    std::uint64_t characteristic_ = 1;
    std::uint64_t one_ = 0;
    std::size_t width_ = 0;
    std::vector<std::size_t> offset_;
    std::vector<std::size_t> digit_count_;
    std::vector<std::uint64_t> radix_;
    std::vector<std::uint64_t> leaf_card_;
    std::vector<std::uint64_t> place_;
    std::vector<std::uint32_t> add_tab_, mul_tab_, neg_tab_;
    std::vector<std::uint8_t> unit_tab_;
};

}  // namespace tdg
