#pragma once

// Base rings the Witt-vector engine evaluates over: the integers, Z/m,
// and small finite fields F_q with q = p^r.  Each ring exposes the same
// value-semantic surface (Value, zero, one, add, mul, neg, pow,
// from_int, eq, str) so the universal polynomials can be substituted
// uniformly.

#include "cartier/intpoly.hpp"

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cartier {

inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------

struct IntegerRing {
    using Value = Int;

    Value zero() const { return 0; }
    Value one() const { return 1; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }
    Value from_int(const Int& n) const { return n; }
    Value pow(Value b, uint64_t e) const {
        Value r = 1;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }
    bool eq(const Value& a, const Value& b) const { return a == b; }
    std::string str(const Value& a) const { return a.str(); }

    static constexpr bool torsion_free = true;
    static constexpr bool perfect_char_p = false;
};

// ---------------------------------------------------------------------------

struct ZModRing {
    using Value = Int;

    explicit ZModRing(Int modulus) : m(std::move(modulus)) {
        if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    }

    Value reduce(Int a) const {
        a %= m;
        if (a < 0) a += m;
        return a;
    }
    Value zero() const { return 0; }
    Value one() const { return reduce(1); }
    Value add(const Value& a, const Value& b) const { return reduce(a + b); }
    Value sub(const Value& a, const Value& b) const { return reduce(a - b); }
    Value mul(const Value& a, const Value& b) const { return reduce(a * b); }
    Value neg(const Value& a) const { return reduce(-a); }
    Value from_int(const Int& n) const { return reduce(n); }
    Value pow(Value b, uint64_t e) const {
        Value r = one();
        b = reduce(b);
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    bool eq(const Value& a, const Value& b) const { return a == b; }
    std::string str(const Value& a) const { return a.str(); }

    Int m;
    static constexpr bool torsion_free = false;
    static constexpr bool perfect_char_p = false;
};

// ---------------------------------------------------------------------------

// F_q, q = p^r, as F_p[t]/(irreducible of degree r).  Elements are
// encoded as integers in [0, q) via base-p digits: a_0 + a_1 p + ...
// corresponds to a_0 + a_1 t + ...  The modulus is the smallest monic
// irreducible in lexicographic order, found by exhaustive search (q is
// small here).
struct GFRing {
    using Value = uint64_t; // base-p digit encoding, < q

    GFRing(uint64_t prime, uint32_t degree) : p(prime), r(degree) {
        if (!is_prime(p)) throw std::invalid_argument("GF: p must be prime");
        if (r < 1 || r > 16) throw std::invalid_argument("GF: bad extension degree");
        q = 1;
        for (uint32_t i = 0; i < r; ++i) {
            q *= p;
            if (q > (1ull << 40)) throw std::invalid_argument("GF: field too large");
        }
        if (r > 1) modpoly = find_irreducible();
    }

    Value zero() const { return 0; }
    Value one() const { return 1; }

    Value add(Value a, Value b) const {
        if (r == 1) return (a + b) % p;
        Value out = 0, scale = 1;
        for (uint32_t i = 0; i < r; ++i) {
            out += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return out;
    }
    Value neg(Value a) const {
        if (r == 1) return (p - a % p) % p;
        Value out = 0, scale = 1;
        for (uint32_t i = 0; i < r; ++i) {
            out += ((p - a % p) % p) * scale;
            a /= p;
            scale *= p;
        }
        return out;
    }
    Value sub(Value a, Value b) const { return add(a, neg(b)); }

    Value mul(Value a, Value b) const {
        if (r == 1) return (a * b) % p;
        std::vector<uint64_t> da = digits(a), db = digits(b);
        std::vector<uint64_t> prod(2 * r - 1, 0);
        for (uint32_t i = 0; i < r; ++i)
            for (uint32_t j = 0; j < r; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        reduce_poly(prod);
        return encode(prod);
    }

    Value from_int(const Int& n) const {
        Int v = n % Int(p);
        if (v < 0) v += p;
        return static_cast<Value>(v.convert_to<uint64_t>());
    }

    Value pow(Value b, uint64_t e) const {
        Value res = one();
        while (e) {
            if (e & 1) res = mul(res, b);
            b = mul(b, b);
            e >>= 1;
        }
        return res;
    }

    // x -> x^p, the field Frobenius.
    Value frobenius(Value a) const { return pow(a, p); }

    bool eq(Value a, Value b) const { return a == b; }
    std::string str(Value a) const { return std::to_string(a); }

    Value sample(std::mt19937_64& rng) const {
        return std::uniform_int_distribution<uint64_t>(0, q - 1)(rng);
    }

    uint64_t p, q;
    uint32_t r;
    std::vector<uint64_t> modpoly; // monic, degree r, coefficient list
    static constexpr bool torsion_free = false;
    static constexpr bool perfect_char_p = true;

  private:
    std::vector<uint64_t> digits(Value a) const {
        std::vector<uint64_t> d(r);
        for (uint32_t i = 0; i < r; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    }
    Value encode(const std::vector<uint64_t>& d) const {
        Value out = 0;
        for (uint32_t i = r; i-- > 0;) out = out * p + (i < d.size() ? d[i] % p : 0);
        return out;
    }
    void reduce_poly(std::vector<uint64_t>& v) const {
        for (size_t k = v.size(); k-- > r;) {
            uint64_t c = v[k] % p;
            if (c == 0) continue;
            // subtract c * t^{k-r} * modpoly
            for (uint32_t i = 0; i <= r; ++i) {
                uint64_t sub = (c * modpoly[i]) % p;
                v[k - r + i] = (v[k - r + i] + p - sub) % p;
            }
        }
        v.resize(r);
    }

    std::vector<uint64_t> find_irreducible() const {
        // enumerate monic polynomials t^r + c_{r-1} t^{r-1} + ... + c_0
        uint64_t count = 1;
        for (uint32_t i = 0; i < r; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            std::vector<uint64_t> cand(r + 1, 0);
            uint64_t c = code;
            for (uint32_t i = 0; i < r; ++i) {
                cand[i] = c % p;
                c /= p;
            }
            cand[r] = 1;
            if (poly_irreducible(cand)) return cand;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    // trial division by all monic polynomials of degree <= r/2 over F_p
    bool poly_irreducible(const std::vector<uint64_t>& f) const {
        if (f[0] == 0) return false;
        for (uint32_t deg = 1; deg <= r / 2; ++deg) {
            uint64_t count = 1;
            for (uint32_t i = 0; i < deg; ++i) count *= p;
            for (uint64_t code = 0; code < count; ++code) {
                std::vector<uint64_t> g(deg + 1, 0);
                uint64_t c = code;
                for (uint32_t i = 0; i < deg; ++i) {
                    g[i] = c % p;
                    c /= p;
                }
                g[deg] = 1;
                if (poly_divides(g, f)) return false;
            }
        }
        return true;
    }

    bool poly_divides(const std::vector<uint64_t>& g, std::vector<uint64_t> f) const {
        size_t dg = g.size() - 1;
        for (size_t k = f.size(); k-- > dg;) {
            uint64_t c = f[k] % p; // g is monic
            if (c == 0) continue;
            for (size_t i = 0; i <= dg; ++i)
                f[k - dg + i] = (f[k - dg + i] + p - (c * g[i]) % p) % p;
        }
        for (size_t i = 0; i < dg; ++i)
            if (f[i] % p != 0) return false;
        return true;
    }
};

} // namespace cartier
