#pragma once

// Truncated p-typical Witt vectors.  The addition / multiplication /
// negation / Frobenius polynomial families are generated once per
// (p, n) by the ghost-component recursion
//
//     w_k(a) = sum_{i=0..k} p^i a_i^{p^(k-i)}
//
// and cached; arithmetic over any base ring is substitution into these
// universal integer polynomials.  All divisions in the recursion are
// exact by construction; a remainder aborts.

#include "cartier/bases.hpp"
#include "cartier/intpoly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace cartier {

struct WittPolyFamilies {
    uint64_t p = 0;
    uint32_t n = 0;
    std::vector<IntPolynomial> sum;     // S_0 .. S_{n-1}, in x_*, y_*
    std::vector<IntPolynomial> product; // P_0 .. P_{n-1}
    std::vector<IntPolynomial> negation; // I_0 .. I_{n-1}, in x_* only
    std::vector<IntPolynomial> frobenius; // F_0 .. F_{n-2}, in x_* only
};

namespace detail {

// ghost polynomial w_k in the x-variables shifted by `offset` slots
inline IntPolynomial ghost_poly(uint64_t p, uint32_t k, size_t nvars, size_t offset) {
    IntPolynomial w(nvars);
    Int pk = 1;
    for (uint32_t i = 0; i <= k; ++i) {
        uint64_t e = 1;
        for (uint32_t j = 0; j < k - i; ++j) e *= p;
        w += pk * IntPolynomial::variable(nvars, offset + i, static_cast<uint32_t>(e));
        pk *= p;
    }
    return w;
}

// Solve w_k(G_0..G_k) = target_k for the family G given the targets.
inline std::vector<IntPolynomial> solve_ghost(uint64_t p, uint32_t count,
                                              const std::vector<IntPolynomial>& targets,
                                              size_t nvars) {
    std::vector<IntPolynomial> fam;
    for (uint32_t k = 0; k < count; ++k) {
        IntPolynomial rhs = targets[k];
        Int pk = 1;
        for (uint32_t i = 0; i < k; ++i) {
            uint64_t e = 1;
            for (uint32_t j = 0; j < k - i; ++j) e *= p;
            rhs -= pk * fam[i].pow(e);
            pk *= p;
        }
        fam.push_back(rhs.exact_div(pk));
    }
    return fam;
}

} // namespace detail

inline const WittPolyFamilies& witt_universal_polys(uint64_t p, uint32_t n) {
    if (!is_prime(p)) throw std::invalid_argument("witt: p must be prime");
    if (n < 1) throw std::invalid_argument("witt: length must be >= 1");

    static std::mutex mu;
    static std::map<std::pair<uint64_t, uint32_t>, std::unique_ptr<WittPolyFamilies>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, n);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    auto fam = std::make_unique<WittPolyFamilies>();
    fam->p = p;
    fam->n = n;
    size_t nv = 2 * static_cast<size_t>(n);

    std::vector<IntPolynomial> wx, wy;
    for (uint32_t k = 0; k < n; ++k) {
        wx.push_back(detail::ghost_poly(p, k, nv, 0));
        wy.push_back(detail::ghost_poly(p, k, nv, n));
    }

    std::vector<IntPolynomial> t_sum, t_prod, t_neg, t_frob;
    for (uint32_t k = 0; k < n; ++k) {
        t_sum.push_back(wx[k] + wy[k]);
        t_prod.push_back(wx[k] * wy[k]);
        t_neg.push_back(-wx[k]);
        if (k + 1 < n) t_frob.push_back(wx[k + 1]);
    }
    fam->sum = detail::solve_ghost(p, n, t_sum, nv);
    fam->product = detail::solve_ghost(p, n, t_prod, nv);
    fam->negation = detail::solve_ghost(p, n, t_neg, nv);
    if (n > 1) fam->frobenius = detail::solve_ghost(p, n - 1, t_frob, nv);

    auto [pos, inserted] = cache.emplace(key, std::move(fam));
    return *pos->second;
}

// ---------------------------------------------------------------------------

template <class Base>
struct WittVector {
    uint64_t p = 0;
    const Base* base = nullptr;
    std::vector<typename Base::Value> coords;

    uint32_t length() const { return static_cast<uint32_t>(coords.size()); }
};

namespace detail {

template <class Base>
void check_pair(const WittVector<Base>& a, const WittVector<Base>& b) {
    if (a.p != b.p || a.length() != b.length() || a.base != b.base)
        throw std::invalid_argument("witt: mismatched prime, length or base");
}

template <class Base>
std::vector<typename Base::Value> joined(const Base& ring, const WittVector<Base>& a,
                                         const WittVector<Base>& b, uint32_t n) {
    std::vector<typename Base::Value> vals(2 * static_cast<size_t>(n), ring.zero());
    for (uint32_t i = 0; i < n; ++i) {
        vals[i] = a.coords[i];
        vals[n + i] = b.coords[i];
    }
    return vals;
}

} // namespace detail

template <class Base>
WittVector<Base> witt_zero(const Base& ring, uint64_t p, uint32_t n) {
    return WittVector<Base>{p, &ring, std::vector<typename Base::Value>(n, ring.zero())};
}

template <class Base>
WittVector<Base> teichmuller(const Base& ring, uint64_t p, uint32_t n,
                             typename Base::Value x) {
    auto w = witt_zero(ring, p, n);
    if (n > 0) w.coords[0] = std::move(x);
    return w;
}

template <class Base>
std::vector<typename Base::Value> ghost(const WittVector<Base>& v) {
    const Base& ring = *v.base;
    std::vector<typename Base::Value> out;
    uint32_t n = v.length();
    for (uint32_t k = 0; k < n; ++k) {
        auto acc = ring.zero();
        Int pi = 1;
        for (uint32_t i = 0; i <= k; ++i) {
            uint64_t e = 1;
            for (uint32_t j = 0; j < k - i; ++j) e *= v.p;
            acc = ring.add(acc, ring.mul(ring.from_int(pi), ring.pow(v.coords[i], e)));
            pi *= v.p;
        }
        out.push_back(acc);
    }
    return out;
}

template <class Base>
WittVector<Base> witt_add(const WittVector<Base>& a, const WittVector<Base>& b) {
    detail::check_pair(a, b);
    const auto& fam = witt_universal_polys(a.p, a.length());
    auto vals = detail::joined(*a.base, a, b, a.length());
    WittVector<Base> out{a.p, a.base, {}};
    for (const auto& s : fam.sum) out.coords.push_back(s.eval(*a.base, vals));
    return out;
}

template <class Base>
WittVector<Base> witt_mul(const WittVector<Base>& a, const WittVector<Base>& b) {
    detail::check_pair(a, b);
    const auto& fam = witt_universal_polys(a.p, a.length());
    auto vals = detail::joined(*a.base, a, b, a.length());
    WittVector<Base> out{a.p, a.base, {}};
    for (const auto& s : fam.product) out.coords.push_back(s.eval(*a.base, vals));
    return out;
}

template <class Base>
WittVector<Base> witt_neg(const WittVector<Base>& a) {
    const auto& fam = witt_universal_polys(a.p, a.length());
    auto zero = witt_zero(*a.base, a.p, a.length());
    auto vals = detail::joined(*a.base, a, zero, a.length());
    WittVector<Base> out{a.p, a.base, {}};
    for (const auto& s : fam.negation) out.coords.push_back(s.eval(*a.base, vals));
    return out;
}

// Verschiebung: shift with drop.
template <class Base>
WittVector<Base> witt_V(const WittVector<Base>& a) {
    WittVector<Base> out{a.p, a.base, std::vector<typename Base::Value>(a.length(), a.base->zero())};
    for (uint32_t i = 0; i + 1 < a.length(); ++i) out.coords[i + 1] = a.coords[i];
    return out;
}

// Frobenius.  Over a perfect characteristic-p base this is the
// coordinatewise p-th power (length preserving).  Over a torsion-free
// base it evaluates the universal family, consuming one coordinate of
// precision: W_n -> W_{n-1}.
template <class Base>
WittVector<Base> witt_F(const WittVector<Base>& a) {
    if constexpr (Base::torsion_free) {
        if (a.length() < 2)
            throw std::invalid_argument("witt_F over a torsion-free base needs length >= 2");
        const auto& fam = witt_universal_polys(a.p, a.length());
        auto zero = witt_zero(*a.base, a.p, a.length());
        auto vals = detail::joined(*a.base, a, zero, a.length());
        WittVector<Base> out{a.p, a.base, {}};
        for (const auto& s : fam.frobenius) out.coords.push_back(s.eval(*a.base, vals));
        return out;
    } else {
        if constexpr (!Base::perfect_char_p) {
            throw std::invalid_argument("witt_F requested over an imperfect torsion base");
        } else {
            WittVector<Base> out{a.p, a.base, {}};
            for (const auto& c : a.coords) out.coords.push_back(a.base->pow(c, a.p));
            return out;
        }
    }
}

template <class Base>
bool witt_eq(const WittVector<Base>& a, const WittVector<Base>& b) {
    if (a.p != b.p || a.length() != b.length()) return false;
    for (uint32_t i = 0; i < a.length(); ++i)
        if (!a.base->eq(a.coords[i], b.coords[i])) return false;
    return true;
}

} // namespace cartier
