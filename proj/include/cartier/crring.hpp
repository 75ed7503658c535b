#pragma once

// Canonical normal forms and multiplication for the graded
// noncommutative ring pi_*R_A on the basis
//
//     v^i x,  d v^i x   (i >= 0, coefficient on the right)
//     x f^j,  x f^j d   (j >= 1, coefficient on the left)
//
// Multiplication is a closed-form product table derived from the
// defining relations
//
//     fv = p          vxf = V(x)        df = p fd       vd = p dv
//     fx = F(x) f     xv  = v F(x)      fdv = d (+eta if p = 2)
//     d^2 = eta d     dx  = d_A(x) + (-1)^|x| x d
//
// rather than fixpoint rewriting; its correctness is certified by the
// relation suite and the associativity / action-consistency properties.

#include "cartier/coefficients.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace cartier {

// Deliberate single-rule corruptions for negative-control tests: each
// one must make the relation suite or the action-consistency oracle
// fail, proving those tests have teeth.
enum class Corruption {
    None,
    FvPlusOne,        // f^j v^k collapse scaled by p^t + 1 instead of p^t
    DfDropP,          // d f^m = f^m d instead of p^m f^m d
    VdDropP,          // v^i d = d v^i instead of p^i d v^i
    FdvDropEta,       // drop the p = 2 eta correction in f d v
    FxDropFrobenius,  // coefficients cross f without applying F
    XvDropFrobenius,  // coefficients cross v without applying F
};

class CRElement {
  public:
    CRElement() = default;

    static CRElement zero(const CoeffRing* ring) { return CRElement(ring); }

    static CRElement one(const CoeffRing* ring) {
        CRElement e(ring);
        e.set_v(0, ring->one());
        return e;
    }

    static CRElement from_scalar(const CoeffRing* ring, const GradedScalar& x) {
        CRElement e(ring);
        e.set_v(0, x);
        return e;
    }

    static CRElement gen_v(const CoeffRing* ring) {
        CRElement e(ring);
        e.set_v(1, ring->one());
        return e;
    }

    static CRElement gen_f(const CoeffRing* ring) {
        CRElement e(ring);
        e.set_f(1, ring->one());
        return e;
    }

    static CRElement gen_d(const CoeffRing* ring) {
        CRElement e(ring);
        e.set_dv(0, ring->one());
        return e;
    }

    const CoeffRing* ring() const { return ring_; }
    bool is_zero() const {
        return v_.empty() && dv_.empty() && f_.empty() && fd_.empty();
    }

    const std::map<int, GradedScalar>& v_part() const { return v_; }
    const std::map<int, GradedScalar>& dv_part() const { return dv_; }
    const std::map<int, GradedScalar>& f_part() const { return f_; }
    const std::map<int, GradedScalar>& fd_part() const { return fd_; }

    // true when the element is a pure scalar (v_part[0] only)
    bool is_scalar() const {
        return dv_.empty() && f_.empty() && fd_.empty() &&
               (v_.empty() || (v_.size() == 1 && v_.begin()->first == 0));
    }
    GradedScalar scalar_value() const {
        if (!is_scalar()) throw std::logic_error("not a scalar element");
        return v_.empty() ? ring_->zero() : v_.begin()->second;
    }

    void set_v(int i, const GradedScalar& c) { set(v_, i, c); }
    void set_dv(int i, const GradedScalar& c) { set(dv_, i, c); }
    void set_f(int j, const GradedScalar& c) {
        if (j < 1) throw std::invalid_argument("f index must be >= 1");
        set(f_, j, c);
    }
    void set_fd(int j, const GradedScalar& c) {
        if (j < 1) throw std::invalid_argument("fd index must be >= 1");
        set(fd_, j, c);
    }

    void acc_v(int i, const GradedScalar& c) { acc(v_, i, c); }
    void acc_dv(int i, const GradedScalar& c) { acc(dv_, i, c); }
    void acc_f(int j, const GradedScalar& c) { acc(f_, j, c); }
    void acc_fd(int j, const GradedScalar& c) { acc(fd_, j, c); }

    bool operator==(const CRElement& o) const {
        if (is_zero() && o.is_zero()) return true;
        if (!ring_ || !o.ring_ || !ring_->compatible(o.ring_)) return false;
        return v_ == o.v_ && dv_ == o.dv_ && f_ == o.f_ && fd_ == o.fd_;
    }

    bool is_canonical() const {
        for (const auto* part : {&v_, &dv_, &f_, &fd_})
            for (const auto& [i, c] : *part)
                if (c.is_zero()) return false;
        for (const auto& [i, c] : v_)
            if (i < 0) return false;
        for (const auto& [i, c] : dv_)
            if (i < 0) return false;
        for (const auto& [j, c] : f_)
            if (j < 1) return false;
        for (const auto& [j, c] : fd_)
            if (j < 1) return false;
        return true;
    }

    int max_index() const {
        int m = 0;
        for (const auto* part : {&v_, &dv_, &f_, &fd_})
            for (const auto& [i, c] : *part)
                if (i > m) m = i;
        return m;
    }

  private:
    explicit CRElement(const CoeffRing* ring) : ring_(ring) {}

    void set(std::map<int, GradedScalar>& part, int i, const GradedScalar& c) {
        if (c.is_zero()) part.erase(i);
        else part[i] = c;
    }
    void acc(std::map<int, GradedScalar>& part, int i, const GradedScalar& c) {
        if (c.is_zero()) return;
        auto it = part.find(i);
        if (it == part.end()) {
            part.emplace(i, c);
        } else {
            it->second = ring_->add(it->second, c);
            if (it->second.is_zero()) part.erase(it);
        }
    }

    friend CRElement cr_mul(const CRElement&, const CRElement&, Corruption);

    const CoeffRing* ring_ = nullptr;
    std::map<int, GradedScalar> v_, dv_; // i >= 0, coefficient right
    std::map<int, GradedScalar> f_, fd_; // j >= 1, coefficient left
};

// ---------------------------------------------------------------------------

inline void require_same_ring(const CRElement& a, const CRElement& b) {
    if (a.is_zero() || b.is_zero()) {
        if (a.ring() && b.ring() && !a.ring()->compatible(b.ring()))
            throw std::invalid_argument("mixed-ring elements");
        return;
    }
    if (!a.ring() || !b.ring() || !a.ring()->compatible(b.ring()))
        throw std::invalid_argument("mixed-ring elements");
}

inline CRElement cr_add(const CRElement& a, const CRElement& b) {
    require_same_ring(a, b);
    if (a.is_zero() && !a.ring()) return b;
    CRElement r = a;
    for (const auto& [i, c] : b.v_part()) r.acc_v(i, c);
    for (const auto& [i, c] : b.dv_part()) r.acc_dv(i, c);
    for (const auto& [j, c] : b.f_part()) r.acc_f(j, c);
    for (const auto& [j, c] : b.fd_part()) r.acc_fd(j, c);
    return r;
}

inline CRElement cr_neg(const CRElement& a) {
    if (!a.ring()) return a;
    CRElement r = CRElement::zero(a.ring());
    const CoeffRing& K = *a.ring();
    for (const auto& [i, c] : a.v_part()) r.set_v(i, K.neg(c));
    for (const auto& [i, c] : a.dv_part()) r.set_dv(i, K.neg(c));
    for (const auto& [j, c] : a.f_part()) r.set_f(j, K.neg(c));
    for (const auto& [j, c] : a.fd_part()) r.set_fd(j, K.neg(c));
    return r;
}

inline CRElement cr_sub(const CRElement& a, const CRElement& b) {
    return cr_add(a, cr_neg(b));
}

inline CRElement cr_scalar_mul(const GradedScalar& c, const CRElement& a);

inline CRElement cr_mul(const CRElement& a, const CRElement& b,
                        Corruption corr = Corruption::None) {
    require_same_ring(a, b);
    const CoeffRing* ringp = a.ring() ? a.ring() : b.ring();
    if (!ringp) return a; // zero * zero with no ring attached
    const CoeffRing& K = *ringp;
    CRElement r = CRElement::zero(ringp);
    if (a.is_zero() || b.is_zero()) return r;

    const uint64_t p = K.prime();
    const GradedScalar eta = K.eta();

    // coefficient crossing f^k (rule fx = F(x) f)
    auto Ff = [&](GradedScalar x, int k) {
        if (corr == Corruption::FxDropFrobenius) return x;
        for (int t = 0; t < k && !x.is_zero(); ++t) x = K.frobenius(x);
        return x;
    };
    // coefficient crossing v^k (rule xv = v F(x))
    auto Fv = [&](GradedScalar x, int k) {
        if (corr == Corruption::XvDropFrobenius) return x;
        for (int t = 0; t < k && !x.is_zero(); ++t) x = K.frobenius(x);
        return x;
    };
    auto Vk = [&](GradedScalar x, int k) {
        for (int t = 0; t < k && !x.is_zero(); ++t) x = K.verschiebung(x);
        return x;
    };
    auto dA = [&](const GradedScalar& x) { return K.differential(x); };
    auto eps = [&](const GradedScalar& x) { return K.koszul(x); };

    auto ppow = [&](int t) {
        Int m = 1;
        for (int i = 0; i < t; ++i) m *= p;
        return m;
    };
    // p^t from the fv = p collapse
    auto p_fv = [&](const GradedScalar& c, int t) {
        Int m = ppow(t);
        if (corr == Corruption::FvPlusOne) m += 1;
        return K.int_mul(m, c);
    };
    // p^m from d f^m = p^m f^m d
    auto p_df = [&](const GradedScalar& c, int m) {
        if (corr == Corruption::DfDropP) return c;
        return K.int_mul(ppow(m), c);
    };
    // p^i from v^i d = p^i d v^i
    auto p_vd = [&](const GradedScalar& c, int i) {
        if (corr == Corruption::VdDropP) return c;
        return K.int_mul(ppow(i), c);
    };

    // x f^j d v^k y, shared by the (x f^j)(d v^k y) and (x f^j d)(v^k y)
    // pairings: iterate fdv = d (+eta), emitting one correction per step.
    auto reduce_fdv = [&](int j, int k, const GradedScalar& x, const GradedScalar& y) {
        int t = j < k ? j : k;
        if (j <= k) {
            GradedScalar xe = eps(x);
            r.acc_dv(k - j, K.mul(Fv(xe, k - j), y));
            r.acc_v(k - j, K.neg(K.mul(Fv(dA(xe), k - j), y)));
        } else {
            r.acc_f(j - k, K.mul(x, Ff(dA(y), j - k)));
            r.acc_fd(j - k, K.mul(x, Ff(eps(y), j - k)));
        }
        if (p != 2 || corr == Corruption::FdvDropEta) return;
        for (int s = 1; s <= t; ++s) {
            int a = j - s, b = k - s;
            GradedScalar xa = K.mul(x, Ff(eta, a)); // f^a eta = F^a(eta) f^a
            if (xa.is_zero()) continue;
            if (a > b) {
                r.acc_f(a - b, p_fv(K.mul(xa, Ff(y, a - b)), b));
            } else if (a == b) {
                r.acc_v(0, p_fv(K.mul(xa, y), a));
            } else {
                r.acc_v(b - a, p_fv(K.mul(Fv(xa, b - a), y), a));
            }
        }
    };

    // --- v^i x on the left ------------------------------------------------
    for (const auto& [i, x] : a.v_part()) {
        for (const auto& [k, y] : b.v_part()) // v^i x v^k y = v^{i+k} F^k(x) y
            r.acc_v(i + k, K.mul(Fv(x, k), y));
        for (const auto& [k, y] : b.dv_part()) { // x crosses d, then v^i d = p^i d v^i
            GradedScalar xe = eps(x);
            r.acc_dv(i + k, p_vd(K.mul(Fv(xe, k), y), i));
            r.acc_v(i + k, K.neg(K.mul(Fv(dA(xe), k), y)));
        }
        for (const auto& [j, y] : b.f_part()) { // v^i c f^j collapse via vxf = V(x)
            GradedScalar c = K.mul(x, y);
            if (i > j) r.acc_v(i - j, Vk(c, j));
            else if (i == j) r.acc_v(0, Vk(c, i));
            else r.acc_f(j - i, Vk(c, i));
        }
        for (const auto& [j, y] : b.fd_part()) {
            GradedScalar c = K.mul(x, y);
            if (i >= j) { // v^{i-j} V^j(c) d, then move the coefficient past d
                GradedScalar ee = eps(Vk(c, j));
                int s = i - j;
                r.acc_dv(s, p_vd(ee, s));
                r.acc_v(s, K.neg(dA(ee)));
            } else {
                r.acc_fd(j - i, Vk(c, i));
            }
        }
    }

    // --- d v^i x on the left ------------------------------------------------
    for (const auto& [i, x] : a.dv_part()) {
        for (const auto& [k, y] : b.v_part())
            r.acc_dv(i + k, K.mul(Fv(x, k), y));
        for (const auto& [k, y] : b.dv_part()) {
            // d v^i x d v^k y; uses d v^i d = p^i (-d v^i F^i(eta) + v^i F^i(d_A(eta)))
            GradedScalar xe = eps(x);
            GradedScalar etaI = Fv(eta, i);
            GradedScalar t1 = p_vd(K.mul(Fv(K.mul(etaI, xe), k), y), i);
            GradedScalar t2 = K.mul(Fv(dA(xe), k), y);
            r.acc_dv(i + k, K.neg(K.add(t1, t2)));
            r.acc_v(i + k, p_vd(K.mul(Fv(K.mul(Fv(dA(eta), i), xe), k), y), i));
        }
        for (const auto& [j, y] : b.f_part()) {
            GradedScalar c = K.mul(x, y);
            if (i >= j) {
                r.acc_dv(i - j, Vk(c, j));
            } else { // d e f^m = d_A(e) f^m + p^m eps(e) f^m d
                GradedScalar e = Vk(c, i);
                int m = j - i;
                r.acc_f(m, dA(e));
                r.acc_fd(m, p_df(eps(e), m));
            }
        }
        for (const auto& [j, y] : b.fd_part()) {
            GradedScalar c = K.mul(x, y);
            if (i >= j) {
                GradedScalar ee = eps(Vk(c, j));
                int s = i - j;
                GradedScalar t1 = p_vd(K.mul(Fv(eta, s), ee), s);
                r.acc_dv(s, K.neg(K.add(t1, dA(ee))));
                r.acc_v(s, p_vd(K.mul(Fv(dA(eta), s), ee), s));
            } else { // d e f^m d
                GradedScalar e = Vk(c, i);
                int m = j - i;
                r.acc_fd(m, K.add(dA(e), p_df(K.mul(eps(e), Ff(eta, m)), m)));
            }
        }
    }

    // --- x f^j on the left --------------------------------------------------
    for (const auto& [j, x] : a.f_part()) {
        for (const auto& [k, y] : b.v_part()) { // f^j v^k = p^min collapse
            if (j > k) r.acc_f(j - k, p_fv(K.mul(x, Ff(y, j - k)), k));
            else if (j == k) r.acc_v(0, p_fv(K.mul(x, y), j));
            else r.acc_v(k - j, p_fv(K.mul(Fv(x, k - j), y), j));
        }
        for (const auto& [k, y] : b.dv_part())
            reduce_fdv(j, k, x, y);
        for (const auto& [k, y] : b.f_part())
            r.acc_f(j + k, K.mul(x, Ff(y, j)));
        for (const auto& [k, y] : b.fd_part())
            r.acc_fd(j + k, K.mul(x, Ff(y, j)));
    }

    // --- x f^j d on the left --------------------------------------------------
    for (const auto& [j, x] : a.fd_part()) {
        for (const auto& [k, y] : b.v_part())
            reduce_fdv(j, k, x, y);
        for (const auto& [k, y] : b.dv_part()) // d d v^k = eta d v^k
            reduce_fdv(j, k, K.mul(x, Ff(eta, j)), y);
        for (const auto& [k, y] : b.f_part()) { // x f^j d y f^k
            r.acc_f(j + k, K.mul(x, Ff(dA(y), j)));
            r.acc_fd(j + k, p_df(K.mul(x, Ff(eps(y), j)), k));
        }
        for (const auto& [k, y] : b.fd_part()) {
            GradedScalar t1 = K.mul(x, Ff(dA(y), j));
            GradedScalar t2 = p_df(K.mul(K.mul(x, Ff(eps(y), j)), Ff(eta, j + k)), k);
            r.acc_fd(j + k, K.add(t1, t2));
        }
    }

    return r;
}

inline CRElement cr_scalar_mul(const GradedScalar& c, const CRElement& a) {
    if (!a.ring()) return a;
    return cr_mul(CRElement::from_scalar(a.ring(), c), a);
}

inline CRElement cr_int_mul(const Int& m, const CRElement& a) {
    if (!a.ring()) return a;
    return cr_mul(CRElement::from_scalar(a.ring(), a.ring()->from_int(m)), a);
}

// ---------------------------------------------------------------------------
// Words in the letters v, f, d and coefficient insertions.

struct Letter {
    enum Kind { V, F, D, Coeff } kind = V;
    GradedScalar coeff; // Coeff only

    static Letter v() { return Letter{V, {}}; }
    static Letter f() { return Letter{F, {}}; }
    static Letter d() { return Letter{D, {}}; }
    static Letter c(const GradedScalar& x) { return Letter{Coeff, x}; }
};

using Word = std::vector<Letter>;

inline CRElement cr_eval_word(const CoeffRing* ring, const Word& w,
                              Corruption corr = Corruption::None) {
    CRElement acc = CRElement::one(ring);
    for (const auto& l : w) {
        CRElement e;
        switch (l.kind) {
            case Letter::V: e = CRElement::gen_v(ring); break;
            case Letter::F: e = CRElement::gen_f(ring); break;
            case Letter::D: e = CRElement::gen_d(ring); break;
            case Letter::Coeff:
                if (l.coeff.ring() && !ring->compatible(l.coeff.ring()))
                    throw std::invalid_argument("foreign coefficient in word");
                e = CRElement::from_scalar(ring, l.coeff);
                break;
        }
        acc = cr_mul(acc, e, corr);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Grading.

inline std::map<int, CRElement> cr_degree(const CRElement& a) {
    std::map<int, CRElement> out;
    if (!a.ring()) return out;
    const CoeffRing& K = *a.ring();
    auto put = [&](int deg, auto setter) {
        auto it = out.find(deg);
        if (it == out.end())
            it = out.emplace(deg, CRElement::zero(a.ring())).first;
        setter(it->second);
    };
    // a v^i / f^j monomial sits in the degree of its coefficient; the d
    // in d v^i / f^j d contributes one more.
    for (const auto& [i, c] : a.v_part())
        for (const auto& [cd, h] : c.components())
            put(cd, [&, i = i](CRElement& e) { e.acc_v(i, K.from_component(cd, h)); });
    for (const auto& [i, c] : a.dv_part())
        for (const auto& [cd, h] : c.components())
            put(cd + 1, [&, i = i](CRElement& e) { e.acc_dv(i, K.from_component(cd, h)); });
    for (const auto& [j, c] : a.f_part())
        for (const auto& [cd, h] : c.components())
            put(cd, [&, j = j](CRElement& e) { e.acc_f(j, K.from_component(cd, h)); });
    for (const auto& [j, c] : a.fd_part())
        for (const auto& [cd, h] : c.components())
            put(cd + 1, [&, j = j](CRElement& e) { e.acc_fd(j, K.from_component(cd, h)); });
    return out;
}

// ---------------------------------------------------------------------------
// Basis monomials up to a support bound.

struct CRMonomial {
    enum Shape { One, Vpow, DV, Fpow, FD } shape = One;
    int index = 0; // power of v (Vpow, DV) or f (Fpow, FD); DV allows 0

    // operator degree contributed by the d factor (coefficient degree excluded)
    int d_degree() const { return (shape == DV || shape == FD) ? 1 : 0; }

    std::string str() const {
        std::ostringstream os;
        auto pw = [&](const char* g, int e) {
            os << g;
            if (e > 1) os << "^" << e;
        };
        switch (shape) {
            case One: os << "1"; break;
            case Vpow: pw("v", index); break;
            case DV:
                os << "d";
                if (index > 0) {
                    os << "*";
                    pw("v", index);
                }
                break;
            case Fpow: pw("f", index); break;
            case FD:
                pw("f", index);
                os << "*d";
                break;
        }
        return os.str();
    }

    CRElement element(const CoeffRing* ring) const {
        CRElement e = CRElement::zero(ring);
        GradedScalar one = ring->one();
        switch (shape) {
            case One: e.set_v(0, one); break;
            case Vpow: e.set_v(index, one); break;
            case DV: e.set_dv(index, one); break;
            case Fpow: e.set_f(index, one); break;
            case FD: e.set_fd(index, one); break;
        }
        return e;
    }

    bool operator==(const CRMonomial&) const = default;
};

// All 2(2M+1) basis monomials with index <= M, in the order
// 1, v..v^M, d, dv..dv^M, f..f^M, fd..f^M d.
inline std::vector<CRMonomial> cr_basis(int max_index,
                                        std::optional<int> d_degree = std::nullopt) {
    if (max_index < 0) throw std::invalid_argument("basis bound must be >= 0");
    std::vector<CRMonomial> out;
    auto keep = [&](CRMonomial m) {
        if (!d_degree || m.d_degree() == *d_degree) out.push_back(m);
    };
    keep({CRMonomial::One, 0});
    for (int i = 1; i <= max_index; ++i) keep({CRMonomial::Vpow, i});
    for (int i = 0; i <= max_index; ++i) keep({CRMonomial::DV, i});
    for (int j = 1; j <= max_index; ++j) keep({CRMonomial::Fpow, j});
    for (int j = 1; j <= max_index; ++j) keep({CRMonomial::FD, j});
    return out;
}

// ---------------------------------------------------------------------------
// Random elements for property tests.

inline GradedScalar random_scalar(const CoeffRing& K, std::mt19937_64& rng) {
    return K.random(rng);
}

inline CRElement random_cr_element(const CoeffRing* ring, int max_index,
                                   std::mt19937_64& rng, int entries = 3) {
    CRElement e = CRElement::zero(ring);
    for (int t = 0; t < entries; ++t) {
        int part = static_cast<int>(rng() % 4);
        int idx = static_cast<int>(rng() % static_cast<uint64_t>(max_index + 1));
        GradedScalar c = ring->random(rng);
        switch (part) {
            case 0: e.acc_v(idx, c); break;
            case 1: e.acc_dv(idx, c); break;
            case 2: e.acc_f(idx == 0 ? 1 : idx, c); break;
            default: e.acc_fd(idx == 0 ? 1 : idx, c); break;
        }
    }
    return e;
}

// ---------------------------------------------------------------------------
// Relation suite: sample the defining relations with random homogeneous
// coefficients and report any violated instance.

enum class RuleSet { ITCart, IR };

struct RelationFailure {
    std::string relation;
    std::string detail;
};

struct RelationReport {
    uint64_t checks = 0;
    std::vector<RelationFailure> failures;
    bool ok() const { return failures.empty(); }
};

inline RelationReport relation_suite(const CoeffRing* ring, RuleSet rules,
                                     int samples, uint64_t seed,
                                     Corruption corr = Corruption::None) {
    RelationReport rep;
    std::mt19937_64 rng(seed);
    const CoeffRing& K = *ring;
    const uint64_t p = K.prime();

    auto ev = [&](const Word& w) { return cr_eval_word(ring, w, corr); };
    auto record = [&](const std::string& name, const CRElement& lhs,
                      const CRElement& rhs, const std::string& detail) {
        ++rep.checks;
        if (!(lhs == rhs)) rep.failures.push_back({name, detail});
    };

    // operator relations (coefficient-free): checked once, not per sample
    record("f*v = p", ev({Letter::f(), Letter::v()}),
           CRElement::from_scalar(ring, K.from_int(p)), "");
    record("d*f = p*f*d", ev({Letter::d(), Letter::f()}),
           cr_int_mul(p, ev({Letter::f(), Letter::d()})), "");
    record("v*d = p*d*v", ev({Letter::v(), Letter::d()}),
           cr_int_mul(p, ev({Letter::d(), Letter::v()})), "");
    {
        CRElement rhs = CRElement::gen_d(ring);
        if (p == 2) rhs = cr_add(rhs, CRElement::from_scalar(ring, K.eta()));
        record(p == 2 ? "f*d*v = d + eta" : "f*d*v = d",
               ev({Letter::f(), Letter::d(), Letter::v()}), rhs, "");
    }
    record("d*d = eta*d", ev({Letter::d(), Letter::d()}),
           ev({Letter::c(K.eta()), Letter::d()}), "");

    if (rules == RuleSet::IR) {
        for (int s = 0; s < samples; ++s) {
            GradedScalar x = K.random_homogeneous(rng);
            std::string detail = "x = " + K.print_scalar(x);
            record("f*x = F(x)*f", ev({Letter::f(), Letter::c(x)}),
                   ev({Letter::c(K.frobenius(x)), Letter::f()}), detail);
            record("x*v = v*F(x)", ev({Letter::c(x), Letter::v()}),
                   ev({Letter::v(), Letter::c(K.frobenius(x))}), detail);
            record("v*x*f = V(x)", ev({Letter::v(), Letter::c(x), Letter::f()}),
                   CRElement::from_scalar(ring, K.verschiebung(x)), detail);
            {
                CRElement rhs = CRElement::from_scalar(ring, K.differential(x));
                CRElement xd = ev({Letter::c(x), Letter::d()});
                bool odd = !x.is_zero() && x.degree() % 2 != 0;
                rhs = cr_add(rhs, odd ? cr_neg(xd) : xd);
                record("d*x = d(x) + (-1)^|x| x*d",
                       ev({Letter::d(), Letter::c(x)}), rhs, detail);
            }
        }
    }
    return rep;
}

} // namespace cartier
