#pragma once

// Graded coefficient rings pi_*A with Frobenius, Verschiebung, a
// differential and the 2-torsion degree-1 class eta.  Four instances
// ship:
//
//   witt-fp        W_n(F_p)           F = id coordinatewise p-power, V = shift
//   witt-perfect   W_n(F_q), q = p^r  F = coordinatewise p-power, V = shift
//   zmod-pn        Z/p^n              F = id, V = p*
//   formal-eta     p = 2 only; degree 0 is Z/4*1 (+) Z/2*u, degree 1 is
//                  Z/2*eta, degree >= 2 truncated.  F(u) = 0, V(1) = 2+u,
//                  d(u) = eta.  The u class is what makes F.d.V = d + eta*
//                  hold on the ring itself; a plain Z/4 carrier cannot
//                  satisfy it together with d.F = 2 F.d.

#include "cartier/witt.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cartier {

enum class CoeffKind { WittFp, WittPerfect, ZmodPn, FormalEta };

inline std::string kind_name(CoeffKind k) {
    switch (k) {
        case CoeffKind::WittFp: return "witt-fp";
        case CoeffKind::WittPerfect: return "witt-perfect";
        case CoeffKind::ZmodPn: return "zmod-pn";
        case CoeffKind::FormalEta: return "formal-eta";
    }
    return "?";
}

inline CoeffKind kind_from_name(const std::string& s) {
    if (s == "witt-fp") return CoeffKind::WittFp;
    if (s == "witt-perfect") return CoeffKind::WittPerfect;
    if (s == "zmod-pn") return CoeffKind::ZmodPn;
    if (s == "formal-eta") return CoeffKind::FormalEta;
    throw std::invalid_argument("unknown coefficient kind: " + s);
}

struct RingDescriptor {
    uint64_t prime = 2;
    uint32_t truncation = 1;
    CoeffKind kind = CoeffKind::WittFp;
    uint64_t q = 0; // witt-perfect only

    bool eta_present() const { return kind == CoeffKind::FormalEta; }
    bool operator==(const RingDescriptor&) const = default;
};

// One homogeneous component; interpretation depends on ring kind and
// degree.  Entries are kept reduced so structural equality is exact.
struct Hom {
    std::vector<Int> data;
    bool operator==(const Hom&) const = default;
    bool operator<(const Hom& o) const { return data < o.data; }
};

class CoeffRing;

class GradedScalar {
  public:
    GradedScalar() = default;

    const CoeffRing* ring() const { return ring_; }
    bool is_zero() const { return comps_.empty(); }
    const std::map<int, Hom>& components() const { return comps_; }

    bool operator==(const GradedScalar& o) const;

    // homogeneous degree; throws unless exactly one component
    int degree() const {
        if (comps_.size() != 1) throw std::logic_error("degree of non-homogeneous scalar");
        return comps_.begin()->first;
    }

  private:
    friend class CoeffRing;
    const CoeffRing* ring_ = nullptr;
    std::map<int, Hom> comps_; // nonzero values only
};

class CoeffRing {
  public:
    static std::shared_ptr<const CoeffRing> make(const RingDescriptor& d) {
        return std::shared_ptr<const CoeffRing>(new CoeffRing(d));
    }

    const RingDescriptor& descriptor() const { return desc_; }
    uint64_t prime() const { return desc_.prime; }
    uint32_t truncation() const { return desc_.truncation; }
    CoeffKind kind() const { return desc_.kind; }
    bool compatible(const CoeffRing* o) const { return o && o->desc_ == desc_; }

    // ---- constants -------------------------------------------------------

    GradedScalar zero() const { return wrap({}); }

    GradedScalar one() const {
        switch (desc_.kind) {
            case CoeffKind::ZmodPn: return wrap({{0, Hom{{1}}}});
            case CoeffKind::FormalEta: return wrap({{0, Hom{{1, 0}}}});
            default: {
                std::vector<Int> c(desc_.truncation, 0);
                c[0] = 1;
                return wrap({{0, Hom{std::move(c)}}});
            }
        }
    }

    GradedScalar eta() const {
        if (desc_.kind != CoeffKind::FormalEta) return zero();
        return wrap({{1, Hom{{1}}}});
    }

    // the extra degree-0 class of the formal-eta instance
    GradedScalar formal_u() const {
        if (desc_.kind != CoeffKind::FormalEta)
            throw std::invalid_argument("u exists only in the formal-eta instance");
        return wrap({{0, Hom{{0, 1}}}});
    }

    GradedScalar from_int(const Int& m) const {
        auto h = hom_from_int(m);
        if (!h) return zero();
        return wrap({{0, *h}});
    }

    // Witt literal W[a0,a1,...]; entries are base-p-digit encodings of
    // F_q elements.  Rejected for non-Witt kinds or wrong length.
    GradedScalar from_witt_coords(const std::vector<Int>& coords) const {
        if (desc_.kind != CoeffKind::WittFp && desc_.kind != CoeffKind::WittPerfect)
            throw std::invalid_argument("W[...] literal requires a Witt-type ring");
        if (coords.size() != desc_.truncation)
            throw std::invalid_argument("W[...] literal has wrong length (expected " +
                                        std::to_string(desc_.truncation) + " coordinates)");
        Hom h;
        for (const auto& c : coords) {
            Int v = c % Int(field_->q);
            if (v < 0) v += field_->q;
            h.data.push_back(v);
        }
        if (hom_is_zero(h)) return zero();
        return wrap({{0, std::move(h)}});
    }

    // ---- arithmetic ------------------------------------------------------

    GradedScalar add(const GradedScalar& a, const GradedScalar& b) const {
        require(a);
        require(b);
        std::map<int, Hom> out = a.comps_;
        for (const auto& [deg, h] : b.comps_) {
            auto it = out.find(deg);
            if (it == out.end()) {
                out.emplace(deg, h);
            } else {
                it->second = hom_add(deg, it->second, h);
                if (hom_is_zero(it->second)) out.erase(it);
            }
        }
        return wrap(std::move(out));
    }

    GradedScalar neg(const GradedScalar& a) const {
        require(a);
        std::map<int, Hom> out;
        for (const auto& [deg, h] : a.comps_) out.emplace(deg, hom_neg(deg, h));
        return wrap(std::move(out));
    }

    GradedScalar sub(const GradedScalar& a, const GradedScalar& b) const {
        return add(a, neg(b));
    }

    GradedScalar mul(const GradedScalar& a, const GradedScalar& b) const {
        require(a);
        require(b);
        GradedScalar acc = zero();
        for (const auto& [da, ha] : a.comps_) {
            for (const auto& [db, hb] : b.comps_) {
                auto h = hom_mul(da, ha, db, hb);
                if (!h) continue;
                acc = add(acc, wrap({{da + db, *h}}));
            }
        }
        return acc;
    }

    // ---- operators -------------------------------------------------------

    // degree-preserving ring endomorphism F_A
    GradedScalar frobenius(const GradedScalar& a) const {
        require(a);
        std::map<int, Hom> out;
        for (const auto& [deg, h] : a.comps_) {
            auto r = hom_F(deg, h);
            if (!hom_is_zero(r)) out.emplace(deg, std::move(r));
        }
        return wrap(std::move(out));
    }

    // additive V_A with F(V(x)) = p x and V(F(x) y) = x V(y)
    GradedScalar verschiebung(const GradedScalar& a) const {
        require(a);
        std::map<int, Hom> out;
        for (const auto& [deg, h] : a.comps_) {
            auto r = hom_V(deg, h);
            if (!hom_is_zero(r)) out.emplace(deg, std::move(r));
        }
        return wrap(std::move(out));
    }

    // degree +1 additive d_A
    GradedScalar differential(const GradedScalar& a) const {
        require(a);
        GradedScalar acc = zero();
        for (const auto& [deg, h] : a.comps_) {
            auto r = hom_d(deg, h);
            if (r) acc = add(acc, wrap({{deg + 1, *r}}));
        }
        return acc;
    }

    // Koszul sign operator: negate odd-degree components
    GradedScalar koszul(const GradedScalar& a) const {
        require(a);
        std::map<int, Hom> out;
        for (const auto& [deg, h] : a.comps_)
            out.emplace(deg, (deg % 2 != 0) ? hom_neg(deg, h) : h);
        return wrap(std::move(out));
    }

    GradedScalar int_mul(const Int& m, const GradedScalar& a) const {
        return mul(from_int(m), a);
    }

    // wrap a single homogeneous component back into a scalar
    GradedScalar from_component(int deg, const Hom& h) const {
        if (hom_is_zero(h)) return zero();
        return wrap({{deg, h}});
    }

    // structural validity of a deserialized component
    bool valid_component(int deg, const Hom& h) const {
        switch (desc_.kind) {
            case CoeffKind::ZmodPn:
                return deg == 0 && h.data.size() == 1 && h.data[0] >= 0 &&
                       h.data[0] < modulus_;
            case CoeffKind::FormalEta:
                if (deg == 0)
                    return h.data.size() == 2 && h.data[0] >= 0 && h.data[0] < 4 &&
                           h.data[1] >= 0 && h.data[1] < 2;
                if (deg == 1)
                    return h.data.size() == 1 && h.data[0] >= 0 && h.data[0] < 2;
                return false;
            default: {
                if (deg != 0 || h.data.size() != desc_.truncation) return false;
                for (const auto& v : h.data)
                    if (v < 0 || v >= Int(field_->q)) return false;
                return true;
            }
        }
    }

    // ---- sampling --------------------------------------------------------

    GradedScalar random_homogeneous(std::mt19937_64& rng) const {
        int deg = 0;
        if (desc_.kind == CoeffKind::FormalEta) deg = static_cast<int>(rng() % 2);
        auto h = random_hom(deg, rng);
        if (hom_is_zero(h)) return zero();
        return wrap({{deg, std::move(h)}});
    }

    GradedScalar random(std::mt19937_64& rng) const {
        if (desc_.kind != CoeffKind::FormalEta) return random_homogeneous(rng);
        GradedScalar r = zero();
        auto h0 = random_hom(0, rng);
        auto h1 = random_hom(1, rng);
        std::map<int, Hom> out;
        if (!hom_is_zero(h0)) out.emplace(0, std::move(h0));
        if (!hom_is_zero(h1)) out.emplace(1, std::move(h1));
        return wrap(std::move(out));
    }

    // ---- printing --------------------------------------------------------

    std::string print_hom(int deg, const Hom& h) const {
        std::ostringstream os;
        switch (desc_.kind) {
            case CoeffKind::ZmodPn:
                os << h.data[0].str();
                break;
            case CoeffKind::WittFp:
            case CoeffKind::WittPerfect: {
                os << "W[";
                for (size_t i = 0; i < h.data.size(); ++i) {
                    if (i) os << ",";
                    os << h.data[i].str();
                }
                os << "]";
                break;
            }
            case CoeffKind::FormalEta: {
                if (deg == 0) {
                    const Int& a = h.data[0];
                    const Int& s = h.data[1];
                    if (s == 0) os << a.str();
                    else if (a == 0) os << "u";
                    else os << a.str() << "+u";
                } else {
                    os << "eta";
                }
                break;
            }
        }
        return os.str();
    }

    std::string print_scalar(const GradedScalar& a) const {
        require(a);
        if (a.is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [deg, h] : a.components()) {
            if (!first) os << "+";
            first = false;
            os << print_hom(deg, h);
        }
        return os.str();
    }

    const GFRing* field() const { return field_ ? &*field_ : nullptr; }

  private:
    explicit CoeffRing(const RingDescriptor& d) : desc_(d) {
        if (!is_prime(d.prime)) throw std::invalid_argument("prime must be a prime number");
        if (d.truncation < 1) throw std::invalid_argument("truncation must be >= 1");
        switch (d.kind) {
            case CoeffKind::WittFp:
                field_.emplace(d.prime, 1);
                break;
            case CoeffKind::WittPerfect: {
                if (d.q < 2) throw std::invalid_argument("witt-perfect requires q");
                uint64_t q = d.q;
                uint32_t r = 0;
                while (q > 1) {
                    if (q % d.prime != 0)
                        throw std::invalid_argument("q must be a positive power of p");
                    q /= d.prime;
                    ++r;
                }
                if (r < 1) throw std::invalid_argument("q must be a positive power of p");
                field_.emplace(d.prime, r);
                break;
            }
            case CoeffKind::ZmodPn: {
                modulus_ = 1;
                for (uint32_t i = 0; i < d.truncation; ++i) modulus_ *= d.prime;
                break;
            }
            case CoeffKind::FormalEta:
                if (d.prime != 2)
                    throw std::invalid_argument("formal-eta requires p = 2");
                break;
        }
    }

    GradedScalar wrap(std::map<int, Hom> comps) const {
        GradedScalar g;
        g.ring_ = this;
        g.comps_ = std::move(comps);
        return g;
    }

    void require(const GradedScalar& a) const {
        if (a.ring() == nullptr) {
            if (!a.is_zero()) throw std::invalid_argument("uninitialized scalar");
            return;
        }
        if (!compatible(a.ring())) throw std::invalid_argument("mixed-ring scalar operands");
    }

    bool hom_is_zero(const Hom& h) const {
        for (const auto& v : h.data)
            if (v != 0) return false;
        return true;
    }

    std::optional<Hom> hom_from_int(Int m) const {
        switch (desc_.kind) {
            case CoeffKind::ZmodPn: {
                m %= modulus_;
                if (m < 0) m += modulus_;
                if (m == 0) return std::nullopt;
                return Hom{{m}};
            }
            case CoeffKind::FormalEta: {
                m %= 4;
                if (m < 0) m += 4;
                if (m == 0) return std::nullopt;
                return Hom{{m, 0}};
            }
            default: {
                // p^n * 1 = 0 in W_n(F_q)
                Int pn = 1;
                for (uint32_t i = 0; i < desc_.truncation; ++i) pn *= desc_.prime;
                m %= pn;
                if (m < 0) m += pn;
                if (m == 0) return std::nullopt;
                // double-and-add over the universal addition family
                auto acc = witt_zero(*field_, desc_.prime, desc_.truncation);
                auto addend = teichmuller(*field_, desc_.prime, desc_.truncation, field_->one());
                while (m > 0) {
                    if (m % 2 == 1) acc = witt_add(acc, addend);
                    m /= 2;
                    if (m > 0) addend = witt_add(addend, addend);
                }
                Hom h;
                for (auto c : acc.coords) h.data.push_back(c);
                if (hom_is_zero(h)) return std::nullopt;
                return h;
            }
        }
    }

    WittVector<GFRing> to_wv(const Hom& h) const {
        WittVector<GFRing> w{desc_.prime, &*field_, {}};
        for (const auto& v : h.data) w.coords.push_back(v.convert_to<uint64_t>());
        return w;
    }
    Hom from_wv(const WittVector<GFRing>& w) const {
        Hom h;
        for (auto c : w.coords) h.data.push_back(c);
        return h;
    }

    Hom hom_add(int deg, const Hom& a, const Hom& b) const {
        switch (desc_.kind) {
            case CoeffKind::ZmodPn:
                return Hom{{(a.data[0] + b.data[0]) % modulus_}};
            case CoeffKind::FormalEta:
                if (deg == 0)
                    return Hom{{(a.data[0] + b.data[0]) % 4, (a.data[1] + b.data[1]) % 2}};
                return Hom{{(a.data[0] + b.data[0]) % 2}};
            default:
                return from_wv(witt_add(to_wv(a), to_wv(b)));
        }
    }

    Hom hom_neg(int deg, const Hom& a) const {
        switch (desc_.kind) {
            case CoeffKind::ZmodPn:
                return Hom{{(modulus_ - a.data[0]) % modulus_}};
            case CoeffKind::FormalEta:
                if (deg == 0) return Hom{{(4 - a.data[0]) % 4, a.data[1]}};
                return a; // 2-torsion
            default:
                return from_wv(witt_neg(to_wv(a)));
        }
    }

    std::optional<Hom> hom_mul(int da, const Hom& a, int db, const Hom& b) const {
        switch (desc_.kind) {
            case CoeffKind::ZmodPn: {
                Hom r{{(a.data[0] * b.data[0]) % modulus_}};
                if (hom_is_zero(r)) return std::nullopt;
                return r;
            }
            case CoeffKind::FormalEta: {
                if (da + db >= 2) return std::nullopt; // truncated
                if (da == 0 && db == 0) {
                    Hom r{{(a.data[0] * b.data[0]) % 4,
                           (a.data[0] * b.data[1] + a.data[1] * b.data[0]) % 2}};
                    if (hom_is_zero(r)) return std::nullopt;
                    return r;
                }
                // degree 0 times degree 1 (either order); u * eta = 0
                const Hom& h0 = (da == 0) ? a : b;
                const Hom& h1 = (da == 0) ? b : a;
                Hom r{{(h0.data[0] * h1.data[0]) % 2}};
                if (hom_is_zero(r)) return std::nullopt;
                return r;
            }
            default: {
                Hom r = from_wv(witt_mul(to_wv(a), to_wv(b)));
                if (hom_is_zero(r)) return std::nullopt;
                return r;
            }
        }
    }

    Hom hom_F(int deg, const Hom& a) const {
        switch (desc_.kind) {
            case CoeffKind::ZmodPn:
                return a;
            case CoeffKind::FormalEta:
                if (deg == 0) return Hom{{a.data[0], 0}}; // F(u) = 0
                return a;                                 // F(eta) = eta
            default:
                return from_wv(witt_F(to_wv(a)));
        }
    }

    Hom hom_V(int deg, const Hom& a) const {
        switch (desc_.kind) {
            case CoeffKind::ZmodPn:
                return Hom{{(Int(desc_.prime) * a.data[0]) % modulus_}};
            case CoeffKind::FormalEta:
                if (deg == 0) // V(a + s u) = 2a + (a + s) u
                    return Hom{{(2 * a.data[0]) % 4, (a.data[0] + a.data[1]) % 2}};
                return Hom{{0}}; // V(eta) = 0
            default:
                return from_wv(witt_V(to_wv(a)));
        }
    }

    std::optional<Hom> hom_d(int deg, const Hom& a) const {
        if (desc_.kind != CoeffKind::FormalEta) return std::nullopt;
        if (deg != 0) return std::nullopt;
        if (a.data[1] % 2 == 0) return std::nullopt;
        return Hom{{1}}; // d(a + s u) = s eta
    }

    Hom random_hom(int deg, std::mt19937_64& rng) const {
        switch (desc_.kind) {
            case CoeffKind::ZmodPn: {
                Int m = 0;
                Int r = modulus_;
                while (r > 0) {
                    m = m * 1000000 + Int(rng() % 1000000);
                    r /= 1000000;
                }
                m %= modulus_;
                return Hom{{m}};
            }
            case CoeffKind::FormalEta:
                if (deg == 0) return Hom{{Int(rng() % 4), Int(rng() % 2)}};
                return Hom{{Int(rng() % 2)}};
            default: {
                Hom h;
                for (uint32_t i = 0; i < desc_.truncation; ++i)
                    h.data.push_back(field_->sample(rng));
                return h;
            }
        }
    }

    RingDescriptor desc_;
    std::optional<GFRing> field_; // Witt kinds
    Int modulus_ = 0;             // zmod-pn
};

inline bool GradedScalar::operator==(const GradedScalar& o) const {
    if (is_zero() && o.is_zero()) return true;
    if (ring_ == nullptr || o.ring_ == nullptr) return false;
    return ring_->compatible(o.ring_) && comps_ == o.comps_;
}

inline std::shared_ptr<const CoeffRing> ring_make(const RingDescriptor& d) {
    return CoeffRing::make(d);
}

} // namespace cartier
