#pragma once

// Exact multivariate integer polynomials over the variables
// x_0..x_{n-1}, y_0..y_{n-1}.  Coefficients are arbitrary-precision
// integers; terms are kept in a canonical sorted order with no zero
// coefficients stored.  This is the substrate for the universal
// Witt-vector polynomial families.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cartier {

using Int = boost::multiprecision::cpp_int;

// Exponent vector: slot v < nvars/2 is x_v, slot nvars/2 + v is y_v.
using Monomial = std::vector<uint32_t>;

class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(size_t nvars) : nvars_(nvars) {}

    static IntPolynomial constant(size_t nvars, Int c) {
        IntPolynomial p(nvars);
        if (c != 0) p.terms_[Monomial(nvars, 0)] = std::move(c);
        return p;
    }

    static IntPolynomial variable(size_t nvars, size_t slot, uint32_t exp = 1) {
        IntPolynomial p(nvars);
        if (slot >= nvars) throw std::invalid_argument("variable slot out of range");
        Monomial m(nvars, 0);
        m[slot] = exp;
        p.terms_[std::move(m)] = 1;
        return p;
    }

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        a.check(b);
        IntPolynomial r(a.nvars_);
        Monomial m(a.nvars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                for (size_t i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    IntPolynomial operator-() const {
        IntPolynomial r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend IntPolynomial operator*(const Int& c, const IntPolynomial& p) {
        IntPolynomial r(p.nvars_);
        if (c == 0) return r;
        for (const auto& [m, k] : p.terms_) r.terms_[m] = c * k;
        return r;
    }

    IntPolynomial pow(uint64_t e) const {
        IntPolynomial r = constant(nvars_, 1);
        IntPolynomial b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // Exact division by an integer; a nonzero remainder is an internal
    // inconsistency in the ghost recursion and must abort.
    IntPolynomial exact_div(const Int& den) const {
        IntPolynomial r(nvars_);
        for (const auto& [m, c] : terms_) {
            if (c % den != 0)
                throw std::logic_error("inexact division in universal polynomial recursion");
            r.terms_[m] = c / den;
        }
        return r;
    }

    bool operator==(const IntPolynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    // Substitute values for all variables in a commutative ring.  Ring
    // must supply: Value, zero(), one(), add, mul, from_int(Int), pow.
    template <class Ring>
    typename Ring::Value eval(const Ring& ring,
                              const std::vector<typename Ring::Value>& vals) const {
        if (vals.size() != nvars_) throw std::invalid_argument("eval: wrong number of values");
        auto acc = ring.zero();
        for (const auto& [m, c] : terms_) {
            auto t = ring.from_int(c);
            for (size_t i = 0; i < nvars_; ++i)
                if (m[i] != 0) t = ring.mul(t, ring.pow(vals[i], m[i]));
            acc = ring.add(acc, t);
        }
        return acc;
    }

    // Stable human-readable form; terms in the canonical stored order.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Int a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool any_var = false;
            for (auto e : m)
                if (e) any_var = true;
            bool wrote = false;
            if (a != 1 || !any_var) {
                os << a.str();
                wrote = true;
            }
            for (size_t i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                if (wrote) os << "*";
                wrote = true;
                size_t half = nvars_ / 2;
                if (i < half) os << "x" << i;
                else os << "y" << (i - half);
                if (m[i] > 1) os << "^" << m[i];
            }
        }
        return os.str();
    }

  private:
    void check(const IntPolynomial& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    }
    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    size_t nvars_ = 0;
    std::map<Monomial, Int> terms_;
};

} // namespace cartier
