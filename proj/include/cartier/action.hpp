#pragma once

// Left modules over the ring: a graded carrier (reusing GradedScalar as
// the value type) with operators V, F, d compatible with the relations.
// Two independent evaluation paths exist on purpose:
//
//   act_word     folds the letters of a word over the module directly,
//                right to left, never touching the product table;
//   act_element  interprets a canonical normal form, each basis
//                monomial acting through its stored coefficient.
//
// Agreement of the two on random words certifies the product table.

#include "cartier/crring.hpp"

#include <functional>
#include <random>
#include <vector>

namespace cartier {

struct CRModule {
    const CoeffRing* ring = nullptr;
    std::function<GradedScalar(const GradedScalar&)> op_V, op_F, op_d;

    GradedScalar scalar_act(const GradedScalar& c, const GradedScalar& x) const {
        return ring->mul(c, x);
    }
};

// pi_*A acting on itself with its own V, F, d.
inline CRModule tautological_module(const CoeffRing* ring) {
    CRModule m;
    m.ring = ring;
    m.op_V = [ring](const GradedScalar& x) { return ring->verschiebung(x); };
    m.op_F = [ring](const GradedScalar& x) { return ring->frobenius(x); };
    m.op_d = [ring](const GradedScalar& x) { return ring->differential(x); };
    return m;
}

// Apply a word to a module element; the rightmost letter acts first.
inline GradedScalar act_word(const CRModule& m, const Word& w, GradedScalar x) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        switch (it->kind) {
            case Letter::V: x = m.op_V(x); break;
            case Letter::F: x = m.op_F(x); break;
            case Letter::D: x = m.op_d(x); break;
            case Letter::Coeff: x = m.scalar_act(it->coeff, x); break;
        }
    }
    return x;
}

// Interpret a canonical normal form as an operator on the module.
inline GradedScalar act_element(const CRModule& m, const CRElement& e,
                                const GradedScalar& x) {
    const CoeffRing& K = *m.ring;
    GradedScalar acc = K.zero();
    auto Vi = [&](GradedScalar y, int i) {
        for (int t = 0; t < i; ++t) y = m.op_V(y);
        return y;
    };
    auto Fj = [&](GradedScalar y, int j) {
        for (int t = 0; t < j; ++t) y = m.op_F(y);
        return y;
    };
    for (const auto& [i, c] : e.v_part()) // v^i c
        acc = K.add(acc, Vi(m.scalar_act(c, x), i));
    for (const auto& [i, c] : e.dv_part()) // d v^i c
        acc = K.add(acc, m.op_d(Vi(m.scalar_act(c, x), i)));
    for (const auto& [j, c] : e.f_part()) // c f^j
        acc = K.add(acc, m.scalar_act(c, Fj(x, j)));
    for (const auto& [j, c] : e.fd_part()) // c f^j d
        acc = K.add(acc, m.scalar_act(c, Fj(m.op_d(x), j)));
    return acc;
}

// ---------------------------------------------------------------------------
// Module axiom check: the operator identities the relations impose.

struct AxiomReport {
    uint64_t checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline AxiomReport check_module_axioms(const CRModule& m, int samples, uint64_t seed) {
    AxiomReport rep;
    std::mt19937_64 rng(seed);
    const CoeffRing& K = *m.ring;
    const uint64_t p = K.prime();
    auto pmul = [&](const GradedScalar& x) { return K.int_mul(p, x); };
    auto record = [&](const char* name, const GradedScalar& l, const GradedScalar& r) {
        ++rep.checks;
        if (!(l == r)) rep.failures.push_back(name);
    };
    for (int s = 0; s < samples; ++s) {
        GradedScalar x = K.random(rng);
        GradedScalar y = K.random(rng);
        GradedScalar c = K.random_homogeneous(rng);
        record("F(V(x)) = p x", m.op_F(m.op_V(x)), pmul(x));
        record("V(F(c) x) = c V(x)",
               m.op_V(K.mul(K.frobenius(c), x)), K.mul(c, m.op_V(x)));
        record("F(x y) = F(x) F(y)", m.op_F(K.mul(x, y)),
               K.mul(m.op_F(x), m.op_F(y)));
        record("d(F(x)) = p F(d(x))", m.op_d(m.op_F(x)), pmul(m.op_F(m.op_d(x))));
        record("V(d(x)) = p d(V(x))", m.op_V(m.op_d(x)), pmul(m.op_d(m.op_V(x))));
        record("d(d(x)) = eta d(x)", m.op_d(m.op_d(x)), K.mul(K.eta(), m.op_d(x)));
        record("F(d(V(x))) = d(x) + eta x", m.op_F(m.op_d(m.op_V(x))),
               K.add(m.op_d(x), K.mul(K.eta(), x)));
        {
            GradedScalar rhs = K.add(K.mul(K.differential(c), x),
                                     K.mul(K.koszul(c), m.op_d(x)));
            record("d(c x) = d(c) x + (-1)^|c| c d(x)",
                   m.op_d(K.mul(c, x)), rhs);
        }
        record("V additive", m.op_V(K.add(x, y)), K.add(m.op_V(x), m.op_V(y)));
        record("d additive", m.op_d(K.add(x, y)), K.add(m.op_d(x), m.op_d(y)));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Consistency oracle: random words evaluated both ways.

struct ConsistencyFailure {
    std::string word;
    std::string input;
    std::string direct;
    std::string via_normal_form;
};

struct ConsistencyReport {
    uint64_t checks = 0;
    std::vector<ConsistencyFailure> failures;
    bool ok() const { return failures.empty(); }
};

inline std::string word_str(const CoeffRing& K, const Word& w) {
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += "*";
        switch (l.kind) {
            case Letter::V: s += "v"; break;
            case Letter::F: s += "f"; break;
            case Letter::D: s += "d"; break;
            case Letter::Coeff: s += "(" + K.print_scalar(l.coeff) + ")"; break;
        }
    }
    return s.empty() ? "1" : s;
}

inline Word random_word(const CoeffRing& K, int max_len, std::mt19937_64& rng) {
    Word w;
    int len = static_cast<int>(rng() % static_cast<uint64_t>(max_len + 1));
    for (int i = 0; i < len; ++i) {
        switch (rng() % 4) {
            case 0: w.push_back(Letter::v()); break;
            case 1: w.push_back(Letter::f()); break;
            case 2: w.push_back(Letter::d()); break;
            default: w.push_back(Letter::c(K.random_homogeneous(rng))); break;
        }
    }
    return w;
}

inline ConsistencyReport action_consistency(const CRModule& m, int samples,
                                            int max_len, uint64_t seed,
                                            Corruption corr = Corruption::None) {
    ConsistencyReport rep;
    std::mt19937_64 rng(seed);
    const CoeffRing& K = *m.ring;
    for (int s = 0; s < samples; ++s) {
        Word w = random_word(K, max_len, rng);
        GradedScalar x = K.random(rng);
        GradedScalar direct = act_word(m, w, x);
        GradedScalar via = act_element(m, cr_eval_word(m.ring, w, corr), x);
        ++rep.checks;
        if (!(direct == via))
            rep.failures.push_back({word_str(K, w), K.print_scalar(x),
                                    K.print_scalar(direct), K.print_scalar(via)});
    }
    return rep;
}

} // namespace cartier
