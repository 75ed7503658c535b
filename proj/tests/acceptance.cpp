// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit on
// any failure.  All arithmetic is exact, so every tolerance is equality.

#include "cartier/action.hpp"
#include "cartier/lang.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace cartier;

namespace {

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool(std::ostream&)>& body) {
    std::ostringstream notes;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(notes);
    } catch (const std::exception& e) {
        notes << " exception: " << e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": "
              << title << " [" << ms << " ms" << notes.str() << "]\n";
    if (!ok) ++failures;
}

const RingDescriptor kW3F2{2, 3, CoeffKind::WittFp, 0};
const RingDescriptor kW3F3{3, 3, CoeffKind::WittFp, 0};
const RingDescriptor kW2F9{3, 2, CoeffKind::WittPerfect, 9};
const RingDescriptor kFormalEta{2, 1, CoeffKind::FormalEta, 0};
const RingDescriptor kZ9{3, 2, CoeffKind::ZmodPn, 0};

} // namespace

int main() {
    criterion(1, "relation suite, 100 samples/relation, 4 instances, < 10 s",
              [](std::ostream& notes) {
                  bool ok = true;
                  for (const auto& desc : {kW3F2, kW3F3, kW2F9, kFormalEta}) {
                      auto rep = relation_suite(ring_make(desc).get(),
                                                RuleSet::IR, 100, 42);
                      if (!rep.ok()) {
                          ok = false;
                          notes << " " << kind_name(desc.kind) << " p="
                                << desc.prime << ": " << rep.failures.size()
                                << " failures";
                      }
                  }
                  return ok;
              });

    criterion(2, "classical specialization: d central, d^2 = 0 over Witt-type instances",
              [](std::ostream& notes) {
                  bool ok = true;
                  for (const auto& desc : {kW3F2, kW3F3, kW2F9, kZ9}) {
                      auto r = ring_make(desc);
                      std::mt19937_64 rng(7);
                      auto d = CRElement::gen_d(r.get());
                      if (!cr_mul(d, d).is_zero()) ok = false;
                      for (int t = 0; t < 100; ++t) {
                          auto x = r->random(rng);
                          auto dx = cr_eval_word(r.get(), {Letter::d(), Letter::c(x)});
                          auto xd = cr_eval_word(r.get(), {Letter::c(x), Letter::d()});
                          if (!(dx == xd)) ok = false;
                      }
                      if (!ok) {
                          notes << " failed on " << kind_name(desc.kind);
                          break;
                      }
                  }
                  return ok;
              });

    criterion(3, "basis enumeration: exactly 2(2M+1) monomials for M in {0,1,5,20}",
              [](std::ostream& notes) {
                  for (int M : {0, 1, 5, 20}) {
                      auto basis = cr_basis(M);
                      if (basis.size() != size_t(2 * (2 * M + 1))) {
                          notes << " M=" << M << " gave " << basis.size();
                          return false;
                      }
                      int v = 0, dv = 0, f = 0, fd = 0, one = 0;
                      for (const auto& m : basis) {
                          switch (m.shape) {
                              case CRMonomial::One: ++one; break;
                              case CRMonomial::Vpow: ++v; break;
                              case CRMonomial::DV: ++dv; break;
                              case CRMonomial::Fpow: ++f; break;
                              case CRMonomial::FD: ++fd; break;
                          }
                      }
                      if (one != 1 || v != M || dv != M + 1 || f != M || fd != M)
                          return false;
                  }
                  return true;
              });

    criterion(4, "associativity on 1000 random triples (support <= 4) + graded products, < 30 s",
              [](std::ostream& notes) {
                  for (const auto& desc : {kW3F2, kW3F3, kFormalEta}) {
                      auto r = ring_make(desc);
                      std::mt19937_64 rng(11);
                      for (int t = 0; t < 1000; ++t) {
                          auto a = random_cr_element(r.get(), 4, rng);
                          auto b = random_cr_element(r.get(), 4, rng);
                          auto c = random_cr_element(r.get(), 4, rng);
                          if (!(cr_mul(cr_mul(a, b), c) == cr_mul(a, cr_mul(b, c)))) {
                              notes << " associativity failed on "
                                    << kind_name(desc.kind);
                              return false;
                          }
                      }
                      for (int t = 0; t < 500; ++t) {
                          auto a = random_cr_element(r.get(), 3, rng, 1);
                          auto b = random_cr_element(r.get(), 3, rng, 1);
                          auto sa = cr_degree(a), sb = cr_degree(b);
                          if (sa.size() != 1 || sb.size() != 1) continue;
                          for (const auto& [deg, part] : cr_degree(cr_mul(a, b)))
                              if (deg != sa.begin()->first + sb.begin()->first) {
                                  notes << " grading failed on "
                                        << kind_name(desc.kind);
                                  return false;
                              }
                      }
                  }
                  return true;
              });

    criterion(5, "ghost is a ring hom over Z (p in {2,3}, n=4, 500 pairs); S_1, P_1 symbolic",
              [](std::ostream& notes) {
                  IntegerRing Z;
                  std::mt19937_64 rng(13);
                  auto rnd = [&] {
                      return Int(static_cast<int64_t>(rng() % 2001) - 1000);
                  };
                  for (uint64_t p : {2ull, 3ull}) {
                      for (int t = 0; t < 500; ++t) {
                          WittVector<IntegerRing> a{p, &Z, {rnd(), rnd(), rnd(), rnd()}};
                          WittVector<IntegerRing> b{p, &Z, {rnd(), rnd(), rnd(), rnd()}};
                          auto ga = ghost(a), gb = ghost(b);
                          auto gs = ghost(witt_add(a, b));
                          auto gp = ghost(witt_mul(a, b));
                          for (size_t k = 0; k < 4; ++k)
                              if (gs[k] != ga[k] + gb[k] || gp[k] != ga[k] * gb[k]) {
                                  notes << " ghost hom failed at p=" << p;
                                  return false;
                              }
                      }
                  }
                  // S_1 (p=2) = x1 + y1 - x0 y0; P_1 = x0^p y1 + x1 y0^p + p x1 y1
                  auto var = [](size_t s, uint32_t e = 1) {
                      return IntPolynomial::variable(4, s, e);
                  };
                  const auto& f2 = witt_universal_polys(2, 2);
                  if (!(f2.sum[1] == var(1) + var(3) - var(0) * var(2))) {
                      notes << " S_1 mismatch";
                      return false;
                  }
                  for (uint64_t p : {2ull, 3ull, 5ull}) {
                      const auto& fam = witt_universal_polys(p, 2);
                      IntPolynomial expect =
                          var(0, static_cast<uint32_t>(p)) * var(3) +
                          var(1) * var(2, static_cast<uint32_t>(p)) +
                          Int(p) * (var(1) * var(3));
                      if (!(fam.product[1] == expect)) {
                          notes << " P_1 mismatch at p=" << p;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(6, "Witt identities: FV=p, V(1)=p, projection formula, Teichmuller mult (200 each, F_p and F_9)",
              [](std::ostream& notes) {
                  std::mt19937_64 rng(17);
                  auto check = [&](const GFRing& F, uint64_t p, uint32_t n) {
                      auto rndv = [&] {
                          WittVector<GFRing> w{p, &F, {}};
                          for (uint32_t i = 0; i < n; ++i)
                              w.coords.push_back(F.sample(rng));
                          return w;
                      };
                      auto pmul = [&](const WittVector<GFRing>& a) {
                          auto acc = witt_zero(F, p, n);
                          for (uint64_t i = 0; i < p; ++i) acc = witt_add(acc, a);
                          return acc;
                      };
                      auto one = teichmuller(F, p, n, F.one());
                      if (!witt_eq(witt_V(one), pmul(one))) return false;
                      for (int t = 0; t < 200; ++t) {
                          auto x = rndv(), y = rndv();
                          if (!witt_eq(witt_F(witt_V(x)), pmul(x))) return false;
                          if (!witt_eq(witt_mul(witt_V(x), y),
                                       witt_V(witt_mul(x, witt_F(y)))))
                              return false;
                          auto a = F.sample(rng), b = F.sample(rng);
                          if (!witt_eq(witt_mul(teichmuller(F, p, n, a),
                                                teichmuller(F, p, n, b)),
                                       teichmuller(F, p, n, F.mul(a, b))))
                              return false;
                      }
                      return true;
                  };
                  if (!check(GFRing(2, 1), 2, 3)) { notes << " F_2"; return false; }
                  if (!check(GFRing(3, 1), 3, 3)) { notes << " F_3"; return false; }
                  if (!check(GFRing(3, 2), 3, 2)) { notes << " F_9"; return false; }
                  return true;
              });

    criterion(7, "action consistency: 500 words (len <= 8), W_3(F_3) and formal-eta",
              [](std::ostream& notes) {
                  for (const auto& desc : {kW3F3, kFormalEta}) {
                      auto r = ring_make(desc);
                      auto m = tautological_module(r.get());
                      auto rep = action_consistency(m, 500, 8, 19);
                      if (!rep.ok()) {
                          notes << " " << kind_name(desc.kind) << ": "
                                << rep.failures.size() << " failures";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(8, "contextual soundness: m (lhs - rhs) m' = 0, all basis monomials of index <= 3",
              [](std::ostream& notes) {
                  for (const auto& desc : {kW3F2, kW2F9, kFormalEta}) {
                      auto r = ring_make(desc);
                      const CoeffRing& K = *r;
                      const uint64_t p = K.prime();
                      std::mt19937_64 rng(23);
                      auto ev = [&](const Word& w) { return cr_eval_word(r.get(), w); };
                      std::vector<std::pair<CRElement, CRElement>> rels;
                      rels.emplace_back(ev({Letter::f(), Letter::v()}),
                                        CRElement::from_scalar(r.get(), K.from_int(p)));
                      rels.emplace_back(ev({Letter::d(), Letter::f()}),
                                        cr_int_mul(p, ev({Letter::f(), Letter::d()})));
                      rels.emplace_back(ev({Letter::v(), Letter::d()}),
                                        cr_int_mul(p, ev({Letter::d(), Letter::v()})));
                      {
                          CRElement rhs = CRElement::gen_d(r.get());
                          if (p == 2)
                              rhs = cr_add(rhs, CRElement::from_scalar(r.get(), K.eta()));
                          rels.emplace_back(ev({Letter::f(), Letter::d(), Letter::v()}),
                                            rhs);
                      }
                      rels.emplace_back(ev({Letter::d(), Letter::d()}),
                                        ev({Letter::c(K.eta()), Letter::d()}));
                      auto x = K.random_homogeneous(rng);
                      rels.emplace_back(ev({Letter::f(), Letter::c(x)}),
                                        ev({Letter::c(K.frobenius(x)), Letter::f()}));
                      rels.emplace_back(ev({Letter::c(x), Letter::v()}),
                                        ev({Letter::v(), Letter::c(K.frobenius(x))}));
                      rels.emplace_back(ev({Letter::v(), Letter::c(x), Letter::f()}),
                                        CRElement::from_scalar(r.get(),
                                                              K.verschiebung(x)));
                      {
                          CRElement xd = ev({Letter::c(x), Letter::d()});
                          bool odd = !x.is_zero() && x.degree() % 2 != 0;
                          rels.emplace_back(
                              ev({Letter::d(), Letter::c(x)}),
                              cr_add(CRElement::from_scalar(r.get(), K.differential(x)),
                                     odd ? cr_neg(xd) : xd));
                      }
                      auto basis = cr_basis(3);
                      for (const auto& [lhs, rhs] : rels) {
                          CRElement diff = cr_sub(lhs, rhs);
                          for (const auto& m : basis)
                              for (const auto& mp : basis)
                                  if (!cr_mul(cr_mul(m.element(r.get()), diff),
                                              mp.element(r.get()))
                                           .is_zero()) {
                                      notes << " context " << m.str() << " .. "
                                            << mp.str() << " on "
                                            << kind_name(desc.kind);
                                      return false;
                                  }
                      }
                  }
                  return true;
              });

    criterion(9, "round-trips: text and structured on 200 random elements per instance",
              [](std::ostream& notes) {
                  std::mt19937_64 rng(29);
                  for (const auto& desc : {kW3F2, kW2F9, kZ9, kFormalEta}) {
                      auto r = ring_make(desc);
                      for (int t = 0; t < 200; ++t) {
                          auto e = random_cr_element(r.get(), 4, rng, 4);
                          std::string s = print_element(e);
                          auto back = parse_element(s, r.get());
                          if (!(back == e) || print_element(back) != s) {
                              notes << " text round-trip failed on "
                                    << kind_name(desc.kind) << ": " << s;
                              return false;
                          }
                          if (!(decode_element(encode_element(e, desc), r.get()) == e)) {
                              notes << " structured round-trip failed on "
                                    << kind_name(desc.kind);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(10, "negative controls: every single-rule corruption trips suite 1 or 7",
              [](std::ostream& notes) {
                  const std::vector<std::pair<Corruption, RingDescriptor>> cases = {
                      {Corruption::FvPlusOne, kZ9},
                      {Corruption::DfDropP, kZ9},
                      {Corruption::VdDropP, kZ9},
                      {Corruption::FdvDropEta, kFormalEta},
                      {Corruption::FxDropFrobenius, kW2F9},
                      {Corruption::XvDropFrobenius, kW2F9},
                  };
                  for (const auto& [corr, desc] : cases) {
                      auto r = ring_make(desc);
                      bool detected =
                          !relation_suite(r.get(), RuleSet::IR, 50, 42, corr).ok();
                      if (!detected) {
                          auto m = tautological_module(r.get());
                          detected = !action_consistency(m, 500, 8, 19, corr).ok();
                      }
                      if (!detected) {
                          notes << " corruption " << static_cast<int>(corr)
                                << " went undetected";
                          return false;
                      }
                  }
                  return true;
              });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 10 criteria passed\n";
    return 0;
}
