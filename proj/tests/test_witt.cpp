#include "cartier/witt.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace cartier;

namespace {

IntPolynomial var(size_t nv, size_t slot, uint32_t e = 1) {
    return IntPolynomial::variable(nv, slot, e);
}

} // namespace

TEST_CASE("universal sum polynomials match hand-solved ghost recursion") {
    const auto& f2 = witt_universal_polys(2, 2);
    size_t nv = 4; // x0 x1 y0 y1
    CHECK(f2.sum[0] == var(nv, 0) + var(nv, 2));
    // S_1 = x1 + y1 - x0*y0
    CHECK(f2.sum[1] == var(nv, 1) + var(nv, 3) - var(nv, 0) * var(nv, 2));

    const auto& f3 = witt_universal_polys(3, 2);
    // P_1 = x0^p y1 + x1 y0^p + p x1 y1
    CHECK(f3.product[1] == var(nv, 0, 3) * var(nv, 3) + var(nv, 1) * var(nv, 2, 3) +
                               Int(3) * (var(nv, 1) * var(nv, 3)));
    CHECK(f2.product[1] == var(nv, 0, 2) * var(nv, 3) + var(nv, 1) * var(nv, 2, 2) +
                               Int(2) * (var(nv, 1) * var(nv, 3)));
}

TEST_CASE("ghost map on explicit small vectors over Z") {
    IntegerRing Z;
    WittVector<IntegerRing> a{2, &Z, {1, 1}};
    auto g = ghost(a);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == 1);
    CHECK(g[1] == 3); // 1^2 + 2*1

    WittVector<IntegerRing> prod = witt_mul(a, a);
    CHECK(prod.coords[0] == 1);
    CHECK(prod.coords[1] == 4); // ghost (1,9): 1 + 2c = 9

    WittVector<IntegerRing> t{2, &Z, {5, 0}};
    auto gt = ghost(t);
    CHECK(gt[0] == 5);
    CHECK(gt[1] == 25);
    CHECK(ghost(witt_zero(Z, 2, 3)) == std::vector<Int>{0, 0, 0});
}

TEST_CASE("ghost is a ring homomorphism over Z, p in {2,3}, n = 4") {
    IntegerRing Z;
    std::mt19937_64 rng(2024);
    auto rnd = [&] { return Int(static_cast<int64_t>(rng() % 2001) - 1000); };
    for (uint64_t p : {2ull, 3ull}) {
        for (int trial = 0; trial < 500; ++trial) {
            WittVector<IntegerRing> a{p, &Z, {rnd(), rnd(), rnd(), rnd()}};
            WittVector<IntegerRing> b{p, &Z, {rnd(), rnd(), rnd(), rnd()}};
            auto ga = ghost(a), gb = ghost(b);
            auto gs = ghost(witt_add(a, b));
            auto gp = ghost(witt_mul(a, b));
            auto gn = ghost(witt_neg(a));
            for (size_t k = 0; k < 4; ++k) {
                REQUIRE(gs[k] == ga[k] + gb[k]);
                REQUIRE(gp[k] == ga[k] * gb[k]);
                REQUIRE(gn[k] == -ga[k]);
            }
            // Frobenius shifts the ghost components
            auto gf = ghost(witt_F(a));
            for (size_t k = 0; k + 1 < 4; ++k) REQUIRE(gf[k] == ga[k + 1]);
        }
    }
}

TEST_CASE("ring axioms over F_p and F_9 via universal polynomials") {
    std::mt19937_64 rng(7);
    auto check_base = [&](const GFRing& F, uint64_t p, uint32_t n) {
        auto rndv = [&] {
            WittVector<GFRing> w{p, &F, {}};
            for (uint32_t i = 0; i < n; ++i) w.coords.push_back(F.sample(rng));
            return w;
        };
        auto one = teichmuller(F, p, n, F.one());
        for (int t = 0; t < 100; ++t) {
            auto a = rndv(), b = rndv(), c = rndv();
            REQUIRE(witt_eq(witt_add(a, b), witt_add(b, a)));
            REQUIRE(witt_eq(witt_mul(a, b), witt_mul(b, a)));
            REQUIRE(witt_eq(witt_add(witt_add(a, b), c), witt_add(a, witt_add(b, c))));
            REQUIRE(witt_eq(witt_mul(witt_mul(a, b), c), witt_mul(a, witt_mul(b, c))));
            REQUIRE(witt_eq(witt_mul(a, witt_add(b, c)),
                            witt_add(witt_mul(a, b), witt_mul(a, c))));
            REQUIRE(witt_eq(witt_mul(a, one), a));
            REQUIRE(witt_eq(witt_add(a, witt_neg(a)), witt_zero(F, p, n)));
        }
    };
    check_base(GFRing(2, 1), 2, 3);
    check_base(GFRing(3, 2), 3, 3); // F_9
}

TEST_CASE("Frobenius and Verschiebung identities over F_p and F_9") {
    std::mt19937_64 rng(11);
    auto check_base = [&](const GFRing& F, uint64_t p, uint32_t n) {
        auto rndv = [&] {
            WittVector<GFRing> w{p, &F, {}};
            for (uint32_t i = 0; i < n; ++i) w.coords.push_back(F.sample(rng));
            return w;
        };
        auto pmul = [&](WittVector<GFRing> a) {
            auto acc = witt_zero(F, p, n);
            for (uint64_t i = 0; i < p; ++i) acc = witt_add(acc, a);
            return acc;
        };
        for (int t = 0; t < 200; ++t) {
            auto x = rndv(), y = rndv();
            // FV = p
            REQUIRE(witt_eq(witt_F(witt_V(x)), pmul(x)));
            // projection formula V(x) y = V(x F(y))
            REQUIRE(witt_eq(witt_mul(witt_V(x), y), witt_V(witt_mul(x, witt_F(y)))));
            // Teichmuller multiplicativity
            auto a = F.sample(rng), b = F.sample(rng);
            REQUIRE(witt_eq(witt_mul(teichmuller(F, p, n, a), teichmuller(F, p, n, b)),
                            teichmuller(F, p, n, F.mul(a, b))));
        }
        // V(1) = p * 1
        REQUIRE(witt_eq(witt_V(teichmuller(F, p, n, F.one())),
                        pmul(teichmuller(F, p, n, F.one()))));
        // F is coordinatewise p-th power over perfect bases
        auto x = rndv();
        auto fx = witt_F(x);
        for (uint32_t i = 0; i < n; ++i)
            REQUIRE(F.eq(fx.coords[i], F.pow(x.coords[i], p)));
    };
    check_base(GFRing(2, 1), 2, 3);
    check_base(GFRing(3, 2), 3, 3);
}

TEST_CASE("Verschiebung is the coordinate shift") {
    GFRing F2(2, 1);
    WittVector<GFRing> a{2, &F2, {1, 0, 1}};
    auto v = witt_V(a);
    REQUIRE(v.coords == std::vector<uint64_t>{0, 1, 0});
    // teichmuller shape
    auto t = teichmuller(F2, 2, 3, F2.one());
    REQUIRE(t.coords == std::vector<uint64_t>{1, 0, 0});
}

TEST_CASE("Frobenius over a torsion-free base consumes one coordinate") {
    IntegerRing Z;
    WittVector<IntegerRing> a{2, &Z, {3, 5, 7}};
    auto f = witt_F(a);
    CHECK(f.length() == 2);
    WittVector<IntegerRing> s{2, &Z, {3}};
    CHECK_THROWS_AS(witt_F(s), std::invalid_argument);
}

TEST_CASE("Frobenius over an imperfect torsion base is rejected") {
    ZModRing Z4(Int(4));
    WittVector<ZModRing> a{2, &Z4, {1, 1}};
    CHECK_THROWS_AS(witt_F(a), std::invalid_argument);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(witt_universal_polys(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(witt_universal_polys(2, 0), std::invalid_argument);
}

TEST_CASE("exact division failure aborts") {
    IntPolynomial p = IntPolynomial::constant(2, 3);
    CHECK_THROWS_AS(p.exact_div(2), std::logic_error);
}
