#include "cartier/lang.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace cartier;

namespace {

const std::vector<RingDescriptor> kInstances = {
    {2, 3, CoeffKind::WittFp, 0},
    {3, 2, CoeffKind::WittPerfect, 9},
    {3, 2, CoeffKind::ZmodPn, 0},
    {2, 1, CoeffKind::FormalEta, 0},
};

} // namespace

TEST_CASE("grammar basics") {
    auto r = ring_make({3, 2, CoeffKind::ZmodPn, 0});
    // fv = p
    REQUIRE(print_element(parse_element("f*v", r.get())) == "3");
    // juxtaposition multiplies; whitespace insignificant
    REQUIRE(parse_element("fv", r.get()) == parse_element("f * v", r.get()));
    REQUIRE(parse_element("fdv", r.get()) ==
            parse_element("f*d*v", r.get()));
    // powers
    REQUIRE(parse_element("v^3", r.get()) ==
            parse_element("v*v*v", r.get()));
    REQUIRE(parse_element("v^0", r.get()) == CRElement::one(r.get()));
    // unary minus and subtraction
    REQUIRE(parse_element("-v + v", r.get()).is_zero());
    REQUIRE(parse_element("2*v - v", r.get()) == parse_element("v", r.get()));
    // parentheses
    REQUIRE(parse_element("(v + d)*f", r.get()) ==
            cr_add(parse_element("v*f", r.get()), parse_element("d*f", r.get())));
    // integer literals reduce into the ring
    REQUIRE(parse_element("9", r.get()).is_zero());
}

TEST_CASE("witt literals and eta literals") {
    auto w = ring_make({2, 3, CoeffKind::WittFp, 0});
    auto e = parse_element("v^2*W[0,1,0] + d", w.get());
    REQUIRE(e.v_part().at(2) == w->from_witt_coords({0, 1, 0}));
    REQUIRE(e.dv_part().at(0) == w->one());
    // wrong length rejected with position info
    CHECK_THROWS_AS(parse_element("W[1,1]", w.get()), ParseError);
    // eta is accepted and denotes zero outside formal-eta
    REQUIRE(parse_element("eta", w.get()).is_zero());
    auto fe = ring_make({2, 1, CoeffKind::FormalEta, 0});
    REQUIRE(parse_element("eta", fe.get()) ==
            CRElement::from_scalar(fe.get(), fe->eta()));
    REQUIRE(parse_element("u", fe.get()) ==
            CRElement::from_scalar(fe.get(), fe->formal_u()));
    CHECK_THROWS_AS(parse_element("u", w.get()), ParseError);
    // W[...] literals are meaningless in zmod
    auto z = ring_make({3, 2, CoeffKind::ZmodPn, 0});
    CHECK_THROWS_AS(parse_element("W[1,1]", z.get()), ParseError);
}

TEST_CASE("syntax errors carry positions") {
    auto r = ring_make({3, 2, CoeffKind::ZmodPn, 0});
    try {
        parse_element("v^", r.get());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.position == 2);
    }
    try {
        parse_element("v + * f", r.get());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.position == 4);
    }
    CHECK_THROWS_AS(parse_element("(v", r.get()), ParseError);
    CHECK_THROWS_AS(parse_element("q", r.get()), ParseError);
    CHECK_THROWS_AS(parse_element("v )", r.get()), ParseError);
}

TEST_CASE("printer emits documented canonical forms") {
    auto fe = ring_make({2, 1, CoeffKind::FormalEta, 0});
    REQUIRE(print_element(parse_element("f*d*v", fe.get())) == "d + eta");
    auto z = ring_make({2, 2, CoeffKind::ZmodPn, 0});
    REQUIRE(print_element(parse_element("v*d", z.get())) == "2*d*v");
    REQUIRE(print_element(CRElement::zero(z.get())) == "0");
    REQUIRE(print_element(CRElement::one(z.get())) == "1");
    auto w = ring_make({2, 2, CoeffKind::WittFp, 0});
    REQUIRE(print_element(parse_element("v^2*W[0,1] + W[1,0]*f^3*d", w.get())) ==
            "v^2*W[0,1] + W[1,0]*f^3*d");
}

TEST_CASE("printer determinism and parse/print round-trips") {
    std::mt19937_64 rng(33);
    for (const auto& desc : kInstances) {
        auto r = ring_make(desc);
        INFO(kind_name(desc.kind));
        for (int t = 0; t < 200; ++t) {
            auto e = random_cr_element(r.get(), 4, rng, 4);
            std::string s = print_element(e);
            auto back = parse_element(s, r.get());
            REQUIRE(back == e);
            REQUIRE(print_element(back) == s); // idempotent normal form
        }
    }
}

TEST_CASE("structured encode/decode round-trips") {
    std::mt19937_64 rng(35);
    for (const auto& desc : kInstances) {
        auto r = ring_make(desc);
        INFO(kind_name(desc.kind));
        for (int t = 0; t < 200; ++t) {
            auto e = random_cr_element(r.get(), 4, rng, 4);
            auto doc = encode_element(e, desc);
            REQUIRE(decode_element(doc, r.get()) == e);
            // documents survive a text round-trip
            auto reparsed = nlohmann::json::parse(doc.dump());
            REQUIRE(decode_element(reparsed, r.get()) == e);
        }
    }
}

TEST_CASE("malformed documents are rejected") {
    auto r = ring_make({2, 3, CoeffKind::WittFp, 0});
    auto z = ring_make({3, 2, CoeffKind::ZmodPn, 0});
    auto doc = encode_element(CRElement::gen_v(r.get()),
                              r->descriptor());
    // wrong ring
    CHECK_THROWS_AS(decode_element(doc, z.get()), std::invalid_argument);
    // out-of-range coefficient data
    auto bad = doc;
    bad["v"][0][1][0][1] = "7"; // F_2 digit must be 0 or 1
    CHECK_THROWS_AS(decode_element(bad, r.get()), std::invalid_argument);
    // negative f index
    auto bad2 = doc;
    bad2["f"] = nlohmann::json::array(
        {nlohmann::json::array({-1, doc["v"][0][1]})});
    CHECK_THROWS_AS(decode_element(bad2, r.get()), std::invalid_argument);
}
