#pragma once

// Command-line front end.  Kept in a header as run(args, out, err) so
// the test suite can drive it in-process; tools/crr.cpp is a thin main.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or parse error.

#include "cartier/action.hpp"
#include "cartier/lang.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace cartier {

namespace detail {

inline Corruption corruption_from_name(const std::string& s) {
    if (s == "none") return Corruption::None;
    if (s == "fv-plus-one") return Corruption::FvPlusOne;
    if (s == "df-drop-p") return Corruption::DfDropP;
    if (s == "vd-drop-p") return Corruption::VdDropP;
    if (s == "fdv-drop-eta") return Corruption::FdvDropEta;
    if (s == "fx-drop-frobenius") return Corruption::FxDropFrobenius;
    if (s == "xv-drop-frobenius") return Corruption::XvDropFrobenius;
    throw CLI::ValidationError("--corrupt", "unknown corruption: " + s);
}

template <class Base>
std::string wv_str(const Base& ring, const WittVector<Base>& w) {
    std::string s = "W[";
    for (uint32_t i = 0; i < w.length(); ++i) {
        if (i) s += ",";
        s += ring.str(w.coords[i]);
    }
    return s + "]";
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"exact computations in a graded ring of Frobenius/Verschiebung"
                 " operators with canonical normal forms"};
    app.require_subcommand(1);

    uint64_t prime = 2;
    uint32_t trunc = 1;
    std::string coeff = "zmod-pn";
    uint64_t q = 0;
    std::string output = "text";
    uint64_t seed = 0;
    bool verbose = false;
    app.add_option("--prime", prime, "the prime p");
    app.add_option("--trunc", trunc, "truncation length n");
    app.add_option("--coeff", coeff,
                   "coefficient kind: zmod-pn | witt-fp | witt-perfect | formal-eta")
        ->check(CLI::IsMember({"zmod-pn", "witt-fp", "witt-perfect", "formal-eta"}));
    app.add_option("--q", q, "field size q = p^r (witt-perfect)");
    app.add_option("--output", output, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_flag("--verbose", verbose, "extra diagnostics");

    // ---- expression subcommands -------------------------------------------
    std::string expr_a, expr_b, on_scalar;
    auto* sc_normalize = app.add_subcommand("normalize", "normalize an expression");
    sc_normalize->add_option("expr", expr_a, "expression")->required();
    auto* sc_mul = app.add_subcommand("mul", "multiply two expressions");
    sc_mul->add_option("lhs", expr_a)->required();
    sc_mul->add_option("rhs", expr_b)->required();
    auto* sc_add = app.add_subcommand("add", "add two expressions");
    sc_add->add_option("lhs", expr_a)->required();
    sc_add->add_option("rhs", expr_b)->required();
    auto* sc_degree = app.add_subcommand("degree", "homogeneous degree split");
    sc_degree->add_option("expr", expr_a)->required();

    int max_index = 2;
    auto* sc_basis = app.add_subcommand("basis", "list basis monomials");
    sc_basis->add_option("--max", max_index, "index bound")->required();
    auto* sc_table = app.add_subcommand("table", "pairwise basis products");
    sc_table->add_option("--max", max_index, "index bound")->required();

    std::string rules = "ir", corrupt = "none";
    int samples = 100, wordlen = 8;
    auto* sc_verify = app.add_subcommand("verify", "check the defining relations");
    sc_verify->add_option("--rules", rules, "itcart | ir")
        ->check(CLI::IsMember({"itcart", "ir"}));
    sc_verify->add_option("--samples", samples, "random instantiations per relation");
    sc_verify->add_option("--corrupt", corrupt, "negative-control corruption");
    auto* sc_cons = app.add_subcommand(
        "consistency", "compare word action against normal-form action");
    sc_cons->add_option("--samples", samples, "number of random words");
    sc_cons->add_option("--len", wordlen, "maximum word length");
    sc_cons->add_option("--corrupt", corrupt, "negative-control corruption");

    auto* sc_act = app.add_subcommand("act", "apply an element to a coefficient");
    sc_act->add_option("expr", expr_a)->required();
    sc_act->add_option("--on", on_scalar, "scalar to act on")->required();

    // ---- witt subcommand ---------------------------------------------------
    std::string witt_op, witt_a, witt_b, witt_base = "int";
    uint64_t witt_q = 0;
    auto* sc_witt = app.add_subcommand("witt", "truncated Witt vector engine");
    sc_witt->add_option("op", witt_op,
                        "add | mul | neg | frob | versch | teich | ghost | polys")
        ->required()
        ->check(CLI::IsMember({"add", "mul", "neg", "frob", "versch", "teich",
                               "ghost", "polys"}));
    sc_witt->add_option("a", witt_a, "first operand (W[...] literal or integer)");
    sc_witt->add_option("b", witt_b, "second operand");
    sc_witt->add_option("--base", witt_base, "int | fp | fq")
        ->check(CLI::IsMember({"int", "fp", "fq"}));
    sc_witt->add_option("--q", witt_q, "field size for --base fq");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        RingDescriptor desc;
        desc.prime = prime;
        desc.truncation = trunc;
        desc.kind = kind_from_name(coeff);
        desc.q = (desc.kind == CoeffKind::WittPerfect && q == 0) ? prime : q;
        if (desc.kind != CoeffKind::WittPerfect) desc.q = 0;

        // the witt subcommand manages its own bases and needs no ring
        if (sc_witt->parsed()) {
            auto parse_coords = [&](const std::string& s) {
                ExprPtr ast = parse(s);
                if (ast->kind == ExprNode::WittLit) return ast->coords;
                if (ast->kind == ExprNode::IntLit) return std::vector<Int>{ast->value};
                throw ParseError(0, "expected a W[...] literal or integer");
            };
            auto run_base = [&](auto ring) -> int {
                using BaseT = decltype(ring);
                auto lift = [&](const std::string& s) {
                    auto coords = parse_coords(s);
                    if (coords.size() != trunc)
                        throw std::invalid_argument(
                            "operand length does not match --trunc");
                    WittVector<BaseT> w{prime, nullptr, {}};
                    for (const auto& c : coords) w.coords.push_back(ring.from_int(c));
                    return w;
                };
                auto show = [&](const WittVector<BaseT>& w) {
                    out << detail::wv_str(ring, w) << "\n";
                };
                if (witt_op == "polys") {
                    const auto& fam = witt_universal_polys(prime, trunc);
                    for (uint32_t k = 0; k < trunc; ++k)
                        out << "S_" << k << " = " << fam.sum[k].str() << "\n";
                    for (uint32_t k = 0; k < trunc; ++k)
                        out << "P_" << k << " = " << fam.product[k].str() << "\n";
                    for (uint32_t k = 0; k < trunc; ++k)
                        out << "I_" << k << " = " << fam.negation[k].str() << "\n";
                    for (uint32_t k = 0; k + 1 < trunc; ++k)
                        out << "F_" << k << " = " << fam.frobenius[k].str() << "\n";
                    return 0;
                }
                if (witt_op == "teich") {
                    if (witt_a.empty()) throw std::invalid_argument("teich needs a value");
                    ExprPtr ast = parse(witt_a);
                    if (ast->kind != ExprNode::IntLit)
                        throw std::invalid_argument("teich takes an integer");
                    auto w = teichmuller(ring, prime, trunc, ring.from_int(ast->value));
                    w.base = &ring;
                    show(w);
                    return 0;
                }
                if (witt_a.empty()) throw std::invalid_argument(witt_op + " needs an operand");
                auto a = lift(witt_a);
                a.base = &ring;
                if (witt_op == "ghost") {
                    auto g = ghost(a);
                    out << "(";
                    for (size_t i = 0; i < g.size(); ++i) {
                        if (i) out << ",";
                        out << ring.str(g[i]);
                    }
                    out << ")\n";
                    return 0;
                }
                if (witt_op == "neg") { show(witt_neg(a)); return 0; }
                if (witt_op == "versch") { show(witt_V(a)); return 0; }
                if (witt_op == "frob") { show(witt_F(a)); return 0; }
                if (witt_b.empty()) throw std::invalid_argument(witt_op + " needs two operands");
                auto b = lift(witt_b);
                b.base = &ring;
                show(witt_op == "add" ? witt_add(a, b) : witt_mul(a, b));
                return 0;
            };
            if (witt_base == "int") return run_base(IntegerRing{});
            if (witt_base == "fp") return run_base(GFRing(prime, 1));
            // fq
            uint64_t fq = witt_q ? witt_q : prime;
            uint32_t r = 0;
            uint64_t t = fq;
            while (t > 1 && t % prime == 0) { t /= prime; ++r; }
            if (t != 1 || r < 1)
                throw std::invalid_argument("--q must be a positive power of p");
            return run_base(GFRing(prime, r));
        }

        auto ring = ring_make(desc);
        bool structured = output == "structured";
        auto show_element = [&](const CRElement& e) {
            if (structured) out << encode_element(e, desc).dump() << "\n";
            else out << print_element(e) << "\n";
        };

        if (sc_normalize->parsed()) {
            show_element(parse_element(expr_a, ring.get()));
            return 0;
        }
        if (sc_mul->parsed()) {
            show_element(cr_mul(parse_element(expr_a, ring.get()),
                                parse_element(expr_b, ring.get())));
            return 0;
        }
        if (sc_add->parsed()) {
            show_element(cr_add(parse_element(expr_a, ring.get()),
                                parse_element(expr_b, ring.get())));
            return 0;
        }
        if (sc_degree->parsed()) {
            auto split = cr_degree(parse_element(expr_a, ring.get()));
            if (split.empty()) out << "0\n";
            for (const auto& [deg, part] : split)
                out << deg << ": " << print_element(part) << "\n";
            return 0;
        }
        if (sc_basis->parsed()) {
            for (const auto& m : cr_basis(max_index)) out << m.str() << "\n";
            return 0;
        }
        if (sc_table->parsed()) {
            auto basis = cr_basis(max_index);
            for (const auto& a : basis)
                for (const auto& b : basis) {
                    auto prod = cr_mul(a.element(ring.get()), b.element(ring.get()));
                    out << a.str() << " * " << b.str() << " = "
                        << print_element(prod) << "\n";
                }
            return 0;
        }
        if (sc_verify->parsed()) {
            Corruption corr = detail::corruption_from_name(corrupt);
            RuleSet rs = rules == "itcart" ? RuleSet::ITCart : RuleSet::IR;
            out << "seed: " << seed << "\n";
            auto rep = relation_suite(ring.get(), rs, samples, seed, corr);
            out << "checks: " << rep.checks << "\n";
            for (const auto& f : rep.failures) {
                out << "FAIL " << f.relation;
                if (!f.detail.empty()) out << "  [" << f.detail << "]";
                out << "\n";
            }
            out << (rep.ok() ? "all relations hold" : "relation violations found")
                << "\n";
            return rep.ok() ? 0 : 1;
        }
        if (sc_cons->parsed()) {
            Corruption corr = detail::corruption_from_name(corrupt);
            auto m = tautological_module(ring.get());
            out << "seed: " << seed << "\n";
            auto rep = action_consistency(m, samples, wordlen, seed, corr);
            out << "checks: " << rep.checks << "\n";
            for (const auto& f : rep.failures)
                out << "FAIL word " << f.word << " on " << f.input << ": "
                    << f.direct << " != " << f.via_normal_form << "\n";
            out << (rep.ok() ? "action consistent" : "action inconsistent") << "\n";
            return rep.ok() ? 0 : 1;
        }
        if (sc_act->parsed()) {
            auto e = parse_element(expr_a, ring.get());
            auto s = parse_element(on_scalar, ring.get());
            if (!s.is_scalar())
                throw std::invalid_argument("--on must be a scalar expression");
            auto m = tautological_module(ring.get());
            out << ring->print_scalar(act_element(m, e, s.scalar_value())) << "\n";
            return 0;
        }
        err << "no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace cartier
