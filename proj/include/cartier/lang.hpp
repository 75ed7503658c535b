#pragma once

// Surface syntax, canonical printing and structured serialization.
//
// Grammar:
//   expr   := '-'? term (('+'|'-') term)*
//   term   := factor ('*'? factor)*        (juxtaposition multiplies)
//   factor := atom ('^' nat)?
//   atom   := 'v' | 'f' | 'd' | 'eta' | 'u' | integer
//           | 'W' '[' int (',' int)* ']' | '(' expr ')'
//
// Runs of letters split greedily into known atoms, so "fdv" reads as
// f*d*v.  'eta' denotes 0 outside the formal-eta instance; 'u' exists
// only there.  Errors carry the byte offset of the offending token.

#include "cartier/crring.hpp"

#include <json.hpp>

#include <cctype>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace cartier {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(size_t pos, const std::string& msg)
        : std::runtime_error("syntax error at position " + std::to_string(pos) +
                             ": " + msg),
          position(pos) {}
};

// ---------------------------------------------------------------------------
// AST

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum Kind { Sum, Diff, Prod, Power, GenV, GenF, GenD, Eta, FormalU, IntLit, WittLit } kind;
    ExprPtr lhs, rhs;       // Sum, Diff, Prod; Power uses lhs
    uint64_t exponent = 0;  // Power
    Int value;              // IntLit
    std::vector<Int> coords; // WittLit
    size_t position = 0;
};

namespace detail {

struct Token {
    enum Kind { Plus, Minus, Star, Caret, LParen, RParen, LBracket, RBracket,
                Comma, Name, Number, End } kind;
    std::string text;
    Int number;
    size_t position;
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    auto push = [&](Token::Kind k, size_t pos, std::string text = "") {
        out.push_back({k, std::move(text), 0, pos});
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        switch (c) {
            case '+': push(Token::Plus, i++); continue;
            case '-': push(Token::Minus, i++); continue;
            case '*': push(Token::Star, i++); continue;
            case '^': push(Token::Caret, i++); continue;
            case '(': push(Token::LParen, i++); continue;
            case ')': push(Token::RParen, i++); continue;
            case '[': push(Token::LBracket, i++); continue;
            case ']': push(Token::RBracket, i++); continue;
            case ',': push(Token::Comma, i++); continue;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            std::string digits;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                digits += s[i++];
            Token t{Token::Number, digits, Int(digits), start};
            out.push_back(std::move(t));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            // split a letter run greedily into known atoms
            size_t start = i;
            std::string run;
            while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i])))
                run += s[i++];
            size_t k = 0;
            while (k < run.size()) {
                if (run.compare(k, 3, "eta") == 0) {
                    push(Token::Name, start + k, "eta");
                    k += 3;
                } else if (run[k] == 'v' || run[k] == 'f' || run[k] == 'd' ||
                           run[k] == 'u' || run[k] == 'W') {
                    push(Token::Name, start + k, std::string(1, run[k]));
                    k += 1;
                } else {
                    throw ParseError(start + k, "unknown symbol '" +
                                                    std::string(1, run[k]) + "'");
                }
            }
            continue;
        }
        throw ParseError(i, "unexpected character '" + std::string(1, c) + "'");
    }
    push(Token::End, s.size());
    return out;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (peek().kind != Token::End)
            throw ParseError(peek().position, "unexpected trailing input");
        return e;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }

    static ExprPtr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

    ExprPtr expr() {
        ExprPtr acc;
        if (peek().kind == Token::Minus) {
            size_t pos = take().position;
            ExprPtr t = term();
            ExprNode zero{ExprNode::IntLit, nullptr, nullptr, 0, 0, {}, pos};
            acc = node({ExprNode::Diff, node(std::move(zero)), t, 0, 0, {}, pos});
        } else {
            acc = term();
        }
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            Token op = take();
            ExprPtr t = term();
            acc = node({op.kind == Token::Plus ? ExprNode::Sum : ExprNode::Diff,
                        acc, t, 0, 0, {}, op.position});
        }
        return acc;
    }

    bool starts_factor() const {
        auto k = peek().kind;
        return k == Token::Name || k == Token::Number || k == Token::LParen;
    }

    ExprPtr term() {
        ExprPtr acc = factor();
        for (;;) {
            if (peek().kind == Token::Star) {
                size_t pos = take().position;
                ExprPtr f = factor();
                acc = node({ExprNode::Prod, acc, f, 0, 0, {}, pos});
            } else if (starts_factor()) {
                size_t pos = peek().position;
                ExprPtr f = factor();
                acc = node({ExprNode::Prod, acc, f, 0, 0, {}, pos});
            } else {
                break;
            }
        }
        return acc;
    }

    ExprPtr factor() {
        ExprPtr a = atom();
        if (peek().kind == Token::Caret) {
            size_t pos = take().position;
            if (peek().kind != Token::Number)
                throw ParseError(peek().position, "expected exponent");
            Token e = take();
            uint64_t exp;
            try {
                exp = e.number.convert_to<uint64_t>();
            } catch (...) {
                throw ParseError(e.position, "exponent too large");
            }
            return node({ExprNode::Power, a, nullptr, exp, 0, {}, pos});
        }
        return a;
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Number: {
                Token n = take();
                return node({ExprNode::IntLit, nullptr, nullptr, 0, n.number, {}, n.position});
            }
            case Token::LParen: {
                take();
                ExprPtr e = expr();
                if (peek().kind != Token::RParen)
                    throw ParseError(peek().position, "expected ')'");
                take();
                return e;
            }
            case Token::Name: {
                Token n = take();
                if (n.text == "v") return node({ExprNode::GenV, nullptr, nullptr, 0, 0, {}, n.position});
                if (n.text == "f") return node({ExprNode::GenF, nullptr, nullptr, 0, 0, {}, n.position});
                if (n.text == "d") return node({ExprNode::GenD, nullptr, nullptr, 0, 0, {}, n.position});
                if (n.text == "eta") return node({ExprNode::Eta, nullptr, nullptr, 0, 0, {}, n.position});
                if (n.text == "u") return node({ExprNode::FormalU, nullptr, nullptr, 0, 0, {}, n.position});
                if (n.text == "W") {
                    if (peek().kind != Token::LBracket)
                        throw ParseError(peek().position, "expected '[' after W");
                    take();
                    std::vector<Int> coords;
                    for (;;) {
                        bool negated = false;
                        if (peek().kind == Token::Minus) {
                            take();
                            negated = true;
                        }
                        if (peek().kind != Token::Number)
                            throw ParseError(peek().position, "expected Witt coordinate");
                        Token c = take();
                        coords.push_back(negated ? -c.number : c.number);
                        if (peek().kind == Token::Comma) { take(); continue; }
                        break;
                    }
                    if (peek().kind != Token::RBracket)
                        throw ParseError(peek().position, "expected ']'");
                    take();
                    return node({ExprNode::WittLit, nullptr, nullptr, 0, 0,
                                 std::move(coords), n.position});
                }
                throw ParseError(n.position, "unknown symbol '" + n.text + "'");
            }
            default:
                throw ParseError(t.position, "expected an atom");
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

} // namespace detail

inline ExprPtr parse(const std::string& text) { return detail::Parser(text).parse(); }

inline CRElement eval_ast(const ExprPtr& ast, const CoeffRing* ring,
                          Corruption corr = Corruption::None) {
    const CoeffRing& K = *ring;
    switch (ast->kind) {
        case ExprNode::Sum:
            return cr_add(eval_ast(ast->lhs, ring, corr), eval_ast(ast->rhs, ring, corr));
        case ExprNode::Diff:
            return cr_sub(eval_ast(ast->lhs, ring, corr), eval_ast(ast->rhs, ring, corr));
        case ExprNode::Prod:
            return cr_mul(eval_ast(ast->lhs, ring, corr), eval_ast(ast->rhs, ring, corr), corr);
        case ExprNode::Power: {
            CRElement base = eval_ast(ast->lhs, ring, corr);
            CRElement acc = CRElement::one(ring);
            for (uint64_t i = 0; i < ast->exponent; ++i) acc = cr_mul(acc, base, corr);
            return acc;
        }
        case ExprNode::GenV: return CRElement::gen_v(ring);
        case ExprNode::GenF: return CRElement::gen_f(ring);
        case ExprNode::GenD: return CRElement::gen_d(ring);
        case ExprNode::Eta: return CRElement::from_scalar(ring, K.eta());
        case ExprNode::FormalU:
            if (K.kind() != CoeffKind::FormalEta)
                throw ParseError(ast->position, "'u' exists only in the formal-eta instance");
            return CRElement::from_scalar(ring, K.formal_u());
        case ExprNode::IntLit:
            return CRElement::from_scalar(ring, K.from_int(ast->value));
        case ExprNode::WittLit:
            try {
                return CRElement::from_scalar(ring, K.from_witt_coords(ast->coords));
            } catch (const std::invalid_argument& e) {
                throw ParseError(ast->position, e.what());
            }
    }
    throw std::logic_error("unreachable");
}

inline CRElement parse_element(const std::string& text, const CoeffRing* ring,
                               Corruption corr = Corruption::None) {
    return eval_ast(parse(text), ring, corr);
}

// ---------------------------------------------------------------------------
// Canonical printing.  Term order: v^i (i >= 1) ascending, d v^i
// ascending, x f^j ascending, x f^j d ascending, scalar part last.
// Coefficients print on their canonical side (right of v/d v, left of
// f/f d), except in zmod-pn where integers are central and customarily
// go on the left.  Unit coefficients are suppressed outside the Witt
// kinds, whose W[...] literal is always explicit.

namespace detail {

inline std::string coeff_str(const CoeffRing& K, const GradedScalar& c) {
    std::string s = K.print_scalar(c);
    if (s.find('+') != std::string::npos) return "(" + s + ")";
    return s;
}

inline std::string power_str(const char* g, int e) {
    std::string s = g;
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

} // namespace detail

inline std::string print_element(const CRElement& e) {
    if (e.is_zero()) return "0";
    const CoeffRing& K = *e.ring();
    bool explicit_unit =
        K.kind() == CoeffKind::WittFp || K.kind() == CoeffKind::WittPerfect;
    bool coeff_left_always = K.kind() == CoeffKind::ZmodPn;
    GradedScalar unit = K.one();

    std::vector<std::string> terms;
    auto emit = [&](const std::string& mono, const GradedScalar& c, bool coeff_right) {
        bool show = explicit_unit || !(c == unit);
        if (mono.empty()) {
            terms.push_back(show ? detail::coeff_str(K, c) : "1");
            return;
        }
        if (!show) {
            terms.push_back(mono);
            return;
        }
        std::string cs = detail::coeff_str(K, c);
        if (coeff_left_always || !coeff_right) terms.push_back(cs + "*" + mono);
        else terms.push_back(mono + "*" + cs);
    };

    for (const auto& [i, c] : e.v_part())
        if (i > 0) emit(detail::power_str("v", i), c, true);
    for (const auto& [i, c] : e.dv_part()) {
        std::string mono = "d";
        if (i > 0) mono += "*" + detail::power_str("v", i);
        emit(mono, c, true);
    }
    for (const auto& [j, c] : e.f_part())
        emit(detail::power_str("f", j), c, false);
    for (const auto& [j, c] : e.fd_part())
        emit(detail::power_str("f", j) + "*d", c, false);
    if (e.v_part().count(0))
        emit("", e.v_part().at(0), true);

    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " + ";
        out += terms[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structured serialization (JSON).  Self-describing: the ring
// descriptor is embedded.  Each part is a list of [index, coefficient]
// pairs; a coefficient is a list of [degree, data...] component rows.

inline nlohmann::json encode_scalar(const GradedScalar& c) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [deg, h] : c.components()) {
        nlohmann::json row = nlohmann::json::array();
        row.push_back(deg);
        for (const auto& v : h.data) row.push_back(v.str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json encode_ring(const RingDescriptor& d) {
    nlohmann::json j{{"prime", d.prime},
                     {"truncation", d.truncation},
                     {"kind", kind_name(d.kind)}};
    if (d.kind == CoeffKind::WittPerfect) j["q"] = d.q;
    return j;
}

inline nlohmann::json encode_element(const CRElement& e, const RingDescriptor& d) {
    nlohmann::json j;
    j["ring"] = encode_ring(d);
    auto part = [&](const std::map<int, GradedScalar>& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [i, c] : m)
            rows.push_back(nlohmann::json::array({i, encode_scalar(c)}));
        return rows;
    };
    j["v"] = part(e.v_part());
    j["dv"] = part(e.dv_part());
    j["f"] = part(e.f_part());
    j["fd"] = part(e.fd_part());
    return j;
}

inline RingDescriptor decode_ring(const nlohmann::json& j) {
    RingDescriptor d;
    d.prime = j.at("prime").get<uint64_t>();
    d.truncation = j.at("truncation").get<uint32_t>();
    d.kind = kind_from_name(j.at("kind").get<std::string>());
    d.q = j.value("q", uint64_t{0});
    return d;
}

inline GradedScalar decode_scalar(const nlohmann::json& rows, const CoeffRing& K) {
    GradedScalar acc = K.zero();
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() < 2)
            throw std::invalid_argument("malformed coefficient row");
        int deg = row.at(0).get<int>();
        Hom h;
        for (size_t i = 1; i < row.size(); ++i)
            h.data.emplace_back(row.at(i).get<std::string>());
        if (!K.valid_component(deg, h))
            throw std::invalid_argument("coefficient component out of range");
        acc = K.add(acc, K.from_component(deg, h));
    }
    return acc;
}

inline CRElement decode_element(const nlohmann::json& j, const CoeffRing* ring) {
    if (!(decode_ring(j.at("ring")) == ring->descriptor()))
        throw std::invalid_argument("document ring descriptor does not match");
    CRElement e = CRElement::zero(ring);
    auto part = [&](const char* key, auto setter) {
        for (const auto& row : j.at(key)) {
            int idx = row.at(0).get<int>();
            GradedScalar c = decode_scalar(row.at(1), *ring);
            setter(idx, c);
        }
    };
    part("v", [&](int i, const GradedScalar& c) { e.set_v(i, c); });
    part("dv", [&](int i, const GradedScalar& c) { e.set_dv(i, c); });
    part("f", [&](int j2, const GradedScalar& c) { e.set_f(j2, c); });
    part("fd", [&](int j2, const GradedScalar& c) { e.set_fd(j2, c); });
    if (!e.is_canonical()) throw std::invalid_argument("document is not canonical");
    return e;
}

} // namespace cartier
