#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "planarlie/errors.hpp"
#include "planarlie/ratfunc.hpp"
#include "planarlie/vectorfield.hpp"

namespace planarlie {

// ---------------------------------------------------------------------------
// rendering

/// One monomial without its sign, e.g. "3/2xy^2"; "1" for the constant term.
inline std::string mono_str(const Rat& coeff_abs, const Mono& m, const std::string& vx,
                            const std::string& vy) {
    std::string s;
    bool has_vars = m.dx > 0 || m.dy > 0;
    if (!has_vars || coeff_abs != 1) s += rat_str(coeff_abs);
    if (m.dx > 0) {
        s += vx;
        if (m.dx > 1) s += "^" + std::to_string(m.dx);
    }
    if (m.dy > 0) {
        s += vy;
        if (m.dy > 1) s += "^" + std::to_string(m.dy);
    }
    return s;
}

inline std::string poly_str(const Poly& p, const std::string& vx = "x",
                            const std::string& vy = "y") {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool neg = c < 0;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        s += mono_str(abs(c), m, vx, vy);
    }
    return s;
}

inline std::string ratfunc_str(const RatFunc& f, const std::string& vx = "x",
                               const std::string& vy = "y") {
    if (f.is_polynomial()) return poly_str(f.num(), vx, vy);
    return "(" + poly_str(f.num(), vx, vy) + ")/(" + poly_str(f.den(), vx, vy) + ")";
}

/// Canonical text form "<ratfunc> dx + <ratfunc> dy".
inline std::string derivation_str(const Derivation& d) {
    if (d.is_zero()) return "0";
    std::string s;
    auto append = [&s](const RatFunc& f, const char* basis) {
        if (f.is_zero()) return;
        bool neg = false;
        std::string body;
        if (f.is_polynomial() && f.num().terms().size() == 1) {
            const auto& [m, c] = *f.num().terms().begin();
            neg = c < 0;
            if (m == Mono{0, 0} && abs(c) == 1) body = basis;
            else body = mono_str(abs(c), m, "x", "y") + " " + basis;
        } else if (f.is_polynomial()) {
            body = "(" + poly_str(f.num()) + ") " + std::string(basis);
        } else {
            body = ratfunc_str(f) + " " + basis;
        }
        if (s.empty()) s = (neg ? "-" : "") + body;
        else s += (neg ? " - " : " + ") + body;
    };
    append(d.cx, "dx");
    append(d.cy, "dy");
    return s;
}

// ---------------------------------------------------------------------------
// parsing

namespace detail {

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> lex(const std::string& in) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < in.size()) {
        char ch = in[i];
        if (std::isspace(static_cast<unsigned char>(ch))) { ++i; continue; }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) ++i;
            out.push_back({Token::Int, in.substr(start, i - start), start});
        } else if (std::isalpha(static_cast<unsigned char>(ch))) {
            // split letter runs into known words so that juxtaposed monomials
            // like "2xy" or "y^2dx" lex as separate factors
            if (in.compare(i, 2, "dx") == 0 || in.compare(i, 2, "dy") == 0) {
                out.push_back({Token::Ident, in.substr(i, 2), start});
                i += 2;
            } else {
                out.push_back({Token::Ident, in.substr(i, 1), start});
                ++i;
            }
        } else {
            Token::Kind k;
            switch (ch) {
                case '+': k = Token::Plus; break;
                case '-': k = Token::Minus; break;
                case '*': k = Token::Star; break;
                case '/': k = Token::Slash; break;
                case '^': k = Token::Caret; break;
                case '(': k = Token::LParen; break;
                case ')': k = Token::RParen; break;
                default:
                    throw SyntaxError(start, {"expression character"}, std::string(1, ch));
            }
            ++i;
            out.push_back({k, std::string(1, ch), start});
        }
    }
    out.push_back({Token::End, "<end>", in.size()});
    return out;
}

/// Recursive-descent parser over the expression grammar. `uni` switches the
/// atom set between {x, y} (derivations) and {t} (univariate inputs, with t
/// read as the internal first variable).
class Parser {
public:
    Parser(const std::string& text, bool uni) : toks_(lex(text)), uni_(uni) {}

    RatFunc parse_ratfunc_all() {
        RatFunc f = expr();
        expect_end();
        return f;
    }

    Derivation parse_derivation_all() {
        Derivation d = derivation();
        expect_end();
        return d;
    }

private:
    const Token& cur() const { return toks_[idx_]; }
    void advance() { ++idx_; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw SyntaxError(cur().pos, std::move(expected), "'" + cur().text + "'");
    }
    void expect_end() const {
        if (cur().kind != Token::End) fail({"end of input", "'+'", "'-'"});
    }

    bool starts_atom() const {
        if (cur().kind == Token::Int || cur().kind == Token::LParen) return true;
        if (cur().kind != Token::Ident) return false;
        return cur().text == "x" || cur().text == "y" || cur().text == "t";
    }
    bool at_basis() const {
        return cur().kind == Token::Ident && (cur().text == "dx" || cur().text == "dy");
    }

    Derivation derivation() {
        bool neg = false;
        if (cur().kind == Token::Minus) { neg = true; advance(); }
        Derivation d = term();
        if (neg) d = -d;
        while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
            bool minus = cur().kind == Token::Minus;
            advance();
            Derivation t = term();
            d = minus ? d - t : d + t;
        }
        return d;
    }

    Derivation term() {
        RatFunc coef(Rat(1));
        if (!at_basis()) {
            if (!starts_atom()) fail({"'dx'", "'dy'", "rational", "'x'", "'y'", "'('"});
            coef = ratexpr();
        }
        if (!at_basis()) fail({"'dx'", "'dy'"});
        bool isx = cur().text == "dx";
        advance();
        return isx ? Derivation(coef, RatFunc()) : Derivation(RatFunc(), coef);
    }

    RatFunc expr() {
        bool neg = false;
        if (cur().kind == Token::Minus) { neg = true; advance(); }
        RatFunc f = ratexpr();
        if (neg) f = -f;
        while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
            bool minus = cur().kind == Token::Minus;
            advance();
            RatFunc g = ratexpr();
            f = minus ? f - g : f + g;
        }
        return f;
    }

    RatFunc ratexpr() {
        RatFunc f = factor();
        while (true) {
            if (cur().kind == Token::Star) { advance(); f = f * factor(); }
            else if (cur().kind == Token::Slash) { advance(); f = f / factor(); }
            else if (starts_atom() && !at_basis()) { f = f * factor(); } // implicit product
            else break;
        }
        return f;
    }

    RatFunc factor() {
        RatFunc a = atom();
        if (cur().kind == Token::Caret) {
            advance();
            bool neg = false;
            if (cur().kind == Token::Minus) { neg = true; advance(); }
            if (cur().kind != Token::Int) fail({"integer exponent"});
            long e = std::stol(cur().text);
            advance();
            a = a.pow(neg ? -e : e);
        }
        return a;
    }

    RatFunc atom() {
        if (cur().kind == Token::Int) {
            Rat v(cur().text);
            advance();
            return RatFunc(v);
        }
        if (cur().kind == Token::LParen) {
            advance();
            RatFunc f = expr();
            if (cur().kind != Token::RParen) fail({"')'"});
            advance();
            return f;
        }
        if (cur().kind == Token::Ident) {
            if (uni_) {
                if (cur().text == "t") { advance(); return RatFunc::x(); }
                fail({"'t'", "rational", "'('"});
            }
            if (cur().text == "x") { advance(); return RatFunc::x(); }
            if (cur().text == "y") { advance(); return RatFunc::y(); }
            fail({"'x'", "'y'", "rational", "'('"});
        }
        fail(uni_ ? std::vector<std::string>{"'t'", "rational", "'('"}
                  : std::vector<std::string>{"'x'", "'y'", "rational", "'('"});
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
    bool uni_;
};

} // namespace detail

inline Derivation parse_derivation(const std::string& text) {
    return detail::Parser(text, false).parse_derivation_all();
}

inline RatFunc parse_ratfunc(const std::string& text) {
    return detail::Parser(text, false).parse_ratfunc_all();
}

/// Univariate input over the variable t (stored internally over x).
inline RatFunc parse_ratfunc_t(const std::string& text) {
    return detail::Parser(text, true).parse_ratfunc_all();
}

/// Semicolon-separated generator list.
inline std::vector<Derivation> parse_generators(const std::string& text) {
    std::vector<Derivation> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        std::string piece = semi == std::string::npos ? text.substr(start)
                                                      : text.substr(start, semi - start);
        bool blank = true;
        for (char c : piece)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) out.push_back(parse_derivation(piece));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (out.empty()) throw SyntaxError(0, {"derivation"}, "empty generator list");
    return out;
}

inline std::string ratfunc_str_t(const RatFunc& f) { return ratfunc_str(f, "t", "t"); }

inline std::string poly_str_t(const Poly& p) { return poly_str(p, "t", "t"); }

} // namespace planarlie
