#include "crmodel/parser.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace crmodel {

namespace {

enum class Tok { Num, Ident, Deriv, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Tok::End, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            if (j < s_.size() && s_[j] == '.')
                throw ParseError("decimal literals are not part of the exact language", j);
            tok_ = {Tok::Num, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' ||
                    s_[j] == '\''))
                ++j;
            std::string name = s_.substr(i_, j - i_);
            // d/d<var> is a single derivation token.
            if (name == "d" && j + 1 < s_.size() && s_[j] == '/' && s_[j + 1] == 'd') {
                size_t k = j + 2;
                size_t vstart = k - 1;  // includes the leading 'd'
                (void)vstart;
                size_t v = k;
                while (v < s_.size() &&
                       (std::isalnum(static_cast<unsigned char>(s_[v])) || s_[v] == '_' ||
                        s_[v] == '\''))
                    ++v;
                if (v == k) throw ParseError("expected variable after d/d", k);
                tok_ = {Tok::Deriv, s_.substr(k, v - k), start};
                i_ = v;
                return;
            }
            tok_ = {Tok::Ident, name, start};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Tok::Plus, "+", start}; return;
            case '-': tok_ = {Tok::Minus, "-", start}; return;
            case '*': tok_ = {Tok::Star, "*", start}; return;
            case '/': tok_ = {Tok::Slash, "/", start}; return;
            case '^': tok_ = {Tok::Caret, "^", start}; return;
            case '(': tok_ = {Tok::LParen, "(", start}; return;
            case ')': tok_ = {Tok::RParen, ")", start}; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string& s_;
    size_t i_ = 0;
    Token tok_{Tok::End, "", 0};
};

// Evaluation value: polynomial part plus derivation part (direction -> coeff).
struct Value {
    Poly scalar;
    std::map<int, Poly> vec;
    bool is_scalar() const { return vec.empty(); }
};

class Parser {
public:
    Parser(const std::string& text, VarTablePtr table)
        : lex_(text), table_(std::move(table)) {}

    Value parse() {
        Value v = expr();
        if (lex_.peek().kind != Tok::End)
            throw ParseError("unexpected trailing input", lex_.peek().pos);
        return v;
    }

private:
    Value expr() {
        Value v = term();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            Token op = lex_.take();
            Value w = term();
            v = op.kind == Tok::Plus ? add(v, w, op.pos) : add(v, negate(w), op.pos);
        }
        return v;
    }

    Value term() {
        Value v = unary();
        while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
            Token op = lex_.take();
            Value w = unary();
            v = op.kind == Tok::Star ? mul(v, w, op.pos) : div(v, w, op.pos);
        }
        return v;
    }

    Value unary() {
        if (lex_.peek().kind == Tok::Minus) {
            Token op = lex_.take();
            (void)op;
            return negate(unary());
        }
        if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
            return unary();
        }
        return power();
    }

    Value power() {
        Value v = atom();
        if (lex_.peek().kind == Tok::Caret) {
            Token op = lex_.take();
            Token e = lex_.take();
            if (e.kind != Tok::Num) throw ParseError("expected integer exponent", e.pos);
            if (!v.is_scalar()) throw ParseError("cannot exponentiate a derivation", op.pos);
            long n = std::stol(e.text);
            v.scalar = v.scalar.pow(static_cast<int>(n));
        }
        return v;
    }

    Value atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Num:
                return constant(ExactScalar(parse_rational(t.text)));
            case Tok::LParen: {
                Value v = expr();
                expect(Tok::RParen, "expected ')'");
                return v;
            }
            case Tok::Deriv: {
                int idx = table_->find(t.text);
                if (idx < 0) throw ParseError("unknown variable '" + t.text + "'", t.pos);
                Value v;
                v.scalar = Poly(table_);
                v.vec[idx] = Poly::constant(table_, ExactScalar::one());
                return v;
            }
            case Tok::Ident: {
                if (t.text == "i") return constant(ExactScalar::i());
                if (t.text == "sqrt2") return constant(ExactScalar::sqrt2());
                if (t.text == "conj" || t.text == "Re" || t.text == "Im") {
                    expect(Tok::LParen, "expected '(' after " + t.text);
                    Value v = expr();
                    expect(Tok::RParen, "expected ')'");
                    if (!v.is_scalar())
                        throw ParseError(t.text + " applies to polynomials only", t.pos);
                    Poly c = v.scalar.conjugate();
                    if (t.text == "conj") v.scalar = c;
                    else if (t.text == "Re")
                        v.scalar = (v.scalar + c) * ExactScalar(ratio(1, 2));
                    else
                        v.scalar =
                            (v.scalar - c) * ExactScalar(Quad(), Quad(ratio(-1, 2)));  // -i/2
                    return v;
                }
                int idx = table_->find(t.text);
                if (idx < 0) throw ParseError("unknown variable '" + t.text + "'", t.pos);
                Value v;
                v.scalar = Poly::var(table_, idx);
                return v;
            }
            default:
                throw ParseError("unexpected token '" + t.text + "'", t.pos);
        }
    }

    void expect(Tok kind, const std::string& msg) {
        Token t = lex_.take();
        if (t.kind != kind) throw ParseError(msg, t.pos);
    }

    Value constant(const ExactScalar& c) {
        Value v;
        v.scalar = Poly::constant(table_, c);
        return v;
    }

    Value negate(Value v) {
        v.scalar = -v.scalar;
        for (auto& [k, p] : v.vec) p = -p;
        return v;
    }

    Value add(Value a, const Value& b, size_t) {
        a.scalar += b.scalar;
        for (const auto& [k, p] : b.vec) {
            auto it = a.vec.find(k);
            if (it == a.vec.end()) a.vec.emplace(k, p);
            else it->second += p;
        }
        return a;
    }

    Value mul(const Value& a, const Value& b, size_t pos) {
        if (!a.is_scalar() && !b.is_scalar())
            throw ParseError("cannot multiply two derivations", pos);
        const Value& s = a.is_scalar() ? a : b;
        const Value& v = a.is_scalar() ? b : a;
        Value out;
        out.scalar = s.scalar * v.scalar;
        for (const auto& [k, p] : v.vec) out.vec[k] = s.scalar * p;
        return out;
    }

    Value div(Value a, const Value& b, size_t pos) {
        if (!b.is_scalar()) throw ParseError("cannot divide by a derivation", pos);
        if (b.scalar.is_zero()) throw ParseError("division by zero", pos);
        if (b.scalar.total_degree() != 0)
            throw ParseError("division only by literal scalars", pos);
        ExactScalar c = b.scalar.terms().begin()->second;
        ExactScalar ci = c.inverse();
        a.scalar = a.scalar * ci;
        for (auto& [k, p] : a.vec) p = p * ci;
        return a;
    }

    Lexer lex_;
    VarTablePtr table_;
};

}  // namespace

Poly parse_poly(const std::string& text, const VarTablePtr& table) {
    Parser p(text, table);
    Value v = p.parse();
    if (!v.is_scalar()) throw ParseError("expected a polynomial, found a derivation", 0);
    return v.scalar;
}

HoloVField parse_field(const std::string& text, const VarTablePtr& table) {
    Parser p(text, table);
    Value v = p.parse();
    if (!v.scalar.is_zero())
        throw ParseError("expected a vector field: every term needs a d/d factor", 0);
    std::array<Poly, 3> coeffs = {Poly(table), Poly(table), Poly(table)};
    const auto& zidx = table->complex_vars();
    for (const auto& [dir, coeff] : v.vec) {
        bool found = false;
        for (size_t j = 0; j < zidx.size(); ++j)
            if (zidx[j] == dir) {
                coeffs[j] += coeff;
                found = true;
            }
        if (!found)
            throw ParseError("d/d" + table->info(dir).name + " is not a complex direction", 0);
    }
    return HoloVField(table, std::move(coeffs));
}

}  // namespace crmodel
