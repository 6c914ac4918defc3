#include "kur/expr.hpp"

#include <cctype>

#include "kur/calculus.hpp"
#include "kur/errors.hpp"

namespace kur {

namespace {

struct Token {
    enum Kind { Int, Name, Punct, End } kind = End;
    std::string text;
    long value = 0;
    int line = 1, col = 1;
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
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(tok_.line, tok_.col, msg);
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) bump();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_.kind = Token::End;
            tok_.text = "<end>";
            return;
        }
        char c = s_[pos_];
        if (std::isdigit((unsigned char)c)) {
            tok_.kind = Token::Int;
            long v = 0;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
                v = v * 10 + (s_[pos_] - '0');
                bump();
            }
            tok_.value = v;
            tok_.text = std::to_string(v);
            return;
        }
        if (std::isalpha((unsigned char)c)) {
            tok_.kind = Token::Name;
            while (pos_ < s_.size() && std::isalpha((unsigned char)s_[pos_])) {
                tok_.text += s_[pos_];
                bump();
            }
            return;
        }
        tok_.kind = Token::Punct;
        tok_.text = std::string(1, c);
        bump();
    }
    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& text, const Geometry& g) : lex_(text), g_(g) {}

    VForm parse() {
        VForm v = parseExpr();
        if (lex_.peek().kind != Token::End) lex_.fail("unexpected trailing input");
        return v;
    }

private:
    VForm parseExpr() {
        VForm acc = parseTerm();
        while (lex_.peek().kind == Token::Punct &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            bool minus = lex_.take().text == "-";
            VForm t = parseTerm();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    // term := ['-'] factor (('*'|'^') factor-or-power)* ['@d' ref]
    VForm parseTerm() {
        bool negate = false;
        while (lex_.peek().kind == Token::Punct && lex_.peek().text == "-") {
            lex_.take();
            negate = !negate;
        }
        VForm acc = parseFactor();
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Punct && (t.text == "*" || t.text == "^")) {
                bool caret = t.text == "^";
                lex_.take();
                if (caret && lex_.peek().kind == Token::Int) {
                    long e = lex_.take().value;
                    VForm base = acc;
                    acc = VForm::scalar(g_, Rat(1));
                    for (long i = 0; i < e; ++i) acc = wedge(acc, base);
                } else {
                    acc = wedge(acc, parseFactor());
                }
                continue;
            }
            if (t.kind == Token::Punct && t.text == "@") {
                lex_.take();
                Token name = lex_.take();
                if (name.kind != Token::Name || name.text != "d")
                    throw ParseError(name.line, name.col, "expected 'd' after '@'");
                int a = parseRef();
                if (a < 1 || a > g_.n) throw TypeError("frame index out of range");
                acc = markValued(acc, a);
                continue;
            }
            break;
        }
        return negate ? -acc : acc;
    }

    VForm parseFactor() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Punct && t.text == "(") {
            lex_.take();
            VForm inner = parseExpr();
            expectPunct(")");
            return inner;
        }
        if (t.kind == Token::Int) {
            Token num = lex_.take();
            long den = 1;
            if (lex_.peek().kind == Token::Punct && lex_.peek().text == "/") {
                lex_.take();
                Token d = lex_.take();
                if (d.kind != Token::Int || d.value == 0)
                    throw ParseError(d.line, d.col, "expected nonzero denominator");
                den = d.value;
            }
            return VForm::scalar(g_, Rat(num.value, den));
        }
        if (t.kind == Token::Name) return parseName();
        lex_.fail("expected a factor");
    }

    VForm parseName() {
        Token name = lex_.take();
        const std::string& id = name.text;
        if (id == "i") return VForm::scalar(g_, Rat::i());
        if (id == "t") {
            int j = 1;
            if (refFollows()) j = parseRef();
            if (j < 1 || j > g_.m) throw TypeError("deformation parameter index out of range");
            return VForm::fromFnSeries(
                g_, FnSeries::make(tmonoVar(g_.m, j), Fn::constant(g_, Rat(1))));
        }
        if (id == "v" || id == "vb") {
            if (g_.ring != RingKind::Chart)
                throw TypeError("coordinate monomials belong to the chart ring");
            int j = parseRef();
            if (j < 1 || j > g_.n) throw TypeError("coordinate index out of range");
            return VForm::fromFn(
                g_, Fn::coordinate(g_, j, id == "v" ? DerKind::Holo : DerKind::Anti));
        }
        if (id == "dv" || id == "dvb") {
            int j = parseRef();
            if (j < 1 || j > g_.n) throw TypeError("cotangent index out of range");
            return VForm::letter(g_, id == "dv" ? DerKind::Holo : DerKind::Anti, j);
        }
        if (id == "E") {
            if (g_.ring != RingKind::Torus)
                throw TypeError("characters belong to the torus ring");
            return parseCharacter(name);
        }
        throw ParseError(name.line, name.col, "unknown symbol '" + id + "'");
    }

    VForm parseCharacter(const Token& at) {
        expectPunct("[");
        TorusFreq freq;
        for (int j = 0; j < g_.n; ++j) {
            if (j) expectPunct(",");
            freq.push_back(parseGaussInt());
        }
        expectPunct(";");
        for (int j = 0; j < g_.n; ++j) {
            if (j) expectPunct(",");
            freq.push_back(parseGaussInt());
        }
        expectPunct("]");
        if (!latticeAdmissible(freq, g_.n))
            throw LatticeViolation("character frequency violates the lattice at line " +
                                   std::to_string(at.line));
        return VForm::fromFn(g_, Fn::character(g_, freq, Rat(1)));
    }

    // signed atoms: "0", "2", "i", "-i", "1+i", "1-2i"
    GaussInt parseGaussInt() {
        GaussInt out{};
        bool first = true;
        for (;;) {
            int sign = 1;
            const Token& t = lex_.peek();
            if (t.kind == Token::Punct && (t.text == "+" || t.text == "-")) {
                sign = t.text == "-" ? -1 : 1;
                lex_.take();
            } else if (!first) {
                break;
            }
            const Token& a = lex_.peek();
            if (a.kind == Token::Int) {
                long v = lex_.take().value;
                if (lex_.peek().kind == Token::Name && lex_.peek().text == "i") {
                    lex_.take();
                    out.im += sign * (int)v;
                } else {
                    out.re += sign * (int)v;
                }
            } else if (a.kind == Token::Name && a.text == "i") {
                lex_.take();
                out.im += sign;
            } else {
                lex_.fail("expected a Gaussian integer entry");
            }
            first = false;
        }
        return out;
    }

    VForm markValued(const VForm& v, int a) {
        if (v.vectorValued()) throw DegreeMismatch("value marker applied twice");
        VForm out(g_);
        for (auto& [key, c] : v.terms()) {
            FormKey k = key;
            k.vec = a;
            out.addCanonical(k, c);
        }
        return out;
    }

    bool refFollows() {
        const Token& t = lex_.peek();
        return t.kind == Token::Int || (t.kind == Token::Punct && t.text == "(");
    }

    int parseRef() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Int) return (int)lex_.take().value;
        if (t.kind == Token::Punct && t.text == "(") {
            lex_.take();
            Token n = lex_.take();
            if (n.kind != Token::Int) throw ParseError(n.line, n.col, "expected an index");
            expectPunct(")");
            return (int)n.value;
        }
        lex_.fail("expected an index");
    }

    void expectPunct(const std::string& p) {
        Token t = lex_.take();
        if (t.kind != Token::Punct || t.text != p)
            throw ParseError(t.line, t.col, "expected '" + p + "', found '" + t.text + "'");
    }

    Lexer lex_;
    Geometry g_;
};

} // namespace

VForm parse_expression(const std::string& text, const Geometry& g) {
    return Parser(text, g).parse();
}

TMono parse_tmono(const std::string& text, int m) {
    // Reuse the expression machinery on a neutral chart geometry.
    Geometry g = chartGeometry(1, m, 1 << 20);
    VForm v = parse_expression(text, g);
    if (v.terms().size() != 1) throw TypeError("expected a single t-monomial: " + text);
    auto& [key, series] = *v.terms().begin();
    if (key.p() != 0 || key.q() != 0 || key.vec != 0 || series.parts().size() != 1)
        throw TypeError("expected a single t-monomial: " + text);
    auto& [mono, fn] = *series.parts().begin();
    if (fn != Fn::constant(g, Rat(1))) throw TypeError("expected a monic t-monomial: " + text);
    return mono;
}

MonomialIdeal parse_ideal(const std::string& text, int m) {
    std::vector<TMono> gens;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (piece.find_first_not_of(" \t") != std::string::npos) gens.push_back(parse_tmono(piece, m));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (gens.empty()) throw TypeError("empty ideal specification");
    return MonomialIdeal(m, std::move(gens));
}

} // namespace kur
