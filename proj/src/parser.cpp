#include "g2calc/parser.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "g2calc/errors.hpp"
#include "g2calc/exterior.hpp"
#include "g2calc/presets.hpp"

namespace g2calc {

namespace {

enum class Tok {
    Integer,
    Ident,
    Preset,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (c >= '0' && c <= '9') {
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
            out.push_back({Tok::Integer, s.substr(start, i - start), start});
            continue;
        }
        if (ident_start(c)) {
            while (i < s.size() && ident_char(s[i])) ++i;
            out.push_back({Tok::Ident, s.substr(start, i - start), start});
            continue;
        }
        if (c == '@') {
            ++i;
            while (i < s.size() && (ident_char(s[i]) || s[i] == ':')) ++i;
            if (i == start + 1) throw ParseError("empty preset name", start);
            out.push_back({Tok::Preset, s.substr(start + 1, i - start - 1), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '[': kind = Tok::LBracket; break;
            case ']': kind = Tok::RBracket; break;
            case ',': kind = Tok::Comma; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, s.substr(start, 1), start});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

const DifferentialForm* as_form(const ParsedValue& v) {
    return std::get_if<DifferentialForm>(&v);
}

const DifferentialForm* as_scalar(const ParsedValue& v) {
    const DifferentialForm* f = as_form(v);
    return (f != nullptr && f->degree() == 0) ? f : nullptr;
}

ParsedValue negate_value(const ParsedValue& v) {
    if (const DifferentialForm* f = as_form(v)) return -*f;
    return -std::get<VectorField>(v);
}

VectorField scale_field(const Polynomial& p, const VectorField& x) {
    std::vector<Polynomial> comps;
    comps.reserve(x.components().size());
    for (const Polynomial& c : x.components()) comps.push_back(p * c);
    return VectorField(std::move(comps));
}

class Parser {
public:
    Parser(const std::string& input, int ambient_dim)
        : toks_(lex(input)), dim_(ambient_dim) {}

    ParsedValue run() {
        ParsedValue v = parse_expr();
        if (!at(Tok::End)) throw ParseError("unexpected trailing input", peek().pos);
        return v;
    }

private:
    std::vector<Token> toks_;
    std::size_t idx_ = 0;
    int dim_;

    const Token& peek() const { return toks_[idx_]; }
    Token advance() { return toks_[idx_++]; }
    bool at(Tok k) const { return peek().kind == k; }

    Token expect(Tok k, const std::string& what) {
        if (!at(k)) throw ParseError("expected " + what, peek().pos);
        return advance();
    }

    ParsedValue parse_expr() {
        bool negate = false;
        if (at(Tok::Plus)) {
            advance();
        } else if (at(Tok::Minus)) {
            advance();
            negate = true;
        }
        ParsedValue v = parse_term();
        if (negate) v = negate_value(v);
        while (at(Tok::Plus) || at(Tok::Minus)) {
            const Token op = advance();
            ParsedValue rhs = parse_term();
            v = add_values(std::move(v), std::move(rhs), op);
        }
        return v;
    }

    ParsedValue parse_term() {
        ParsedValue v = parse_factor();
        while (at(Tok::Caret)) {
            const Token op = advance();
            ParsedValue rhs = parse_factor();
            const DifferentialForm* a = as_form(v);
            const DifferentialForm* b = as_form(rhs);
            if (a == nullptr || b == nullptr)
                throw ParseError("'^' needs two forms", op.pos);
            try {
                v = wedge(*a, *b);
            } catch (const Error& e) {
                throw ParseError(e.what(), op.pos);
            }
        }
        return v;
    }

    bool starts_primary() const {
        switch (peek().kind) {
            case Tok::Integer:
            case Tok::Ident:
            case Tok::Preset:
            case Tok::LParen:
            case Tok::LBracket:
                return true;
            default:
                return false;
        }
    }

    ParsedValue parse_factor() {
        ParsedValue v = parse_primary();
        for (;;) {
            if (at(Tok::Star)) {
                const Token op = advance();
                v = multiply(std::move(v), parse_primary(), op.pos);
            } else if (starts_primary()) {
                const std::size_t pos = peek().pos;
                v = multiply(std::move(v), parse_primary(), pos);
            } else {
                return v;
            }
        }
    }

    ParsedValue parse_primary() {
        const Token t = peek();
        switch (t.kind) {
            case Tok::Integer: return parse_rational();
            case Tok::Ident: return parse_ident();
            case Tok::Preset: return parse_preset();
            case Tok::LParen: {
                advance();
                ParsedValue v = parse_expr();
                expect(Tok::RParen, "')'");
                return v;
            }
            case Tok::LBracket: return parse_field_literal();
            default: throw ParseError("expected an expression", t.pos);
        }
    }

    ParsedValue parse_rational() {
        const Token num = advance();
        std::string text = num.text;
        if (at(Tok::Slash)) {
            advance();
            const Token den = expect(Tok::Integer, "a denominator");
            text += "/" + den.text;
        }
        Rational r;
        try {
            r = Rational::from_string(text);
        } catch (const Error& e) {
            throw ParseError(e.what(), num.pos);
        }
        return DifferentialForm::from_polynomial(Polynomial::constant(dim_, r));
    }

    ParsedValue parse_ident() {
        const Token t = advance();
        if (t.text == "dx" && at(Tok::LBracket)) return parse_basis_form(t.pos);
        if (t.text == "d" && at(Tok::LParen)) {
            advance();
            ParsedValue v = parse_expr();
            expect(Tok::RParen, "')'");
            const DifferentialForm* f = as_form(v);
            if (f == nullptr) throw ParseError("'d' needs a form", t.pos);
            try {
                return exterior_derivative(*f);
            } catch (const Error& e) {
                throw ParseError(e.what(), t.pos);
            }
        }
        if ((t.text == "i_" || t.text == "L_") && at(Tok::LBracket)) return parse_field_op(t);
        if (t.text.size() >= 2 && t.text[0] == 'x') {
            int i = 0;
            bool digits = true;
            for (std::size_t k = 1; k < t.text.size(); ++k) {
                const char c = t.text[k];
                if (c < '0' || c > '9') {
                    digits = false;
                    break;
                }
                if (i <= kMaxAmbientDim) i = i * 10 + (c - '0');
            }
            if (digits) {
                if (i < 1 || i > dim_)
                    throw ParseError("coordinate " + t.text + " out of range on a " +
                                         std::to_string(dim_) + "-dimensional chart",
                                     t.pos);
                return DifferentialForm::from_polynomial(Polynomial::variable(dim_, i));
            }
        }
        throw ParseError("unknown identifier '" + t.text + "'", t.pos);
    }

    ParsedValue parse_basis_form(std::size_t pos) {
        expect(Tok::LBracket, "'['");
        std::vector<int> indices;
        if (!at(Tok::RBracket)) {
            for (;;) {
                const Token n = expect(Tok::Integer, "a basis index");
                int i = 0;
                for (char c : n.text) {
                    i = i * 10 + (c - '0');
                    if (i > kMaxAmbientDim) break;
                }
                if (i < 1 || i > dim_)
                    throw ParseError("basis index " + n.text + " out of range on a " +
                                         std::to_string(dim_) + "-dimensional chart",
                                     n.pos);
                indices.push_back(i);
                if (!at(Tok::Comma)) break;
                advance();
            }
        }
        expect(Tok::RBracket, "']'");
        try {
            DifferentialForm f(dim_, static_cast<int>(indices.size()));
            f.add_term(indices, Polynomial::constant(dim_, Rational(1)));
            return f;
        } catch (const Error& e) {
            throw ParseError(e.what(), pos);
        }
    }

    ParsedValue parse_preset() {
        const Token t = advance();
        std::optional<DifferentialForm> f = preset_form_by_name(t.text);
        if (!f) throw ParseError("unknown preset '" + t.text + "'", t.pos);
        if (f->ambient_dim() != dim_)
            throw ParseError("preset '" + t.text + "' lives on a " +
                                 std::to_string(f->ambient_dim()) +
                                 "-dimensional chart, not " + std::to_string(dim_),
                             t.pos);
        return std::move(*f);
    }

    VectorField parse_bracketed_field() {
        const Token open = expect(Tok::LBracket, "'['");
        std::vector<Polynomial> comps;
        for (;;) {
            const std::size_t pos = peek().pos;
            ParsedValue v = parse_expr();
            const DifferentialForm* s = as_scalar(v);
            if (s == nullptr)
                throw ParseError("field components must have degree 0", pos);
            comps.push_back(s->coefficient(std::vector<int>{}));
            if (!at(Tok::Comma)) break;
            advance();
        }
        expect(Tok::RBracket, "']'");
        if (static_cast<int>(comps.size()) != dim_)
            throw ParseError("field literal has " + std::to_string(comps.size()) +
                                 " components, chart dimension is " + std::to_string(dim_),
                             open.pos);
        return VectorField(std::move(comps));
    }

    ParsedValue parse_field_literal() { return parse_bracketed_field(); }

    ParsedValue parse_field_op(const Token& op) {
        const VectorField x = parse_bracketed_field();
        expect(Tok::LParen, "'('");
        ParsedValue v = parse_expr();
        expect(Tok::RParen, "')'");
        try {
            if (const DifferentialForm* f = as_form(v)) {
                return op.text == "i_" ? interior_product(x, *f) : lie_derivative(x, *f);
            }
            if (op.text == "i_")
                throw ParseError("'i_' needs a form argument", op.pos);
            return vector_bracket(x, std::get<VectorField>(v));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), op.pos);
        }
    }

    ParsedValue add_values(ParsedValue a, ParsedValue b, const Token& op) {
        const bool subtract = op.kind == Tok::Minus;
        const DifferentialForm* fa = as_form(a);
        const DifferentialForm* fb = as_form(b);
        if ((fa == nullptr) != (fb == nullptr))
            throw ParseError("cannot mix forms and fields in '+'", op.pos);
        try {
            if (fa != nullptr) {
                return subtract ? *fa - *fb : *fa + *fb;
            }
            const VectorField& xa = std::get<VectorField>(a);
            const VectorField& xb = std::get<VectorField>(b);
            return subtract ? xa + (-xb) : xa + xb;
        } catch (const Error& e) {
            throw ParseError(e.what(), op.pos);
        }
    }

    ParsedValue multiply(ParsedValue a, ParsedValue b, std::size_t pos) {
        const DifferentialForm* sa = as_scalar(a);
        const DifferentialForm* sb = as_scalar(b);
        if (sa == nullptr && sb == nullptr)
            throw ParseError("'*' needs a degree-0 operand", pos);
        const Polynomial p = (sa != nullptr ? *sa : *sb).coefficient(std::vector<int>{});
        const ParsedValue& other = (sa != nullptr) ? b : a;
        if (const DifferentialForm* f = as_form(other)) return p * *f;
        return scale_field(p, std::get<VectorField>(other));
    }
};

}  // namespace

ParsedValue parse_expression(const std::string& input, int ambient_dim) {
    return Parser(input, ambient_dim).run();
}

DifferentialForm parse_form(const std::string& input, int ambient_dim) {
    ParsedValue v = parse_expression(input, ambient_dim);
    if (const DifferentialForm* f = as_form(v)) return *f;
    throw ParseError("expression is a vector field, expected a form", 0);
}

VectorField parse_field(const std::string& input, int ambient_dim) {
    ParsedValue v = parse_expression(input, ambient_dim);
    if (const VectorField* x = std::get_if<VectorField>(&v)) return *x;
    throw ParseError("expression is a form, expected a vector field", 0);
}

std::string print_value(const ParsedValue& v) {
    if (const DifferentialForm* f = std::get_if<DifferentialForm>(&v)) return f->str();
    const VectorField& x = std::get<VectorField>(v);
    std::string s = "[";
    for (int i = 1; i <= x.ambient_dim(); ++i) {
        if (i > 1) s += ", ";
        s += x.component(i).str();
    }
    return s + "]";
}

}  // namespace g2calc
