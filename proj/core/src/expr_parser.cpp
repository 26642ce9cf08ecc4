#include "qbundle/expr_parser.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace qbundle {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            out.push_back({Tok::number, std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            out.push_back({Tok::ident, std::string(text.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '/': kind = Tok::slash; break;
            case '^': kind = Tok::caret; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::end, "", text.size()});
    return out;
}

class Parser {
public:
    Parser(const std::vector<Generator>& gens, std::string_view text)
        : gens_(gens), tokens_(lex(text)) {}

    TermList parse_all() {
        TermList v = parse_expr();
        expect_end();
        return canon(std::move(v));
    }

    std::vector<TensorTerm2> parse_tensor_all() {
        std::vector<TensorTerm2> acc;
        bool negate = false;
        append_tensor(acc, parse_tensor_term(), negate);
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            negate = advance().kind == Tok::minus;
            append_tensor(acc, parse_tensor_term(), negate);
        }
        expect_end();
        return canon_tensor(std::move(acc));
    }

private:
    const Token& peek(size_t k = 0) const {
        size_t i = idx_ + k;
        return tokens_[i < tokens_.size() ? i : tokens_.size() - 1];
    }
    const Token& advance() { return tokens_[idx_++]; }
    bool match(Tok k) {
        if (peek().kind != k)
            return false;
        ++idx_;
        return true;
    }
    void expect_end() const {
        if (peek().kind != Tok::end)
            throw ParseError("unexpected trailing input '" + peek().text + "'", peek().pos);
    }

    TermList parse_expr() {
        TermList acc = parse_term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            bool neg = advance().kind == Tok::minus;
            TermList rhs = parse_term();
            for (auto& [w, c] : rhs)
                acc.emplace_back(std::move(w), neg ? -c : c);
        }
        return acc;
    }

    TermList parse_term() {
        TermList acc = parse_factor();
        while (match(Tok::star))
            acc = mul(acc, parse_factor());
        return acc;
    }

    TermList parse_factor() {
        bool neg = false;
        while (match(Tok::minus))
            neg = !neg;
        TermList v = parse_atom();
        while (peek().kind == Tok::caret) {
            if (peek(1).kind == Tok::star) {
                idx_ += 2;
                v = star_terms(v);
            } else {
                ++idx_;
                v = power(v, parse_exponent());
            }
        }
        if (neg)
            for (auto& [w, c] : v)
                c = -c;
        return v;
    }

    TermList parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: {
                advance();
                Rational value(BigInt(t.text));
                if (match(Tok::slash)) {
                    if (peek().kind != Tok::number)
                        throw ParseError("expected a denominator", peek().pos);
                    const Token& d = advance();
                    BigInt den(d.text);
                    if (den == 0)
                        throw ParseError("zero denominator", d.pos);
                    value /= den;
                }
                return {{Word{}, QLaurent(value)}};
            }
            case Tok::ident: {
                if (t.text == "q") {
                    advance();
                    return {{Word{}, QLaurent::q(1)}};
                }
                if (t.text == "star" && peek(1).kind == Tok::lparen) {
                    idx_ += 2;
                    TermList inner = parse_expr();
                    if (!match(Tok::rparen))
                        throw ParseError("expected ')'", peek().pos);
                    return star_terms(inner);
                }
                for (GenId g = 0; g < static_cast<GenId>(gens_.size()); ++g) {
                    if (gens_[g].name == t.text) {
                        advance();
                        return {{Word{GenId(g)}, QLaurent(1)}};
                    }
                }
                throw ParseError("unknown symbol '" + t.text + "'", t.pos);
            }
            case Tok::lparen: {
                advance();
                TermList inner = parse_expr();
                if (!match(Tok::rparen))
                    throw ParseError("expected ')'", peek().pos);
                return inner;
            }
            default:
                throw ParseError("expected a value, found '" + t.text + "'", t.pos);
        }
    }

    long parse_exponent() {
        bool neg = match(Tok::minus);
        if (peek().kind != Tok::number)
            throw ParseError("expected an integer exponent", peek().pos);
        const Token& t = advance();
        long e;
        try {
            e = std::stol(t.text);
        } catch (const std::out_of_range&) {
            throw ParseError("exponent out of range", t.pos);
        }
        if (e > 4096)
            throw ParseError("exponent out of range", t.pos);
        return neg ? -e : e;
    }

    struct TensorTerms {
        TermList left;
        TermList right;
    };

    TensorTerms parse_tensor_term() {
        TensorTerms out;
        out.left = parse_term();
        if (peek().kind == Tok::lparen && peek(1).kind == Tok::ident && peek(1).text == "x" &&
            peek(2).kind == Tok::rparen) {
            idx_ += 3;
            out.right = parse_term();
        } else {
            out.right = {{Word{}, QLaurent(1)}};
        }
        return out;
    }

    static void append_tensor(std::vector<TensorTerm2>& acc, const TensorTerms& t, bool negate) {
        for (const auto& [wl, cl] : t.left)
            for (const auto& [wr, cr] : t.right) {
                QLaurent c = cl * cr;
                acc.push_back({wl, wr, negate ? -c : c});
            }
    }

    Word star_word(const Word& w) const {
        Word out;
        out.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            GenId partner = gens_[*it].star;
            if (partner < 0)
                throw ParseError("generator '" + gens_[*it].name + "' has no adjoint", 0);
            out.push_back(partner);
        }
        return out;
    }

    TermList star_terms(const TermList& v) const {
        TermList out;
        out.reserve(v.size());
        for (const auto& [w, c] : v)
            out.emplace_back(star_word(w), c.conjugated());
        return out;
    }

    static TermList mul(const TermList& a, const TermList& b) {
        TermList out;
        out.reserve(a.size() * b.size());
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b)
                out.emplace_back(concat(wa, wb), ca * cb);
        return out;
    }

    TermList power(TermList base, long e) const {
        if (e < 0) {
            bool scalar = base.size() == 1 && base[0].first.empty();
            if (scalar) {
                // Invertible scalars are the Laurent monomials.
                const auto& terms = base[0].second.terms();
                if (terms.size() != 1)
                    throw ParseError("cannot invert a scalar sum", 0);
                base[0].second = QLaurent::monomial(1 / terms.begin()->second,
                                                    -terms.begin()->first);
            } else {
                base = star_terms(base);
            }
            e = -e;
        }
        TermList out{{Word{}, QLaurent(1)}};
        for (long i = 0; i < e; ++i)
            out = mul(out, base);
        return out;
    }

    static TermList canon(TermList v) {
        std::map<Word, QLaurent, DegLexLess> merged;
        for (auto& [w, c] : v) {
            auto [it, fresh] = merged.try_emplace(std::move(w), c);
            if (!fresh)
                it->second += c;
        }
        TermList out;
        for (auto& [w, c] : merged)
            if (!c.is_zero())
                out.emplace_back(w, c);
        return out;
    }

    static std::vector<TensorTerm2> canon_tensor(std::vector<TensorTerm2> v) {
        std::map<std::pair<Word, Word>, QLaurent> merged;
        for (auto& t : v) {
            auto key = std::make_pair(std::move(t.left), std::move(t.right));
            auto [it, fresh] = merged.try_emplace(std::move(key), t.coeff);
            if (!fresh)
                it->second += t.coeff;
        }
        std::vector<TensorTerm2> out;
        for (auto& [k, c] : merged)
            if (!c.is_zero())
                out.push_back({k.first, k.second, c});
        return out;
    }

    const std::vector<Generator>& gens_;
    std::vector<Token> tokens_;
    size_t idx_ = 0;
};

}  // namespace

TermList parse_terms(const std::vector<Generator>& gens, std::string_view text) {
    return Parser(gens, text).parse_all();
}

std::vector<TensorTerm2> parse_tensor_terms(const std::vector<Generator>& gens,
                                            std::string_view text) {
    return Parser(gens, text).parse_tensor_all();
}

Element parse_element(const PresPtr& p, std::string_view text) {
    return Element::from_terms(p, parse_terms(p->generators(), text));
}

}  // namespace qbundle
