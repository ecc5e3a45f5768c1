#ifndef QFA_CLI_PARSER_HPP
#define QFA_CLI_PARSER_HPP

#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <qfa/monomial.hpp>
#include <qfa/scalar.hpp>

namespace qfa::cli
{

// Grammar (one precedence level for the three products, all left-associative):
//   expr   := sum
//   sum    := prod (('+' | '-') prod)*
//   prod   := atom (('v' | 'o' | 'ro') atom)*
//   atom   := scalar | generator | call | '(' expr ')' | scalar '*' atom | '-' atom
//   scalar := rational (('+' | '-') rational 'i')?      rational := int ('/' posint)?
//   generator := 'e' digits                              call := name '(' expr (',' expr)* ')'
// A '-' in atom position followed by a literal negates the literal's real part, so the printed
// form "-1/2+3/4i" reads back as the same number.

class parse_error : public std::runtime_error
{
public:
    parse_error(const std::string &message, std::size_t offset)
        : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + message), m_offset(offset)
    {
    }
    std::size_t offset() const
    {
        return m_offset;
    }

private:
    std::size_t m_offset;
};

struct expr;
using expr_ptr = std::shared_ptr<const expr>;

enum class expr_kind { scalar, generator, add, subtract, negate, scale, vee, circle, rcircle, call };

struct expr {
    expr_kind kind;
    std::size_t offset = 0;
    scalar value;                // scalar literal, or the factor of scale
    generator_index index = 0;   // generator
    std::string name;            // call
    std::vector<expr_ptr> args;  // operands / call arguments
};

struct function_signature {
    std::size_t arity;
    const char *label;
};

// Function names accepted by the parser with their arity and tree label.
inline const std::map<std::string, function_signature, std::less<>> &functions()
{
    static const std::map<std::string, function_signature, std::less<>> table{
        {"T", {1, "T"}},
        {"Tbar", {1, "Tbar"}},
        {"t", {1, "TScalar"}},
        {"tbar", {1, "TbarScalar"}},
        {"eps", {1, "Eps"}},
        {"antipode", {1, "Antipode"}},
        {"Sigma", {1, "Sigma"}},
        {"expSigma", {1, "ExpSigma"}},
        {"coproduct", {1, "Coproduct"}},
        {"phi", {1, "Phi"}},
        {"pair", {2, "Pair"}},
        {"Z", {2, "Z"}},
        {"mpair", {2, "MPair"}},
        {"delta", {2, "Derivation"}},
        {"dp", {2, "DividedPower"}},
        {"expv", {2, "ExpVee"}},
        {"S", {2, "SMatrix"}},
        {"green", {4, "Green"}},
    };
    return table;
}

namespace detail
{

enum class token_kind { number, word, plus, minus, star, lparen, rparen, comma, end };

struct token {
    token_kind kind;
    std::size_t offset;
    std::string text;  // word text
    scalar value;      // number literal
};

class lexer
{
public:
    explicit lexer(std::string_view text) : m_text(text) {}

    std::vector<token> run()
    {
        std::vector<token> out;
        for (;;) {
            skip_space();
            const std::size_t at = m_pos;
            if (m_pos == m_text.size()) {
                out.push_back({token_kind::end, at, {}, {}});
                return out;
            }
            const char c = m_text[m_pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back({token_kind::number, at, {}, literal()});
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t end = m_pos;
                while (end < m_text.size() && is_word_char(m_text[end])) {
                    ++end;
                }
                out.push_back({token_kind::word, at, std::string(m_text.substr(m_pos, end - m_pos)), {}});
                m_pos = end;
            } else {
                token_kind k;
                switch (c) {
                case '+': k = token_kind::plus; break;
                case '-': k = token_kind::minus; break;
                case '*': k = token_kind::star; break;
                case '(': k = token_kind::lparen; break;
                case ')': k = token_kind::rparen; break;
                case ',': k = token_kind::comma; break;
                default: throw parse_error(std::string("unexpected character '") + c + "'", at);
                }
                ++m_pos;
                out.push_back({k, at, {}, {}});
            }
        }
    }

private:
    static bool is_word_char(char c)
    {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    void skip_space()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }

    // int ('/' posint)? starting at pos; returns nullopt (pos unchanged) when absent.
    std::optional<rational> rational_at(std::size_t &pos) const
    {
        std::size_t p = pos;
        auto digits = [&](std::size_t &q) {
            const std::size_t start = q;
            while (q < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[q]))) {
                ++q;
            }
            return m_text.substr(start, q - start);
        };
        const auto num = digits(p);
        if (num.empty()) {
            return std::nullopt;
        }
        std::size_t q = p;
        while (q < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[q]))) {
            ++q;
        }
        rational value;
        if (q < m_text.size() && m_text[q] == '/') {
            ++q;
            while (q < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[q]))) {
                ++q;
            }
            const std::size_t den_at = q;
            const auto den = digits(q);
            if (den.empty()) {
                throw parse_error("expected a denominator after '/'", den_at);
            }
            if (den.find_first_not_of('0') == std::string_view::npos) {
                throw parse_error("zero denominator", den_at);
            }
            value = parse_rational(std::string(num) + "/" + std::string(den));
            p = q;
        } else {
            value = parse_rational(num);
        }
        pos = p;
        return value;
    }

    // A rational, optionally followed by ('+' | '-') rational 'i' when that whole tail is present.
    scalar literal()
    {
        const auto re = rational_at(m_pos);
        std::size_t p = m_pos;
        while (p < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[p]))) {
            ++p;
        }
        if (p < m_text.size() && (m_text[p] == '+' || m_text[p] == '-')) {
            const bool negative = m_text[p] == '-';
            ++p;
            while (p < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[p]))) {
                ++p;
            }
            std::size_t q = p;
            if (const auto im = rational_at(q)) {
                while (q < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[q]))) {
                    ++q;
                }
                if (q < m_text.size() && m_text[q] == 'i' && (q + 1 == m_text.size() || !is_word_char(m_text[q + 1]))) {
                    m_pos = q + 1;
                    return {*re, negative ? rational(-*im) : *im};
                }
            }
        }
        return scalar(*re);
    }

    std::string_view m_text;
    std::size_t m_pos = 0;
};

class parser
{
public:
    explicit parser(std::vector<token> tokens) : m_tokens(std::move(tokens)) {}

    expr_ptr parse()
    {
        auto e = sum();
        if (peek().kind != token_kind::end) {
            throw parse_error("unexpected input after expression", peek().offset);
        }
        return e;
    }

private:
    const token &peek() const
    {
        return m_tokens[m_pos];
    }
    const token &next()
    {
        return m_tokens[m_pos++];
    }
    void expect(token_kind k, const char *what)
    {
        if (peek().kind != k) {
            throw parse_error(std::string("expected ") + what, peek().offset);
        }
        ++m_pos;
    }

    static std::shared_ptr<expr> node(expr_kind k, std::size_t offset, std::vector<expr_ptr> args)
    {
        auto e = std::make_shared<expr>();
        e->kind = k;
        e->offset = offset;
        e->args = std::move(args);
        return e;
    }

    expr_ptr sum()
    {
        auto lhs = prod();
        while (peek().kind == token_kind::plus || peek().kind == token_kind::minus) {
            const auto &op = next();
            auto rhs = prod();
            lhs = node(op.kind == token_kind::plus ? expr_kind::add : expr_kind::subtract, op.offset, {lhs, rhs});
        }
        return lhs;
    }

    expr_ptr prod()
    {
        auto lhs = atom();
        for (;;) {
            const auto &t = peek();
            if (t.kind != token_kind::word) {
                return lhs;
            }
            expr_kind k;
            if (t.text == "v") {
                k = expr_kind::vee;
            } else if (t.text == "o") {
                k = expr_kind::circle;
            } else if (t.text == "ro") {
                k = expr_kind::rcircle;
            } else {
                throw parse_error("expected an operator (v, o, ro) before '" + t.text + "'", t.offset);
            }
            ++m_pos;
            auto rhs = atom();
            lhs = node(k, t.offset, {lhs, rhs});
        }
    }

    expr_ptr literal_atom(scalar value, std::size_t offset)
    {
        if (peek().kind == token_kind::star) {
            ++m_pos;
            auto e = node(expr_kind::scale, offset, {atom()});
            e->value = value;
            return e;
        }
        auto e = node(expr_kind::scalar, offset, {});
        e->value = value;
        return e;
    }

    expr_ptr atom()
    {
        const auto &t = peek();
        switch (t.kind) {
        case token_kind::number: {
            ++m_pos;
            return literal_atom(t.value, t.offset);
        }
        case token_kind::minus: {
            ++m_pos;
            if (peek().kind == token_kind::number) {
                const auto &lit = next();
                return literal_atom(scalar(-lit.value.real(), lit.value.imag()), t.offset);
            }
            return node(expr_kind::negate, t.offset, {atom()});
        }
        case token_kind::lparen: {
            ++m_pos;
            auto e = sum();
            expect(token_kind::rparen, "')'");
            return e;
        }
        case token_kind::word: {
            ++m_pos;
            if (is_generator(t.text)) {
                auto e = node(expr_kind::generator, t.offset, {});
                const auto digits = t.text.substr(1);
                if (digits.size() > 9) {
                    throw parse_error("generator index too large", t.offset);
                }
                const auto index = std::stoul(digits);
                if (index == 0) {
                    throw parse_error("generator indices start at 1", t.offset);
                }
                e->index = static_cast<generator_index>(index);
                return e;
            }
            return call(t);
        }
        case token_kind::end: throw parse_error("unexpected end of input", t.offset);
        default: throw parse_error("unexpected token", t.offset);
        }
    }

    static bool is_generator(const std::string &w)
    {
        if (w.size() < 2 || w[0] != 'e') {
            return false;
        }
        for (std::size_t k = 1; k < w.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(w[k]))) {
                return false;
            }
        }
        return true;
    }

    expr_ptr call(const token &name)
    {
        const auto &table = functions();
        auto it = table.find(name.text);
        if (it == table.end()) {
            throw parse_error("unknown function '" + name.text + "'", name.offset);
        }
        if (peek().kind != token_kind::lparen) {
            throw parse_error("expected '(' after " + name.text, peek().offset);
        }
        ++m_pos;
        std::vector<expr_ptr> args{sum()};
        while (peek().kind == token_kind::comma) {
            ++m_pos;
            args.push_back(sum());
        }
        expect(token_kind::rparen, "')' or ','");
        if (args.size() != it->second.arity) {
            throw parse_error(name.text + " takes " + std::to_string(it->second.arity) + " argument(s), got "
                                  + std::to_string(args.size()),
                              name.offset);
        }
        auto e = node(expr_kind::call, name.offset, std::move(args));
        e->name = name.text;
        return e;
    }

    std::vector<token> m_tokens;
    std::size_t m_pos = 0;
};

} // namespace detail

inline expr_ptr parse_expr(std::string_view text)
{
    return detail::parser(detail::lexer(text).run()).parse();
}

// Tree form, e.g. "Circle(Gen 1, Gen 2)" or "ScalarMul(1/2+3/4i, Gen 1)".
inline std::string to_tree(const expr &e)
{
    auto binary = [&](const char *label) {
        return std::string(label) + "(" + to_tree(*e.args[0]) + ", " + to_tree(*e.args[1]) + ")";
    };
    switch (e.kind) {
    case expr_kind::scalar: return "Scalar " + e.value.str();
    case expr_kind::generator: return "Gen " + std::to_string(e.index);
    case expr_kind::add: return binary("Add");
    case expr_kind::subtract: return binary("Sub");
    case expr_kind::negate: return "Neg(" + to_tree(*e.args[0]) + ")";
    case expr_kind::scale: return "ScalarMul(" + e.value.str() + ", " + to_tree(*e.args[0]) + ")";
    case expr_kind::vee: return binary("Vee");
    case expr_kind::circle: return binary("Circle");
    case expr_kind::rcircle: return binary("RCircle");
    case expr_kind::call: {
        std::string out = functions().at(e.name).label;
        out += '(';
        for (std::size_t k = 0; k < e.args.size(); ++k) {
            out += (k ? ", " : "") + to_tree(*e.args[k]);
        }
        return out + ")";
    }
    }
    return {};
}

} // namespace qfa::cli

#endif
