#pragma once

/**
 * @file parser.hpp
 * @brief Recursive-descent parser for command-line expressions.
 *
 *   tensor  := sum ("(x)" sum)*
 *   sum     := term (("+" | "-") term)*
 *   term    := unary (("*")? unary)*     juxtaposition multiplies: 3i, (i+j)t
 *   unary   := "-" unary | power
 *   power   := primary ("^" INT)?
 *   primary := NUMBER | "i" | "j" | "k" | "t" | "x{" LIST ";" INT "}"
 *            | "X{" LIST "}" | "y" INT | "z" INT | "(" tensor ")"
 *
 * NUMBER is INT or INT "/" INT and is always nonnegative; "(x)" is a single
 * token and binds loosest. Whitespace between tokens is ignored.
 */

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ncsym/cli/ast.hpp"
#include "ncsym/errors.hpp"

namespace ncsym::cli {

namespace detail {

enum class tok { number, unit, var_t, gen, plus, minus, star, caret, lparen, rparen, tensor, end, bad };

struct token {
    tok kind = tok::end;
    std::size_t begin = 0, end = 0;
};

class parser {
public:
    explicit parser(std::string_view text) : s_(text) {}

    node_ptr parse() {
        node_ptr e = tensor_expr();
        const token t = peek();
        if (t.kind != tok::end)
            throw parse_error("unexpected input", t.begin, {"+", "-", "*", "^", "(x)", "end of input"});
        return e;
    }

private:
    static bool starts_primary(tok k) {
        return k == tok::number || k == tok::unit || k == tok::var_t || k == tok::gen || k == tok::lparen;
    }

    static std::vector<std::string> primary_set() {
        return {"number", "i", "j", "k", "t", "x{", "X{", "y", "z", "(", "-"};
    }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    token peek() {
        skip_space();
        token t{tok::end, pos_, pos_};
        if (pos_ >= s_.size()) return t;
        const char c = s_[pos_];
        t.end = pos_ + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = tok::number;
            std::size_t p = pos_;
            while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
            if (p < s_.size() && s_[p] == '/') {
                ++p;
                while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
            }
            t.end = p;
            return t;
        }
        switch (c) {
        case 'i': case 'j': case 'k': t.kind = tok::unit; return t;
        case 't': t.kind = tok::var_t; return t;
        case 'x': case 'X': case 'y': case 'z': t.kind = tok::gen; return t;
        case '+': t.kind = tok::plus; return t;
        case '-': t.kind = tok::minus; return t;
        case '*': t.kind = tok::star; return t;
        case '^': t.kind = tok::caret; return t;
        case ')': t.kind = tok::rparen; return t;
        case '(':
            if (s_.substr(pos_, 3) == "(x)") {
                t.kind = tok::tensor;
                t.end = pos_ + 3;
            } else {
                t.kind = tok::lparen;
            }
            return t;
        default: t.kind = tok::bad; return t;
        }
    }

    void advance(const token& t) { pos_ = t.end; }

    node_ptr tensor_expr() {
        node_ptr e = sum();
        for (token t = peek(); t.kind == tok::tensor; t = peek()) {
            advance(t);
            e = make_binary(node_kind::tensor, e, sum());
        }
        return e;
    }

    node_ptr sum() {
        node_ptr e = term();
        for (token t = peek(); t.kind == tok::plus || t.kind == tok::minus; t = peek()) {
            advance(t);
            e = make_binary(t.kind == tok::plus ? node_kind::add : node_kind::sub, e, term());
        }
        return e;
    }

    node_ptr term() {
        node_ptr e = unary();
        for (token t = peek();; t = peek()) {
            if (t.kind == tok::star) {
                advance(t);
            } else if (!starts_primary(t.kind)) {
                break;
            }
            e = make_binary(node_kind::mul, e, unary());
        }
        return e;
    }

    node_ptr unary() {
        const token t = peek();
        if (t.kind == tok::minus) {
            advance(t);
            return make_neg(unary());
        }
        return power();
    }

    node_ptr power() {
        node_ptr base = primary();
        const token t = peek();
        if (t.kind != tok::caret) return base;
        advance(t);
        skip_space();
        return make_pow(base, read_int("exponent"));
    }

    int read_int(const char* what) {
        const std::size_t start = pos_;
        std::size_t p = pos_;
        while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
        if (p == start) throw parse_error(std::string("missing ") + what, start, {"integer"});
        if (p - start > 6) throw parse_error(std::string(what) + " too large", start);
        pos_ = p;
        return std::stoi(std::string(s_.substr(start, p - start)));
    }

    void expect_char(char c) {
        skip_space();
        if (pos_ >= s_.size() || s_[pos_] != c) throw parse_error("malformed generator", pos_, {std::string(1, c)});
        ++pos_;
    }

    // Comma-separated positive integers up to (not including) `stop`; may be empty.
    index_set read_list(char stop) {
        index_set a;
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == stop) return a;
        for (;;) {
            skip_space();
            const std::size_t at = pos_;
            const int v = read_int("index");
            if (v <= 0) throw parse_error("indices must be positive", at);
            a.push_back(v);
            skip_space();
            if (pos_ < s_.size() && s_[pos_] == ',') {
                ++pos_;
                continue;
            }
            return a;
        }
    }

    node_ptr generator(const token& t) {
        const char c = s_[t.begin];
        pos_ = t.end;
        if (c == 'y' || c == 'z') {
            const std::size_t at = pos_;
            const int r = read_int("generator index");
            if (r <= 0) throw parse_error("generator index must be positive", at);
            return c == 'y' ? make_gen_y(r) : make_gen_z(r);
        }
        expect_char('{');
        const std::size_t at = pos_;
        index_set a = read_list(c == 'x' ? ';' : '}');
        try {
            a = make_index_set(std::move(a));
        } catch (const std::exception& e) {
            throw parse_error(e.what(), at);
        }
        if (c == 'X') {
            expect_char('}');
            if (a.empty()) throw parse_error("X{A} needs a nonempty A", at);
            return make_gen_X(std::move(a));
        }
        expect_char(';');
        skip_space();
        const std::size_t iat = pos_;
        const int i = read_int("generator index");
        if (i <= 0) throw parse_error("generator index must be positive", iat);
        for (int v : a)
            if (v == i) throw parse_error("x{A;i} needs i outside A", iat);
        expect_char('}');
        return make_gen_x(std::move(a), i);
    }

    node_ptr primary() {
        const token t = peek();
        switch (t.kind) {
        case tok::number: {
            const std::string text(s_.substr(t.begin, t.end - t.begin));
            if (text.back() == '/') throw parse_error("missing denominator", t.end, {"integer"});
            const auto slash = text.find('/');
            if (slash != std::string::npos && text.find_first_not_of('0', slash + 1) == std::string::npos)
                throw parse_error("zero denominator", t.begin + slash + 1);
            advance(t);
            rational v(text);
            v.canonicalize();
            return make_number(std::move(v));
        }
        case tok::unit: advance(t); return make_unit(s_[t.begin]);
        case tok::var_t: advance(t); return make_t();
        case tok::gen: return generator(t);
        case tok::lparen: {
            advance(t);
            node_ptr e = tensor_expr();
            const token close = peek();
            if (close.kind != tok::rparen)
                throw parse_error("unbalanced parenthesis", close.begin, {")", "+", "-", "*", "(x)"});
            advance(close);
            return e;
        }
        case tok::end: throw parse_error("unexpected end of input", t.begin, primary_set());
        default: throw parse_error("unexpected character", t.begin, primary_set());
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline node_ptr parse_expression(std::string_view text) { return detail::parser(text).parse(); }

} // namespace ncsym::cli
