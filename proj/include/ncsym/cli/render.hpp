#pragma once

/**
 * @file render.hpp
 * @brief Prints an expression tree with the fewest parentheses that parse
 * back to the same tree.
 */

#include <string>

#include "ncsym/cli/ast.hpp"

namespace ncsym::cli {

inline int precedence(node_kind k) {
    switch (k) {
    case node_kind::tensor: return 0;
    case node_kind::add:
    case node_kind::sub: return 1;
    case node_kind::mul: return 2;
    case node_kind::neg: return 3;
    case node_kind::pow: return 4;
    default: return 5;
    }
}

std::string render(const node& e);

namespace detail {

inline std::string wrap(const node& e, int min_prec) {
    const std::string s = render(e);
    return precedence(e.kind) >= min_prec ? s : "(" + s + ")";
}

inline std::string binary(const node& e, const char* op) {
    const int p = precedence(e.kind);
    // Left-associative: the right operand needs strictly higher precedence.
    return wrap(*e.children[0], p) + op + wrap(*e.children[1], p + 1);
}

} // namespace detail

inline std::string render(const node& e) {
    switch (e.kind) {
    case node_kind::number: return e.value.get_str();
    case node_kind::unit: return std::string(1, e.unit);
    case node_kind::var_t: return "t";
    case node_kind::gen_x: return "x{" + set_to_string(e.set) + ";" + std::to_string(e.index) + "}";
    case node_kind::gen_X: return "X{" + set_to_string(e.set) + "}";
    case node_kind::gen_y: return "y" + std::to_string(e.index);
    case node_kind::gen_z: return "z" + std::to_string(e.index);
    case node_kind::neg: return "-" + detail::wrap(*e.children[0], precedence(node_kind::neg));
    case node_kind::pow: return detail::wrap(*e.children[0], 5) + "^" + std::to_string(e.index);
    case node_kind::add: return detail::binary(e, " + ");
    case node_kind::sub: return detail::binary(e, " - ");
    case node_kind::mul: return detail::binary(e, "*");
    case node_kind::tensor: return detail::binary(e, " (x) ");
    }
    return {};
}

inline std::string render(const node_ptr& e) { return render(*e); }

} // namespace ncsym::cli
