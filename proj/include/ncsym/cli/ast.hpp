#pragma once

/**
 * @file ast.hpp
 * @brief Expression trees produced by the command-line parser.
 */

#include <memory>
#include <vector>

#include "ncsym/freealg/symbol.hpp"
#include "ncsym/scalars/rational.hpp"

namespace ncsym::cli {

enum class node_kind { number, unit, var_t, gen_x, gen_X, gen_y, gen_z, neg, add, sub, mul, pow, tensor };

struct node;
using node_ptr = std::shared_ptr<const node>;

struct node {
    node_kind kind;
    rational value;        ///< number
    char unit = 0;         ///< 'i', 'j' or 'k'
    index_set set;         ///< x{A;i}, X{A}
    int index = 0;         ///< i of x{A;i}, r of y/z, exponent of ^
    std::vector<node_ptr> children;
};

inline node_ptr make_number(rational v) { return std::make_shared<node>(node{node_kind::number, std::move(v), 0, {}, 0, {}}); }
inline node_ptr make_unit(char u) { return std::make_shared<node>(node{node_kind::unit, {}, u, {}, 0, {}}); }
inline node_ptr make_t() { return std::make_shared<node>(node{node_kind::var_t, {}, 0, {}, 0, {}}); }
inline node_ptr make_gen_x(index_set a, int i) {
    return std::make_shared<node>(node{node_kind::gen_x, {}, 0, std::move(a), i, {}});
}
inline node_ptr make_gen_X(index_set a) { return std::make_shared<node>(node{node_kind::gen_X, {}, 0, std::move(a), 0, {}}); }
inline node_ptr make_gen_y(int r) { return std::make_shared<node>(node{node_kind::gen_y, {}, 0, {}, r, {}}); }
inline node_ptr make_gen_z(int r) { return std::make_shared<node>(node{node_kind::gen_z, {}, 0, {}, r, {}}); }
inline node_ptr make_neg(node_ptr a) { return std::make_shared<node>(node{node_kind::neg, {}, 0, {}, 0, {std::move(a)}}); }
inline node_ptr make_pow(node_ptr a, int e) { return std::make_shared<node>(node{node_kind::pow, {}, 0, {}, e, {std::move(a)}}); }
inline node_ptr make_binary(node_kind k, node_ptr a, node_ptr b) {
    return std::make_shared<node>(node{k, {}, 0, {}, 0, {std::move(a), std::move(b)}});
}

inline bool equal(const node& a, const node& b) {
    if (a.kind != b.kind || a.value != b.value || a.unit != b.unit || a.set != b.set || a.index != b.index ||
        a.children.size() != b.children.size())
        return false;
    for (std::size_t n = 0; n < a.children.size(); ++n)
        if (!equal(*a.children[n], *b.children[n])) return false;
    return true;
}

inline bool equal(const node_ptr& a, const node_ptr& b) { return equal(*a, *b); }

/// True if the tree contains a node of kind k.
inline bool contains(const node& a, node_kind k) {
    if (a.kind == k) return true;
    for (const auto& c : a.children)
        if (contains(*c, k)) return true;
    return false;
}

} // namespace ncsym::cli
