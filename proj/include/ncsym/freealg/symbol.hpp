#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "ncsym/errors.hpp"

namespace ncsym {

/// Sorted, duplicate-free subset of the positive integers.
using index_set = std::vector<int>;

inline index_set make_index_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (!v.empty() && v.front() < 1) throw range_error("set elements must be positive");
    return v;
}

inline std::string set_to_string(const index_set& a) {
    std::string s;
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (n) s += ",";
        s += std::to_string(a[n]);
    }
    return s;
}

/// x_{A,i}
struct pseudo_root_gen {
    index_set set;
    int index = 0;
    auto operator<=>(const pseudo_root_gen&) const = default;
};

/// X(A), A nonempty
struct x_symbol {
    index_set set;
    auto operator<=>(const x_symbol&) const = default;
};

/// z_r, r >= 1
struct nsym_gen {
    int r = 0;
    auto operator<=>(const nsym_gen&) const = default;
};

/**
 * A generator of one of the free algebras in play. Symbols are totally
 * ordered (by kind, then by content) so words compare lexicographically.
 */
class generator_symbol {
public:
    using variant_type = std::variant<pseudo_root_gen, x_symbol, nsym_gen>;

    static generator_symbol x(index_set a, int i) {
        a = make_index_set(std::move(a));
        if (i < 1) throw range_error("generator index must be positive");
        if (std::binary_search(a.begin(), a.end(), i)) throw range_error("x_{A,i} requires i not in A");
        return generator_symbol(pseudo_root_gen{std::move(a), i});
    }
    static generator_symbol X(index_set a) {
        a = make_index_set(std::move(a));
        if (a.empty()) throw range_error("X(A) requires nonempty A");
        return generator_symbol(x_symbol{std::move(a)});
    }
    static generator_symbol z(int r) {
        if (r < 1) throw range_error("z_r requires r >= 1");
        return generator_symbol(nsym_gen{r});
    }

    const variant_type& value() const { return value_; }

    bool is_pseudo_root() const { return std::holds_alternative<pseudo_root_gen>(value_); }
    bool is_x() const { return std::holds_alternative<x_symbol>(value_); }
    bool is_z() const { return std::holds_alternative<nsym_gen>(value_); }

    const pseudo_root_gen& as_pseudo_root() const { return std::get<pseudo_root_gen>(value_); }
    const x_symbol& as_x() const { return std::get<x_symbol>(value_); }
    const nsym_gen& as_z() const { return std::get<nsym_gen>(value_); }

    friend bool operator==(const generator_symbol&, const generator_symbol&) = default;
    friend bool operator<(const generator_symbol& a, const generator_symbol& b) { return a.value_ < b.value_; }

private:
    explicit generator_symbol(variant_type v) : value_(std::move(v)) {}
    variant_type value_;
};

/// x_{A,i} and X(A) have degree 1; z_r has degree r.
inline int degree(const generator_symbol& s) {
    return s.is_z() ? s.as_z().r : 1;
}

/// Expression-syntax rendering: `x{1,2;3}`, `X{1,2}`, `z3`.
inline std::string to_string(const generator_symbol& s) {
    if (s.is_pseudo_root()) {
        const auto& g = s.as_pseudo_root();
        return "x{" + set_to_string(g.set) + ";" + std::to_string(g.index) + "}";
    }
    if (s.is_x()) return "X{" + set_to_string(s.as_x().set) + "}";
    return "z" + std::to_string(s.as_z().r);
}

} // namespace ncsym
