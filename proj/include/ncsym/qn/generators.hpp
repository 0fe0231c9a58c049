#pragma once

/**
 * @file generators.hpp
 * @brief Generators and defining relations of Q_n, and the elimination of
 * the pseudo-root generators x_{A,i} in favour of the symbols X(A).
 */

#include <algorithm>
#include <string>
#include <vector>

#include "ncsym/errors.hpp"
#include "ncsym/freealg/element.hpp"
#include "ncsym/qn/strings.hpp"

namespace ncsym::qn {

inline void check_in_range(const index_set& a, int n) {
    if (!a.empty() && (a.front() < 1 || a.back() > n))
        throw range_error("set {" + set_to_string(a) + "} is not inside [" + std::to_string(n) + "]");
}

/// X(A) as an element; X(empty) = 0.
inline free_element X(const index_set& a) {
    if (a.empty()) return {};
    return free_element::generator(generator_symbol::X(a));
}

inline free_element x_gen(const index_set& a, int i) {
    return free_element::generator(generator_symbol::x(a, i));
}

inline index_set with(index_set a, int i) {
    a.push_back(i);
    return make_index_set(std::move(a));
}

/// x_{A,i} = X(A u {i}) - X(A)
inline free_element gen_to_X(const index_set& a, int i, int n) {
    if (i < 1 || i > n) throw range_error("generator index " + std::to_string(i) + " outside [n]");
    check_in_range(a, n);
    if (std::binary_search(a.begin(), a.end(), i)) throw range_error("x_{A,i} requires i not in A");
    return X(with(a, i)) - X(a);
}

/// y_r = x_{[r-1], r} written in X symbols: X([r]) - X([r-1]).
inline free_element chain_generator(int r, int n) {
    if (r < 1 || r > n) throw range_error("chain generator index outside [n]");
    return gen_to_X(interval(r - 1), r, n);
}

/// Replaces every x_{A,i} by its X-image; X symbols pass through.
inline free_element substitute_gen_to_X(const free_element& e, int n) {
    return substitute<free_element>(
        e,
        [n](const generator_symbol& s) -> free_element {
            if (s.is_pseudo_root()) return gen_to_X(s.as_pseudo_root().set, s.as_pseudo_root().index, n);
            if (s.is_x()) {
                check_in_range(s.as_x().set, n);
                return free_element::generator(s);
            }
            throw range_error("z generators do not live in Q_n");
        },
        free_element::one());
}

/// One instance (A; i, j) of the defining relations, i < j, i, j not in A.
struct relation_instance {
    index_set set;
    int i = 0;
    int j = 0;
};

/// All instances over [n].
inline std::vector<relation_instance> relation_instances(int n) {
    std::vector<relation_instance> out;
    for (subset_mask m = 0; m < (subset_mask(1) << n); ++m) {
        index_set a = from_mask(m);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (!(m >> (i - 1) & 1) && !(m >> (j - 1) & 1)) out.push_back({a, i, j});
    }
    return out;
}

/// x_{A∪i,j} + x_{A,i} - x_{A∪j,i} - x_{A,j}
inline free_element sum_relation(const relation_instance& r) {
    return x_gen(with(r.set, r.i), r.j) + x_gen(r.set, r.i) - x_gen(with(r.set, r.j), r.i) - x_gen(r.set, r.j);
}

/// x_{A∪i,j} x_{A,i} - x_{A∪j,i} x_{A,j}
inline free_element product_relation(const relation_instance& r) {
    return x_gen(with(r.set, r.i), r.j) * x_gen(r.set, r.i) - x_gen(with(r.set, r.j), r.i) * x_gen(r.set, r.j);
}

/**
 * The quadratic relations of Q_n in X symbols. Also checks, for each
 * instance, that the sum relation maps to the literal zero, which is what
 * makes the elimination x_{A,i} -> X(A u i) - X(A) legitimate.
 */
inline std::vector<free_element> quadratic_relations(int n) {
    std::vector<free_element> out;
    for (const auto& r : relation_instances(n)) {
        if (!substitute_gen_to_X(sum_relation(r), n).is_zero())
            throw inconsistency_error("sum relation survives generator elimination");
        auto rel = substitute_gen_to_X(product_relation(r), n);
        if (!rel.is_zero()) out.push_back(std::move(rel));
    }
    return out;
}

} // namespace ncsym::qn
