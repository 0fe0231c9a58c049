#pragma once

/**
 * @file tensor.hpp
 * @brief Q_n (x) Q_n: tensors whose legs are reduced to admissible words,
 * so equality of reduced tensors is equality in Q_n (x) Q_n.
 */

#include <map>

#include "ncsym/freealg/tensor.hpp"
#include "ncsym/qn/normal_form.hpp"

namespace ncsym::qn {

inline tensor_element normalize(const tensor_element& t, int n, const limits& lim = {}) {
    std::map<word, free_element> memo;
    auto nf = [&](const word& w) -> const free_element& {
        auto it = memo.find(w);
        if (it == memo.end()) it = memo.emplace(w, reduce(free_element::monomial(w), n, lim).to_element()).first;
        return it->second;
    };
    tensor_element out;
    for (const auto& [k, c] : t.terms()) {
        const free_element& left = nf(k[0]);
        const free_element& right = nf(k[1]);
        for (const auto& [u, cu] : left.terms())
            for (const auto& [v, cv] : right.terms()) out.add_term({u, v}, rational(c * cu * cv));
    }
    return out;
}

/// Coordinates over pairs of admissible strings.
inline std::map<std::pair<admissible_string, admissible_string>, rational> basis_coordinates(const tensor_element& t,
                                                                                             int n,
                                                                                             const limits& lim = {}) {
    std::map<std::pair<admissible_string, admissible_string>, rational> out;
    auto as_string = [n](const word& w) {
        std::vector<index_set> sets;
        for (const auto& s : w) sets.push_back(s.as_x().set);
        auto str = string_of_word(sets, n);
        if (!str) throw inconsistency_error("reduced tensor leg is not admissible");
        return *str;
    };
    const tensor_element normal = normalize(t, n, lim);
    for (const auto& [k, c] : normal.terms()) out.emplace(std::make_pair(as_string(k[0]), as_string(k[1])), c);
    return out;
}

} // namespace ncsym::qn
