#pragma once

/**
 * @file phi.hpp
 * @brief The algebra map Phi_n : NSym(n) -> Q_n, z_r -> e_r.
 */

#include <cstddef>
#include <map>
#include <vector>

#include "ncsym/linalg/echelon.hpp"
#include "ncsym/nsym/nsym.hpp"
#include "ncsym/qn/elementary.hpp"
#include "ncsym/qn/tensor.hpp"

namespace ncsym::nogo {

/// Phi_n(e) as an unreduced X-form element.
inline free_element phi_element(const nsym::element& e, int n) {
    nsym::restrict(e, n);
    const auto es = qn::elementary_elements(n);
    return substitute<free_element>(
        e, [&](const generator_symbol& s) { return es[nsym::z_index(s) - 1]; }, free_element::one());
}

inline qn::normal_form phi(const nsym::element& e, int n, const qn::limits& lim = {}) {
    return qn::reduce(phi_element(e, n), n, lim);
}

/// (Phi (x) Phi) on a tensor of NSym words, legs left unreduced.
inline tensor_element phi_tensor(const nsym::tensor& t, int n) {
    tensor_element out;
    for (const auto& [k, c] : t.terms())
        out += c * tensor_element::product(phi_element(free_element::monomial(k[0]), n),
                                           phi_element(free_element::monomial(k[1]), n));
    return out;
}

struct rank_report {
    int n = 0;
    int max_weight = 0;
    std::size_t images = 0;  ///< compositions of weight <= max_weight with parts <= n
    std::size_t rank = 0;
    bool independent() const { return rank == images; }
};

/// Rank of {Phi(z_gamma) : |gamma| <= d} in Q_n, including the unit.
inline rank_report phi_independence_check(int n, int d, const qn::limits& lim = {}) {
    rank_report rep{n, d};
    std::map<qn::admissible_string, std::size_t> column;
    linalg::sparse_echelon ech;
    for (int w = 0; w <= d; ++w)
        for (const auto& g : nsym::compositions(w)) {
            bool fits = true;
            for (int p : g.parts) fits = fits && p <= n;
            if (!fits) continue;
            ++rep.images;
            std::map<std::size_t, rational> row;
            const qn::normal_form image = phi(nsym::z(g), n, lim);
            for (const auto& [s, c] : image.coords()) {
                auto it = column.try_emplace(s, column.size()).first;
                row[it->second] += c;
            }
            linalg::sparse_vector v(row.begin(), row.end());
            if (ech.insert(std::move(v))) ++rep.rank;
        }
    return rep;
}

} // namespace ncsym::nogo
