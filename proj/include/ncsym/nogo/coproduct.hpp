#pragma once

/**
 * @file coproduct.hpp
 * @brief The low-bidegree part of a hypothetical coproduct on Q_n.
 *
 * Delta~(y_r) is written as an unknown combination
 *   sum C_{B,B'} X(B) (x) X(B')
 * over pairs of admissible strings with wt B + wt B' <= 2. The counit
 * identities (eps~ (x) id) Delta~(y_r) = y_r = (id (x) eps~) Delta~(y_r)
 * become linear equations in the C's, solved exactly. Every coefficient with
 * a degree-0 leg comes out forced; the (1,1) coefficients stay free.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "ncsym/linalg/echelon.hpp"
#include "ncsym/nogo/counit.hpp"
#include "ncsym/qn/tensor.hpp"

namespace ncsym::nogo {

inline constexpr int ansatz_degree = 2;

struct coproduct_slices {
    int r = 0;
    /// Forced slices keyed by bidegree: (0,0), (1,0), (0,1), (2,0), (0,2).
    std::map<std::array<int, 2>, tensor_element> forced;
    /// Number of (1,1) coefficients left free by the counit identities.
    std::size_t free_unknowns = 0;
    /// Bidegrees of any free coefficient found (should only be (1,1)).
    std::vector<std::array<int, 2>> free_bidegrees;

    tensor_element slice(int i, int j) const {
        auto it = forced.find({i, j});
        return it == forced.end() ? tensor_element{} : it->second;
    }

    /// Sum of the forced slices: y_r (x) 1 + 1 (x) y_r when everything works.
    tensor_element forced_part() const {
        tensor_element t;
        for (const auto& [bd, s] : forced) t += s;
        return t;
    }
};

struct low_bidegree_coproduct {
    int n = 0;
    std::vector<coproduct_slices> generators;  ///< index r-1 for y_r
};

inline word word_of(const qn::admissible_string& s) {
    word w;
    for (const auto& set : s.sets()) w.push_back(generator_symbol::X(set));
    return w;
}

inline coproduct_slices solve_low_coproduct(int n, int r, const counit_assignment& eps, const qn::limits& lim = {}) {
    std::vector<qn::admissible_string> basis;
    for (int d = 0; d <= ansatz_degree; ++d) {
        qn::check_limits(n, d, lim);
        for (auto& s : qn::enumerate_basis(n, d)) basis.push_back(std::move(s));
    }
    std::map<qn::admissible_string, std::size_t> index;
    for (std::size_t b = 0; b < basis.size(); ++b) index.emplace(basis[b], b);

    struct unknown {
        std::size_t left, right;
    };
    std::vector<unknown> unknowns;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (basis[a].weight() + basis[b].weight() <= ansatz_degree) unknowns.push_back({a, b});

    std::vector<rational> eps_of(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) eps_of[b] = eps.of(free_element::monomial(word_of(basis[b])));

    const qn::normal_form y = qn::reduce(qn::chain_generator(r, n), n, lim);

    // Rows 0..|basis|-1: (eps~ (x) id); rows |basis|..: (id (x) eps~).
    const std::size_t rows = 2 * basis.size();
    std::vector<std::vector<rational>> a(rows, std::vector<rational>(unknowns.size()));
    std::vector<rational> rhs(rows);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        a[unknowns[u].right][u] += eps_of[unknowns[u].left];
        a[basis.size() + unknowns[u].left][u] += eps_of[unknowns[u].right];
    }
    for (std::size_t b = 0; b < basis.size(); ++b) {
        rhs[b] = y.coeff(basis[b]);
        rhs[basis.size() + b] = y.coeff(basis[b]);
    }

    const auto sol = linalg::solve_system(std::move(a), std::move(rhs));
    if (!sol.consistent) throw math_error("counit identities for y" + std::to_string(r) + " are inconsistent");

    coproduct_slices out;
    out.r = r;
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const auto& L = basis[unknowns[u].left];
        const auto& R = basis[unknowns[u].right];
        const std::array<int, 2> bd{L.weight(), R.weight()};
        if (!sol.forced[u]) {
            ++out.free_unknowns;
            if (std::find(out.free_bidegrees.begin(), out.free_bidegrees.end(), bd) == out.free_bidegrees.end())
                out.free_bidegrees.push_back(bd);
            continue;
        }
        auto& slice = out.forced[bd];
        slice.add_term({word_of(L), word_of(R)}, *sol.forced[u]);
    }
    return out;
}

/**
 * Solves the counit identities for every y_r and checks that the slices
 * with a degree-0 leg are forced to 0, y_r (x) 1, 1 (x) y_r, 0, 0 and that
 * only (1,1) coefficients are free. Throws math_error ("not forced")
 * otherwise.
 */
inline low_bidegree_coproduct forced_coproduct_low(int n, const counit_assignment& eps, const qn::limits& lim = {}) {
    low_bidegree_coproduct out;
    out.n = n;
    for (int r = 1; r <= n; ++r) {
        auto slices = solve_low_coproduct(n, r, eps, lim);
        const free_element y = qn::reduce(qn::chain_generator(r, n), n, lim).to_element();
        const tensor_element expect10 = tensor_element::product(y, free_element::one());
        const tensor_element expect01 = tensor_element::product(free_element::one(), y);
        for (const auto& bd : slices.free_bidegrees)
            if (bd != std::array<int, 2>{1, 1}) throw math_error("not forced: free coefficient outside bidegree (1,1)");
        const bool ok = slices.slice(0, 0).is_zero() && slices.slice(1, 0) == expect10 && slices.slice(0, 1) == expect01 &&
                        slices.slice(2, 0).is_zero() && slices.slice(0, 2).is_zero();
        if (!ok) throw math_error("not forced: low-bidegree slices of Delta(y" + std::to_string(r) + ") differ from the expected values");
        out.generators.push_back(std::move(slices));
    }
    return out;
}

} // namespace ncsym::nogo
