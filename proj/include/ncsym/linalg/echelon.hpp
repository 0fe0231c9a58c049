#pragma once

/**
 * @file echelon.hpp
 * @brief Exact row reduction over Q: an incremental sparse echelon basis
 * (used for per-degree relation spaces) and a dense solver that reports
 * which unknowns a linear system pins down.
 */

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncsym/errors.hpp"
#include "ncsym/scalars/rational.hpp"

namespace ncsym::linalg {

/// (column, coefficient) pairs, strictly increasing in column, no zeros.
using sparse_vector = std::vector<std::pair<std::size_t, rational>>;

/// a - s*b
inline sparse_vector axpy(const sparse_vector& a, const rational& s, const sparse_vector& b) {
    sparse_vector out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, rational(-s * b[j].second));
            ++j;
        } else {
            rational c = a[i].second - s * b[j].second;
            if (!is_zero(c)) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

/**
 * Rows in echelon form with respect to the highest column: each stored row
 * has a distinct leading (largest) column with coefficient 1.
 */
class sparse_echelon {
public:
    /// Eliminates leading terms that have a pivot; stops at the first
    /// leading column without one.
    sparse_vector reduce_leading(sparse_vector v) const {
        while (!v.empty()) {
            auto it = pivots_.find(v.back().first);
            if (it == pivots_.end()) break;
            rational s = v.back().second;
            v = axpy(v, s, it->second);
        }
        return v;
    }

    /// Adds v to the span. Returns the new pivot column, if any.
    std::optional<std::size_t> insert(sparse_vector v) {
        v = reduce_leading(std::move(v));
        if (v.empty()) return std::nullopt;
        rational lead_inv = rational(1) / v.back().second;
        for (auto& [c, x] : v) x *= lead_inv;
        std::size_t col = v.back().first;
        pivots_.emplace(col, std::move(v));
        return col;
    }

    /// Reduces v until its leading column is below `bound`. Every column at
    /// or above the bound met on the way must be a pivot.
    sparse_vector reduce_above(sparse_vector v, std::size_t bound) const {
        while (!v.empty() && v.back().first >= bound) {
            auto it = pivots_.find(v.back().first);
            if (it == pivots_.end())
                throw inconsistency_error("no relation available to eliminate column " +
                                          std::to_string(v.back().first));
            rational s = v.back().second;
            v = axpy(v, s, it->second);
        }
        return v;
    }

    bool has_pivot(std::size_t col) const { return pivots_.count(col) != 0; }
    std::size_t rank() const { return pivots_.size(); }

    template <class Fn>
    void for_each_pivot(Fn&& fn) const {
        for (const auto& [col, row] : pivots_) fn(col, row);
    }

private:
    std::unordered_map<std::size_t, sparse_vector> pivots_;
};

/// Outcome of solving A u = b exactly.
struct system_solution {
    bool consistent = true;
    std::size_t rank = 0;
    /// value[k] is set when unknown k takes the same value in every solution.
    std::vector<std::optional<rational>> forced;
};

/**
 * Gauss-Jordan on the augmented matrix [A | b]. An unknown is forced when it
 * is a pivot variable whose reduced row has no entries in free columns.
 */
inline system_solution solve_system(std::vector<std::vector<rational>> a, std::vector<rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a.front().size() : 0;
    system_solution sol;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        rational inv = rational(1) / a[r][c];
        for (auto& x : a[r]) x *= inv;
        b[r] *= inv;
        for (std::size_t q = 0; q < rows; ++q) {
            if (q == r || is_zero(a[q][c])) continue;
            rational f = a[q][c];
            for (std::size_t k = c; k < cols; ++k) a[q][k] -= f * a[r][k];
            b[q] -= f * b[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    sol.rank = r;
    for (std::size_t q = r; q < rows; ++q)
        if (!is_zero(b[q])) sol.consistent = false;

    sol.forced.assign(cols, std::nullopt);
    if (!sol.consistent) return sol;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t q = 0; q < r; ++q) {
        bool touches_free = false;
        for (std::size_t k = 0; k < cols && !touches_free; ++k)
            if (!is_pivot[k] && !is_zero(a[q][k])) touches_free = true;
        if (!touches_free) sol.forced[pivot_cols[q]] = b[q];
    }
    return sol;
}

} // namespace ncsym::linalg
