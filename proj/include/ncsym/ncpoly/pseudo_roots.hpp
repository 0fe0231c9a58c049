#pragma once

/**
 * @file pseudo_roots.hpp
 * @brief Vandermonde quasideterminants, independence of roots, the
 * pseudo-roots of a root system and the noncommutative elementary
 * symmetric elements built from them.
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "ncsym/ncpoly/left_polynomial.hpp"
#include "ncsym/ncpoly/ring_matrix.hpp"

namespace ncsym {

template <division_ring R>
struct root_system {
    std::vector<R> roots;

    std::size_t size() const { return roots.size(); }
    const R& operator[](std::size_t k) const { return roots[k]; }
};

/// Rows x^{r-1}, ..., x^1, 1 with one column per element.
template <division_ring R>
ring_matrix<R> vandermonde_matrix(std::span<const R> xs) {
    const std::size_t r = xs.size();
    ring_matrix<R> m(r, r);
    for (std::size_t c = 0; c < r; ++c) {
        R xp(1);
        for (std::size_t row = r; row-- > 0;) {
            m(row, c) = xp;
            xp = R(xp * xs[c]);
        }
    }
    return m;
}

/// V(x_1,...,x_r): the (1,r) quasideterminant of the Vandermonde matrix.
template <division_ring R>
R vandermonde_qd(std::span<const R> xs) {
    if (xs.empty()) throw std::invalid_argument("Vandermonde quasideterminant of no elements");
    return quasidet(vandermonde_matrix(xs), 0, xs.size() - 1);
}

template <division_ring R>
R vandermonde_qd(const std::vector<R>& xs) {
    return vandermonde_qd(std::span<const R>(xs));
}

namespace detail {

/// Calls fn(ordering) for every ordered selection of r distinct indices
/// from [0, n), each ordering given as a vector of indices. Stops early
/// when fn returns false.
template <class Fn>
bool for_each_arrangement(std::size_t n, std::size_t r, Fn&& fn) {
    std::vector<std::size_t> chosen;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self) -> bool {
        if (chosen.size() == r) return fn(std::as_const(chosen));
        for (std::size_t k = 0; k < n; ++k) {
            if (used[k]) continue;
            used[k] = true;
            chosen.push_back(k);
            bool go_on = self(self);
            chosen.pop_back();
            used[k] = false;
            if (!go_on) return false;
        }
        return true;
    };
    return rec(rec);
}

} // namespace detail

/// True iff V(x_{i_1},...,x_{i_r}) is defined for every ordered subset.
template <division_ring R>
bool is_independent(const root_system<R>& rs) {
    for (std::size_t r = 2; r <= rs.size(); ++r) {
        bool ok = detail::for_each_arrangement(rs.size(), r, [&](const std::vector<std::size_t>& idx) {
            std::vector<R> xs;
            for (auto k : idx) xs.push_back(rs[k]);
            try {
                vandermonde_qd(xs);
            } catch (const undefined_error&) {
                return false;
            }
            return true;
        });
        if (!ok) return false;
    }
    return true;
}

namespace detail {

template <division_ring R>
R conjugate_by_vandermonde(const std::vector<R>& xs) {
    if (xs.size() == 1) return xs.front();
    R v = vandermonde_qd(xs);
    return R(v * xs.back() * inverse(v));
}

} // namespace detail

/// y_r = V(x_1..x_r) x_r V(x_1..x_r)^{-1}, so that (t-y_n)...(t-y_1)
/// has every x_i as a root. Throws undefined_error on dependent roots.
template <division_ring R>
std::vector<R> pseudo_roots(const root_system<R>& rs) {
    std::vector<R> ys;
    std::vector<R> prefix;
    for (const R& x : rs.roots) {
        prefix.push_back(x);
        ys.push_back(detail::conjugate_by_vandermonde(prefix));
    }
    return ys;
}

/// y_{A,i}: the last pseudo-root of the ordering (a_1, ..., a_k, i) where
/// `enumeration` lists A in the chosen order. Indices are 0-based.
template <division_ring R>
R pseudo_root_of_set(std::span<const std::size_t> enumeration, std::size_t i, const root_system<R>& rs) {
    std::vector<R> xs;
    for (auto a : enumeration) {
        if (a >= rs.size()) throw range_error("root index out of range");
        if (a == i) throw range_error("index i must not belong to A");
        xs.push_back(rs[a]);
    }
    if (i >= rs.size()) throw range_error("root index out of range");
    xs.push_back(rs[i]);
    return detail::conjugate_by_vandermonde(xs);
}

/// (t - y_n) ... (t - y_1), expanded.
template <division_ring R>
left_polynomial<R> pseudo_root_product(std::span<const R> ys) {
    left_polynomial<R> f;
    for (const R& y : ys) f = poly_mul(left_polynomial<R>::linear(y), f);
    return f;
}

/// e_r = sum over i_r > ... > i_1 of y_{i_r} ... y_{i_1}, r = 1..n.
template <division_ring R>
std::vector<R> vieta(std::span<const R> ys) {
    const std::size_t n = ys.size();
    // e[r] accumulates over prefixes y_1..y_m; a new y_m can only go leftmost.
    std::vector<R> e(n + 1);
    e[0] = R(1);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t r = m + 1; r >= 1; --r) e[r] = R(e[r] + ys[m] * e[r - 1]);
    return {e.begin() + 1, e.end()};
}

template <division_ring R>
std::vector<R> vieta(const std::vector<R>& ys) {
    return vieta(std::span<const R>(ys));
}

} // namespace ncsym
