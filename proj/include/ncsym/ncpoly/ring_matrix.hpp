#pragma once

/**
 * @file ring_matrix.hpp
 * @brief Dense matrices over a division ring and their quasideterminants.
 */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ncsym/errors.hpp"
#include "ncsym/scalars/division_ring.hpp"

namespace ncsym {

template <division_ring R>
class ring_matrix {
public:
    ring_matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    ring_matrix(std::size_t rows, std::size_t cols, std::vector<R> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
    }

    static ring_matrix identity(std::size_t n) {
        ring_matrix m(n, n);
        for (std::size_t r = 0; r < n; ++r) m(r, r) = R(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    R& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const R& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Deletes row p and column q.
    ring_matrix minor(std::size_t p, std::size_t q) const {
        ring_matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t r = 0, mr = 0; r < rows_; ++r) {
            if (r == p) continue;
            for (std::size_t c = 0, mc = 0; c < cols_; ++c) {
                if (c == q) continue;
                m(mr, mc++) = (*this)(r, c);
            }
            ++mr;
        }
        return m;
    }

    friend ring_matrix operator*(const ring_matrix& a, const ring_matrix& b) {
        ring_matrix m(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c) {
                R sum{};
                for (std::size_t k = 0; k < a.cols_; ++k) sum = R(sum + a(r, k) * b(k, c));
                m(r, c) = std::move(sum);
            }
        return m;
    }

    friend bool operator==(const ring_matrix&, const ring_matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> data_;
};

/**
 * Gauss-Jordan elimination with row pivoting. Every row operation multiplies
 * on the left, so the accumulated transform is a left inverse, which for a
 * square matrix over a division ring is two-sided. Returns nullopt when some
 * column has no nonzero pivot.
 */
template <division_ring R>
std::optional<ring_matrix<R>> try_inverse(ring_matrix<R> a) {
    if (!a.square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    ring_matrix<R> inv = ring_matrix<R>::identity(n);
    auto swap_rows = [n](ring_matrix<R>& m, std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < n; ++c) std::swap(m(r1, c), m(r2, c));
    };
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero(a(pivot, col))) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            swap_rows(a, pivot, col);
            swap_rows(inv, pivot, col);
        }
        R scale = inverse(a(col, col));
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) = R(scale * a(col, c));
            inv(col, c) = R(scale * inv(col, c));
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a(r, col))) continue;
            R factor = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) = R(a(r, c) - factor * a(col, c));
                inv(r, c) = R(inv(r, c) - factor * inv(col, c));
            }
        }
    }
    return inv;
}

template <division_ring R>
ring_matrix<R> inverse(const ring_matrix<R>& a) {
    auto inv = try_inverse(a);
    if (!inv) throw undefined_error("matrix is not invertible");
    return *std::move(inv);
}

/**
 * Quasideterminant |M|_{pq} = m_pq - r_p (M^{pq})^{-1} c_q, where r_p is row
 * p without column q and c_q is column q without row p. Indices are 0-based.
 *
 * For size >= 2 the quasideterminant is the inverse of the (q,p) entry of
 * M^{-1}; it is undefined when the minor M^{pq} is singular or when M itself
 * is singular (which is exactly a zero Schur complement). The 1x1 case is
 * the entry itself.
 */
template <division_ring R>
R quasidet(const ring_matrix<R>& m, std::size_t p, std::size_t q) {
    if (!m.square()) throw std::invalid_argument("quasideterminant of a non-square matrix");
    if (p >= m.rows() || q >= m.cols()) throw range_error("quasideterminant index out of range");
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);

    auto minor_inv = try_inverse(m.minor(p, q));
    if (!minor_inv) throw undefined_error("quasideterminant undefined: minor is singular");

    R result = m(p, q);
    for (std::size_t a = 0, ra = 0; a < n; ++a) {
        if (a == q) continue;
        for (std::size_t b = 0, cb = 0; b < n; ++b) {
            if (b == p) continue;
            // minor row index ra <-> column a of M; minor column cb <-> row b of M
            result = R(result - m(p, a) * (*minor_inv)(ra, cb) * m(b, q));
            ++cb;
        }
        ++ra;
    }
    if (is_zero(result)) throw undefined_error("quasideterminant undefined: matrix is singular");
    return result;
}

} // namespace ncsym
