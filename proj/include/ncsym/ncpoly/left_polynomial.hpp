#pragma once

/**
 * @file left_polynomial.hpp
 * @brief Monic polynomials in one central variable t over a division ring.
 *
 * Coefficients always sit to the left of the powers of t:
 *   f(t) = a_0 + a_1 t + ... + a_{n-1} t^{n-1} + t^n.
 * Evaluation substitutes x for t in that form. The variable t commutes with
 * the scalars, so products are collected by the usual Cauchy rule with the
 * left factor's coefficient written first.
 */

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ncsym/errors.hpp"
#include "ncsym/scalars/division_ring.hpp"

namespace ncsym {

template <division_ring R>
class left_polynomial {
public:
    /// The constant polynomial 1.
    left_polynomial() = default;

    /// From the non-leading coefficients a_0..a_{n-1}; the leading one is 1.
    explicit left_polynomial(std::vector<R> lower) : lower_(std::move(lower)) {}

    /// t - x
    static left_polynomial linear(const R& x) { return left_polynomial({R(-x)}); }

    /// From a full coefficient list a_0..a_n; throws unless a_n == 1.
    static left_polynomial from_coefficients(std::vector<R> all) {
        if (all.empty() || !(all.back() == R(1)))
            throw math_error("polynomial is not monic");
        all.pop_back();
        return left_polynomial(std::move(all));
    }

    std::size_t degree() const { return lower_.size(); }

    /// Coefficient of t^k, including the leading 1 and zero beyond it.
    R coeff(std::size_t k) const {
        if (k < lower_.size()) return lower_[k];
        return k == lower_.size() ? R(1) : R{};
    }

    std::span<const R> lower_coefficients() const { return lower_; }

    std::vector<R> coefficients() const {
        std::vector<R> all = lower_;
        all.push_back(R(1));
        return all;
    }

    friend bool operator==(const left_polynomial&, const left_polynomial&) = default;

private:
    std::vector<R> lower_;
};

template <division_ring R>
R power(const R& x, std::size_t e) {
    R result(1);
    for (std::size_t n = 0; n < e; ++n) result = R(result * x);
    return result;
}

/// f(x) = a_0 + a_1 x + ... + x^n.
template <division_ring R>
R eval_left(const left_polynomial<R>& f, const R& x) {
    R result(1);
    for (std::size_t k = f.degree(); k-- > 0;) result = R(result * x + f.coeff(k));
    return result;
}

/// Reads the same coefficients as a right polynomial a_0 + t a_1 + ... and
/// substitutes x there: a_0 + x a_1 + ... + x^n. Only for demonstrating
/// that evaluation depends on where t is written.
template <division_ring R>
R eval_right(const left_polynomial<R>& f, const R& x) {
    R result(1);
    for (std::size_t k = f.degree(); k-- > 0;) result = R(x * result + f.coeff(k));
    return result;
}

/// Expanded product g(t) h(t) collected into left form.
template <division_ring R>
left_polynomial<R> poly_mul(const left_polynomial<R>& g, const left_polynomial<R>& h) {
    const std::size_t n = g.degree() + h.degree();
    std::vector<R> c(n + 1);
    for (std::size_t a = 0; a <= g.degree(); ++a)
        for (std::size_t b = 0; b <= h.degree(); ++b)
            c[a + b] = R(c[a + b] + g.coeff(a) * h.coeff(b));
    return left_polynomial<R>::from_coefficients(std::move(c));
}

template <division_ring R>
struct division_result {
    left_polynomial<R> quotient;
    R remainder;
};

/**
 * Synthetic division on the right by (t - x):
 *   f = quotient * (t - x) + remainder,  remainder = f(x).
 * With b_{n-1} = 1, b_{k-1} = a_k + b_k x and remainder = a_0 + b_0 x.
 */
template <division_ring R>
division_result<R> right_divide(const left_polynomial<R>& f, const R& x) {
    const std::size_t n = f.degree();
    if (n == 0) throw math_error("cannot divide a constant polynomial by a linear factor");
    std::vector<R> b(n);
    b[n - 1] = R(1);
    for (std::size_t k = n - 1; k >= 1; --k) b[k - 1] = R(f.coeff(k) + b[k] * x);
    R remainder = R(f.coeff(0) + b[0] * x);
    b.pop_back();
    return {left_polynomial<R>(std::move(b)), std::move(remainder)};
}

/// Evaluates g*h at x without expanding: with a = h(x), the value is 0 when
/// a = 0 and g(a x a^{-1}) a otherwise.
template <division_ring R>
R eval_factored(const left_polynomial<R>& g, const left_polynomial<R>& h, const R& x) {
    R a = eval_left(h, x);
    if (is_zero(a)) return R{};
    R conjugated = R(a * x * inverse(a));
    return R(eval_left(g, conjugated) * a);
}

} // namespace ncsym
