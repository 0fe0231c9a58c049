#pragma once

/**
 * @file tensor.hpp
 * @brief Elements of N-fold tensor powers of a free algebra, kept as maps
 * from word tuples to coefficients. The product is componentwise with no
 * signs: (u (x) v)(u' (x) v') = uu' (x) vv'.
 */

#include <array>
#include <cstddef>
#include <map>
#include <utility>

#include "ncsym/freealg/element.hpp"

namespace ncsym {

template <class Symbol, std::size_t N = 2>
class basic_tensor {
public:
    using word_type = basic_word<Symbol>;
    using key_type = std::array<word_type, N>;
    using element_type = basic_element<Symbol>;
    using degree_type = std::array<int, N>;

    basic_tensor() = default;

    static basic_tensor one() {
        basic_tensor t;
        t.add_term(key_type{}, rational(1));
        return t;
    }

    static basic_tensor pure(key_type k, const rational& c = rational(1)) {
        basic_tensor t;
        t.add_term(std::move(k), c);
        return t;
    }

    /// a (x) b
    static basic_tensor product(const element_type& a, const element_type& b) requires(N == 2) {
        basic_tensor t;
        for (const auto& [u, cu] : a.terms())
            for (const auto& [v, cv] : b.terms()) t.add_term({u, v}, rational(cu * cv));
        return t;
    }

    const std::map<key_type, rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    rational coeff(const key_type& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? rational(0) : it->second;
    }

    void add_term(key_type k, const rational& c) {
        if (ncsym::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (ncsym::is_zero(it->second)) terms_.erase(it);
        }
    }

    static degree_type multidegree(const key_type& k) {
        degree_type d{};
        for (std::size_t n = 0; n < N; ++n) d[n] = word_degree(k[n]);
        return d;
    }

    /// The component of the given multidegree.
    basic_tensor project(const degree_type& d) const {
        basic_tensor out;
        for (const auto& [k, c] : terms_)
            if (multidegree(k) == d) out.terms_.emplace(k, c);
        return out;
    }

    basic_tensor project(int i, int j) const requires(N == 2) { return project(degree_type{i, j}); }

    /// Splits by multidegree; the pieces sum back to *this.
    std::map<degree_type, basic_tensor> graded_pieces() const {
        std::map<degree_type, basic_tensor> out;
        for (const auto& [k, c] : terms_) out[multidegree(k)].terms_.emplace(k, c);
        return out;
    }

    basic_tensor& operator+=(const basic_tensor& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    basic_tensor& operator-=(const basic_tensor& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, rational(-c));
        return *this;
    }
    basic_tensor& operator*=(const rational& s) {
        if (ncsym::is_zero(s)) terms_.clear();
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend basic_tensor operator+(basic_tensor a, const basic_tensor& b) { return a += b; }
    friend basic_tensor operator-(basic_tensor a, const basic_tensor& b) { return a -= b; }
    friend basic_tensor operator-(basic_tensor a) { return a *= rational(-1); }
    friend basic_tensor operator*(const rational& s, basic_tensor a) { return a *= s; }

    friend basic_tensor operator*(const basic_tensor& a, const basic_tensor& b) {
        basic_tensor out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                key_type k;
                for (std::size_t n = 0; n < N; ++n) {
                    k[n].reserve(ka[n].size() + kb[n].size());
                    k[n].insert(k[n].end(), ka[n].begin(), ka[n].end());
                    k[n].insert(k[n].end(), kb[n].begin(), kb[n].end());
                }
                out.add_term(std::move(k), rational(ca * cb));
            }
        return out;
    }

    friend bool operator==(const basic_tensor&, const basic_tensor&) = default;

private:
    std::map<key_type, rational> terms_;
};

using tensor_element = basic_tensor<generator_symbol, 2>;

inline tensor_element tensor_mul(const tensor_element& s, const tensor_element& t) { return s * t; }

inline tensor_element bidegree_project(const tensor_element& t, int i, int j) { return t.project(i, j); }

/**
 * Applies a linear map word -> basic_tensor<Symbol, M> to leg `Leg` of an
 * N-fold tensor, producing an (N + M - 1)-fold tensor with the image spliced
 * in at that position. Used for (Delta (x) id) and friends.
 */
template <std::size_t Leg, std::size_t M, class Symbol, std::size_t N, class Fn>
basic_tensor<Symbol, N + M - 1> apply_to_leg(const basic_tensor<Symbol, N>& t, Fn&& f) {
    static_assert(Leg < N);
    basic_tensor<Symbol, N + M - 1> out;
    for (const auto& [k, c] : t.terms()) {
        const basic_tensor<Symbol, M> image = f(k[Leg]);
        for (const auto& [ki, ci] : image.terms()) {
            typename basic_tensor<Symbol, N + M - 1>::key_type key;
            std::size_t pos = 0;
            for (std::size_t n = 0; n < N; ++n) {
                if (n == Leg)
                    for (std::size_t m = 0; m < M; ++m) key[pos++] = ki[m];
                else
                    key[pos++] = k[n];
            }
            out.add_term(std::move(key), rational(c * ci));
        }
    }
    return out;
}

} // namespace ncsym
