#pragma once

/**
 * @file element.hpp
 * @brief Finite Q-linear combinations of words in a free associative algebra.
 *
 * Words are stored in a std::map keyed by the symbol sequence, so two
 * elements are equal exactly when their term maps are. Zero coefficients are
 * never stored. The grading comes from a free `degree(Symbol)` function.
 */

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ncsym/freealg/symbol.hpp"
#include "ncsym/scalars/rational.hpp"

namespace ncsym {

template <class Symbol>
using basic_word = std::vector<Symbol>;

template <class Symbol>
int word_degree(const basic_word<Symbol>& w) {
    int d = 0;
    for (const auto& s : w) d += degree(s);
    return d;
}

template <class Symbol>
class basic_element {
public:
    using symbol_type = Symbol;
    using word_type = basic_word<Symbol>;
    using term_map = std::map<word_type, rational>;

    basic_element() = default;

    static basic_element scalar(const rational& c) { return monomial({}, c); }
    static basic_element one() { return scalar(rational(1)); }
    static basic_element generator(Symbol s) { return monomial({std::move(s)}); }

    static basic_element monomial(word_type w, const rational& c = rational(1)) {
        basic_element e;
        e.add_term(std::move(w), c);
        return e;
    }

    const term_map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    rational coeff(const word_type& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? rational(0) : it->second;
    }

    /// Coefficient of the empty word.
    rational constant_term() const { return coeff({}); }

    void add_term(word_type w, const rational& c) {
        if (ncsym::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (ncsym::is_zero(it->second)) terms_.erase(it);
        }
    }

    /// Degrees present, ascending.
    std::set<int> degrees() const {
        std::set<int> ds;
        for (const auto& [w, c] : terms_) ds.insert(word_degree(w));
        return ds;
    }

    bool is_homogeneous() const { return degrees().size() <= 1; }

    basic_element homogeneous_component(int d) const {
        basic_element out;
        for (const auto& [w, c] : terms_)
            if (word_degree(w) == d) out.terms_.emplace(w, c);
        return out;
    }

    basic_element& operator+=(const basic_element& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    basic_element& operator-=(const basic_element& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, rational(-c));
        return *this;
    }
    basic_element& operator*=(const rational& s) {
        if (ncsym::is_zero(s)) terms_.clear();
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend basic_element operator+(basic_element a, const basic_element& b) { return a += b; }
    friend basic_element operator-(basic_element a, const basic_element& b) { return a -= b; }
    friend basic_element operator-(basic_element a) { return a *= rational(-1); }
    friend basic_element operator*(const rational& s, basic_element a) { return a *= s; }
    friend basic_element operator*(basic_element a, const rational& s) { return a *= s; }

    /// Concatenation product, extended bilinearly.
    friend basic_element operator*(const basic_element& a, const basic_element& b) {
        basic_element out;
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) {
                word_type w;
                w.reserve(u.size() + v.size());
                w.insert(w.end(), u.begin(), u.end());
                w.insert(w.end(), v.begin(), v.end());
                out.add_term(std::move(w), rational(cu * cv));
            }
        return out;
    }

    friend bool operator==(const basic_element&, const basic_element&) = default;

private:
    term_map terms_;
};

template <class Symbol>
basic_element<Symbol> power(const basic_element<Symbol>& a, unsigned e) {
    auto result = basic_element<Symbol>::one();
    for (unsigned n = 0; n < e; ++n) result = result * a;
    return result;
}

/**
 * Extends a map on generators to an algebra homomorphism:
 * image(s_1 ... s_k) = f(s_1) ... f(s_k). `f` returns any algebra value type
 * V constructible from a rational scalar and closed under + and *.
 */
template <class V, class Symbol, class Fn>
V substitute(const basic_element<Symbol>& e, Fn&& f, const V& one) {
    V total = rational(0) * one;
    for (const auto& [w, c] : e.terms()) {
        V term = one;
        for (const auto& s : w) term = term * f(s);
        total = total + c * term;
    }
    return total;
}

using free_element = basic_element<generator_symbol>;
using word = free_element::word_type;

inline free_element fa_mul(const free_element& a, const free_element& b) { return a * b; }

} // namespace ncsym
