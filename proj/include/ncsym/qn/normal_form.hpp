#pragma once

/**
 * @file normal_form.hpp
 * @brief Normal forms in Q_n over the admissible-string basis.
 *
 * Reduction works one degree at a time. In degree d the relation space is
 * spanned by u r v over quadratic relations r and words u, v; it is put in
 * echelon form with every non-admissible word ordered above every
 * admissible one, so that eliminating from the top rewrites any element in
 * admissible words only. The construction checks on the way that the
 * admissible words are independent modulo relations and that the relations
 * reach every other word.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncsym/errors.hpp"
#include "ncsym/freealg/element.hpp"
#include "ncsym/linalg/echelon.hpp"
#include "ncsym/qn/generators.hpp"
#include "ncsym/qn/strings.hpp"

namespace ncsym::qn {

/// Size limits for the per-degree linear algebra.
struct limits {
    int max_n = 4;
    int max_degree = 4;
};

inline void check_limits(int n, int d, const limits& lim) {
    if (n < 1) throw range_error("n must be at least 1");
    if (d < 0) throw range_error("degree must be nonnegative");
    if (n > lim.max_n) throw range_error("n = " + std::to_string(n) + " exceeds the configured maximum " + std::to_string(lim.max_n));
    if (d > lim.max_degree)
        throw range_error("degree " + std::to_string(d) + " exceeds the configured maximum " + std::to_string(lim.max_degree));
}

/// Relation data and echelon basis for one graded piece of Q_n.
class degree_reducer {
public:
    degree_reducer(int n, int d) : n_(n), d_(d), generators_((std::size_t(1) << n) - 1) {
        word_count_ = 1;
        for (int k = 0; k < d; ++k) word_count_ *= generators_;

        basis_ = enumerate_basis(n, d);
        column_of_.assign(word_count_, unassigned);
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            std::size_t w = index_of(basis_[b].sets());
            if (column_of_[w] != unassigned) throw inconsistency_error("two admissible strings spell the same word");
            column_of_[w] = b;
        }
        std::size_t next = basis_.size();
        for (std::size_t w = 0; w < word_count_; ++w)
            if (column_of_[w] == unassigned) column_of_[w] = next++;

        if (d >= 2) build_relations();

        check_consistency();
    }

    int n() const { return n_; }
    int degree() const { return d_; }
    std::size_t word_count() const { return word_count_; }
    std::size_t admissible_count() const { return basis_.size(); }
    std::size_t relation_rank() const { return echelon_.rank(); }
    const std::vector<admissible_string>& basis() const { return basis_; }

    /// word_count - relation_rank
    std::size_t codimension() const { return word_count_ - echelon_.rank(); }

    /// The admissible strings span the quotient (every non-admissible word is
    /// a pivot) and are independent in it (no pivot is admissible).
    bool consistent() const { return consistent_; }

    std::size_t generator_index(const index_set& a) const {
        check_in_range(a, n_);
        if (a.empty()) throw range_error("X of the empty set is not a generator");
        return to_mask(a) - 1;
    }

    std::size_t index_of(const std::vector<index_set>& sets) const {
        std::size_t w = 0;
        for (const auto& s : sets) w = w * generators_ + generator_index(s);
        return w;
    }

    /// Coordinates over basis() of the class of sum c_w w.
    std::map<admissible_string, rational> reduce(const std::vector<std::pair<std::size_t, rational>>& word_coeffs) const {
        if (!consistent_) throw inconsistency_error("admissible strings are not a basis in this degree");
        std::map<std::size_t, rational> by_column;
        for (const auto& [w, c] : word_coeffs) by_column[column_of_[w]] += c;
        linalg::sparse_vector v;
        for (auto& [col, c] : by_column)
            if (!is_zero(c)) v.emplace_back(col, std::move(c));
        v = echelon_.reduce_above(std::move(v), basis_.size());
        std::map<admissible_string, rational> out;
        for (auto& [col, c] : v) out.emplace(basis_[col], std::move(c));
        return out;
    }

    /// True iff the given combination of words lies in the relation space.
    bool in_relation_span(const std::vector<std::pair<std::size_t, rational>>& word_coeffs) const {
        std::map<std::size_t, rational> by_column;
        for (const auto& [w, c] : word_coeffs) by_column[column_of_[w]] += c;
        linalg::sparse_vector v;
        for (auto& [col, c] : by_column)
            if (!is_zero(c)) v.emplace_back(col, std::move(c));
        return echelon_.reduce_leading(std::move(v)).empty();
    }

private:
    static constexpr std::size_t unassigned = static_cast<std::size_t>(-1);

    void build_relations() {
        std::vector<std::vector<std::pair<std::size_t, rational>>> rels;
        for (const auto& r : quadratic_relations(n_)) {
            std::vector<std::pair<std::size_t, rational>> v;
            for (const auto& [w, c] : r.terms()) {
                std::size_t idx = 0;
                for (const auto& s : w) idx = idx * generators_ + generator_index(s.as_x().set);
                v.emplace_back(idx, c);
            }
            rels.push_back(std::move(v));
        }
        const std::size_t sq = generators_ * generators_;
        for (int left = 0; left <= d_ - 2; ++left) {
            std::size_t left_count = 1, right_count = 1;
            for (int k = 0; k < left; ++k) left_count *= generators_;
            for (int k = 0; k < d_ - 2 - left; ++k) right_count *= generators_;
            for (std::size_t u = 0; u < left_count; ++u)
                for (std::size_t v = 0; v < right_count; ++v)
                    for (const auto& rel : rels) {
                        std::map<std::size_t, rational> row;
                        for (const auto& [w, c] : rel) row[column_of_[(u * sq + w) * right_count + v]] += c;
                        linalg::sparse_vector sv;
                        for (auto& [col, c] : row)
                            if (!is_zero(c)) sv.emplace_back(col, std::move(c));
                        echelon_.insert(std::move(sv));
                    }
        }
    }

    void check_consistency() {
        bool admissible_pivot = false;
        echelon_.for_each_pivot([&](std::size_t col, const linalg::sparse_vector&) {
            if (col < basis_.size()) admissible_pivot = true;
        });
        consistent_ = !admissible_pivot && echelon_.rank() == word_count_ - basis_.size();
    }

    int n_;
    int d_;
    std::size_t generators_;
    std::size_t word_count_ = 1;
    std::vector<admissible_string> basis_;
    std::vector<std::size_t> column_of_;
    linalg::sparse_echelon echelon_;
    bool consistent_ = false;
};

/**
 * Process-wide cache of reducers keyed by (n, d). Lookups take a shared
 * lock; a miss builds the reducer unlocked and inserts it unless another
 * thread got there first. Entries are never replaced.
 */
class reducer_cache {
public:
    static reducer_cache& instance() {
        static reducer_cache cache;
        return cache;
    }

    std::shared_ptr<const degree_reducer> get(int n, int d) {
        const auto key = std::make_pair(n, d);
        {
            std::shared_lock lock(mutex_);
            auto it = entries_.find(key);
            if (it != entries_.end()) return it->second;
        }
        auto built = std::make_shared<const degree_reducer>(n, d);
        std::unique_lock lock(mutex_);
        return entries_.emplace(key, std::move(built)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<int, int>, std::shared_ptr<const degree_reducer>> entries_;
};

inline std::shared_ptr<const degree_reducer> reducer(int n, int d, const limits& lim = {}) {
    check_limits(n, d, lim);
    return reducer_cache::instance().get(n, d);
}

/// Coordinates of an element of Q_n over admissible strings.
class normal_form {
public:
    explicit normal_form(int n = 1) : n_(n) {}
    normal_form(int n, std::map<admissible_string, rational> coords) : n_(n), coords_(std::move(coords)) {}

    int n() const { return n_; }
    const std::map<admissible_string, rational>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }

    rational coeff(const admissible_string& s) const {
        auto it = coords_.find(s);
        return it == coords_.end() ? rational(0) : it->second;
    }

    /// The weight-w piece.
    normal_form graded_piece(int w) const {
        normal_form out(n_);
        for (const auto& [s, c] : coords_)
            if (s.weight() == w) out.coords_.emplace(s, c);
        return out;
    }

    /// The same element as a combination of X-words.
    free_element to_element() const {
        free_element e;
        for (const auto& [s, c] : coords_) {
            word w;
            for (const auto& set : s.sets()) w.push_back(generator_symbol::X(set));
            e.add_term(std::move(w), c);
        }
        return e;
    }

    normal_form& operator+=(const normal_form& o) {
        for (const auto& [s, c] : o.coords_) add(s, c);
        return *this;
    }
    normal_form& operator-=(const normal_form& o) {
        for (const auto& [s, c] : o.coords_) add(s, rational(-c));
        return *this;
    }
    friend normal_form operator+(normal_form a, const normal_form& b) { return a += b; }
    friend normal_form operator-(normal_form a, const normal_form& b) { return a -= b; }
    friend normal_form operator*(const rational& k, normal_form a) {
        if (ncsym::is_zero(k)) a.coords_.clear();
        for (auto& [s, c] : a.coords_) c *= k;
        return a;
    }

    friend bool operator==(const normal_form&, const normal_form&) = default;

private:
    void add(const admissible_string& s, const rational& c) {
        auto [it, inserted] = coords_.try_emplace(s, c);
        if (!inserted) {
            it->second += c;
            if (ncsym::is_zero(it->second)) coords_.erase(it);
        }
    }

    int n_;
    std::map<admissible_string, rational> coords_;
};

/// Groups the terms of an X-form element by degree as word indices.
inline std::map<int, std::vector<std::pair<std::size_t, rational>>> split_by_degree(const free_element& x_form, int n,
                                                                                  const limits& lim) {
    std::map<int, std::vector<std::pair<std::size_t, rational>>> pieces;
    for (const auto& [w, c] : x_form.terms()) {
        const int d = static_cast<int>(w.size());
        std::vector<index_set> sets;
        for (const auto& sym : w) sets.push_back(sym.as_x().set);
        const std::size_t idx = reducer(n, d, lim)->index_of(sets);
        pieces[d].emplace_back(idx, c);
    }
    return pieces;
}

/// Normal form of an element written in x_{A,i} and/or X(A) symbols.
inline normal_form reduce(const free_element& e, int n, const limits& lim = {}) {
    const free_element x_form = substitute_gen_to_X(e, n);
    normal_form out(n);
    for (const auto& [d, coeffs] : split_by_degree(x_form, n, lim))
        out += normal_form(n, reducer(n, d, lim)->reduce(coeffs));
    return out;
}

/// Does e vanish in Q_n?
inline bool is_zero_in_qn(const free_element& e, int n, const limits& lim = {}) {
    return reduce(e, n, lim).is_zero();
}

/// Dimension of the weight-d piece, by counting admissible strings.
inline std::size_t hilbert_dim(int n, int d) { return enumerate_basis(n, d).size(); }

/// Dimension of the weight-d piece, as (words) - (rank of relations).
inline std::size_t relation_codimension(int n, int d, const limits& lim = {}) {
    return reducer(n, d, lim)->codimension();
}

} // namespace ncsym::qn
