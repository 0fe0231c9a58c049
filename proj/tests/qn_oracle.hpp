#pragma once

// Test-only oracle for Q_n: works in the original presentation with
// generators x_{A,i} and both relation families, never touching X(A) or
// admissible strings. The degree-d piece of the two-sided ideal is spanned by
// u*r*v for relations r and words u, v; its dimension is found by dense
// Gaussian elimination.

#include <map>
#include <utility>
#include <vector>

#include "ncsym/scalars/rational.hpp"

namespace qn_oracle {

using ncsym::rational;

struct gen {
    unsigned set;  // bitmask over [n]
    int i;         // 0-based, not in set
    auto operator<=>(const gen&) const = default;
};

using word = std::vector<int>;  // generator indices
using poly = std::map<word, rational>;

class presentation {
public:
    explicit presentation(int n) : n_(n) {
        for (unsigned a = 0; a < (1u << n); ++a)
            for (int i = 0; i < n; ++i)
                if (!(a >> i & 1)) {
                    index_.emplace(gen{a, i}, static_cast<int>(gens_.size()));
                    gens_.push_back({a, i});
                }
        for (unsigned a = 0; a < (1u << n); ++a)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if ((a >> i & 1) || (a >> j & 1)) continue;
                    const int ai_j = x(a | 1u << i, j), a_i = x(a, i), aj_i = x(a | 1u << j, i), a_j = x(a, j);
                    poly sum{{{ai_j}, 1}, {{a_i}, 1}};
                    sum[{aj_i}] -= 1;
                    sum[{a_j}] -= 1;
                    linear_.push_back(clean(sum));
                    poly prod{{{ai_j, a_i}, 1}};
                    prod[{aj_i, a_j}] -= 1;
                    quadratic_.push_back(clean(prod));
                }
    }

    int generator_count() const { return static_cast<int>(gens_.size()); }

    /// Index of x_{A,i}; A given as a mask, i 0-based.
    int x(unsigned a, int i) const { return index_.at(gen{a, i}); }

    /// X(A) = sum over the chain of A in increasing order.
    poly X(unsigned a) const {
        poly p;
        unsigned prefix = 0;
        for (int i = 0; i < n_; ++i)
            if (a >> i & 1) {
                p[{x(prefix, i)}] += 1;
                prefix |= 1u << i;
            }
        return p;
    }

    static poly mul(const poly& a, const poly& b) {
        poly out;
        for (const auto& [u, c] : a)
            for (const auto& [v, d] : b) {
                word w = u;
                w.insert(w.end(), v.begin(), v.end());
                out[w] += c * d;
            }
        return clean(out);
    }

    /// Spanning set of the degree-d part of the ideal.
    std::vector<poly> ideal_span(int d) const {
        std::vector<poly> out;
        auto wrap = [&](const poly& r, int deg) {
            for (int left = 0; left + deg <= d; ++left)
                for (const auto& u : words(left))
                    for (const auto& v : words(d - deg - left)) out.push_back(mul(mul(poly{{u, 1}}, r), poly{{v, 1}}));
        };
        for (const auto& r : linear_) wrap(r, 1);
        for (const auto& r : quadratic_) wrap(r, 2);
        return out;
    }

    std::vector<word> words(int d) const {
        std::vector<word> out{{}};
        for (int k = 0; k < d; ++k) {
            std::vector<word> next;
            for (const auto& w : out)
                for (int g = 0; g < generator_count(); ++g) {
                    next.push_back(w);
                    next.back().push_back(g);
                }
            out = std::move(next);
        }
        return out;
    }

    /// Rank of the polynomials as vectors over the words of length d.
    std::size_t rank(const std::vector<poly>& ps, int d) const {
        const auto ws = words(d);
        std::map<word, std::size_t> column;
        for (std::size_t c = 0; c < ws.size(); ++c) column.emplace(ws[c], c);
        std::vector<std::vector<rational>> m;
        for (const auto& p : ps) {
            std::vector<rational> row(ws.size());
            for (const auto& [w, c] : p) row[column.at(w)] = c;
            m.push_back(std::move(row));
        }
        std::size_t r = 0;
        for (std::size_t c = 0; c < ws.size() && r < m.size(); ++c) {
            std::size_t p = r;
            while (p < m.size() && m[p][c] == 0) ++p;
            if (p == m.size()) continue;
            std::swap(m[p], m[r]);
            for (std::size_t q = 0; q < m.size(); ++q) {
                if (q == r || m[q][c] == 0) continue;
                const rational f = m[q][c] / m[r][c];
                for (std::size_t k = c; k < ws.size(); ++k) m[q][k] -= f * m[r][k];
            }
            ++r;
        }
        return r;
    }

    std::size_t dimension(int d) const {
        return static_cast<std::size_t>(words(d).size()) - rank(ideal_span(d), d);
    }

    /// Does p (homogeneous of degree d) vanish in Q_n?
    bool in_ideal(const poly& p, int d) const {
        auto span = ideal_span(d);
        const std::size_t before = rank(span, d);
        span.push_back(p);
        return rank(span, d) == before;
    }

private:
    static poly clean(poly p) {
        for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
        return p;
    }

    int n_;
    std::vector<gen> gens_;
    std::map<gen, int> index_;
    std::vector<poly> linear_, quadratic_;
};

} // namespace qn_oracle
