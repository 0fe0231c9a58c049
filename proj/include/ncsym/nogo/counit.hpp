#pragma once

/**
 * @file counit.hpp
 * @brief Forcing the counit of a hypothetical bialgebra structure on Q_n.
 *
 * Write v(x_{A,i}) for the counit value of a generator and v_r for the
 * chain value v(y_r). Compatibility with Phi_n forces e_r(v_1..v_n) = 0 for
 * every r, so the product of the chain values not yet known to vanish is
 * zero; that is split into one branch per factor until every chain value is
 * zero. Each relation instance then says the pairs
 *   {v(x_{A∪i,j}), v(x_{A,i})}  and  {v(x_{A∪j,i}), v(x_{A,j})}
 * have equal sum and equal product, which is propagated to a fixpoint.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncsym/errors.hpp"
#include "ncsym/qn/elementary.hpp"

namespace ncsym::nogo {

using generator_key = std::pair<index_set, int>;

inline std::string generator_name(const generator_key& g) {
    return "x{" + set_to_string(g.first) + ";" + std::to_string(g.second) + "}";
}

/// Every generator x_{A,i} of Q_n.
inline std::vector<generator_key> all_generators(int n) {
    std::vector<generator_key> out;
    for (qn::subset_mask m = 0; m < (qn::subset_mask(1) << n); ++m)
        for (int i = 1; i <= n; ++i)
            if (!(m >> (i - 1) & 1)) out.emplace_back(qn::from_mask(m), i);
    std::sort(out.begin(), out.end());
    return out;
}

struct counit_assignment {
    int n = 0;
    std::map<generator_key, rational> values;

    /// Counit of X(A): the telescoping sum along sorted A.
    rational of_x(const index_set& a) const {
        rational v(0);
        index_set prefix;
        for (int e : a) {
            v += values.at({prefix, e});
            prefix.push_back(e);
        }
        return v;
    }

    rational of_symbol(const generator_symbol& s) const {
        if (s.is_pseudo_root()) return values.at({s.as_pseudo_root().set, s.as_pseudo_root().index});
        if (s.is_x()) return of_x(s.as_x().set);
        throw range_error("z generators do not live in Q_n");
    }

    /// Multiplicative extension to any element in x or X symbols.
    rational of(const free_element& e) const {
        return substitute<rational>(e, [this](const generator_symbol& s) { return of_symbol(s); }, rational(1));
    }

    bool all_zero() const {
        for (const auto& [g, v] : values)
            if (!is_zero(v)) return false;
        return true;
    }
};

struct branch_trace {
    std::vector<std::string> steps;
};

struct counit_result {
    int n = 0;
    std::vector<branch_trace> branches;
    std::vector<std::string> propagation;  ///< deductions of the first branch
    counit_assignment assignment;          ///< common outcome of every branch
    bool determined = false;               ///< every generator value was fixed
    bool branches_agree = false;
    bool satisfies_constraints = false;    ///< relations and eps(e_r) = 0 hold
    std::vector<generator_key> undetermined;

    bool all_zero() const { return determined && assignment.all_zero(); }
};

namespace detail {

using partial = std::map<generator_key, std::optional<rational>>;

inline std::string show(const rational& q) { return to_string(q); }

/**
 * One relation instance with pairs (a, b) and (c, d): a + b = c + d,
 * ab = cd. Fills in whatever is determined; returns false if nothing new.
 */
inline bool propagate_instance(partial& vals, const qn::relation_instance& r, std::vector<std::string>& log) {
    const generator_key keys[4] = {{qn::with(r.set, r.i), r.j}, {r.set, r.i}, {qn::with(r.set, r.j), r.i}, {r.set, r.j}};
    std::optional<rational> v[4];
    for (int k = 0; k < 4; ++k) v[k] = vals.at(keys[k]);
    const std::string where = "relation (A={" + set_to_string(r.set) + "}, i=" + std::to_string(r.i) +
                              ", j=" + std::to_string(r.j) + ")";

    auto set_value = [&](int k, const rational& x, const std::string& why) {
        vals[keys[k]] = x;
        log.push_back(where + ": " + why + " => eps(" + generator_name(keys[k]) + ") = " + show(x));
    };
    auto check = [&](bool ok) {
        if (!ok) throw math_error("counit constraints are contradictory at " + where);
    };

    int known = 0;
    for (auto& x : v) known += x.has_value();
    if (known == 4) {
        check(*v[0] + *v[1] == *v[2] + *v[3] && *v[0] * *v[1] == *v[2] * *v[3]);
        return false;
    }
    if (known == 3) {
        for (int k = 0; k < 4; ++k)
            if (!v[k]) {
                // a + b = c + d, solve for the missing one
                const rational sum_other_pair = (k < 2) ? rational(*v[2] + *v[3]) : rational(*v[0] + *v[1]);
                const rational partner = *v[k ^ 1];
                set_value(k, rational(sum_other_pair - partner), "sum relation");
                return true;
            }
    }
    // One full pair known, the other empty: the other is the same multiset.
    for (int p = 0; p < 2; ++p) {
        const int a = 2 * p, b = a + 1, c = 2 * (1 - p), d = c + 1;
        if (v[a] && v[b] && !v[c] && !v[d]) {
            const rational s = *v[a] + *v[b], prod = *v[a] * *v[b];
            if (s * s - 4 * prod == 0) {
                const rational root = s / 2;
                set_value(c, root, "equal sum and product, double root");
                set_value(d, root, "equal sum and product, double root");
                return true;
            }
            return false;
        }
    }
    // One value in each pair known: b - d = c - a and ab = cd give d = a, b = c when a != c.
    for (int x = 0; x < 2; ++x)
        for (int y = 2; y < 4; ++y) {
            const int xo = x ^ 1, yo = y ^ 1;
            if (v[x] && v[y] && !v[xo] && !v[yo] && *v[x] != *v[y]) {
                set_value(yo, *v[x], "equal sum and product with distinct known values");
                set_value(xo, *v[y], "equal sum and product with distinct known values");
                return true;
            }
        }
    return false;
}

inline partial propagate(partial vals, int n, std::vector<std::string>& log) {
    const auto instances = qn::relation_instances(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : instances) changed = propagate_instance(vals, r, log) || changed;
    }
    return vals;
}

} // namespace detail

inline bool satisfies_all_constraints(const counit_assignment& a) {
    for (const auto& r : qn::relation_instances(a.n)) {
        if (!is_zero(a.of(qn::sum_relation(r)))) return false;
        if (!is_zero(a.of(qn::product_relation(r)))) return false;
    }
    for (const auto& e : qn::elementary_elements(a.n))
        if (!is_zero(a.of(e))) return false;
    return true;
}

inline counit_result forced_counit(int n) {
    if (n < 2) throw range_error("forced_counit needs n >= 2");
    counit_result res;
    res.n = n;

    // Chain branching: the remaining unknown chain values multiply to zero.
    std::vector<std::vector<int>> orders;
    std::vector<int> order;
    std::vector<std::string> steps;
    auto rec = [&](auto&& self, std::vector<int> remaining) -> void {
        if (remaining.empty()) {
            orders.push_back(order);
            res.branches.push_back({steps});
            return;
        }
        std::string product;
        for (auto it = remaining.rbegin(); it != remaining.rend(); ++it)
            product += (product.empty() ? "" : "*") + std::string("eps(y") + std::to_string(*it) + ")";
        for (std::size_t k = 0; k < remaining.size(); ++k) {
            const int r = remaining[k];
            std::vector<int> rest = remaining;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
            order.push_back(r);
            steps.push_back("eps(z" + std::to_string(remaining.size()) + ") = 0 leaves " + product +
                            " = 0; branch eps(y" + std::to_string(r) + ") = 0");
            self(self, rest);
            steps.pop_back();
            order.pop_back();
        }
    };
    std::vector<int> chain;
    for (int r = 1; r <= n; ++r) chain.push_back(r);
    rec(rec, chain);

    std::optional<detail::partial> common;
    res.branches_agree = true;
    for (std::size_t b = 0; b < orders.size(); ++b) {
        detail::partial vals;
        for (const auto& g : all_generators(n)) vals[g] = std::nullopt;
        for (int r : orders[b]) vals[{qn::interval(r - 1), r}] = rational(0);
        std::vector<std::string> log;
        vals = detail::propagate(std::move(vals), n, log);
        if (b == 0) res.propagation = log;
        if (!common) common = vals;
        else if (*common != vals) res.branches_agree = false;
    }

    res.assignment.n = n;
    res.determined = true;
    for (const auto& [g, v] : *common) {
        if (!v) {
            res.determined = false;
            res.undetermined.push_back(g);
        } else {
            res.assignment.values.emplace(g, *v);
        }
    }
    res.satisfies_constraints = res.determined && satisfies_all_constraints(res.assignment);
    return res;
}

} // namespace ncsym::nogo
