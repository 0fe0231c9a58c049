#pragma once

/**
 * @file nsym.hpp
 * @brief NSym: the free algebra on z_1, z_2, ... (z_0 = 1) with
 *   Delta(z_r) = sum_{i+j=r} z_i (x) z_j,   eps(z_r) = delta_{0r},
 * and its antipode.
 */

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <vector>

#include "ncsym/errors.hpp"
#include "ncsym/freealg/element.hpp"
#include "ncsym/freealg/tensor.hpp"

namespace ncsym::nsym {

using element = free_element;
using tensor = tensor_element;
using tensor3 = basic_tensor<generator_symbol, 3>;

struct composition {
    std::vector<int> parts;

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    std::size_t length() const { return parts.size(); }

    friend auto operator<=>(const composition&, const composition&) = default;
};

/// All compositions of w, in lexicographic order of parts. w = 0 gives ().
inline std::vector<composition> compositions(int w) {
    if (w < 0) throw range_error("negative weight");
    std::vector<composition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back({parts});
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p);
            parts.pop_back();
        }
    };
    rec(rec, w);
    return out;
}

/// z_r, with z_0 = 1.
inline element z(int r) {
    if (r < 0) throw range_error("z_r requires r >= 0");
    return r == 0 ? element::one() : element::generator(generator_symbol::z(r));
}

/// z_gamma = z_{gamma_1} ... z_{gamma_k}
inline element z(const composition& g) {
    word w;
    for (int p : g.parts) w.push_back(generator_symbol::z(p));
    return element::monomial(std::move(w));
}

inline int z_index(const generator_symbol& s) {
    if (!s.is_z()) throw range_error("not an NSym generator: " + to_string(s));
    return s.as_z().r;
}

/// Algebra-map extension of the generator rule.
inline tensor coproduct(const element& e) {
    return substitute<tensor>(
        e,
        [](const generator_symbol& s) {
            const int r = z_index(s);
            tensor t;
            for (int i = 0; i <= r; ++i) t += tensor::product(z(i), z(r - i));
            return t;
        },
        tensor::one());
}

/// Coefficient of the empty word.
inline rational counit(const element& e) {
    for (const auto& [w, c] : e.terms())
        for (const auto& s : w) z_index(s);
    return e.constant_term();
}

/**
 * Memo table for s(z_r). Readers take a shared lock; a missing entry is
 * computed outside the lock and inserted only if still absent, so racing
 * writers store identical values.
 */
class antipode_memo {
public:
    static antipode_memo& instance() {
        static antipode_memo memo;
        return memo;
    }

    const element& generator_image(int r) {
        {
            std::shared_lock lock(mutex_);
            auto it = images_.find(r);
            if (it != images_.end()) return it->second;
        }
        // s(z_r) = -z_r - sum_{0<i<r} s(z_i) z_{r-i}
        element s = -z(r);
        for (int i = 1; i < r; ++i) s -= generator_image(i) * z(r - i);
        std::unique_lock lock(mutex_);
        return images_.emplace(r, std::move(s)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<int, element> images_;  // node-based: references stay valid
};

/// The convolution inverse of the identity, as an algebra antimorphism.
inline element antipode(const element& e) {
    element out;
    for (const auto& [w, c] : e.terms()) {
        element term = element::one();
        for (auto it = w.rbegin(); it != w.rend(); ++it) term = term * antipode_memo::instance().generator_image(z_index(*it));
        out += c * term;
    }
    return out;
}

/// Returns e if it lies in NSym(n), the subalgebra on z_1..z_n.
inline element restrict(const element& e, int n) {
    for (const auto& [w, c] : e.terms())
        for (const auto& s : w)
            if (z_index(s) > n)
                throw range_error(to_string(s) + " is not in NSym(" + std::to_string(n) + ")");
    return e;
}

/// m o (f (x) g) for linear maps f, g on words.
template <class F, class G>
element multiply_legs(const tensor& t, F&& f, G&& g) {
    element out;
    for (const auto& [k, c] : t.terms()) out += c * (f(element::monomial(k[0])) * g(element::monomial(k[1])));
    return out;
}

/// (eps (x) id) and (id (x) eps)
inline element counit_left(const tensor& t) {
    element out;
    for (const auto& [k, c] : t.terms())
        if (k[0].empty()) out += c * element::monomial(k[1]);
    return out;
}
inline element counit_right(const tensor& t) {
    element out;
    for (const auto& [k, c] : t.terms())
        if (k[1].empty()) out += c * element::monomial(k[0]);
    return out;
}

inline tensor3 coproduct_left_leg(const tensor& t) {
    return apply_to_leg<0, 2>(t, [](const word& w) { return coproduct(element::monomial(w)); });
}
inline tensor3 coproduct_right_leg(const tensor& t) {
    return apply_to_leg<1, 2>(t, [](const word& w) { return coproduct(element::monomial(w)); });
}

struct axiom_result {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    bool passed() const { return failures == 0; }
};

struct hopf_report {
    int max_weight = 0;
    std::vector<axiom_result> axioms;
    bool passed() const {
        for (const auto& a : axioms)
            if (!a.passed()) return false;
        return true;
    }
};

/// Checks the bialgebra and antipode axioms on every z_gamma of weight at
/// most max_weight (and on pairs for the multiplicativity checks).
inline hopf_report hopf_check(int max_weight) {
    hopf_report rep;
    rep.max_weight = max_weight;
    std::vector<composition> all;
    for (int w = 0; w <= max_weight; ++w)
        for (auto& g : compositions(w)) all.push_back(std::move(g));

    axiom_result coassoc{"coassociativity"}, counit_ax{"counit"}, delta_mult{"coproduct is an algebra map"},
        eps_mult{"counit is an algebra map"}, s_left{"m(s (x) id)Delta = u eps"}, s_right{"m(id (x) s)Delta = u eps"},
        connected{"connected grading"};

    for (const auto& g : all) {
        const element x = z(g);
        const tensor d = coproduct(x);
        ++coassoc.cases;
        if (!(coproduct_left_leg(d) == coproduct_right_leg(d))) ++coassoc.failures;
        ++counit_ax.cases;
        if (!(counit_left(d) == x && counit_right(d) == x)) ++counit_ax.failures;
        const element unit_eps = element::scalar(counit(x));
        ++s_left.cases;
        if (!(multiply_legs(d, antipode, [](const element& e) { return e; }) == unit_eps)) ++s_left.failures;
        ++s_right.cases;
        if (!(multiply_legs(d, [](const element& e) { return e; }, antipode) == unit_eps)) ++s_right.failures;
    }
    for (const auto& a : all)
        for (const auto& b : all) {
            if (a.weight() + b.weight() > max_weight) continue;
            const element xa = z(a), xb = z(b);
            ++delta_mult.cases;
            if (!(coproduct(xa * xb) == coproduct(xa) * coproduct(xb))) ++delta_mult.failures;
            ++eps_mult.cases;
            if (counit(xa * xb) != counit(xa) * counit(xb)) ++eps_mult.failures;
        }
    connected.cases = 1;
    if (compositions(0).size() != 1) connected.failures = 1;

    rep.axioms = {coassoc, counit_ax, delta_mult, eps_mult, s_left, s_right, connected};
    return rep;
}

} // namespace ncsym::nsym
