#pragma once

/**
 * @file witness.hpp
 * @brief The obstruction to extending the bialgebra structure of NSym(n)
 * along Phi_n to Q_n.
 *
 * If Delta~ existed, Delta~(Phi z_2) = (Phi (x) Phi)(Delta z_2). Take the
 * bidegree (1,1) component of both sides. On the left, Delta~(e_2) is a sum
 * of products Delta~(y_a) Delta~(y_b), a > b; only the forced slices
 * y (x) 1 and 1 (x) y can reach (1,1), because the remaining part f_r of each
 * Delta~(y_r) lives in bidegrees >= (1,1) and nothing of bidegree (0,0) is
 * left to multiply it by. So the left side gives sum_{a != b} y_a (x) y_b,
 * the right side e_1 (x) e_1, and the difference sum_r y_r (x) y_r would have
 * to vanish in Q_{n,1} (x) Q_{n,1}. The report expands it over the basis.
 */

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ncsym/freealg/format.hpp"
#include "ncsym/nogo/coproduct.hpp"
#include "ncsym/nogo/counit.hpp"
#include "ncsym/nogo/phi.hpp"

namespace ncsym::nogo {

struct witness_options {
    std::uint64_t seed = 20240101;
    int ansatz_trials = 3;
    qn::limits lim{};
};

struct nogo_report {
    int n = 0;
    std::vector<std::string> assumptions;
    counit_result counit;
    low_bidegree_coproduct coproduct;
    tensor_element witness;  ///< normalized, bidegree (1,1)
    std::map<std::pair<qn::admissible_string, qn::admissible_string>, rational> basis_expansion;
    bool witness_nonzero = false;
    bool witness_is_sum_of_squares = false;  ///< witness == sum_r y_r (x) y_r
    bool weight_one_consistent = false;      ///< (Phi (x) Phi)(Delta z_1) == forced part of Delta~(e_1)
    bool ansatz_stable = false;              ///< random f_r never change the (1,1) component
    std::string weight_one_constraint;       ///< the identity sum_r f_r = 0, recorded only
};

/// e_r built from arbitrary images of y_1..y_n by the same recurrence as in Q_n.
inline std::vector<tensor_element> elementary_images(const std::vector<tensor_element>& ys) {
    const std::size_t n = ys.size();
    std::vector<tensor_element> e(n + 1);
    e[0] = tensor_element::one();
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t r = m + 1; r >= 1; --r) e[r] += ys[m] * e[r - 1];
    e.erase(e.begin());
    return e;
}

namespace detail {

/// A random f_r: combination of X(B) (x) X(B') with bidegree in
/// {(1,1), (1,2), (2,1)} and small integer coefficients.
inline tensor_element random_ansatz(int n, std::mt19937_64& rng) {
    const auto b1 = qn::enumerate_basis(n, 1);
    const auto b2 = qn::enumerate_basis(n, 2);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<std::size_t> pick1(0, b1.size() - 1), pick2(0, b2.size() - 1);
    tensor_element f;
    for (int t = 0; t < 6; ++t) {
        f.add_term({word_of(b1[pick1(rng)]), word_of(b1[pick1(rng)])}, rational(coeff(rng)));
        f.add_term({word_of(b1[pick1(rng)]), word_of(b2[pick2(rng)])}, rational(coeff(rng)));
        f.add_term({word_of(b2[pick2(rng)]), word_of(b1[pick1(rng)])}, rational(coeff(rng)));
    }
    return f;
}

inline tensor_element left_side_11(const std::vector<tensor_element>& delta_y, int n, const qn::limits& lim) {
    return qn::normalize(elementary_images(delta_y)[1].project(1, 1), n, lim);
}

} // namespace detail

inline nogo_report nogo_witness(int n, const witness_options& opt = {}) {
    if (n < 2) throw range_error("the obstruction lives in weight 2 and needs n >= 2");
    qn::check_limits(n, 2, opt.lim);
    nogo_report rep;
    rep.n = n;
    rep.assumptions = {
        "Delta~ and eps~ are algebra maps on Q_n compatible with Phi_n.",
        "Delta~(y_r) is a finite sum over pairs of basis strings X(B) (x) X(B'); no grading of Delta~ is assumed.",
        "The coproduct ansatz is truncated at total degree " + std::to_string(ansatz_degree) +
            "; only the forced slices enter the (1,1) component.",
    };

    rep.counit = forced_counit(n);
    if (!rep.counit.all_zero() || !rep.counit.branches_agree || !rep.counit.satisfies_constraints)
        throw math_error("counit forcing did not produce the zero assignment");

    rep.coproduct = forced_coproduct_low(n, rep.counit.assignment, opt.lim);

    std::vector<tensor_element> delta_y;
    for (const auto& g : rep.coproduct.generators) delta_y.push_back(g.forced_part());

    // Weight 1: Delta~(e_1) = sum_r Delta~(y_r) = e_1 (x) 1 + 1 (x) e_1 + sum_r f_r.
    tensor_element delta_e1;
    for (const auto& t : delta_y) delta_e1 += t;
    const tensor_element phi_delta_z1 = phi_tensor(nsym::coproduct(nsym::z(1)), n);
    rep.weight_one_consistent = qn::normalize(delta_e1, n, opt.lim) == qn::normalize(phi_delta_z1, n, opt.lim);
    {
        std::string s;
        for (int r = 1; r <= n; ++r) s += (r > 1 ? " + " : "") + std::string("f_") + std::to_string(r);
        rep.weight_one_constraint = s + " = 0";
    }

    // Weight 2, bidegree (1,1).
    const tensor_element lhs = detail::left_side_11(delta_y, n, opt.lim);
    const tensor_element rhs =
        qn::normalize(phi_tensor(nsym::coproduct(nsym::z(2)), n).project(1, 1), n, opt.lim);
    rep.witness = rhs - lhs;
    rep.witness_nonzero = !rep.witness.is_zero();
    rep.basis_expansion = qn::basis_coordinates(rep.witness, n, opt.lim);

    tensor_element squares;
    for (int r = 1; r <= n; ++r) {
        const free_element y = qn::chain_generator(r, n);
        squares += tensor_element::product(y, y);
    }
    rep.witness_is_sum_of_squares = qn::normalize(squares, n, opt.lim) == rep.witness;

    // Adding arbitrary f_r (with or without sum_r f_r = 0) leaves (1,1) alone.
    std::mt19937_64 rng(opt.seed);
    rep.ansatz_stable = true;
    for (int trial = 0; trial < opt.ansatz_trials; ++trial) {
        std::vector<tensor_element> fs;
        tensor_element total;
        for (int r = 1; r <= n; ++r) {
            fs.push_back(detail::random_ansatz(n, rng));
            total += fs.back();
        }
        const bool constrained = trial % 2 == 0;
        if (constrained) fs.back() -= total;

        std::vector<tensor_element> perturbed;
        for (int r = 0; r < n; ++r) perturbed.push_back(delta_y[r] + fs[r]);
        if (!(detail::left_side_11(perturbed, n, opt.lim) == lhs)) rep.ansatz_stable = false;
    }
    return rep;
}

} // namespace ncsym::nogo
