#include <gtest/gtest.h>

#include <functional>

#include "ncsym/nogo/report.hpp"
#include "ncsym/nogo/witness.hpp"
#include "ncsym/qn/tensor.hpp"

using namespace ncsym;
using namespace ncsym::nogo;

namespace {

free_element Xm(int m) { return qn::X(qn::interval(m)); }
free_element y(int r, int n) { return qn::chain_generator(r, n); }

tensor_element pure(const free_element& a, const free_element& b) { return tensor_element::product(a, b); }

// Oracle: search a box of integer counit values on the x_{A,i} for
// assignments satisfying both relation families (scalars commute) and
// eps(e_r) = 0. Returns the number of solutions and whether zero is one.
std::pair<std::size_t, bool> brute_force_counits(int n, int lo, int hi) {
    const auto gens = all_generators(n);
    std::map<generator_key, std::size_t> idx;
    for (std::size_t g = 0; g < gens.size(); ++g) idx[gens[g]] = g;
    const auto rels = qn::relation_instances(n);
    std::vector<int> v(gens.size(), lo);
    std::size_t solutions = 0;
    bool zero_found = false;
    for (;;) {
        bool ok = true;
        for (const auto& r : rels) {
            const int a = v[idx[{qn::with(r.set, r.i), r.j}]], b = v[idx[{r.set, r.i}]],
                      c = v[idx[{qn::with(r.set, r.j), r.i}]], d = v[idx[{r.set, r.j}]];
            if (a + b != c + d || a * b != c * d) {
                ok = false;
                break;
            }
        }
        if (ok) {
            // e_r on the chain y_r = x_{[r-1], r}: elementary symmetric values.
            std::vector<long> e(n + 1, 0);
            e[0] = 1;
            for (int m = 1; m <= n; ++m) {
                const long ym = v[idx[{qn::interval(m - 1), m}]];
                for (int r = m; r >= 1; --r) e[r] += ym * e[r - 1];
            }
            for (int r = 1; r <= n; ++r) ok = ok && e[r] == 0;
        }
        if (ok) {
            ++solutions;
            zero_found = zero_found || std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
        }
        std::size_t k = 0;
        while (k < v.size() && v[k] == hi) v[k++] = lo;
        if (k == v.size()) break;
        ++v[k];
    }
    return {solutions, zero_found};
}

} // namespace

TEST(Counit, ForcedToZero) {
    for (int n = 2; n <= 4; ++n) {
        const auto res = forced_counit(n);
        EXPECT_TRUE(res.all_zero()) << n;
        EXPECT_TRUE(res.branches_agree) << n;
        EXPECT_TRUE(res.satisfies_constraints) << n;
        EXPECT_TRUE(res.undetermined.empty()) << n;
        std::size_t factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        EXPECT_EQ(res.branches.size(), factorial) << n;
        EXPECT_EQ(res.assignment.values.size(), std::size_t(n) << (n - 1)) << n;
    }
    EXPECT_THROW(forced_counit(1), range_error);
}

TEST(Counit, BruteForceFindsOnlyZero) {
    const auto [s2, z2] = brute_force_counits(2, -3, 3);
    EXPECT_EQ(s2, 1u);
    EXPECT_TRUE(z2);
    const auto [s3, z3] = brute_force_counits(3, -1, 1);
    EXPECT_EQ(s3, 1u);
    EXPECT_TRUE(z3);
}

TEST(Coproduct, ForcedSlices) {
    const auto low = forced_coproduct_low(3, forced_counit(3).assignment);
    ASSERT_EQ(low.generators.size(), 3u);
    const auto& s2 = low.generators[1];
    EXPECT_EQ(qn::normalize(s2.slice(1, 0), 3), qn::normalize(pure(y(2, 3), free_element::one()), 3));
    EXPECT_EQ(qn::normalize(s2.slice(0, 1), 3), qn::normalize(pure(free_element::one(), y(2, 3)), 3));
    EXPECT_TRUE(s2.slice(0, 0).is_zero());
    EXPECT_TRUE(s2.slice(2, 0).is_zero());
    EXPECT_TRUE(s2.slice(0, 2).is_zero());
    for (const auto& g : low.generators) {
        EXPECT_GT(g.free_unknowns, 0u);
        for (const auto& bd : g.free_bidegrees) EXPECT_EQ(bd, (std::array<int, 2>{1, 1}));
    }
}

TEST(Phi, Examples) {
    EXPECT_EQ(phi(nsym::z(1), 3).to_element(), Xm(3));
    const free_element y1 = y(1, 3), y2 = y(2, 3), y3 = y(3, 3);
    EXPECT_EQ(phi(nsym::z(2), 3), qn::reduce(y3 * y2 + y3 * y1 + y2 * y1, 3));
    EXPECT_EQ(phi(nsym::element::one(), 2).to_element(), free_element::one());
    EXPECT_THROW(phi(nsym::z(4), 3), range_error);
}

TEST(Phi, RankReports) {
    EXPECT_EQ(phi_independence_check(2, 1).rank, 2u);
    EXPECT_EQ(phi_independence_check(3, 2).rank, 4u);
    const auto r = phi_independence_check(3, 3);
    EXPECT_EQ(r.images, 8u);
    EXPECT_EQ(r.rank, 8u);
    EXPECT_TRUE(r.independent());
}

TEST(Witness, SanitySlice) {
    const auto rhs = phi_tensor(nsym::coproduct(nsym::z(2)), 3).project(1, 1);
    tensor_element all_pairs;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) all_pairs += pure(y(a, 3), y(b, 3));
    EXPECT_EQ(qn::normalize(rhs, 3), qn::normalize(all_pairs, 3));
}

TEST(Witness, MatchesDisplayedExpressionForThree) {
    const auto rep = nogo_witness(3);
    const tensor_element displayed = pure(Xm(3), Xm(3) - Xm(2)) +
                                     pure(Xm(2), rational(2) * Xm(2) - Xm(3) - Xm(1)) +
                                     pure(Xm(1), rational(2) * Xm(1) - Xm(2));
    EXPECT_EQ(rep.witness, qn::normalize(displayed, 3));
    EXPECT_TRUE(rep.witness_nonzero);
    EXPECT_TRUE(rep.witness_is_sum_of_squares);
    EXPECT_TRUE(rep.weight_one_consistent);
    EXPECT_TRUE(rep.ansatz_stable);
    EXPECT_EQ(rep.weight_one_constraint, "f_1 + f_2 + f_3 = 0");
    EXPECT_EQ(rep.basis_expansion.size(), 7u);
}

TEST(Witness, TwoAndFour) {
    const auto r2 = nogo_witness(2);
    EXPECT_EQ(r2.witness, qn::normalize(pure(Xm(1), rational(2) * Xm(1) - Xm(2)) + pure(Xm(2), Xm(2) - Xm(1)), 2));
    EXPECT_TRUE(r2.witness_nonzero);
    const auto r4 = nogo_witness(4);
    EXPECT_TRUE(r4.witness_nonzero);
    EXPECT_TRUE(r4.witness_is_sum_of_squares);
    EXPECT_TRUE(r4.ansatz_stable);
}

TEST(Witness, DirectSumOfSquaresOracle) {
    for (int n = 2; n <= 3; ++n) {
        tensor_element squares;
        for (int r = 1; r <= n; ++r) squares += pure(y(r, n), y(r, n));
        EXPECT_EQ(nogo_witness(n).witness, qn::normalize(squares, n)) << n;
    }
}

TEST(Report, JsonIsDeterministic) {
    const auto a = to_json(nogo_witness(3)).dump(2), b = to_json(nogo_witness(3)).dump(2);
    EXPECT_EQ(a, b);
    const json j = json::parse(a);
    EXPECT_TRUE(j.at("witness_nonzero").get<bool>());
    EXPECT_TRUE(j.at("counit").at("all_zero").get<bool>());
    EXPECT_EQ(j.at("coproduct_low").size(), 3u);
    EXPECT_NE(transcript(nogo_witness(2)).find("nonzero"), std::string::npos);
}
