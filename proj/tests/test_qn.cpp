#include <gtest/gtest.h>

#include <future>
#include <random>
#include <thread>

#include "ncsym/freealg/format.hpp"
#include "ncsym/linalg/echelon.hpp"
#include "ncsym/qn/elementary.hpp"
#include "ncsym/qn/generators.hpp"
#include "ncsym/qn/normal_form.hpp"
#include "ncsym/qn/strings.hpp"
#include "qn_oracle.hpp"

using namespace ncsym;
using namespace ncsym::qn;

namespace {

free_element Xe(index_set a) { return qn::X(a); }

free_element random_x_element(std::mt19937_64& rng, int n, int max_len) {
    const auto sets = nonempty_subsets(n);
    std::uniform_int_distribution<int> len(0, max_len), coeff(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
    free_element e;
    for (int t = 0; t < 4; ++t) {
        free_element m = free_element::scalar(coeff(rng));
        for (int k = len(rng); k > 0; --k) m = m * Xe(sets[pick(rng)]);
        e += m;
    }
    return e;
}

// Independent rank of a list of normal forms.
std::size_t rank_of(const std::vector<normal_form>& v) {
    std::map<admissible_string, std::size_t> column;
    linalg::sparse_echelon ech;
    std::size_t r = 0;
    for (const auto& nf : v) {
        std::map<std::size_t, rational> row;
        for (const auto& [s, c] : nf.coords()) row[column.try_emplace(s, column.size()).first->second] += c;
        if (ech.insert(linalg::sparse_vector(row.begin(), row.end()))) ++r;
    }
    return r;
}

} // namespace

TEST(Generators, ClosedForm) {
    EXPECT_EQ(gen_to_X({}, 1, 3), Xe({1}));
    EXPECT_EQ(gen_to_X({1, 2}, 3, 3), Xe({1, 2, 3}) - Xe({1, 2}));
    EXPECT_EQ(chain_generator(3, 3), Xe({1, 2, 3}) - Xe({1, 2}));
    EXPECT_EQ(gen_to_X({2}, 1, 3), Xe({1, 2}) - Xe({2}));
    EXPECT_THROW(gen_to_X({1}, 1, 3), range_error);
    EXPECT_THROW(gen_to_X({}, 4, 3), range_error);
}

TEST(Strings, Enumeration) {
    const auto b31 = enumerate_basis(3, 1);
    ASSERT_EQ(b31.size(), 7u);
    for (const auto& s : b31) {
        ASSERT_EQ(s.length(), 1);
        ASSERT_EQ(s.blocks().front().j, 1);
    }
    EXPECT_EQ(enumerate_basis(2, 2).size(), 8u);
    EXPECT_EQ(enumerate_basis(3, 2).size(), 44u);
    EXPECT_EQ(enumerate_basis(3, 0).size(), 1u);

    // The one forbidden weight-2 word for n = 2.
    EXPECT_THROW(admissible_string({{{1, 2}, 1}, {{2}, 1}}, 2), range_error);
    EXPECT_NO_THROW(admissible_string({{{1, 2}, 2}}, 2));
    EXPECT_FALSE(string_of_word({{1, 2}, {2}}, 2).has_value());
    EXPECT_EQ(to_string(*string_of_word({{1, 2}, {1}}, 2)), "({1,2}:2)");
}

TEST(Strings, SortedByWeightLengthBlocks) {
    const auto b = enumerate_basis(3, 2);
    EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
    EXPECT_EQ(b.front().length(), 1);
}

TEST(Strings, WordsAndStringsCorrespond) {
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d)
            for (const auto& s : enumerate_basis(n, d)) {
                const auto back = string_of_word(s.sets(), n);
                ASSERT_TRUE(back.has_value());
                ASSERT_EQ(*back, s);
            }
}

// Dimensions in the original x_{A,i} presentation, by the test oracle.
TEST(Dimensions, OracleInOriginalPresentation) {
    EXPECT_EQ(qn_oracle::presentation(3).dimension(1), 7u);
    EXPECT_EQ(qn_oracle::presentation(2).dimension(2), 8u);
    EXPECT_EQ(qn_oracle::presentation(2).dimension(3), hilbert_dim(2, 3));
    EXPECT_EQ(qn_oracle::presentation(3).dimension(2), 44u);
}

// Frozen after the oracle above agreed.
TEST(Dimensions, Goldens) {
    EXPECT_EQ(hilbert_dim(3, 1), 7u);
    EXPECT_EQ(hilbert_dim(2, 2), 8u);
    EXPECT_EQ(hilbert_dim(3, 2), 44u);
}

TEST(Dimensions, EnumerationEqualsCodimension) {
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 3; ++d) {
            const auto r = reducer(n, d);
            ASSERT_TRUE(r->consistent()) << n << "," << d;
            ASSERT_EQ(hilbert_dim(n, d), relation_codimension(n, d)) << n << "," << d;
        }
}

TEST(NormalForm, GoldenForbiddenJunction) {
    const normal_form nf = reduce(Xe({1, 2}) * Xe({2}), 2);
    const free_element expected = Xe({1, 2}) * Xe({1}) - Xe({1}) * Xe({1}) + Xe({2}) * Xe({2});
    EXPECT_EQ(nf.to_element(), expected);

    // Oracle: the difference lies in the ideal of the x-presentation.
    const qn_oracle::presentation p(2);
    auto X = [&](unsigned m) { return p.X(m); };
    qn_oracle::poly diff = p.mul(X(3), X(2));
    for (auto [u, v, c] : {std::tuple{3u, 1u, -1}, {1u, 1u, 1}, {2u, 2u, -1}})
        for (const auto& [w, k] : p.mul(X(u), X(v))) diff[w] += c * k;
    EXPECT_TRUE(p.in_ideal(diff, 2));
    // and the word itself does not vanish.
    EXPECT_FALSE(p.in_ideal(p.mul(X(3), X(2)), 2));
}

TEST(NormalForm, Examples) {
    EXPECT_EQ(reduce(Xe({1, 2, 3}), 3).to_element(), Xe({1, 2, 3}));
    const free_element rel = x_gen({1}, 2) * x_gen({}, 1) - x_gen({2}, 1) * x_gen({}, 2);
    EXPECT_TRUE(reduce(rel, 3).is_zero());
    EXPECT_THROW(reduce(Xe({1}), 5), range_error);
    EXPECT_THROW(reduce(power(Xe({1}), 5), 2), range_error);
}

TEST(NormalForm, RelationSoundness) {
    for (int n = 2; n <= 4; ++n)
        for (const auto& r : relation_instances(n)) {
            ASSERT_TRUE(substitute_gen_to_X(sum_relation(r), n).is_zero());
            ASSERT_TRUE(reduce(product_relation(r), n).is_zero());
        }
}

TEST(NormalForm, LinearIdempotentGradedMultiplicative) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + t % 2;
        const auto a = random_x_element(rng, n, 2), b = random_x_element(rng, n, 2);
        const auto na = reduce(a, n), nb = reduce(b, n);
        ASSERT_EQ(reduce(a + rational(2) * b, n), na + rational(2) * nb);
        ASSERT_EQ(reduce(na.to_element(), n), na);
        for (int d : a.degrees()) ASSERT_EQ(reduce(a.homogeneous_component(d), n), na.graded_piece(d));
        ASSERT_EQ(reduce(a * b, n), reduce(na.to_element() * nb.to_element(), n));
    }
}

TEST(NormalForm, ChainSubalgebraIsFree) {
    for (int n = 2; n <= 3; ++n) {
        std::vector<free_element> words{free_element::one()};
        std::vector<normal_form> images;
        for (int len = 0; len <= 3; ++len) {
            std::vector<free_element> next;
            for (const auto& w : words) {
                images.push_back(reduce(w, n));
                if (len < 3)
                    for (int r = 1; r <= n; ++r) next.push_back(w * chain_generator(r, n));
            }
            words = std::move(next);
        }
        EXPECT_EQ(rank_of(images), images.size()) << n;
    }
}

TEST(Elementary, Examples) {
    EXPECT_EQ(elementary(3, 1).to_element(), Xe({1, 2, 3}));
    EXPECT_EQ(elementary(1, 1).to_element(), Xe({1}));
    const free_element y1 = chain_generator(1, 3), y2 = chain_generator(2, 3), y3 = chain_generator(3, 3);
    EXPECT_EQ(elementary(3, 3), reduce(y3 * y2 * y1, 3));
    EXPECT_EQ(elementary(3, 2), reduce(y3 * y2 + y3 * y1 + y2 * y1, 3));
}

TEST(Cache, ConcurrentLookupsAgree) {
    std::vector<std::future<normal_form>> jobs;
    const free_element e = Xe({1, 2}) * Xe({2}) * Xe({1, 3});
    for (int t = 0; t < 8; ++t) jobs.push_back(std::async(std::launch::async, [&] { return reduce(e, 3); }));
    const normal_form first = jobs.front().get();
    for (std::size_t t = 1; t < jobs.size(); ++t) EXPECT_EQ(jobs[t].get(), first);
    EXPECT_EQ(reducer(3, 3).get(), reducer(3, 3).get());
}
