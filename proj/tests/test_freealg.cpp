#include <gtest/gtest.h>

#include <random>

#include "ncsym/freealg/format.hpp"
#include "ncsym/freealg/json.hpp"
#include "ncsym/freealg/tensor.hpp"

using namespace ncsym;

namespace {

// Chain generator y_r = x_{[r-1], r} as an opaque symbol.
free_element y(int r) {
    index_set a;
    for (int m = 1; m < r; ++m) a.push_back(m);
    return free_element::generator(generator_symbol::x(a, r));
}

free_element z(int r) { return free_element::generator(generator_symbol::z(r)); }

free_element random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, 3), coeff(-4, 4), gen(0, 5);
    const generator_symbol pool[] = {generator_symbol::X({1}),    generator_symbol::X({1, 2}),
                                     generator_symbol::x({2}, 1), generator_symbol::x({}, 3),
                                     generator_symbol::z(1),      generator_symbol::z(3)};
    free_element e;
    for (int t = 0; t < 4; ++t) {
        word w;
        for (int n = len(rng); n > 0; --n) w.push_back(pool[gen(rng)]);
        rational c(coeff(rng), 1 + gen(rng));
        c.canonicalize();
        e.add_term(w, c);
    }
    return e;
}

tensor_element random_tensor(std::mt19937_64& rng) {
    tensor_element t;
    for (int n = 0; n < 3; ++n) t += tensor_element::product(random_element(rng), random_element(rng));
    return t;
}

} // namespace

TEST(FreeAlgebra, Examples) {
    const free_element a = y(3) - rational(2) * y(1);
    EXPECT_EQ(free_element::one() * a, a);
    EXPECT_EQ(fa_mul(z(1), z(1)).coeff({generator_symbol::z(1), generator_symbol::z(1)}), rational(1));
    EXPECT_EQ(fa_mul(y(3) + y(2), y(1)), y(3) * y(1) + y(2) * y(1));
    EXPECT_FALSE(y(2) * y(1) == y(1) * y(2));
}

TEST(FreeAlgebra, RingAxioms) {
    std::mt19937_64 rng(31);
    for (int n = 0; n < 100; ++n) {
        const auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ((a + b) * c, a * c + b * c);
        ASSERT_TRUE((a - a).is_zero());
    }
}

TEST(FreeAlgebra, DegreesAdd) {
    std::mt19937_64 rng(32);
    for (int n = 0; n < 50; ++n) {
        const auto a = random_element(rng), b = random_element(rng);
        for (int p : a.degrees())
            for (int q : b.degrees()) {
                const auto prod = a.homogeneous_component(p) * b.homogeneous_component(q);
                if (!prod.is_zero()) ASSERT_EQ(prod.degrees(), std::set<int>{p + q});
            }
    }
}

TEST(FreeAlgebra, NsymSymbolsCarryWeight) {
    const free_element w = z(3) * z(1);
    EXPECT_EQ(w.degrees(), std::set<int>{4});
    EXPECT_EQ((y(3) * y(1)).degrees(), std::set<int>{2});
}

TEST(Tensor, Examples) {
    const tensor_element y3_1 = tensor_element::product(y(3), free_element::one());
    const tensor_element one_y2 = tensor_element::product(free_element::one(), y(2));
    EXPECT_EQ(tensor_mul(y3_1, one_y2), tensor_element::product(y(3), y(2)));
    EXPECT_EQ(tensor_element::one() * y3_1, y3_1);
    EXPECT_EQ(tensor_element::product(y(2), free_element::one()) * tensor_element::product(y(1), free_element::one()),
              tensor_element::product(y(2) * y(1), free_element::one()));

    const free_element e1 = y(3) + y(2) + y(1);
    const free_element e2 = y(3) * y(2) + y(3) * y(1) + y(2) * y(1);
    const tensor_element e1e1 = tensor_element::product(e1, e1);
    EXPECT_EQ(bidegree_project(e1e1, 1, 1), e1e1);
    const tensor_element cop = tensor_element::product(free_element::one(), e2) + e1e1 +
                               tensor_element::product(e2, free_element::one());
    EXPECT_EQ(bidegree_project(cop, 1, 1), e1e1);
    EXPECT_TRUE(bidegree_project(tensor_element::product(y(3) * y(1), free_element::one()), 1, 1).is_zero());
}

TEST(Tensor, AlgebraAndProjection) {
    std::mt19937_64 rng(33);
    for (int n = 0; n < 60; ++n) {
        const auto s = random_tensor(rng), t = random_tensor(rng), u = random_tensor(rng);
        ASSERT_EQ((s * t) * u, s * (t * u));
        ASSERT_EQ(s * (t + u), s * t + s * u);
        const auto p = s.project(1, 2);
        ASSERT_EQ(p.project(1, 2), p);
        ASSERT_EQ((s + rational(3) * t).project(1, 2), p + rational(3) * t.project(1, 2));
        // Pieces partition the tensor.
        tensor_element sum;
        for (const auto& [d, piece] : s.graded_pieces()) sum += piece;
        ASSERT_EQ(sum, s);
    }
}

TEST(Tensor, ProductOfPureTensors) {
    std::mt19937_64 rng(34);
    for (int n = 0; n < 40; ++n) {
        const auto a = random_element(rng), b = random_element(rng), c = random_element(rng), d = random_element(rng);
        ASSERT_EQ(tensor_element::product(a, b) * tensor_element::product(c, d), tensor_element::product(a * c, b * d));
    }
}

TEST(Json, RoundTripIsExactAndStable) {
    std::mt19937_64 rng(35);
    for (int n = 0; n < 50; ++n) {
        const auto e = random_element(rng);
        const json j = to_json(e);
        ASSERT_EQ(element_from_json(j), e);
        ASSERT_EQ(to_json(element_from_json(j)).dump(), j.dump());
        const auto t = random_tensor(rng);
        ASSERT_EQ(tensor_from_json(to_json(t)), t);
    }
    EXPECT_EQ(to_json(generator_symbol::x({1, 2}, 3)).dump(), R"({"x":{"A":[1,2],"i":3}})");
    EXPECT_EQ(to_json(rational(-3, 2) * y(1)).dump(), R"([{"coeff":"-3/2","word":[{"x":{"A":[],"i":1}}]}])");
}

TEST(Format, Text) {
    EXPECT_EQ(to_string(free_element()), "0");
    EXPECT_EQ(to_string(free_element::one()), "1");
    const free_element x = free_element::generator(generator_symbol::X({1})),
                       x12 = free_element::generator(generator_symbol::X({1, 2}));
    EXPECT_EQ(to_string(rational(3, 2) * x * x12 - x), "-X{1} + 3/2*X{1}*X{1,2}");
    EXPECT_EQ(to_string(tensor_element::product(x, x12 - x)), "X{1} (x) (-X{1} + X{1,2})");
}
