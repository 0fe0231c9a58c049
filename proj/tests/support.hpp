#pragma once

// Random sampling shared by the test binaries. Components come from a small
// box (numerators |p| <= 10, denominators <= 5) to keep heights low.

#include <random>
#include <vector>

#include "ncsym/ncpoly/left_polynomial.hpp"
#include "ncsym/ncpoly/pseudo_roots.hpp"
#include "ncsym/scalars/quaternion.hpp"

namespace testing_support {

using ncsym::quaternion;
using ncsym::rational;

inline rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-10, 10), den(1, 5);
    rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline quaternion random_quaternion(std::mt19937_64& rng) {
    return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline quaternion random_nonzero(std::mt19937_64& rng) {
    for (;;) {
        quaternion q = random_quaternion(rng);
        if (!is_zero(q)) return q;
    }
}

inline ncsym::left_polynomial<quaternion> random_monic(std::mt19937_64& rng, std::size_t degree) {
    std::vector<quaternion> lower;
    for (std::size_t k = 0; k < degree; ++k) lower.push_back(random_quaternion(rng));
    return ncsym::left_polynomial<quaternion>(std::move(lower));
}

/// Rejection-samples an independent root system of the given size.
inline ncsym::root_system<quaternion> random_independent(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        ncsym::root_system<quaternion> rs;
        for (std::size_t k = 0; k < n; ++k) rs.roots.push_back(random_quaternion(rng));
        if (ncsym::is_independent(rs)) return rs;
    }
}

} // namespace testing_support
