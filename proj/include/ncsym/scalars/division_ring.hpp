#pragma once

#include <concepts>

#include "ncsym/scalars/rational.hpp"

namespace ncsym {

/**
 * What the noncommutative polynomial code needs from its scalars: ring
 * operations, exact equality, a zero test and two-sided inverses of
 * nonzero elements. Multiplication is not assumed to commute.
 *
 * `R{}` must be the zero element and `R(1)` the unit.
 */
template <class R>
concept division_ring = std::regular<R> && requires(const R a, const R b) {
    { R(1) };
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { inverse(a) } -> std::convertible_to<R>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

} // namespace ncsym
