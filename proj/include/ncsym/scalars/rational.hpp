#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals backed by GMP's mpq_class.
 *
 * mpq_class keeps every value canonical (positive denominator, reduced),
 * so equality of rationals is plain structural equality.
 */

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "ncsym/errors.hpp"

namespace ncsym {

using integer = mpz_class;
using rational = mpq_class;

inline bool is_zero(const rational& q) { return sgn(q) == 0; }

inline rational inverse(const rational& q) {
    if (is_zero(q)) throw division_by_zero();
    return rational(1) / q;
}

/// Parses `p`, `-p` or `p/q` with decimal digits. No whitespace.
inline rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto digits = [&](std::size_t start) {
        std::size_t p = start;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (p == start) throw parse_error("malformed rational '" + std::string(text) + "'", p, {"digit"});
        return p;
    };
    std::size_t num_end = digits(pos);
    integer num(std::string(text.substr(pos, num_end - pos)), 10);
    integer den(1);
    if (num_end < text.size()) {
        if (text[num_end] != '/')
            throw parse_error("malformed rational '" + std::string(text) + "'", num_end, {"/"});
        std::size_t den_end = digits(num_end + 1);
        if (den_end != text.size())
            throw parse_error("trailing characters in rational", den_end);
        den = integer(std::string(text.substr(num_end + 1, den_end - num_end - 1)), 10);
        if (den == 0) throw division_by_zero();
    }
    rational q(negative ? integer(-num) : num, den);
    q.canonicalize();
    return q;
}

/// Display form: `3`, `-1/2`.
inline std::string to_string(const rational& q) { return q.get_str(); }

/// Serialization form, always with an explicit denominator: `3/1`, `-1/2`.
inline std::string to_fraction_string(const rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace ncsym
