#pragma once

/**
 * @file quaternion.hpp
 * @brief Quaternions over an exact field; `quaternion` is the rational
 * division ring used throughout the library.
 */

#include <array>
#include <ostream>
#include <string>
#include <string_view>

#include "ncsym/errors.hpp"
#include "ncsym/scalars/rational.hpp"

namespace ncsym {

template <class T>
class basic_quaternion {
public:
    using value_type = T;

    basic_quaternion() : c_{T(0), T(0), T(0), T(0)} {}
    basic_quaternion(int real) : c_{T(real), T(0), T(0), T(0)} {}  // NOLINT: scalars embed implicitly
    basic_quaternion(T real) : c_{std::move(real), T(0), T(0), T(0)} {}  // NOLINT
    basic_quaternion(T w, T x, T y, T z) : c_{std::move(w), std::move(x), std::move(y), std::move(z)} {}

    static basic_quaternion i() { return {T(0), T(1), T(0), T(0)}; }
    static basic_quaternion j() { return {T(0), T(0), T(1), T(0)}; }
    static basic_quaternion k() { return {T(0), T(0), T(0), T(1)}; }

    const T& w() const { return c_[0]; }
    const T& x() const { return c_[1]; }
    const T& y() const { return c_[2]; }
    const T& z() const { return c_[3]; }
    const std::array<T, 4>& components() const { return c_; }

    bool is_real() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    basic_quaternion conj() const { return {c_[0], T(-c_[1]), T(-c_[2]), T(-c_[3])}; }

    T norm() const { return T(c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3]); }

    basic_quaternion& operator+=(const basic_quaternion& o) {
        for (int n = 0; n < 4; ++n) c_[n] += o.c_[n];
        return *this;
    }
    basic_quaternion& operator-=(const basic_quaternion& o) {
        for (int n = 0; n < 4; ++n) c_[n] -= o.c_[n];
        return *this;
    }
    basic_quaternion& operator*=(const basic_quaternion& o) { return *this = *this * o; }

    friend basic_quaternion operator+(basic_quaternion a, const basic_quaternion& b) { return a += b; }
    friend basic_quaternion operator-(basic_quaternion a, const basic_quaternion& b) { return a -= b; }
    friend basic_quaternion operator-(const basic_quaternion& a) {
        return {T(-a.c_[0]), T(-a.c_[1]), T(-a.c_[2]), T(-a.c_[3])};
    }

    // i^2 = j^2 = k^2 = ijk = -1
    friend basic_quaternion operator*(const basic_quaternion& a, const basic_quaternion& b) {
        const auto& [a0, a1, a2, a3] = a.c_;
        const auto& [b0, b1, b2, b3] = b.c_;
        return {T(a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3),
                T(a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2),
                T(a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1),
                T(a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0)};
    }

    friend basic_quaternion operator*(const T& s, const basic_quaternion& q) {
        return {T(s * q.c_[0]), T(s * q.c_[1]), T(s * q.c_[2]), T(s * q.c_[3])};
    }

    friend bool operator==(const basic_quaternion& a, const basic_quaternion& b) { return a.c_ == b.c_; }

    friend bool is_zero(const basic_quaternion& q) {
        return q.c_[0] == 0 && q.c_[1] == 0 && q.c_[2] == 0 && q.c_[3] == 0;
    }

    friend basic_quaternion inverse(const basic_quaternion& q) {
        if (is_zero(q)) throw division_by_zero();
        T inv_norm = T(1) / q.norm();
        return inv_norm * q.conj();
    }

private:
    std::array<T, 4> c_;
};

using quaternion = basic_quaternion<rational>;

/// Renders `a+bi+cj+dk`, dropping zero parts and unit coefficients:
/// `2i`, `-1-i+j-k`, `1/2+3i-j`, `0`.
template <class T>
std::string to_string(const basic_quaternion<T>& q) {
    static constexpr std::array<const char*, 4> units{"", "i", "j", "k"};
    std::string out;
    for (int n = 0; n < 4; ++n) {
        const T& c = q.components()[n];
        if (c == 0) continue;
        bool negative = c < 0;
        T mag = negative ? T(-c) : c;
        if (negative) out += "-";
        else if (!out.empty()) out += "+";
        if (n == 0 || mag != 1) out += to_string(mag);
        out += units[n];
    }
    return out.empty() ? "0" : out;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const basic_quaternion<T>& q) {
    return os << to_string(q);
}

/**
 * Parses the literal syntax `a+bi+cj+dk`: a signed sum of terms, each a
 * rational, a unit `i`/`j`/`k`, or a rational immediately followed by a
 * unit (`3i`, `1/2k`). Repeated units accumulate. Whitespace is ignored.
 */
inline quaternion parse_quaternion(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw parse_error("empty quaternion literal", 0, {"rational", "i", "j", "k"});

    std::array<rational, 4> acc{rational(0), rational(0), rational(0), rational(0)};
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw parse_error("expected sign between quaternion terms", pos, {"+", "-"});
        }
        std::size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
        rational coeff(1);
        bool has_number = pos > start;
        if (has_number) coeff = parse_rational(std::string_view(s).substr(start, pos - start));
        int unit = 0;
        if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) {
            unit = 1 + (s[pos] - 'i');
            ++pos;
        } else if (!has_number) {
            throw parse_error("expected quaternion term", pos, {"rational", "i", "j", "k"});
        }
        acc[unit] += negative ? rational(-coeff) : coeff;
    }
    return {acc[0], acc[1], acc[2], acc[3]};
}

} // namespace ncsym
