#pragma once

/**
 * @file evaluate.hpp
 * @brief Interpretations of an expression tree: quaternion constant,
 * polynomial in a central t, free-algebra element or tensor.
 */

#include <optional>
#include <string>
#include <vector>

#include "ncsym/cli/ast.hpp"
#include "ncsym/cli/render.hpp"
#include "ncsym/errors.hpp"
#include "ncsym/freealg/element.hpp"
#include "ncsym/freealg/tensor.hpp"
#include "ncsym/ncpoly/left_polynomial.hpp"
#include "ncsym/qn/generators.hpp"
#include "ncsym/scalars/quaternion.hpp"

namespace ncsym::cli {

/// Raised when an expression is well formed but means nothing in the
/// requested context (a unit inside Q_n, a tensor as a polynomial, ...).
class context_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Quaternion value; t is replaced by `at` exactly where it is written.
inline quaternion eval_quaternion(const node& e, const std::optional<quaternion>& at = std::nullopt) {
    auto sub = [&](std::size_t c) { return eval_quaternion(*e.children[c], at); };
    switch (e.kind) {
    case node_kind::number: return quaternion(e.value);
    case node_kind::unit: return e.unit == 'i' ? quaternion::i() : e.unit == 'j' ? quaternion::j() : quaternion::k();
    case node_kind::var_t:
        if (!at) throw context_error("t needs a value here");
        return *at;
    case node_kind::neg: return -sub(0);
    case node_kind::add: return sub(0) + sub(1);
    case node_kind::sub: return sub(0) - sub(1);
    case node_kind::mul: return sub(0) * sub(1);
    case node_kind::pow: return power(sub(0), static_cast<std::size_t>(e.index));
    default: throw context_error("'" + render(e) + "' is not a quaternion expression");
    }
}

/// Polynomial with quaternion coefficients in a central variable t,
/// coefficient of t^k at index k. Not necessarily monic.
using dense_polynomial = std::vector<quaternion>;

inline void trim(dense_polynomial& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

inline dense_polynomial eval_polynomial(const node& e) {
    auto sub = [&](std::size_t c) { return eval_polynomial(*e.children[c]); };
    auto add = [](dense_polynomial a, const dense_polynomial& b, bool minus) {
        if (a.size() < b.size()) a.resize(b.size());
        for (std::size_t n = 0; n < b.size(); ++n) a[n] = minus ? a[n] - b[n] : a[n] + b[n];
        trim(a);
        return a;
    };
    auto mul = [](const dense_polynomial& a, const dense_polynomial& b) {
        if (a.empty() || b.empty()) return dense_polynomial{};
        dense_polynomial c(a.size() + b.size() - 1);
        for (std::size_t x = 0; x < a.size(); ++x)
            for (std::size_t y = 0; y < b.size(); ++y) c[x + y] += a[x] * b[y];
        trim(c);
        return c;
    };
    switch (e.kind) {
    case node_kind::var_t: return {quaternion(), quaternion(1)};
    case node_kind::neg: return add({}, sub(0), true);
    case node_kind::add: return add(sub(0), sub(1), false);
    case node_kind::sub: return add(sub(0), sub(1), true);
    case node_kind::mul: return mul(sub(0), sub(1));
    case node_kind::pow: {
        dense_polynomial r{quaternion(1)}, b = sub(0);
        for (int n = 0; n < e.index; ++n) r = mul(r, b);
        return r;
    }
    default: {
        dense_polynomial p{eval_quaternion(e)};
        trim(p);
        return p;
    }
    }
}

/// a_0 + a_1 x + ... + a_m x^m.
inline quaternion eval_left(const dense_polynomial& p, const quaternion& x) {
    quaternion r;
    for (std::size_t k = p.size(); k-- > 0;) r = r * x + p[k];
    return r;
}

/// a_0 + x a_1 + ... + x^m a_m.
inline quaternion eval_right(const dense_polynomial& p, const quaternion& x) {
    quaternion r;
    for (std::size_t k = p.size(); k-- > 0;) r = x * r + p[k];
    return r;
}

inline left_polynomial<quaternion> to_monic(const dense_polynomial& p) {
    if (p.empty() || !(p.back() == quaternion(1)))
        throw context_error("expected a monic polynomial in t");
    return left_polynomial<quaternion>::from_coefficients(p);
}

inline std::string polynomial_to_string(const dense_polynomial& p) {
    if (p.empty()) return "0";
    std::string s;
    for (std::size_t k = p.size(); k-- > 0;) {
        const quaternion& c = p[k];
        if (is_zero(c)) continue;
        // Single negative component: pull the sign out.
        int nonzero = 0;
        bool negative = false;
        for (const auto& v : c.components())
            if (!is_zero(v)) {
                ++nonzero;
                negative = sgn(v) < 0;
            }
        const bool pull = nonzero == 1 && negative;
        const quaternion a = pull ? -c : c;
        std::string mono = k == 0 ? "" : k == 1 ? "t" : "t^" + std::to_string(k);
        std::string coeff = to_string(a);
        std::string piece;
        if (k == 0) piece = coeff;
        else if (a == quaternion(1)) piece = mono;
        else if (nonzero == 1) piece = coeff + "*" + mono;
        else piece = "(" + coeff + ")*" + mono;
        if (s.empty()) s = pull ? "-" + piece : piece;
        else s += (pull ? " - " : " + ") + piece;
    }
    return s;
}

/// Either a free-algebra element or a tensor of two.
struct algebra_value {
    bool is_tensor = false;
    free_element element;
    tensor_element tensor;
};

struct algebra_context {
    std::optional<int> n;  ///< needed for y r
    bool allow_qn = true;  ///< x, X, y symbols
    bool allow_z = true;
};

inline algebra_value eval_algebra(const node& e, const algebra_context& ctx) {
    auto sub = [&](std::size_t c) { return eval_algebra(*e.children[c], ctx); };
    auto elem = [](free_element x) { return algebra_value{false, std::move(x), {}}; };
    auto tens = [](tensor_element x) { return algebra_value{true, {}, std::move(x)}; };
    auto as_tensor = [](const algebra_value& v) {
        if (v.is_tensor) return v.tensor;
        // Only scalars promote to tensors.
        if (v.element.degrees().empty() || (v.element.degrees().size() == 1 && *v.element.degrees().begin() == 0))
            return v.element.constant_term() * tensor_element::one();
        throw context_error("cannot combine an element with a tensor");
    };
    auto qn_symbol = [&]() {
        if (!ctx.allow_qn) throw context_error("'" + render(e) + "' is not allowed here; use z r");
    };
    switch (e.kind) {
    case node_kind::number: return elem(free_element::scalar(e.value));
    case node_kind::unit:
    case node_kind::var_t: throw context_error("'" + render(e) + "' is not allowed in an algebra expression");
    case node_kind::gen_x: qn_symbol(); return elem(free_element::generator(generator_symbol::x(e.set, e.index)));
    case node_kind::gen_X: qn_symbol(); return elem(free_element::generator(generator_symbol::X(e.set)));
    case node_kind::gen_y:
        qn_symbol();
        if (!ctx.n) throw context_error("y r needs --n");
        return elem(qn::chain_generator(e.index, *ctx.n));
    case node_kind::gen_z:
        if (!ctx.allow_z) throw context_error("z r is not allowed here");
        return elem(free_element::generator(generator_symbol::z(e.index)));
    case node_kind::neg: {
        auto a = sub(0);
        return a.is_tensor ? tens(rational(-1) * a.tensor) : elem(rational(-1) * a.element);
    }
    case node_kind::add:
    case node_kind::sub: {
        auto a = sub(0), b = sub(1);
        const bool minus = e.kind == node_kind::sub;
        if (!a.is_tensor && !b.is_tensor) return elem(minus ? a.element - b.element : a.element + b.element);
        return tens(minus ? as_tensor(a) - as_tensor(b) : as_tensor(a) + as_tensor(b));
    }
    case node_kind::mul: {
        auto a = sub(0), b = sub(1);
        if (!a.is_tensor && !b.is_tensor) return elem(a.element * b.element);
        return tens(as_tensor(a) * as_tensor(b));
    }
    case node_kind::pow: {
        auto a = sub(0);
        if (a.is_tensor) {
            tensor_element r = tensor_element::one();
            for (int n = 0; n < e.index; ++n) r = r * a.tensor;
            return tens(r);
        }
        return elem(power(a.element, static_cast<unsigned>(e.index)));
    }
    case node_kind::tensor: {
        auto a = sub(0), b = sub(1);
        if (a.is_tensor || b.is_tensor) throw context_error("only tensor squares are supported");
        return tens(tensor_element::product(a.element, b.element));
    }
    }
    throw context_error("unknown node");
}

} // namespace ncsym::cli
