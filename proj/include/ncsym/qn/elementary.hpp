#pragma once

#include <vector>

#include "ncsym/qn/normal_form.hpp"

namespace ncsym::qn {

/// e_1, ..., e_n of Q_n as unreduced X-form elements:
/// e_r = sum over i_r > ... > i_1 of y_{i_r} ... y_{i_1}.
inline std::vector<free_element> elementary_elements(int n) {
    std::vector<free_element> e(n + 1);
    e[0] = free_element::one();
    for (int m = 1; m <= n; ++m) {
        const free_element y = chain_generator(m, n);
        for (int r = m; r >= 1; --r) e[r] += y * e[r - 1];
    }
    e.erase(e.begin());
    return e;
}

inline free_element elementary_element(int n, int r) {
    if (r < 1 || r > n) throw range_error("elementary index outside [1, n]");
    return elementary_elements(n)[r - 1];
}

inline normal_form elementary(int n, int r, const limits& lim = {}) {
    return reduce(elementary_element(n, r), n, lim);
}

} // namespace ncsym::qn
