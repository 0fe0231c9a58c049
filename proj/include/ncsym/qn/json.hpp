#pragma once

#include "ncsym/freealg/json.hpp"
#include "ncsym/qn/normal_form.hpp"

namespace ncsym::qn {

/// [{"A": [..], "j": j}, ...]
inline json to_json(const admissible_string& s) {
    json a = json::array();
    for (const auto& b : s.blocks()) a.push_back({{"A", b.set}, {"j", b.j}});
    return a;
}

/// {"n": n, "terms": [{"coeff": "p/q", "string": [...], "word": [...]}, ...]}
inline json to_json(const normal_form& nf) {
    json terms = json::array();
    for (const auto& [s, c] : nf.coords()) {
        word w;
        for (const auto& set : s.sets()) w.push_back(generator_symbol::X(set));
        terms.push_back({{"coeff", to_fraction_string(c)}, {"string", to_json(s)}, {"word", word_to_json(w)}});
    }
    return {{"n", nf.n()}, {"terms", terms}};
}

/// Display form, e.g. `({1,2}:2) - ({1}:1)({1}:1)`.
inline std::string strings_to_string(const normal_form& nf) {
    if (nf.is_zero()) return "0";
    std::string out;
    for (const auto& [s, c] : nf.coords()) {
        const bool negative = sgn(c) < 0;
        const rational mag = negative ? rational(-c) : c;
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        if (s.blocks().empty()) {
            out += ncsym::to_string(mag);
            continue;
        }
        if (mag != 1) out += ncsym::to_string(mag) + "*";
        out += to_string(s);
    }
    return out;
}

} // namespace ncsym::qn
