#pragma once

/**
 * @file format.hpp
 * @brief Text rendering of free-algebra elements and tensors in the
 * expression syntax, e.g. `X{1,2}*X{1} - 3/2*X{2}` and
 * `X{1,2,3} (x) (X{1,2,3} - X{1,2})`. The output parses back to the same
 * element.
 */

#include <map>
#include <string>

#include "ncsym/freealg/element.hpp"
#include "ncsym/freealg/tensor.hpp"

namespace ncsym {

inline std::string word_to_string(const word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t n = 0; n < w.size(); ++n) {
        if (n) s += "*";
        s += to_string(w[n]);
    }
    return s;
}

inline std::string to_string(const free_element& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : e.terms()) {
        const bool negative = sgn(c) < 0;
        const rational mag = negative ? rational(-c) : c;
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        if (w.empty()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += word_to_string(w);
        }
    }
    return out;
}

/// Groups terms by left word: `u (x) (v1 + 2*v2)`; several groups are
/// parenthesised and summed.
inline std::string to_string(const tensor_element& t) {
    if (t.is_zero()) return "0";
    std::map<word, free_element> groups;
    for (const auto& [k, c] : t.terms()) groups[k[0]].add_term(k[1], c);
    auto group_text = [](const word& left, const free_element& right) {
        std::string r = to_string(right);
        if (right.size() > 1 || r.front() == '-') r = "(" + r + ")";
        return word_to_string(left) + " (x) " + r;
    };
    if (groups.size() == 1) return group_text(groups.begin()->first, groups.begin()->second);
    std::string out;
    for (const auto& [left, right] : groups) {
        if (!out.empty()) out += " + ";
        out += "(" + group_text(left, right) + ")";
    }
    return out;
}

} // namespace ncsym
