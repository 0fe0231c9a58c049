#pragma once

/**
 * @file json.hpp
 * @brief Canonical JSON for free-algebra elements and tensors.
 *
 *   symbol  : {"x": {"A": [..], "i": n}} | {"X": [..]} | {"z": r}
 *   element : [{"coeff": "p/q", "word": [symbol, ...]}, ...]
 *   tensor  : [{"coeff": "p/q", "left_word": [...], "right_word": [...]}, ...]
 *
 * Terms appear in the element's canonical word order, so equal elements
 * serialize to identical bytes.
 */

#include <nlohmann/json.hpp>

#include "ncsym/freealg/element.hpp"
#include "ncsym/freealg/tensor.hpp"

namespace ncsym {

using json = nlohmann::json;

inline json to_json(const generator_symbol& s) {
    if (s.is_pseudo_root()) return {{"x", {{"A", s.as_pseudo_root().set}, {"i", s.as_pseudo_root().index}}}};
    if (s.is_x()) return {{"X", s.as_x().set}};
    return {{"z", s.as_z().r}};
}

inline generator_symbol symbol_from_json(const json& j) {
    if (!j.is_object() || j.size() != 1) throw parse_error("symbol must be a one-key object", 0);
    if (j.contains("x")) return generator_symbol::x(j.at("x").at("A").get<index_set>(), j.at("x").at("i").get<int>());
    if (j.contains("X")) return generator_symbol::X(j.at("X").get<index_set>());
    if (j.contains("z")) return generator_symbol::z(j.at("z").get<int>());
    throw parse_error("unknown symbol kind", 0, {"x", "X", "z"});
}

inline json word_to_json(const word& w) {
    json a = json::array();
    for (const auto& s : w) a.push_back(to_json(s));
    return a;
}

inline word word_from_json(const json& j) {
    word w;
    for (const auto& s : j) w.push_back(symbol_from_json(s));
    return w;
}

inline json to_json(const free_element& e) {
    json a = json::array();
    for (const auto& [w, c] : e.terms()) a.push_back({{"coeff", to_fraction_string(c)}, {"word", word_to_json(w)}});
    return a;
}

inline free_element element_from_json(const json& j) {
    free_element e;
    for (const auto& t : j) e.add_term(word_from_json(t.at("word")), parse_rational(t.at("coeff").get<std::string>()));
    return e;
}

inline json to_json(const tensor_element& t) {
    json a = json::array();
    for (const auto& [k, c] : t.terms())
        a.push_back({{"coeff", to_fraction_string(c)}, {"left_word", word_to_json(k[0])}, {"right_word", word_to_json(k[1])}});
    return a;
}

inline tensor_element tensor_from_json(const json& j) {
    tensor_element t;
    for (const auto& term : j)
        t.add_term({word_from_json(term.at("left_word")), word_from_json(term.at("right_word"))},
                   parse_rational(term.at("coeff").get<std::string>()));
    return t;
}

} // namespace ncsym
