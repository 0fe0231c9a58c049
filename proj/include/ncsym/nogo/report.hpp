#pragma once

/**
 * @file report.hpp
 * @brief JSON and plain-text renderings of a nogo_report.
 */

#include <sstream>
#include <string>

#include "ncsym/freealg/json.hpp"
#include "ncsym/qn/json.hpp"
#include "ncsym/nogo/witness.hpp"

namespace ncsym::nogo {

inline json to_json(const counit_result& c) {
    json branches = json::array();
    for (const auto& b : c.branches) branches.push_back({{"steps", b.steps}});
    json assignment = json::array();
    for (const auto& [g, v] : c.assignment.values)
        assignment.push_back({{"generator", ncsym::to_json(generator_symbol::x(g.first, g.second))},
                              {"value", to_fraction_string(v)}});
    json undetermined = json::array();
    for (const auto& g : c.undetermined) undetermined.push_back(generator_name(g));
    return {{"branch_count", c.branches.size()},
            {"branches", branches},
            {"branches_agree", c.branches_agree},
            {"propagation", c.propagation},
            {"assignment", assignment},
            {"determined", c.determined},
            {"undetermined", undetermined},
            {"satisfies_constraints", c.satisfies_constraints},
            {"all_zero", c.all_zero()}};
}

inline json to_json(const low_bidegree_coproduct& low) {
    json out = json::array();
    for (const auto& g : low.generators) {
        json slices = json::object();
        for (const auto& [bd, t] : g.forced)
            slices[std::to_string(bd[0]) + "," + std::to_string(bd[1])] = ncsym::to_json(t);
        json free_bd = json::array();
        for (const auto& bd : g.free_bidegrees) free_bd.push_back({bd[0], bd[1]});
        out.push_back({{"r", g.r}, {"forced_slices", slices}, {"free_unknowns", g.free_unknowns}, {"free_bidegrees", free_bd}});
    }
    return out;
}

inline json to_json(const nogo_report& rep) {
    json expansion = json::array();
    for (const auto& [k, c] : rep.basis_expansion)
        expansion.push_back({{"left", qn::to_json(k.first)}, {"right", qn::to_json(k.second)}, {"coeff", to_fraction_string(c)}});
    return {{"n", rep.n},
            {"assumptions", rep.assumptions},
            {"counit", to_json(rep.counit)},
            {"coproduct_low", to_json(rep.coproduct)},
            {"weight_one_constraint", rep.weight_one_constraint},
            {"weight_one_consistent", rep.weight_one_consistent},
            {"ansatz_stable", rep.ansatz_stable},
            {"witness", ncsym::to_json(rep.witness)},
            {"witness_text", to_string(rep.witness)},
            {"basis_expansion", expansion},
            {"witness_is_sum_of_squares", rep.witness_is_sum_of_squares},
            {"witness_nonzero", rep.witness_nonzero}};
}

/// Step-by-step account of the argument for this n.
inline std::string transcript(const nogo_report& rep) {
    std::ostringstream os;
    const int n = rep.n;
    os << "No bialgebra structure on Q_" << n << " extends the one on NSym(" << n << ")\n\n";
    os << "Assumptions:\n";
    for (const auto& a : rep.assumptions) os << "  - " << a << "\n";

    os << "\nThe counit on the generators\n";
    os << "  " << rep.counit.branches.size() << " vanishing branches examined";
    os << (rep.counit.branches_agree ? ", all reaching the same assignment.\n" : ", which DISAGREE.\n");
    if (!rep.counit.branches.empty()) {
        os << "  first branch:\n";
        for (const auto& s : rep.counit.branches.front().steps) os << "    " << s << "\n";
    }
    os << "  propagation through the sum and product relations:\n";
    for (const auto& s : rep.counit.propagation) os << "    " << s << "\n";
    os << "  => eps~(x_{A,i}) = 0 for all " << rep.counit.assignment.values.size() << " generators: "
       << (rep.counit.all_zero() ? "yes" : "no") << "\n";

    os << "\nThe comultiplication on the generators\n";
    for (const auto& g : rep.coproduct.generators) {
        os << "  Delta~(y" << g.r << ") = " << to_string(g.forced_part()) << " + f_" << g.r << "\n";
        os << "    forced slices (0,0) (1,0) (0,1) (2,0) (0,2); " << g.free_unknowns
           << " free coefficients, all in bidegree (1,1)\n";
    }

    os << "\nWeight one\n";
    os << "  (Phi (x) Phi)(Delta z1) = e1 (x) 1 + 1 (x) e1 matches the forced part of Delta~(e1): "
       << (rep.weight_one_consistent ? "yes" : "no") << "\n";
    os << "  leaving " << rep.weight_one_constraint << " (not needed below)\n";

    os << "\nWeight two, bidegree (1,1)\n";
    os << "  (Phi (x) Phi)(Delta z2) contributes e1 (x) e1; Delta~(e2) contributes sum_{a!=b} y_a (x) y_b\n";
    os << "  random f_r leave this component unchanged: " << (rep.ansatz_stable ? "yes" : "no") << "\n";
    os << "  their difference must vanish, but it is sum_r y_r (x) y_r"
       << (rep.witness_is_sum_of_squares ? "" : " (MISMATCH)") << " =\n";
    os << "    " << to_string(rep.witness) << "\n";
    os << "  coordinates over basis pairs:\n";
    for (const auto& [k, c] : rep.basis_expansion)
        os << "    " << qn::to_string(k.first) << " (x) " << qn::to_string(k.second) << " : " << to_string(c) << "\n";
    os << "\nConclusion: the witness is " << (rep.witness_nonzero ? "nonzero" : "ZERO") << "; "
       << (rep.witness_nonzero ? "no compatible bialgebra structure exists.\n"
                               : "the obstruction was not found.\n");
    return os.str();
}

} // namespace ncsym::nogo
