#pragma once

/**
 * @file commands.hpp
 * @brief Subcommand dispatch for the ncsym executable.
 *
 * Exit codes: 0 success, 1 mathematical failure, 2 parse or usage error.
 */

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncsym/cli/evaluate.hpp"
#include "ncsym/cli/parser.hpp"
#include "ncsym/freealg/format.hpp"
#include "ncsym/freealg/json.hpp"
#include "ncsym/ncpoly/pseudo_roots.hpp"
#include "ncsym/ncpoly/ring_matrix.hpp"
#include "ncsym/nogo/report.hpp"
#include "ncsym/nsym/nsym.hpp"
#include "ncsym/qn/json.hpp"

namespace ncsym::cli {

enum exit_code : int { ok = 0, math_failure = 1, usage_failure = 2 };

/// Splits on `sep` outside of (), {}.
inline std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline quaternion parse_quaternion_expr(const std::string& s) { return eval_quaternion(*parse_expression(s)); }

inline std::vector<quaternion> parse_quaternion_list(const std::string& s) {
    std::vector<quaternion> out;
    for (const auto& part : split_top_level(s, ',')) out.push_back(parse_quaternion_expr(part));
    return out;
}

inline json quaternion_json(const quaternion& q) {
    json c = json::array();
    for (const auto& v : q.components()) c.push_back(to_fraction_string(v));
    return {{"text", to_string(q)}, {"components", c}};
}

struct options {
    std::string expr;
    std::string at, g, h, matrix, roots, ys;
    int n = 0;
    int degree = 0;
    int p = 1, q = 1;
    int max_weight = 6;
    std::uint64_t seed = 20240101;
    bool json = false;
    bool right = false;
    bool as_written = false;
    bool rank = false;
    int max_n = qn::limits{}.max_n;
    int max_degree = qn::limits{}.max_degree;

    qn::limits lim() const { return {max_n, max_degree}; }
};

namespace detail {

inline void emit(std::ostream& out, const options& o, const json& j, const std::string& text) {
    if (o.json) out << j.dump(2) << "\n";
    else out << text << "\n";
}

inline free_element algebra_element(const options& o, bool qn_side) {
    algebra_context ctx;
    if (o.n > 0) ctx.n = o.n;
    ctx.allow_qn = qn_side;
    ctx.allow_z = !qn_side;
    const auto v = eval_algebra(*parse_expression(o.expr), ctx);
    if (v.is_tensor) throw context_error("expected an element, got a tensor");
    return v.element;
}

inline void require_n(const options& o) {
    if (o.n <= 0) throw context_error("--n is required");
}

inline int cmd_eval(const options& o, std::ostream& out) {
    const auto ast = parse_expression(o.expr);
    const quaternion x = parse_quaternion_expr(o.at);
    quaternion v;
    std::string mode = "left";
    if (o.as_written) {
        v = eval_quaternion(*ast, x);
        mode = "as-written";
    } else {
        const auto p = eval_polynomial(*ast);
        v = o.right ? eval_right(p, x) : eval_left(p, x);
        if (o.right) mode = "right";
    }
    json j = quaternion_json(v);
    j["mode"] = mode;
    emit(out, o, j, to_string(v));
    return ok;
}

inline int cmd_divide(const options& o, std::ostream& out) {
    const auto f = to_monic(eval_polynomial(*parse_expression(o.expr)));
    const quaternion x = parse_quaternion_expr(o.at);
    const auto res = right_divide(f, x);
    const std::string qt = polynomial_to_string(res.quotient.coefficients());
    emit(out, o, {{"quotient", qt}, {"remainder", quaternion_json(res.remainder)}},
         "quotient: " + qt + "\nremainder: " + to_string(res.remainder));
    return ok;
}

inline int cmd_evalfactored(const options& o, std::ostream& out) {
    const auto g = to_monic(eval_polynomial(*parse_expression(o.g)));
    const auto h = to_monic(eval_polynomial(*parse_expression(o.h)));
    const quaternion x = parse_quaternion_expr(o.at);
    const quaternion v = eval_factored(g, h, x);
    const quaternion direct = eval_left(poly_mul(g, h), x);
    json j = quaternion_json(v);
    j["matches_expanded"] = v == direct;
    emit(out, o, j, to_string(v));
    return v == direct ? ok : math_failure;
}

inline int cmd_quasidet(const options& o, std::ostream& out) {
    std::vector<std::vector<quaternion>> rows;
    for (const auto& row : split_top_level(o.matrix, ';')) rows.push_back(parse_quaternion_list(row));
    const std::size_t n = rows.size();
    ring_matrix<quaternion> m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n) throw context_error("--matrix must be square");
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
    }
    if (o.p < 1 || o.q < 1 || std::size_t(o.p) > n || std::size_t(o.q) > n)
        throw context_error("--p and --q must lie in 1.." + std::to_string(n));
    const quaternion v = quasidet(m, std::size_t(o.p - 1), std::size_t(o.q - 1));
    emit(out, o, quaternion_json(v), to_string(v));
    return ok;
}

inline int cmd_vandermonde(const options& o, std::ostream& out) {
    const auto xs = parse_quaternion_list(o.roots);
    const quaternion v = vandermonde_qd(xs);
    emit(out, o, quaternion_json(v), to_string(v));
    return ok;
}

inline std::string numbered(const char* name, const std::vector<quaternion>& vs) {
    std::string s;
    for (std::size_t r = 0; r < vs.size(); ++r)
        s += (r ? ", " : "") + std::string(name) + std::to_string(r + 1) + "=" + to_string(vs[r]);
    return s;
}

inline json numbered_json(const std::vector<quaternion>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(quaternion_json(v));
    return a;
}

inline int cmd_pseudoroots(const options& o, std::ostream& out) {
    const root_system<quaternion> rs{parse_quaternion_list(o.roots)};
    if (!is_independent(rs)) throw undefined_error("roots are dependent: some Vandermonde quasideterminant is undefined");
    const auto ys = pseudo_roots(rs);
    emit(out, o, {{"pseudo_roots", numbered_json(ys)}}, numbered("y", ys));
    return ok;
}

inline int cmd_vieta(const options& o, std::ostream& out) {
    std::vector<quaternion> ys;
    if (!o.ys.empty()) {
        ys = parse_quaternion_list(o.ys);
    } else if (!o.roots.empty()) {
        const root_system<quaternion> rs{parse_quaternion_list(o.roots)};
        if (!is_independent(rs)) throw undefined_error("roots are dependent: some Vandermonde quasideterminant is undefined");
        ys = pseudo_roots(rs);
    } else {
        throw context_error("vieta needs --ys or --roots");
    }
    const auto es = vieta(ys);
    emit(out, o, {{"elementary", numbered_json(es)}}, numbered("e", es));
    return ok;
}

inline int cmd_nf(const options& o, std::ostream& out) {
    require_n(o);
    const auto nf = qn::reduce(algebra_element(o, true), o.n, o.lim());
    json j = qn::to_json(nf);
    j["text"] = to_string(nf.to_element());
    emit(out, o, j, to_string(nf.to_element()) + "\n  strings: " + qn::strings_to_string(nf));
    return ok;
}

inline int cmd_basis(const options& o, std::ostream& out) {
    require_n(o);
    qn::check_limits(o.n, o.degree, o.lim());
    const auto basis = qn::enumerate_basis(o.n, o.degree);
    json a = json::array();
    std::string text;
    for (const auto& s : basis) {
        a.push_back(qn::to_json(s));
        text += qn::to_string(s) + "  " + word_to_string(nogo::word_of(s)) + "\n";
    }
    text += std::to_string(basis.size()) + " strings";
    emit(out, o, {{"n", o.n}, {"degree", o.degree}, {"basis", a}}, text);
    return ok;
}

inline int cmd_dim(const options& o, std::ostream& out) {
    require_n(o);
    qn::check_limits(o.n, o.degree, o.lim());
    const std::size_t count = qn::hilbert_dim(o.n, o.degree);
    const std::size_t codim = qn::relation_codimension(o.n, o.degree, o.lim());
    emit(out, o, {{"n", o.n}, {"degree", o.degree}, {"admissible_strings", count}, {"relation_codimension", codim}},
         "dim Q_{" + std::to_string(o.n) + "," + std::to_string(o.degree) + "} = " + std::to_string(count) +
             " (admissible strings " + std::to_string(count) + ", relation codimension " + std::to_string(codim) + ")");
    return count == codim ? ok : math_failure;
}

inline int cmd_nsym_cop(const options& o, std::ostream& out) {
    const auto t = nsym::coproduct(algebra_element(o, false));
    emit(out, o, ncsym::to_json(t), to_string(t));
    return ok;
}

inline int cmd_nsym_counit(const options& o, std::ostream& out) {
    const rational c = nsym::counit(algebra_element(o, false));
    emit(out, o, {{"counit", to_fraction_string(c)}}, to_string(c));
    return ok;
}

inline int cmd_nsym_antipode(const options& o, std::ostream& out) {
    const auto s = nsym::antipode(algebra_element(o, false));
    emit(out, o, ncsym::to_json(s), to_string(s));
    return ok;
}

inline int cmd_hopf_check(const options& o, std::ostream& out) {
    if (o.max_weight < 0 || o.max_weight > 8) throw range_error("--max-weight must lie in 0..8");
    const auto rep = nsym::hopf_check(o.max_weight);
    json a = json::array();
    std::string text;
    for (const auto& ax : rep.axioms) {
        a.push_back({{"axiom", ax.name}, {"cases", ax.cases}, {"failures", ax.failures}});
        text += ax.name + ": " + (ax.passed() ? "ok" : "FAILED") + " (" + std::to_string(ax.cases) + " cases)\n";
    }
    text += rep.passed() ? "all axioms hold" : "some axioms FAILED";
    emit(out, o, {{"max_weight", rep.max_weight}, {"axioms", a}, {"passed", rep.passed()}}, text);
    return rep.passed() ? ok : math_failure;
}

inline int cmd_phi(const options& o, std::ostream& out) {
    require_n(o);
    if (o.rank) {
        const auto rep = nogo::phi_independence_check(o.n, o.degree, o.lim());
        emit(out, o,
             {{"n", rep.n}, {"max_weight", rep.max_weight}, {"images", rep.images}, {"rank", rep.rank},
              {"independent", rep.independent()}},
             "rank " + std::to_string(rep.rank) + " of " + std::to_string(rep.images) + " images: " +
                 (rep.independent() ? "independent" : "DEPENDENT"));
        return rep.independent() ? ok : math_failure;
    }
    const auto nf = nogo::phi(algebra_element(o, false), o.n, o.lim());
    json j = qn::to_json(nf);
    j["text"] = to_string(nf.to_element());
    emit(out, o, j, to_string(nf.to_element()));
    return ok;
}

inline int cmd_nogo(const options& o, std::ostream& out) {
    require_n(o);
    nogo::witness_options wo;
    wo.seed = o.seed;
    wo.lim = o.lim();
    const auto rep = nogo::nogo_witness(o.n, wo);
    if (o.json) out << nogo::to_json(rep).dump(2) << "\n";
    else out << nogo::transcript(rep);
    return rep.witness_nonzero ? ok : math_failure;
}

} // namespace detail

/// Runs one command line (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with noncommutative polynomials, Q_n and NSym", "ncsym"};
    app.require_subcommand(1);
    options o;

    auto common = [&](CLI::App* c) {
        c->add_flag("--json", o.json, "JSON output");
        c->add_option("--seed", o.seed, "seed for randomized checks");
        c->add_option("--max-n", o.max_n, "largest n for Q_n computations");
        c->add_option("--max-degree", o.max_degree, "largest degree for Q_n normal forms");
    };
    auto with_n = [&](CLI::App* c) { c->add_option("--n", o.n, "number of roots (Q_n context)"); };
    auto with_degree = [&](CLI::App* c) { c->add_option("--degree", o.degree, "degree"); };
    auto with_expr = [&](CLI::App* c) { c->add_option("expr", o.expr, "expression")->required(); };

    std::vector<std::pair<CLI::App*, std::function<int(const options&, std::ostream&)>>> handlers;
    auto sub = [&](const char* name, const char* help, int (*fn)(const options&, std::ostream&)) {
        CLI::App* c = app.add_subcommand(name, help);
        common(c);
        handlers.emplace_back(c, fn);
        return c;
    };

    auto* eval = sub("eval", "evaluate a polynomial in t at a quaternion", detail::cmd_eval);
    with_expr(eval);
    eval->add_option("--at", o.at, "quaternion")->required();
    eval->add_flag("--right", o.right, "read coefficients as sitting right of t");
    eval->add_flag("--as-written", o.as_written, "substitute t where it is written, without collecting");

    auto* divide = sub("divide", "divide a monic polynomial on the right by t - x", detail::cmd_divide);
    with_expr(divide);
    divide->add_option("--at", o.at, "quaternion x")->required();

    auto* ef = sub("evalfactored", "evaluate g*h at x via the product formula", detail::cmd_evalfactored);
    ef->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
    ef->add_option("--g", o.g, "monic polynomial g")->required();
    ef->add_option("--h", o.h, "monic polynomial h")->required();
    ef->add_option("--at", o.at, "quaternion x")->required();

    auto* qd = sub("quasidet", "quasideterminant |M|_{pq}", detail::cmd_quasidet);
    qd->add_option("--matrix", o.matrix, "rows separated by ';', entries by ','")->required();
    qd->add_option("--p", o.p, "row, 1-based");
    qd->add_option("--q", o.q, "column, 1-based");

    auto* vd = sub("vandermonde", "Vandermonde quasideterminant of x_1..x_r", detail::cmd_vandermonde);
    vd->add_option("--roots", o.roots, "comma-separated quaternions")->required();

    auto* pr = sub("pseudoroots", "pseudo-roots y_1..y_n of independent roots", detail::cmd_pseudoroots);
    pr->add_option("--roots", o.roots, "comma-separated quaternions")->required();

    auto* vi = sub("vieta", "e_1..e_n from pseudo-roots", detail::cmd_vieta);
    vi->add_option("--ys", o.ys, "pseudo-roots y_1..y_n");
    vi->add_option("--roots", o.roots, "roots x_1..x_n");

    auto* nf = sub("nf", "normal form in Q_n", detail::cmd_nf);
    with_expr(nf);
    with_n(nf);

    auto* basis = sub("basis", "admissible strings of a given weight", detail::cmd_basis);
    with_n(basis);
    with_degree(basis);

    auto* dim = sub("dim", "dimension of the weight-d piece of Q_n", detail::cmd_dim);
    with_n(dim);
    with_degree(dim);

    with_expr(sub("nsym-cop", "coproduct in NSym", detail::cmd_nsym_cop));
    with_expr(sub("nsym-counit", "counit in NSym", detail::cmd_nsym_counit));
    with_expr(sub("nsym-antipode", "antipode in NSym", detail::cmd_nsym_antipode));

    auto* hc = sub("hopf-check", "verify the Hopf axioms of NSym up to a weight", detail::cmd_hopf_check);
    hc->add_option("--max-weight", o.max_weight, "largest weight (default 6)");

    auto* phi = sub("phi", "image of an NSym element in Q_n", detail::cmd_phi);
    phi->add_option("expr", o.expr, "NSym expression");
    with_n(phi);
    with_degree(phi);
    phi->add_flag("--rank", o.rank, "rank of all Phi(z_gamma) with |gamma| <= --degree");

    auto* ng = sub("nogo", "obstruction to a compatible bialgebra structure on Q_n", detail::cmd_nogo);
    with_n(ng);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_failure;
    }

    try {
        for (const auto& [c, fn] : handlers)
            if (c->parsed()) {
                if (c->get_name() == "phi" && !o.rank && o.expr.empty())
                    throw context_error("phi needs an expression or --rank");
                return fn(o, out);
            }
    } catch (const parse_error& e) {
        err << e.what() << "\n";
        return usage_failure;
    } catch (const context_error& e) {
        err << "error: " << e.what() << "\n";
        return usage_failure;
    } catch (const math_error& e) {
        err << "math error: " << e.what() << "\n";
        return math_failure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_failure;
    }
    return usage_failure;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace ncsym::cli
