#include "aode/cli.hpp"

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "aode/algebraic.hpp"
#include "aode/bivariate.hpp"
#include "aode/parse.hpp"
#include "aode/render.hpp"

namespace aode {

namespace {

Rational parse_order(const std::string& text) {
    Elem e = parse_constant(text);
    if (!e.is_rational()) throw ParseError("the order must be a rational number", 1, 1);
    return e.rational();
}

void apply_tower_cap() {
    if (const char* v = std::getenv("AODE_SOLVE_MAX_TOWER")) {
        char* end = nullptr;
        long cap = std::strtol(v, &end, 10);
        if (end == v || *end != '\0' || cap < 1) throw ParseError("AODE_SOLVE_MAX_TOWER must be a positive integer", 1, 1);
        set_max_tower_degree(static_cast<std::size_t>(cap));
    }
}

long default_bound(const BiPoly& F, std::optional<long> over) {
    if (over) return *over;
    BiPoly R = squarefree_normalize(F).F;
    if (R.degree(0) < 1 || R.degree(1) < 1) return 1;
    return truncation_bound(R);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Formal Puiseux series and algebraic solutions of F(y, y') = 0", "aode-solve"};
    app.require_subcommand(1);

    std::string equation, order_text, iv_text, trunc_text, point_text = "0";
    bool json = false, no_generic = false, no_const = false, no_finite = false, no_infinity = false;
    bool irreducible = false, expand = false;
    unsigned jobs = 1;
    std::optional<long> bound_override;

    auto* solve = app.add_subcommand("solve", "all solution truncations at zero and at infinity");
    auto* generic = app.add_subcommand("generic", "generic solution truncation at regular initial values");
    auto* prolong = app.add_subcommand("prolong", "unique extension of a solution truncation");
    auto* algebraic = app.add_subcommand("algebraic", "minimal polynomial of the algebraic solutions");
    for (auto* sc : {solve, generic, prolong, algebraic}) {
        sc->add_option("equation", equation, "F(y, y'), e.g. \"y'^2 + y^2 - 1\"")->required();
        sc->add_flag("--json", json, "machine readable output");
    }
    for (auto* sc : {solve, generic}) sc->add_option("-N,--order", order_text, "truncation order (rational)");
    for (auto* sc : {solve, generic, algebraic})
        sc->add_flag("--irreducible", irreducible, "take the equation as irreducible");
    solve->add_option("--iv", iv_text, "keep only solutions with y(0) = value");
    solve->add_flag("--no-generic", no_generic, "skip the generic solution");
    solve->add_flag("--no-const", no_const, "skip constant solutions");
    solve->add_flag("--no-finite", no_finite, "skip solutions expanded at zero");
    solve->add_flag("--no-infinity", no_infinity, "skip solutions expanded at infinity");
    solve->add_flag("--expand-conjugates", expand, "list every conjugate separately");
    solve->add_option("--jobs", jobs, "critical points processed in parallel")->check(CLI::PositiveNumber);
    solve->add_option("--bound-override", bound_override, "number of terms used for the places");
    prolong->add_option("--trunc", trunc_text, "the truncation, e.g. \"1 + x\"")->required();
    prolong->add_option("-N,--order", order_text, "target order (inclusive)")->required();
    prolong->add_option("--point", point_text, "expansion point: 0 or infinity (then written in z = 1/x)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        apply_tower_cap();
        BiPoly F = parse_equation(equation);
        if (F.is_zero() || F.is_constant()) throw ParseError("the equation is constant", 1, 1);
        Namer names;
        if (solve->parsed()) {
            SolveOptions o;
            o.generic = !no_generic;
            o.constants = !no_const;
            o.finite = !no_finite;
            o.infinity = !no_infinity;
            o.irreducible = irreducible;
            o.expand_conjugates = expand;
            o.jobs = jobs;
            o.bound_override = bound_override;
            if (!iv_text.empty()) o.iv = parse_constant(iv_text);
            Rational order(default_bound(F, bound_override));
            if (!order_text.empty()) {
                o.generic_order = parse_order(order_text);
                order = std::max(order, *o.generic_order);
            }
            SolveReport r = puiseux_solve(F, order, o);
            out << (json ? solve_json(r, names).dump(2) + "\n" : solve_text(r, names));
        } else if (generic->parsed()) {
            Rational order(default_bound(F, std::nullopt));
            if (!order_text.empty()) order = parse_order(order_text);
            BiPoly R = squarefree_normalize(F).F;
            auto g = generic_solution_truncation(R, order, irreducible);
            if (json) {
                Json j;
                j["equation"] = render_equation(F);
                j["field"] = Json::object();
                j["generic"] = generic_json(g, names);
                j["field"] = {{"base", "Q"}, {"generators", generators_json(names)}};
                out << j.dump(2) << "\n";
            } else {
                out << "equation: " << render_equation(F) << " = 0\n" << generic_text(g, names) << generators_text(names);
            }
        } else if (prolong->parsed()) {
            Point pt;
            if (point_text == "0" || point_text == "zero")
                pt = Point::zero;
            else if (point_text == "infinity" || point_text == "inf")
                pt = Point::infinity;
            else
                throw ParseError("--point must be 0 or infinity", 1, 1);
            Series s = parse_truncation(trunc_text, pt);
            Series y = prolong_truncation(F, s, parse_order(order_text), pt);
            if (json) {
                Json j;
                j["equation"] = render_equation(F);
                j["series"] = series_json(y, names.fn());
                j["field"] = {{"base", "Q"}, {"generators", generators_json(names)}};
                out << j.dump(2) << "\n";
            } else {
                out << "y = " << series_text(y, names.fn()) << "\n" << generators_text(names);
            }
        } else {
            auto r = algebraic_solution(F, irreducible);
            if (json) {
                Json j;
                j["equation"] = render_equation(F);
                j["field"] = Json::object();
                j["algebraic"] = algebraic_json(r, names);
                j["field"] = {{"base", "Q"}, {"generators", generators_json(names)}};
                out << j.dump(2) << "\n";
            } else {
                out << algebraic_text(F, r, names);
            }
        }
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::string what = e.what();
        err << "error: " << what << "\n";
        return what.rfind("internal", 0) == 0 ? 2 : 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace aode
