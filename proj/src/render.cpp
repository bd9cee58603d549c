#include "aode/render.hpp"

#include <algorithm>
#include <sstream>

#include "aode/parse.hpp"

namespace aode {

std::string Namer::operator()(const FieldLevel& L) {
    if (!L.auto_name) return L.name;
    auto it = names_.find(&L);
    if (it != names_.end()) return it->second;
    std::string nm = "_a" + std::to_string(order_.size() + 1);
    names_.emplace(&L, nm);
    order_.push_back(&L);
    return nm;
}

NameFn Namer::fn() {
    return [this](const FieldLevel& L) { return (*this)(L); };
}

std::vector<std::pair<std::string, std::string>> Namer::generators() {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        const FieldLevel* L = order_[i];
        std::string nm = names_[L];
        out.emplace_back(nm, UniPoly(nm, L->minpoly).str(fn()));
    }
    return out;
}

std::string render_xy(const BiPoly& G, const NameFn& name, const std::string& xname) {
    std::vector<std::pair<int, int>> exps;
    for (const auto& [e, c] : G.terms()) exps.push_back(e);
    std::sort(exps.begin(), exps.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first > b.first;
    });
    auto pw = [](const std::string& v, int k) -> std::string {
        if (k == 0) return "";
        return k == 1 ? v : v + "^" + std::to_string(k);
    };
    std::vector<std::pair<Elem, std::string>> terms;
    for (auto [i, j] : exps) {
        std::string m = pw(G.vars()[1], j);
        std::string xm = pw(xname, i);
        if (!xm.empty()) m = m.empty() ? xm : m + "*" + xm;
        terms.emplace_back(G.coeff(i, j), m);
    }
    return render_sum(terms, name);
}

std::string series_text(const Series& s, const NameFn& name) {
    return s.point() == Point::infinity ? s.str("z", name) : s.str("x", name);
}

Json series_json(const Series& s, const NameFn& name) {
    Json j;
    j["point"] = s.point() == Point::infinity ? "infinity" : "zero";
    j["ramification"] = s.ramification();
    Json terms = Json::array();
    for (const auto& [k, c] : s.terms()) terms.push_back({{"num", k}, {"den_exp", s.ramification()}, {"coeff", c.str(name)}});
    j["terms"] = terms;
    j["order_known"] = s.known() ? Json(to_string(*s.known())) : Json(nullptr);
    return j;
}

namespace {

std::string tuple_text(const CurvePoint& c, const NameFn& name) { return c.str(name); }

std::string truncation_text(const SolutionTruncation& s, const NameFn& name) {
    std::ostringstream o;
    o << "initial " << tuple_text(s.initial, name) << ", n = " << s.n;
    if (s.conjugates > 1) o << ", " << s.conjugates << " conjugates";
    if (s.sigma1 && s.sigma1->degree() > 1) o << ", sigma1: " << s.sigma1->str(name) << " = 0";
    if (s.free_parameter) o << ", free parameter " << *s.free_parameter;
    if (!s.guarantee) o << ", not guaranteed";
    o << "\n    y = " << series_text(s.series, name);
    return o.str();
}

Json truncation_json(const SolutionTruncation& s, const NameFn& name) {
    Json j;
    j["initial"] = {coord_str(s.initial.y0, name), coord_str(s.initial.p0, name)};
    j["n"] = s.n;
    j["guarantee"] = s.guarantee;
    j["conjugates"] = s.conjugates;
    j["sigma1"] = s.sigma1 ? Json(s.sigma1->str(name)) : Json(nullptr);
    j["free_parameter"] = s.free_parameter ? Json(*s.free_parameter) : Json(nullptr);
    j["series"] = series_json(s.series, name);
    return j;
}

std::string constraint_text(const BiPoly& c, const NameFn& name) { return c.str(name) + " = 0"; }

}  // namespace

std::string generators_text(Namer& names) {
    std::string out;
    for (const auto& [nm, mp] : names.generators()) out += "  " + nm + ": " + mp + " = 0\n";
    return out.empty() ? out : "where\n" + out;
}

Json generators_json(Namer& names) {
    Json g = Json::array();
    for (const auto& [nm, mp] : names.generators()) g.push_back({{"name", nm}, {"minpoly", mp}});
    return g;
}

std::string generic_text(const std::vector<GenericSolution>& gs, Namer& names) {
    NameFn nf = names.fn();
    std::ostringstream o;
    for (const auto& g : gs) {
        o << "generic solution";
        if (gs.size() > 1) o << " (component " << g.component + 1 << ")";
        o << ":\n    y = " << series_text(g.truncation, nf) << "\n";
        o << "  with " << constraint_text(g.relation, nf) << "\n";
        o << "  exceptional:";
        if (g.exceptional.empty()) o << " none";
        for (std::size_t i = 0; i < g.exceptional.size(); ++i)
            o << (i ? ", " : " ") << constraint_text(g.exceptional[i], nf);
        o << "\n";
    }
    return o.str();
}

Json generic_json(const std::vector<GenericSolution>& gs, Namer& names) {
    NameFn nf = names.fn();
    Json a = Json::array();
    for (const auto& g : gs) {
        Json j;
        j["component"] = g.component + 1;
        j["relation"] = g.relation.str(nf);
        Json ex = Json::array();
        for (const auto& c : g.exceptional) ex.push_back(c.str(nf));
        j["exceptional"] = ex;
        j["series"] = series_json(g.truncation, nf);
        a.push_back(j);
    }
    return a;
}

std::string solve_text(const SolveReport& r, Namer& names) {
    NameFn nf = names.fn();
    std::ostringstream o;
    o << "equation: " << render_equation(r.equation) << " = 0\n";
    if (!(r.reduced == r.equation)) o << "reduced: " << render_equation(r.reduced) << " = 0\n";
    for (const auto& t : r.transforms) o << "note: " << t << "\n";
    o << "order: " << to_string(r.order) << ", bound: " << r.bound << "\n";
    if (!r.slopes.empty()) {
        o << "linear solutions y = c + p0*x:\n";
        for (const auto& s : r.slopes) o << "  " << s.str(nf) << " = 0\n";
    }
    o << "constants:";
    if (r.constants.empty()) o << " none";
    o << "\n";
    for (const auto& c : r.constants) {
        o << "  y = " << c.root.str(nf);
        if (c.degree() > 1) o << "  (" << c.degree() << " conjugates, " << c.minpoly.str(nf) << " = 0)";
        o << "\n";
    }
    o << generic_text(r.generic, names);
    o << "at zero:";
    if (r.at_zero.empty()) o << " none";
    o << "\n";
    for (std::size_t i = 0; i < r.at_zero.size(); ++i) o << "  [" << i + 1 << "] " << truncation_text(r.at_zero[i], nf) << "\n";
    o << "at infinity (z = 1/x):";
    if (r.at_infinity.empty()) o << " none";
    o << "\n";
    for (std::size_t i = 0; i < r.at_infinity.size(); ++i)
        o << "  [" << i + 1 << "] " << truncation_text(r.at_infinity[i], nf) << "\n";
    o << generators_text(names);
    return o.str();
}

Json solve_json(const SolveReport& r, Namer& names) {
    NameFn nf = names.fn();
    Json j;
    j["equation"] = render_equation(r.equation);
    j["field"] = Json::object();
    j["reduced"] = render_equation(r.reduced);
    j["order"] = to_string(r.order);
    j["bound"] = r.bound;
    j["transforms"] = r.transforms;
    Json sl = Json::array();
    for (const auto& s : r.slopes) sl.push_back(s.str(nf));
    j["linear"] = sl;
    j["generic"] = generic_json(r.generic, names);
    Json cs = Json::array();
    for (const auto& c : r.constants)
        cs.push_back({{"value", c.root.str(nf)}, {"minpoly", c.minpoly.str(nf)}, {"conjugates", c.degree()}});
    j["constants"] = cs;
    Json z = Json::array(), inf = Json::array();
    for (const auto& s : r.at_zero) z.push_back(truncation_json(s, nf));
    for (const auto& s : r.at_infinity) inf.push_back(truncation_json(s, nf));
    j["at_zero"] = z;
    j["at_infinity"] = inf;
    j["field"] = {{"base", "Q"}, {"generators", generators_json(names)}};
    return j;
}

std::string algebraic_text(const BiPoly& F, const std::vector<MinimalPolynomialResult>& rs, Namer& names) {
    NameFn nf = names.fn();
    std::ostringstream o;
    o << "equation: " << render_equation(F) << " = 0\n";
    if (rs.empty()) o << "none\n";
    for (const auto& r : rs) {
        o << "minimal polynomial: " << render_xy(r.G, nf) << "\n";
        o << "all solutions: " << render_xy(r.G, nf, "(x+c)") << " = 0\n";
        o << "component: " << render_equation(r.component) << " = 0\n";
    }
    o << generators_text(names);
    return o.str();
}

Json algebraic_json(const std::vector<MinimalPolynomialResult>& rs, Namer& names) {
    NameFn nf = names.fn();
    if (rs.empty()) return "none";
    Json a = Json::array();
    for (const auto& r : rs) {
        Json j;
        j["minimal_polynomial"] = render_xy(r.G, nf);
        j["family"] = render_xy(r.G, nf, "(x+c)");
        j["component"] = render_equation(r.component);
        j["deg_x"] = r.G.degree(0);
        j["deg_y"] = r.G.degree(1);
        j["seed"] = series_json(r.seed.series, nf);
        a.push_back(j);
    }
    return a;
}

}  // namespace aode
