// Text and JSON reports. Unnamed algebraic generators are printed as _a1,
// _a2, ... in order of first appearance; their minimal polynomials are listed.
#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "aode/algebraic.hpp"
#include "aode/solver.hpp"

namespace aode {

using Json = nlohmann::ordered_json;

class Namer {
public:
    std::string operator()(const FieldLevel& L);
    NameFn fn();
    /// (name, minimal polynomial text) of every named algebraic generator so far.
    std::vector<std::pair<std::string, std::string>> generators();

private:
    std::map<const FieldLevel*, std::string> names_;
    std::vector<const FieldLevel*> order_;
};

/// G(x, y) with terms ordered by the degree in y, then in x; `xname` replaces x.
std::string render_xy(const BiPoly& G, const NameFn& name, const std::string& xname = "x");

std::string series_text(const Series& s, const NameFn& name);
Json series_json(const Series& s, const NameFn& name);

std::string solve_text(const SolveReport& r, Namer& names);
Json solve_json(const SolveReport& r, Namer& names);

std::string generic_text(const std::vector<GenericSolution>& g, Namer& names);
Json generic_json(const std::vector<GenericSolution>& g, Namer& names);

std::string algebraic_text(const BiPoly& F, const std::vector<MinimalPolynomialResult>& r, Namer& names);
Json algebraic_json(const std::vector<MinimalPolynomialResult>& r, Namer& names);

/// Generators section shared by the text reports.
std::string generators_text(Namer& names);
Json generators_json(Namer& names);

}  // namespace aode
