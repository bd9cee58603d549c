#pragma once

#include <string>

#include "aode/poly.hpp"

namespace aode {

/// Resultant of f and g with respect to `var`, computed by the subresultant
/// PRS over K[other variable]. Returns a polynomial in the other variable.
UniPoly resultant(const BiPoly& f, const BiPoly& g, const std::string& var);

/// Pseudo-remainder of f by g with respect to `var`:
/// lc(g)^(deg f - deg g + 1) f = q g + r.
BiPoly pseudo_remainder(const BiPoly& f, const BiPoly& g, const std::string& var);

}  // namespace aode
