// Points and places of the curve F(y, p) = 0 on (K-bar union infinity)^2.
//
// Places are computed with rational Newton-Puiseux in the p-orientation:
// the p-coordinate is a monomial b = p0 + L t^E (or 1/(L t^E) at infinity)
// and the y-coordinate is a truncated power series in t.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aode/factor.hpp"
#include "aode/poly.hpp"
#include "aode/series.hpp"

namespace aode {

/// Coordinate value; nullopt is the point at infinity.
using Coord = std::optional<Elem>;

struct CurvePoint {
    Coord y0;
    Coord p0;
    Field field;         // field of definition of the coordinates
    int conjugates = 1;  // size of the conjugacy class over the base field

    std::string str(const NameFn& name = {}) const;
};

bool operator==(const CurvePoint& a, const CurvePoint& b);

namespace detail {
struct Branch;
}

struct Place {
    CurvePoint center;
    Series a;  // y-coordinate in t
    Series b;  // p-coordinate in t (exact)
    long k = 0;  // ord_t(a - y0), or ord_t(a) when y0 is infinite
    long r = 0;  // ord_t(b)
    Field field;         // field of the coefficients
    int conjugates = 1;  // conjugate places over the center's field
    std::shared_ptr<const detail::Branch> branch;
};

/// The local polynomial G(u, v) = F moved to the center, with y = y0 + u or
/// 1/u and p = p0 + v or 1/v (denominators cleared). Variables ("u", "v").
BiPoly local_polynomial(const BiPoly& F, const Coord& y0, const Coord& p0);

/// True when (y0, p0) lies on the closure of F = 0.
bool on_curve(const BiPoly& F, const Coord& y0, const Coord& p0);

/// Critical points of F: p0 in {0, infinity}, F_p = 0, or y0 = infinity.
/// One representative per conjugacy class; sorted deterministically.
std::vector<CurvePoint> critical_points(const BiPoly& F);

/// True when (infinity, infinity) lies on the closure of F = 0.
bool infinity_infinity_on_curve(const BiPoly& F);

/// Number of terms that determines the places of F.
long truncation_bound(const BiPoly& F);

/// One place per branch (per conjugacy class of branches) of F at `center`;
/// a is known at least up to t^(k + terms).
std::vector<Place> local_parametrizations(const BiPoly& F, const CurvePoint& center, long terms);

/// The same place with a known at least up to t^(k + terms).
Place extend_place(const Place& place, long terms);

std::string coord_str(const Coord& c, const NameFn& name = {});

}  // namespace aode
