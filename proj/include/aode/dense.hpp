// Dense univariate polynomial helpers over field elements. Index i holds the
// coefficient of degree i; the zero polynomial is the empty vector.
#pragma once

#include <utility>
#include <vector>

#include "aode/field.hpp"

namespace aode::dense {

using Poly = std::vector<Elem>;

void strip(Poly& p);
inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }
inline const Elem& lead(const Poly& p) { return p.back(); }

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Elem& c);
Poly shift(const Poly& a, int k);  // multiply by x^k
Poly pow(const Poly& a, int e);
Poly derivative(const Poly& a);
Poly monic(const Poly& a);
Elem eval(const Poly& a, const Elem& x);
/// a(b(x))
Poly compose(const Poly& a, const Poly& b);

/// Euclidean division over a field; b must be nonzero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);
/// Exact quotient; throws if the division leaves a remainder.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
    Poly g;  // monic gcd
    Poly s;  // s*a + t*b = g
    Poly t;
};
Xgcd xgcd(const Poly& a, const Poly& b);

/// Squarefree decomposition (Yun); entries (factor, multiplicity), factors monic.
std::vector<std::pair<Poly, int>> squarefree(const Poly& a);

/// Resultant of two univariate polynomials over a field (Euclidean algorithm).
Elem resultant(const Poly& a, const Poly& b);

}  // namespace aode::dense
