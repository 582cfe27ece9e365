#pragma once

#include <vector>

#include "lazcad/multipoly.hpp"

namespace lazcad {

// Resultant with respect to var, computed by a subresultant polynomial
// remainder sequence; equals the Sylvester-matrix determinant exactly
// (including sign). Degree-0 arguments follow the classical convention
// res(c, q) = c^deg(q).
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var);

// (-1)^(d(d-1)/2) / lc * res(p, dp/dvar). Degree-1 polynomials have
// discriminant 1 by convention (a constant, removed downstream).
MultiPoly discriminant(const MultiPoly& p, std::size_t var);

// Leading and trailing coefficients of p in var, constants dropped,
// canonicalized. Empty when both are constant.
std::vector<MultiPoly> lazard_coefficient_set(const MultiPoly& p, std::size_t var);

}  // namespace lazcad
