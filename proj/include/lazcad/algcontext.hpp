#pragma once

#include <map>
#include <vector>

#include "lazcad/multipoly.hpp"
#include "lazcad/realalg.hpp"

namespace lazcad {

// A partial sample point with exact sign decisions. Rational coordinates are
// substituted into polynomials eagerly by the callers; only real algebraic
// coordinates are bound here. All decisions are exact: interval refinement
// certifies nonzero signs, and an iterated-resultant candidate polynomial
// certifies zero.
class AlgPoint {
public:
    explicit AlgPoint(VarOrderPtr order) : order_(std::move(order)) {}

    void bind(std::size_t var, RealAlg value);
    bool is_bound(std::size_t var) const { return bindings_.count(var) != 0; }
    std::size_t bound_count() const { return bindings_.size(); }
    const RealAlg& value(std::size_t var) const { return bindings_.at(var); }

    // Exact sign of g at the point; g may involve bound variables only.
    int sign_of(const MultiPoly& g) const;
    bool is_zero(const MultiPoly& g) const { return sign_of(g) == 0; }

    // Whether g vanishes at the point as a polynomial in its unbound
    // variables (every unbound-monomial coefficient vanishes).
    bool value_is_zero(const MultiPoly& g) const;

    // Real roots in var of F evaluated at the point; F may involve var and
    // bound variables. Sorted ascending, exact RealAlg representations over
    // the rationals. Throws if F vanishes identically at the point.
    std::vector<RealAlg> isolate_roots(const MultiPoly& F, std::size_t var) const;

private:
    int sign_by_certificate(const MultiPoly& g, const std::vector<std::size_t>& vars) const;

    VarOrderPtr order_;
    // Refinements during queries only tighten intervals; the represented
    // point never changes, so mutation here is observationally pure.
    mutable std::map<std::size_t, RealAlg> bindings_;
};

}  // namespace lazcad
