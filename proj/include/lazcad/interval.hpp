#pragma once

#include <vector>

#include "lazcad/multipoly.hpp"
#include "lazcad/numbers.hpp"

namespace lazcad {

// Closed rational interval used for certified refinement loops.
struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    static RatInterval point(const Rat& v) { return {v, v}; }

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    Rat width() const { return hi - lo; }

    RatInterval operator+(const RatInterval& r) const { return {lo + r.lo, hi + r.hi}; }
    RatInterval operator-(const RatInterval& r) const { return {lo - r.hi, hi - r.lo}; }
    RatInterval operator*(const RatInterval& r) const;
    RatInterval pow(std::uint32_t e) const;
};

// Interval evaluation of p over a box (one interval per variable).
RatInterval interval_evaluate(const MultiPoly& p, const std::vector<RatInterval>& box);

}  // namespace lazcad
