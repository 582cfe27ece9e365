#include "lazcad/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace lazcad {

RatInterval RatInterval::operator*(const RatInterval& r) const {
    Rat a = lo * r.lo, b = lo * r.hi, c = hi * r.lo, d = hi * r.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

RatInterval RatInterval::pow(std::uint32_t e) const {
    if (e == 0) return point(Rat(1));
    RatInterval acc = *this;
    for (std::uint32_t i = 1; i < e; ++i) acc = acc * *this;
    return acc;
}

RatInterval interval_evaluate(const MultiPoly& p, const std::vector<RatInterval>& box) {
    if (box.size() != p.nvars()) throw std::invalid_argument("interval_evaluate: box mismatch");
    RatInterval acc = RatInterval::point(Rat(0));
    for (const auto& [m, c] : p.terms()) {
        RatInterval t = RatInterval::point(c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) t = t * box[i].pow(m[i]);
        acc = acc + t;
    }
    return acc;
}

}  // namespace lazcad
