#pragma once

#include <vector>

#include "lazcad/polyset.hpp"
#include "lazcad/varorder.hpp"

namespace lazcad {

// Full chain of projection sets. Level i holds canonical constant-free
// polynomials in variables x_{n-i},...,x1 (0-based indices 0..n-i-1), with
// level 0 the processed inputs and the last level univariate in x1. Every
// stored member has positive degree in its level's main variable.
struct ProjectionTable {
    VarOrderPtr order;
    std::vector<PolySet> levels;

    std::size_t nlevels() const { return levels.size(); }
    const PolySet& level(std::size_t i) const { return levels.at(i); }
    const PolySet& final_level() const { return levels.back(); }
    // Main variable (0-based) of level i.
    std::size_t main_var(std::size_t i) const { return order->size() - 1 - i; }

    bool operator==(const ProjectionTable& rhs) const;
};

// Per-level polynomials newly added by an incremental step; parallel to the
// table's levels and disjoint from the prior table.
struct LevelDelta {
    std::vector<PolySet> levels;

    bool all_empty() const;
    std::size_t total_size() const;
};

// One Lazard projection step eliminating var: contents, leading+trailing
// coefficients, discriminants, pairwise cross resultants; canonical and
// constant-free.
PolySet projection(const PolySet& polys, std::size_t var);

// The incremental step: contents/coefficients/discriminants of the new
// polynomials, new-new cross resultants, and new-old resultants. Old-old
// pairs are never recomputed.
PolySet projection_add(const PolySet& new_polys, const PolySet& old_level, std::size_t var);

// Full projection chain (maximal chain of projections down to univariate).
ProjectionTable projection_polys(const PolySet& inputs, const VarOrderPtr& order);

struct IncrementalProjection {
    ProjectionTable updated;
    LevelDelta delta;
};

// Incremental full chain: reuses the previous table, computing only the new
// polynomials level by level. The updated table equals a from-scratch run on
// the combined inputs, level by level as canonical sets.
IncrementalProjection projection_polys_add(const ProjectionTable& prev, const PolySet& new_polys);

}  // namespace lazcad
