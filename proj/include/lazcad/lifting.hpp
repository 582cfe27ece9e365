#pragma once

#include <cstdint>
#include <vector>

#include "lazcad/cad_model.hpp"
#include "lazcad/projection.hpp"
#include "lazcad/realalg.hpp"

namespace lazcad {

// Division multiplicities recorded while evaluating at a point, plus the
// polynomial remaining after the divisions and substitutions.
struct Valuation {
    std::vector<std::uint32_t> exponents;
    MultiPoly residual;
};

// Per-coordinate division count at a rational point (full or partial prefix,
// in variable order). Throws on the zero polynomial.
Valuation lazard_valuation(const MultiPoly& f, const std::vector<Rat>& point);

// Lazard evaluation: for each prefix coordinate, divides (x_j - r_j) out of
// f while it vanishes there, substitutes, and finally isolates the real
// roots of the residual univariate polynomial in the next variable. Returns
// sorted distinct roots; empty when the residual is a nonzero constant.
std::vector<RealAlg> lazard_evaluate(const MultiPoly& f, const SamplePoint& prefix);

// Roots in the next variable above one cell.
struct LiftInfoEntry {
    std::uint64_t cell_id = 0;
    std::vector<RealAlg> roots;
};
struct LiftInfo {
    std::vector<LiftInfoEntry> entries;
};

struct LiftSetup {
    CadTree tree;  // level-1 cells only
    LiftInfo info;
};

// Level-1 decomposition from the final (univariate) projection level plus
// the information needed to lift to the second variable.
LiftSetup lift_setup(const ProjectionTable& table, CadMode mode);

// Full lift: iterates stack construction level by level to dimension n.
CadTree lift(const ProjectionTable& table, CadMode mode);

struct SplitCellsResult {
    std::vector<Cell> cells;         // the new level-1 decomposition, stack order
    std::vector<RealAlg> roots;      // merged level-1 roots
    std::size_t new_cells = 0;       // cells flagged new by the split
};

// Splits level-1 cells whose sector contains a new root; untouched cells
// pass through with their ids, samples and children intact.
SplitCellsResult split_cells(const std::vector<RealAlg>& old_roots,
                             const std::vector<RealAlg>& new_roots, const CadTree& old_tree);

// Incremental lift: reuses the old tree wherever the delta polynomials add
// no roots over a cell, re-lifts the affected stacks, and merges. The result
// equals a from-scratch lift of the full table.
CadTree lift_add(const LevelDelta& delta, const ProjectionTable& full_table,
                 const CadTree& old_tree, CadMode mode);

}  // namespace lazcad
