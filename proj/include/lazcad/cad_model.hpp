#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lazcad/polyset.hpp"
#include "lazcad/realalg.hpp"

namespace lazcad {

enum class CellFlag { Old, New };

// Constraint a cell places on its own (highest) coordinate: a section pins
// the coordinate to a root, a sector bounds it between adjacent roots or
// infinities.
struct CellBound {
    bool is_section = false;
    RealAlg value;  // section only
    bool lo_inf = true;
    bool hi_inf = true;
    RealAlg lo, hi;  // finite sector bounds

    static CellBound section(RealAlg v);
    static CellBound sector(const RealAlg* lo, const RealAlg* hi);
};

// The 5-field cell record: cylindrical index, description (own-coordinate
// bound; the full formula is the chain of ancestor bounds), sample point,
// source cell, and the incremental split flag. Stable ids are creation
// ordered and independent of the cylindrical position.
struct Cell {
    std::uint64_t id = 0;
    std::size_t level = 0;  // 1-based dimension of the cell's space
    std::vector<int> index;
    std::uint64_t source = 0;  // parent id; 0 at level 1
    CellFlag flag = CellFlag::Old;
    SamplePoint sample;
    CellBound bound;

    bool is_section() const { return bound.is_section; }
};

// Leveled cell tree: level k holds the cells of R^k sorted stack by stack.
class CadTree {
public:
    VarOrderPtr order;
    CadMode mode = CadMode::Open;
    std::vector<std::vector<Cell>> levels;
    std::vector<RealAlg> level1_roots;

    std::size_t depth() const { return levels.size(); }
    std::size_t cell_count(std::size_t level) const { return levels.at(level - 1).size(); }
    const std::vector<Cell>& level(std::size_t k) const { return levels.at(k - 1); }

    const Cell* find(std::size_t level, std::uint64_t id) const;
    const Cell* parent_of(const Cell& c) const;
    std::vector<const Cell*> children_of(const Cell& c) const;

    // Sizes of the stacks over level k-1, in stack order (level 1 = one stack).
    std::vector<std::size_t> stack_sizes(std::size_t k) const;

    std::uint64_t alloc_id() { return next_id_++; }
    void note_ids();  // bump the allocator past all present ids

private:
    std::uint64_t next_id_ = 1;
};

// Builds the stack of cells over `parent` (null for level 1) decomposed by
// the sorted distinct roots. Full mode alternates sectors and sections;
// open mode emits sectors only.
std::vector<Cell> build_stack(CadTree& tree, const Cell* parent,
                              const std::vector<RealAlg>& roots, CadMode mode, CellFlag flag);

// Re-sorts every stack, recomputes cylindrical indices consecutively from 1,
// and validates source links. Ids are stable so sources never need rewriting.
void combine(CadTree& tree);

// Full cylindrical description of a cell (ancestor chain of bounds).
std::vector<CellBound> cell_description(const CadTree& tree, const Cell& c);

std::string export_dot(const CadTree& tree);
std::string export_cells(const CadTree& tree, unsigned digits = 4);

// Exact sign of p at a mixed rational/algebraic sample point.
int sign_at_sample(const MultiPoly& p, const SamplePoint& sample);

struct SignInvarianceReport {
    std::size_t cells_checked = 0;
    std::size_t points_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Evaluates every input at the stored sample and at `trials` extra rational
// points inside each full-dimensional cell; any sign disagreement within a
// cell is reported as a violation.
SignInvarianceReport check_sign_invariance(const CadTree& tree, const PolySet& inputs,
                                           unsigned trials, std::uint64_t seed = 20170831);

}  // namespace lazcad
