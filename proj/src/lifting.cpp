#include "lazcad/lifting.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lazcad/algcontext.hpp"
#include "lazcad/instrumentation.hpp"

namespace lazcad {

namespace {

// Smallest Taylor index k with nonvanishing coefficient of (x_j - r_j)^k,
// together with that coefficient (x_j substituted for rational points, bound
// for algebraic ones). This is "divide while divisible, then substitute".
MultiPoly divide_out(const MultiPoly& f, std::size_t var, const RealAlg& r, AlgPoint& pt,
                     std::uint32_t* count_out) {
    MultiPoly deriv = f;
    Rat factorial(1);
    std::uint32_t d = f.degree(var);
    for (std::uint32_t k = 0; k <= d; ++k) {
        if (k > 0) {
            deriv = deriv.derivative(var);
            factorial *= Rat(k);
        }
        MultiPoly coeff = r.is_rational() ? deriv.substitute(var, r.rational()) : deriv;
        if (!pt.value_is_zero(coeff)) {
            if (count_out) *count_out = k;
            return coeff / factorial;
        }
    }
    if (count_out) *count_out = d + 1;
    return MultiPoly::zero(f.order());
}

}  // namespace

Valuation lazard_valuation(const MultiPoly& f, const std::vector<Rat>& point) {
    if (f.is_zero()) throw std::invalid_argument("lazard_valuation: zero polynomial");
    if (point.size() > f.nvars()) throw std::invalid_argument("lazard_valuation: point too long");
    AlgPoint pt(f.order());
    Valuation out{{}, f};
    for (std::size_t j = 0; j < point.size(); ++j) {
        std::uint32_t k = 0;
        MultiPoly next = divide_out(out.residual, j, RealAlg::from_rational(point[j]), pt, &k);
        if (next.is_zero())
            throw std::logic_error("lazard_valuation: polynomial vanished identically");
        out.exponents.push_back(k);
        out.residual = std::move(next);
    }
    return out;
}

std::vector<RealAlg> lazard_evaluate(const MultiPoly& f, const SamplePoint& prefix) {
    counters().lazard_eval_calls++;
    if (f.is_zero()) throw std::invalid_argument("lazard_evaluate: zero polynomial");
    std::size_t target = prefix.size();
    if (target >= f.nvars()) throw std::invalid_argument("lazard_evaluate: prefix too long");
    AlgPoint pt(f.order());
    MultiPoly g = f;
    for (std::size_t j = 0; j < prefix.size(); ++j) {
        if (!prefix[j].is_rational()) pt.bind(j, prefix[j]);
        g = divide_out(g, j, prefix[j], pt, nullptr);
        if (g.is_zero())
            throw std::logic_error("lazard_evaluate: projection factor vanished identically");
    }
    return pt.isolate_roots(g, target);
}

namespace {

std::vector<RealAlg> merged_eval(const PolySet& polys, const SamplePoint& prefix) {
    std::vector<RealAlg> merged;
    for (const auto& p : polys) {
        std::vector<RealAlg> roots = lazard_evaluate(p, prefix);
        merged = merge_roots(merged, roots).roots;
    }
    return merged;
}

std::vector<RealAlg> final_level_roots(const ProjectionTable& table) {
    std::vector<RealAlg> roots;
    for (const auto& p : table.final_level())
        roots = merge_roots(roots, isolate_real_roots(p, 0)).roots;
    return roots;
}

// Roots recoverable from a stack of children: section values in full mode,
// finite sector bounds in both modes.
std::vector<RealAlg> stack_roots(const std::vector<const Cell*>& children) {
    std::vector<RealAlg> out;
    auto add = [&out](const RealAlg& r) {
        for (const auto& x : out)
            if (alg_eq(x, r)) return;
        out.push_back(r);
    };
    for (const auto* c : children) {
        if (c->bound.is_section) {
            add(c->bound.value);
        } else {
            if (!c->bound.lo_inf) add(c->bound.lo);
            if (!c->bound.hi_inf) add(c->bound.hi);
        }
    }
    std::sort(out.begin(), out.end(), alg_less);
    return out;
}

}  // namespace

LiftSetup lift_setup(const ProjectionTable& table, CadMode mode) {
    LiftSetup out;
    out.tree.order = table.order;
    out.tree.mode = mode;
    std::vector<RealAlg> roots = final_level_roots(table);
    out.tree.level1_roots = roots;
    out.tree.levels.push_back(build_stack(out.tree, nullptr, roots, mode, CellFlag::Old));
    combine(out.tree);
    std::size_t n = table.order->size();
    if (n >= 2) {
        const PolySet& polys = table.level(n - 2);
        for (const auto& c : out.tree.levels[0]) {
            std::vector<RealAlg> rr = merged_eval(polys, c.sample);
            if (!rr.empty()) out.info.entries.push_back({c.id, std::move(rr)});
        }
    }
    return out;
}

CadTree lift(const ProjectionTable& table, CadMode mode) {
    std::size_t n = table.order->size();
    LiftSetup setup = lift_setup(table, mode);
    CadTree tree = std::move(setup.tree);
    LiftInfo info = std::move(setup.info);
    for (std::size_t k = 2; k <= n; ++k) {
        std::map<std::uint64_t, const LiftInfoEntry*> by_id;
        for (const auto& e : info.entries) by_id.emplace(e.cell_id, &e);
        std::vector<Cell> next;
        for (const auto& parent : tree.levels[k - 2]) {
            auto it = by_id.find(parent.id);
            std::vector<RealAlg> roots = it == by_id.end() ? std::vector<RealAlg>{} : it->second->roots;
            auto stack = build_stack(tree, &parent, roots, mode, CellFlag::Old);
            next.insert(next.end(), stack.begin(), stack.end());
        }
        tree.levels.push_back(std::move(next));
        info.entries.clear();
        if (k < n) {
            const PolySet& polys = table.level(n - k - 1);
            for (const auto& c : tree.levels[k - 1]) {
                std::vector<RealAlg> rr = merged_eval(polys, c.sample);
                if (!rr.empty()) info.entries.push_back({c.id, std::move(rr)});
            }
        }
    }
    combine(tree);
    return tree;
}

SplitCellsResult split_cells(const std::vector<RealAlg>& old_roots,
                             const std::vector<RealAlg>& new_roots, const CadTree& old_tree) {
    SplitCellsResult out;
    MergedRoots merged = merge_roots(old_roots, new_roots);
    out.roots = merged.roots;
    const auto& old_cells = old_tree.level(1);
    CadMode mode = old_tree.mode;

    // Genuinely new roots (absent from the old decomposition).
    std::vector<RealAlg> fresh;
    for (std::size_t i = 0; i < merged.roots.size(); ++i)
        if (merged.is_new[i]) fresh.push_back(merged.roots[i]);
    if (fresh.empty()) {
        out.cells = old_cells;
        for (auto& c : out.cells) c.flag = CellFlag::Old;
        return out;
    }

    // Old stack layout: sector (old gap g), [section root g] alternating in
    // full mode; sectors only in open mode. Walk old gaps and inject fresh
    // roots.
    CadTree scratch;  // id allocator continuing past the old tree's ids
    scratch.order = old_tree.order;
    scratch.levels = old_tree.levels;
    scratch.note_ids();

    auto make_sector = [&](const RealAlg* lo, const RealAlg* hi, CellFlag flag) {
        Cell c;
        c.id = scratch.alloc_id();
        c.level = 1;
        c.flag = flag;
        c.bound = CellBound::sector(lo, hi);
        RealAlg lo_v = lo ? *lo : RealAlg{};
        if (lo && hi)
            c.sample = {RealAlg::from_rational(simplest_rational_in(*lo, *hi))};
        else if (!lo && !hi)
            c.sample = {RealAlg::from_rational(Rat(0))};
        else {
            // One-sided: reuse the generator's outer-bound convention.
            const RealAlg& r = lo ? *lo : *hi;
            Int b = std::max(rat_ceil(rat_abs(r.lo())), rat_ceil(rat_abs(r.hi())));
            c.sample = {RealAlg::from_rational(lo ? Rat(b + 1) : Rat(-(b + 1)))};
        }
        ++out.new_cells;
        return c;
    };
    auto make_section = [&](const RealAlg& r) {
        Cell c;
        c.id = scratch.alloc_id();
        c.level = 1;
        c.flag = CellFlag::New;
        c.bound = CellBound::section(r);
        c.sample = {r};
        ++out.new_cells;
        return c;
    };

    // Index old sector cells by their gap position (0..k) and sections by
    // root position.
    std::size_t k_old = old_roots.size();
    std::vector<const Cell*> old_sector(k_old + 1, nullptr);
    std::vector<const Cell*> old_section(k_old, nullptr);
    for (const auto& c : old_cells) {
        if (c.bound.is_section) {
            for (std::size_t i = 0; i < k_old; ++i)
                if (alg_eq(old_roots[i], c.bound.value)) {
                    old_section[i] = &c;
                    break;
                }
        } else {
            std::size_t gap = 0;
            if (!c.bound.lo_inf) {
                for (std::size_t i = 0; i < k_old; ++i)
                    if (alg_eq(old_roots[i], c.bound.lo)) {
                        gap = i + 1;
                        break;
                    }
            }
            old_sector[gap] = &c;
        }
    }

    for (std::size_t gap = 0; gap <= k_old; ++gap) {
        const RealAlg* glo = gap == 0 ? nullptr : &old_roots[gap - 1];
        const RealAlg* ghi = gap == k_old ? nullptr : &old_roots[gap];
        // Fresh roots inside this gap.
        std::vector<const RealAlg*> inside;
        for (const auto& fr : fresh) {
            bool above = !glo || compare(*glo, fr) == Cmp::Less;
            bool below = !ghi || compare(fr, *ghi) == Cmp::Less;
            if (above && below) inside.push_back(&fr);
        }
        if (inside.empty()) {
            if (old_sector[gap]) {
                out.cells.push_back(*old_sector[gap]);
                out.cells.back().flag = CellFlag::Old;
            }
        } else {
            const RealAlg* lo = glo;
            for (const auto* fr : inside) {
                out.cells.push_back(make_sector(lo, fr, CellFlag::New));
                if (old_tree.mode == CadMode::Full) out.cells.push_back(make_section(*fr));
                lo = fr;
            }
            out.cells.push_back(make_sector(lo, ghi, CellFlag::New));
        }
        if (gap < k_old && mode == CadMode::Full && old_section[gap]) {
            out.cells.push_back(*old_section[gap]);
            out.cells.back().flag = CellFlag::Old;
        }
    }
    return out;
}

CadTree lift_add(const LevelDelta& delta, const ProjectionTable& full_table,
                 const CadTree& old_tree, CadMode mode) {
    std::size_t n = full_table.order->size();
    if (old_tree.order == nullptr || !(*old_tree.order == *full_table.order) ||
        old_tree.depth() != n || old_tree.mode != mode || delta.levels.size() != n)
        throw std::invalid_argument("lift_add: tree/table mismatch");

    // New level-1 roots from the delta's univariate level.
    std::vector<RealAlg> new_roots;
    for (const auto& p : delta.levels[n - 1])
        new_roots = merge_roots(new_roots, isolate_real_roots(p, 0)).roots;

    SplitCellsResult split = split_cells(old_tree.level1_roots, new_roots, old_tree);

    CadTree tree;
    tree.order = full_table.order;
    tree.mode = mode;
    tree.level1_roots = split.roots;
    tree.levels.push_back(split.cells);
    tree.note_ids();

    for (std::size_t k = 2; k <= n; ++k) {
        const PolySet& full_polys = full_table.level(n - k);
        const PolySet& delta_polys = delta.levels[n - k];
        std::vector<Cell> next;
        for (const auto& parent : tree.levels[k - 2]) {
            if (parent.flag == CellFlag::New) {
                // Full lift over a rebuilt cell (flag inheritance).
                std::vector<RealAlg> roots = merged_eval(full_polys, parent.sample);
                auto stack = build_stack(tree, &parent, roots, mode, CellFlag::New);
                next.insert(next.end(), stack.begin(), stack.end());
                continue;
            }
            const Cell* old_parent = old_tree.find(k - 1, parent.id);
            if (!old_parent) throw std::logic_error("lift_add: lost old cell");
            auto old_children = old_tree.children_of(*old_parent);
            std::vector<RealAlg> existing = stack_roots(old_children);
            bool relift = false;
            if (!delta_polys.empty()) {
                std::vector<RealAlg> dr = merged_eval(delta_polys, parent.sample);
                MergedRoots mr = merge_roots(existing, dr);
                relift = std::any_of(mr.is_new.begin(), mr.is_new.end(), [](bool b) { return b; });
                if (relift) existing = std::move(mr.roots);
            }
            if (relift) {
                auto stack = build_stack(tree, &parent, existing, mode, CellFlag::New);
                next.insert(next.end(), stack.begin(), stack.end());
            } else {
                for (const auto* ch : old_children) {
                    next.push_back(*ch);
                    next.back().flag = CellFlag::Old;
                }
            }
        }
        tree.levels.push_back(std::move(next));
        tree.note_ids();
    }
    combine(tree);
    return tree;
}

}  // namespace lazcad
