#include "lazcad/projection.hpp"

#include <stdexcept>

#include "lazcad/elim.hpp"

namespace lazcad {

bool ProjectionTable::operator==(const ProjectionTable& rhs) const {
    if (levels.size() != rhs.levels.size()) return false;
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (!(levels[i] == rhs.levels[i])) return false;
    return true;
}

bool LevelDelta::all_empty() const {
    for (const auto& l : levels)
        if (!l.empty()) return false;
    return true;
}

std::size_t LevelDelta::total_size() const {
    std::size_t n = 0;
    for (const auto& l : levels) n += l.size();
    return n;
}

namespace {

// Primitive square-free parts with positive degree in var, plus the contents
// (whole members when free of var). The prims feed the coefficient,
// discriminant and resultant stages; the contents carry to the next level.
struct SplitLevel {
    PolySet prims;
    PolySet contents;
};

SplitLevel split_for_var(const PolySet& polys, std::size_t var) {
    SplitLevel out;
    for (const auto& p : polys) {
        if (p.degree(var) == 0) {
            out.contents.insert(p);
            continue;
        }
        auto [cont, prim] = content_primitive(p, var);
        out.contents.insert(cont);
        out.prims.insert(square_free_part(prim, var));
    }
    return out;
}

// Cross resultant of two square-free primitives. A vanishing resultant means
// a shared factor; the pair is then refined into gcd and cofactors so the
// cofactor intersections are still captured.
void cross_resultant_into(const MultiPoly& p, const MultiPoly& q, std::size_t var, PolySet& sink) {
    MultiPoly r = resultant(p, q, var);
    if (!r.is_zero()) {
        sink.insert(r);
        return;
    }
    MultiPoly g = poly_gcd(p, q);
    MultiPoly pc = exact_div(p, g), qc = exact_div(q, g);
    std::vector<MultiPoly> parts;
    if (g.degree(var) > 0) parts.push_back(g);
    if (pc.degree(var) > 0) parts.push_back(pc);
    if (qc.degree(var) > 0) parts.push_back(qc);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (const auto& c : lazard_coefficient_set(parts[i], var)) sink.insert(c);
        sink.insert(discriminant(parts[i], var));
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            cross_resultant_into(parts[i], parts[j], var, sink);
    }
}

PolySet project_prims(const PolySet& prims, std::size_t var) {
    PolySet out;
    for (const auto& p : prims) {
        for (const auto& c : lazard_coefficient_set(p, var)) out.insert(c);
        out.insert(discriminant(p, var));
    }
    const auto& m = prims.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) cross_resultant_into(m[i], m[j], var, out);
    return out;
}

// Level processing from Alg. 1's loop body: extract contents with respect to
// the level's own main variable, then square-free parts.
struct ProcessedLevel {
    PolySet members;
    PolySet carried;  // contents for the next level
};

ProcessedLevel process_level(const PolySet& raw, std::size_t level_main_var) {
    ProcessedLevel out;
    auto split = split_for_var(raw, level_main_var);
    out.carried = std::move(split.contents);
    out.members = std::move(split.prims);
    return out;
}

}  // namespace

PolySet projection(const PolySet& polys, std::size_t var) {
    auto split = split_for_var(polys, var);
    PolySet out = project_prims(split.prims, var);
    out.insert_all(split.contents);
    return out;
}

PolySet projection_add(const PolySet& new_polys, const PolySet& old_level, std::size_t var) {
    auto split = split_for_var(new_polys, var);
    PolySet out = project_prims(split.prims, var);
    out.insert_all(split.contents);
    for (const auto& np : split.prims) {
        for (const auto& op : old_level) {
            if (op.degree(var) == 0) continue;
            cross_resultant_into(np, op, var, out);
        }
    }
    return out;
}

ProjectionTable projection_polys(const PolySet& inputs, const VarOrderPtr& order) {
    for (const auto& p : inputs)
        if (p.is_constant()) throw std::invalid_argument("projection_polys: constant input");
    std::size_t n = order->size();
    ProjectionTable table;
    table.order = order;

    std::size_t top = n - 1;
    auto split = split_for_var(inputs, top);
    PolySet cont = std::move(split.contents);
    table.levels.push_back(std::move(split.prims));

    for (std::size_t i = 1; i < n; ++i) {
        std::size_t elim = n - i;        // variable being projected away
        std::size_t mainv = n - i - 1;   // main variable of the new level
        PolySet raw = projection(table.levels[i - 1], elim);
        raw.insert_all(cont);
        auto processed = process_level(raw, mainv);
        cont = std::move(processed.carried);
        table.levels.push_back(std::move(processed.members));
    }
    return table;
}

IncrementalProjection projection_polys_add(const ProjectionTable& prev, const PolySet& new_polys) {
    if (!prev.order) throw std::invalid_argument("projection_polys_add: empty table");
    for (const auto& p : new_polys)
        if (p.is_constant()) throw std::invalid_argument("projection_polys_add: constant input");
    std::size_t n = prev.order->size();
    if (prev.levels.size() != n) throw std::invalid_argument("projection_polys_add: malformed table");

    IncrementalProjection out;
    out.updated.order = prev.order;

    std::size_t top = n - 1;
    auto split = split_for_var(new_polys, top);
    PolySet delta0 = split.prims.difference(prev.level(0));
    PolySet updated0 = prev.level(0);
    updated0.insert_all(delta0);
    out.updated.levels.push_back(std::move(updated0));
    out.delta.levels.push_back(delta0);
    PolySet cont = std::move(split.contents);

    for (std::size_t i = 1; i < n; ++i) {
        std::size_t elim = n - i;
        std::size_t mainv = n - i - 1;
        if (out.delta.levels[i - 1].empty() && cont.empty()) {
            // Nothing new can appear below this point.
            out.updated.levels.push_back(prev.level(i));
            out.delta.levels.push_back(PolySet{});
            continue;
        }
        PolySet raw = projection_add(out.delta.levels[i - 1], prev.level(i - 1), elim);
        raw.insert_all(cont);
        auto processed = process_level(raw, mainv);
        cont = std::move(processed.carried);
        PolySet delta_i = processed.members.difference(prev.level(i));
        PolySet updated_i = prev.level(i);
        updated_i.insert_all(delta_i);
        out.updated.levels.push_back(std::move(updated_i));
        out.delta.levels.push_back(std::move(delta_i));
    }
    return out;
}

}  // namespace lazcad
