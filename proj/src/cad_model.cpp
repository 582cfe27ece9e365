#include "lazcad/cad_model.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lazcad/algcontext.hpp"

namespace lazcad {

CellBound CellBound::section(RealAlg v) {
    CellBound b;
    b.is_section = true;
    b.value = std::move(v);
    return b;
}

CellBound CellBound::sector(const RealAlg* lo, const RealAlg* hi) {
    CellBound b;
    b.is_section = false;
    if (lo) {
        b.lo_inf = false;
        b.lo = *lo;
    }
    if (hi) {
        b.hi_inf = false;
        b.hi = *hi;
    }
    return b;
}

const Cell* CadTree::find(std::size_t level, std::uint64_t id) const {
    if (level == 0 || level > levels.size()) return nullptr;
    for (const auto& c : levels[level - 1])
        if (c.id == id) return &c;
    return nullptr;
}

const Cell* CadTree::parent_of(const Cell& c) const {
    if (c.level <= 1) return nullptr;
    return find(c.level - 1, c.source);
}

std::vector<const Cell*> CadTree::children_of(const Cell& c) const {
    std::vector<const Cell*> out;
    if (c.level >= levels.size()) return out;
    for (const auto& ch : levels[c.level])
        if (ch.source == c.id) out.push_back(&ch);
    return out;
}

std::vector<std::size_t> CadTree::stack_sizes(std::size_t k) const {
    std::vector<std::size_t> out;
    if (k == 1) {
        out.push_back(levels.at(0).size());
        return out;
    }
    // levels are stack-sorted after combine: children follow parent order
    for (const auto& parent : levels.at(k - 2)) {
        std::size_t n = 0;
        for (const auto& c : levels.at(k - 1))
            if (c.source == parent.id) ++n;
        out.push_back(n);
    }
    return out;
}

void CadTree::note_ids() {
    std::uint64_t mx = 0;
    for (const auto& lvl : levels)
        for (const auto& c : lvl) mx = std::max(mx, c.id);
    next_id_ = mx + 1;
}

std::vector<Cell> build_stack(CadTree& tree, const Cell* parent,
                              const std::vector<RealAlg>& roots, CadMode mode, CellFlag flag) {
    std::vector<RealAlg> samples = gen_sample_points(roots, mode);
    std::vector<Cell> out;
    std::size_t level = parent ? parent->level + 1 : 1;
    auto base_sample = parent ? parent->sample : SamplePoint{};

    auto push = [&](CellBound bound, const RealAlg& coord) {
        Cell c;
        c.id = tree.alloc_id();
        c.level = level;
        c.source = parent ? parent->id : 0;
        c.flag = flag;
        c.sample = base_sample;
        c.sample.push_back(coord);
        c.bound = std::move(bound);
        out.push_back(std::move(c));
    };

    if (mode == CadMode::Full) {
        std::size_t k = roots.size();
        for (std::size_t i = 0; i <= k; ++i) {
            const RealAlg* lo = i == 0 ? nullptr : &roots[i - 1];
            const RealAlg* hi = i == k ? nullptr : &roots[i];
            push(CellBound::sector(lo, hi), samples[2 * i]);
            if (i < k) push(CellBound::section(roots[i]), roots[i]);
        }
    } else {
        for (std::size_t i = 0; i <= roots.size(); ++i) {
            const RealAlg* lo = i == 0 ? nullptr : &roots[i - 1];
            const RealAlg* hi = i == roots.size() ? nullptr : &roots[i];
            push(CellBound::sector(lo, hi), samples[i]);
        }
    }
    return out;
}

namespace {

// Representative coordinate for sorting cells within a stack.
const RealAlg& stack_key(const Cell& c) {
    return c.bound.is_section ? c.bound.value : c.sample.back();
}

}  // namespace

void combine(CadTree& tree) {
    if (tree.levels.empty()) return;
    // Level 1: one stack.
    auto& l1 = tree.levels[0];
    std::sort(l1.begin(), l1.end(),
              [](const Cell& a, const Cell& b) { return alg_less(stack_key(a), stack_key(b)); });
    for (std::size_t i = 0; i < l1.size(); ++i) l1[i].index = {static_cast<int>(i + 1)};

    for (std::size_t k = 2; k <= tree.levels.size(); ++k) {
        auto& lvl = tree.levels[k - 1];
        const auto& parents = tree.levels[k - 2];
        std::map<std::uint64_t, std::size_t> parent_pos;
        for (std::size_t i = 0; i < parents.size(); ++i) parent_pos.emplace(parents[i].id, i);
        for (const auto& c : lvl)
            if (!parent_pos.count(c.source))
                throw std::invalid_argument("combine: dangling source reference");
        std::stable_sort(lvl.begin(), lvl.end(), [&](const Cell& a, const Cell& b) {
            std::size_t pa = parent_pos[a.source], pb = parent_pos[b.source];
            if (pa != pb) return pa < pb;
            return alg_less(stack_key(a), stack_key(b));
        });
        std::uint64_t cur_parent = 0;
        int pos = 0;
        for (auto& c : lvl) {
            if (c.source != cur_parent) {
                cur_parent = c.source;
                pos = 0;
            }
            ++pos;
            c.index = parents[parent_pos[c.source]].index;
            c.index.push_back(pos);
        }
    }
    tree.note_ids();
}

std::vector<CellBound> cell_description(const CadTree& tree, const Cell& c) {
    std::vector<CellBound> out(c.level);
    const Cell* cur = &c;
    for (std::size_t j = c.level; j-- > 0;) {
        out[j] = cur->bound;
        cur = tree.parent_of(*cur);
        if (!cur && j != 0) throw std::invalid_argument("cell_description: broken ancestry");
    }
    return out;
}

namespace {

std::string alg_text(const RealAlg& v, unsigned digits) {
    RealAlg r = v.refined(Rat(1, 65536));
    std::string out = r.to_exact_string();
    if (!r.is_rational()) out += " " + r.to_decimal(digits);
    return out;
}

std::string bound_text(const CellBound& b, const std::string& var, unsigned digits) {
    std::ostringstream os;
    if (b.is_section) {
        os << var << " = " << alg_text(b.value, digits);
        return os.str();
    }
    if (b.lo_inf && b.hi_inf) return var;
    if (b.lo_inf) {
        os << var << " < " << alg_text(b.hi, digits);
        return os.str();
    }
    if (b.hi_inf) {
        os << alg_text(b.lo, digits) << " < " << var;
        return os.str();
    }
    os << alg_text(b.lo, digits) << " < " << var << " < " << alg_text(b.hi, digits);
    return os.str();
}

std::string index_text(const std::vector<int>& idx) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << "]";
    return os.str();
}

}  // namespace

std::string export_dot(const CadTree& tree) {
    std::ostringstream os;
    os << "digraph cad {\n";
    os << "  rankdir=TB;\n";
    std::map<std::uint64_t, std::string> names;
    for (std::size_t k = 1; k <= tree.depth(); ++k) {
        std::size_t pos = 0;
        for (const auto& c : tree.level(k)) {
            ++pos;
            std::string name = "L" + std::to_string(k) + "_" + std::to_string(pos);
            names[c.id] = name;
            os << "  " << name << " [label=\"" << index_text(c.index)
               << (c.flag == CellFlag::New ? " new" : "") << "\"";
            if (c.flag == CellFlag::New) os << ", color=blue, penwidth=2";
            os << "];\n";
        }
    }
    for (std::size_t k = 2; k <= tree.depth(); ++k)
        for (const auto& c : tree.level(k))
            os << "  " << names.at(c.id) << " -> " << names.at(c.source) << ";\n";
    os << "}\n";
    return os.str();
}

std::string export_cells(const CadTree& tree, unsigned digits) {
    std::ostringstream os;
    for (std::size_t k = 1; k <= tree.depth(); ++k) {
        std::size_t pos = 0;
        for (const auto& c : tree.level(k)) {
            ++pos;
            os << index_text(c.index) << "\t";
            auto desc = cell_description(tree, c);
            for (std::size_t j = 0; j < desc.size(); ++j)
                os << (j ? "; " : "") << bound_text(desc[j], tree.order->name(j), digits);
            os << "\t(";
            for (std::size_t j = 0; j < c.sample.size(); ++j)
                os << (j ? ", " : "") << alg_text(c.sample[j], digits);
            os << ")\t";
            if (c.level == 1)
                os << "-";
            else {
                const Cell* p = tree.parent_of(c);
                os << (p ? index_text(p->index) : "?");
            }
            os << "\t" << (c.flag == CellFlag::New ? "new" : "old") << "\n";
        }
    }
    return os.str();
}

int sign_at_sample(const MultiPoly& p, const SamplePoint& sample) {
    AlgPoint pt(p.order());
    MultiPoly g = p;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (sample[i].is_rational())
            g = g.substitute(i, sample[i].rational());
        else
            pt.bind(i, sample[i]);
    }
    return pt.sign_of(g);
}

SignInvarianceReport check_sign_invariance(const CadTree& tree, const PolySet& inputs,
                                           unsigned trials, std::uint64_t seed) {
    SignInvarianceReport report;
    if (tree.depth() == 0) return report;
    std::mt19937_64 rng(seed);
    auto rand_rat_01 = [&rng]() {
        const long den = 1024;
        long num = static_cast<long>(rng() % (den - 1)) + 1;
        return Rat(num, den);
    };

    const auto& top = tree.levels.back();
    for (const auto& c : top) {
        auto desc = cell_description(tree, c);
        bool full_dim = std::none_of(desc.begin(), desc.end(),
                                     [](const CellBound& b) { return b.is_section; });
        if (!full_dim) continue;
        ++report.cells_checked;
        std::vector<int> ref;
        for (const auto& p : inputs) ref.push_back(sign_at_sample(p, c.sample));
        for (unsigned t = 0; t < trials; ++t) {
            SamplePoint pt;
            for (const auto& b : desc) {
                // A rational strictly inside the sector.
                Rat lo, hi;
                if (b.lo_inf && b.hi_inf) {
                    lo = Rat(-4);
                    hi = Rat(4);
                } else if (b.lo_inf) {
                    RealAlg h = b.hi.refined(Rat(1, 1024));
                    hi = h.lo();
                    lo = hi - 8;
                } else if (b.hi_inf) {
                    RealAlg l = b.lo.refined(Rat(1, 1024));
                    lo = l.hi();
                    hi = lo + 8;
                } else {
                    RealAlg l = b.lo, h = b.hi;
                    while (!(l.hi() < h.lo())) {
                        l = l.refined_once();
                        h = h.refined_once();
                    }
                    lo = l.hi();
                    hi = h.lo();
                }
                pt.push_back(RealAlg::from_rational(lo + (hi - lo) * rand_rat_01()));
            }
            ++report.points_checked;
            std::size_t i = 0;
            for (const auto& p : inputs) {
                int s = sign_at_sample(p, pt);
                if (s != ref[i]) {
                    std::ostringstream os;
                    os << "cell " << index_text(c.index) << ": input " << i << " sign " << s
                       << " vs " << ref[i] << " at sample";
                    report.violations.push_back(os.str());
                }
                ++i;
            }
        }
    }
    return report;
}

}  // namespace lazcad
