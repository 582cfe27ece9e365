#include "lazcad/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lazcad/cad_model.hpp"
#include "lazcad/lifting.hpp"
#include "lazcad/projection.hpp"

namespace lazcad {

const char* to_string(BenchKind k) {
    return k == BenchKind::Bivariate3Term ? "bivariate3term" : "trivariate4term";
}

const char* to_string(BenchStage s) {
    switch (s) {
        case BenchStage::Projection: return "projection";
        case BenchStage::Lift: return "lift";
        default: return "full";
    }
}

namespace {

MultiPoly random_poly(std::mt19937_64& rng, const VarOrderPtr& order, unsigned terms,
                      const GeneratorParams& params) {
    std::size_t nv = order->size();
    MultiPoly::TermMap term_map;
    while (term_map.size() < terms) {
        Monomial m(nv, 0);
        std::uint32_t total = 0;
        for (std::size_t i = 0; i < nv; ++i) {
            std::uint32_t e = static_cast<std::uint32_t>(rng() % (params.max_degree + 1));
            if (total + e > params.max_degree) e = 0;
            m[i] = e;
            total += e;
        }
        if (term_map.count(m)) continue;
        long c = static_cast<long>(rng() % (2 * params.coeff_bound)) - params.coeff_bound;
        if (c >= 0) c += 1;  // skip zero, keep the range symmetric
        term_map.emplace(std::move(m), Rat(c));
    }
    return MultiPoly::from_terms(order, std::move(term_map));
}

}  // namespace

BenchCase random_system(BenchKind kind, std::uint64_t seed, GeneratorParams params) {
    BenchCase out;
    out.kind = kind;
    out.seed = seed;
    unsigned terms = params.terms;
    if (kind == BenchKind::Bivariate3Term) {
        out.order = make_order({"x1", "x2"});
        if (terms == 0) terms = 3;
    } else {
        out.order = make_order({"x1", "x2", "x3"});
        if (terms == 0) terms = 4;
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    out.base = random_poly(rng, out.order, terms, params);
    out.increment = random_poly(rng, out.order, terms, params);
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string table_digest(const ProjectionTable& table) {
    std::ostringstream os;
    for (std::size_t i = 0; i < table.nlevels(); ++i) {
        os << "level " << i << ":";
        for (const auto& p : table.level(i)) os << " {" << p.to_string() << "}";
        os << "\n";
    }
    return os.str();
}

std::string tree_digest(const CadTree& tree, const PolySet& inputs) {
    std::ostringstream os;
    os << "roots:";
    for (const auto& r : tree.level1_roots) os << " " << r.canonical_digest(24);
    os << "\n";
    for (std::size_t k = 1; k <= tree.depth(); ++k) {
        os << "level " << k << " stacks:";
        for (auto s : tree.stack_sizes(k)) os << " " << s;
        os << "\n";
    }
    os << "signs:";
    for (const auto& c : tree.levels.back())
        for (const auto& p : inputs) os << " " << sign_at_sample(p, c.sample);
    os << "\n";
    return os.str();
}

PolySet both_inputs(const BenchCase& c) {
    PolySet s;
    s.insert(c.base);
    s.insert(c.increment);
    return s;
}

}  // namespace

StageRun run_stage_classical(const BenchCase& c, BenchStage stage) {
    StageRun out;
    PolySet inputs = both_inputs(c);
    if (stage == BenchStage::Projection) {
        auto t0 = Clock::now();
        ProjectionTable table = projection_polys(inputs, c.order);
        out.seconds = seconds_since(t0);
        out.digest = table_digest(table);
        return out;
    }
    if (stage == BenchStage::Lift) {
        ProjectionTable table = projection_polys(inputs, c.order);
        auto t0 = Clock::now();
        CadTree tree = lift(table, CadMode::Open);
        out.seconds = seconds_since(t0);
        out.digest = tree_digest(tree, inputs);
        return out;
    }
    auto t0 = Clock::now();
    ProjectionTable table = projection_polys(inputs, c.order);
    CadTree tree = lift(table, CadMode::Open);
    out.seconds = seconds_since(t0);
    out.digest = tree_digest(tree, inputs);
    return out;
}

StageRun run_stage_incremental(const BenchCase& c, BenchStage stage) {
    StageRun out;
    PolySet base_only;
    base_only.insert(c.base);
    PolySet increment;
    increment.insert(c.increment);
    ProjectionTable base_table = projection_polys(base_only, c.order);
    if (stage == BenchStage::Projection) {
        auto t0 = Clock::now();
        IncrementalProjection inc = projection_polys_add(base_table, increment);
        out.seconds = seconds_since(t0);
        out.digest = table_digest(inc.updated);
        return out;
    }
    if (stage == BenchStage::Lift) {
        CadTree base_tree = lift(base_table, CadMode::Open);
        IncrementalProjection inc = projection_polys_add(base_table, increment);
        auto t0 = Clock::now();
        CadTree tree = lift_add(inc.delta, inc.updated, base_tree, CadMode::Open);
        out.seconds = seconds_since(t0);
        out.digest = tree_digest(tree, both_inputs(c));
        return out;
    }
    CadTree base_tree = lift(base_table, CadMode::Open);
    auto t0 = Clock::now();
    IncrementalProjection inc = projection_polys_add(base_table, increment);
    CadTree tree = lift_add(inc.delta, inc.updated, base_tree, CadMode::Open);
    out.seconds = seconds_since(t0);
    out.digest = tree_digest(tree, both_inputs(c));
    return out;
}

StatsRow tukey_stats(std::vector<double> xs) {
    if (xs.size() < 2) throw std::invalid_argument("tukey_stats: need at least two samples");
    std::sort(xs.begin(), xs.end());
    auto median_of = [](const std::vector<double>& v, std::size_t lo, std::size_t hi) {
        // median of v[lo..hi] inclusive
        std::size_t n = hi - lo + 1;
        std::size_t mid = lo + n / 2;
        return n % 2 == 1 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
    };
    StatsRow row;
    std::size_t n = xs.size();
    row.median = median_of(xs, 0, n - 1);
    // Tukey hinges: halves include the median element when n is odd.
    std::size_t half_hi = (n % 2 == 1) ? n / 2 : n / 2 - 1;
    row.lower_quartile = median_of(xs, 0, half_hi);
    row.upper_quartile = median_of(xs, (n % 2 == 1) ? n / 2 : n / 2, n - 1);
    double sum = 0;
    for (double x : xs) sum += x;
    row.mean = sum / static_cast<double>(n);
    double var = 0;
    for (double x : xs) var += (x - row.mean) * (x - row.mean);
    row.variance = var / static_cast<double>(n - 1);
    return row;
}

ComparisonResult run_comparison(const std::vector<BenchCase>& cases, BenchStage stage,
                                const CaseRunner& runner) {
    if (cases.size() < 2) throw std::invalid_argument("run_comparison: need at least two cases");
    ComparisonResult out;
    std::vector<double> classical, incremental;
    for (const auto& c : cases) {
        CaseMeasurement m = runner(c, stage);
        m.seed = c.seed;
        if (!m.equal) {
            std::ostringstream os;
            os << "oracle mismatch: incremental result differs from recomputation (seed "
               << c.seed << ")";
            throw std::runtime_error(os.str());
        }
        classical.push_back(m.classical_seconds);
        incremental.push_back(m.incremental_seconds);
        out.cases.push_back(std::move(m));
    }
    out.classical = tukey_stats(classical);
    out.incremental = tukey_stats(incremental);
    return out;
}

}  // namespace lazcad
