#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lazcad/multipoly.hpp"
#include "lazcad/varorder.hpp"

namespace lazcad {

enum class BenchKind { Bivariate3Term, Trivariate4Term };
enum class BenchStage { Projection, Lift, Full };

// One base/increment pair, deterministic from the seed.
struct BenchCase {
    BenchKind kind;
    std::uint64_t seed = 0;
    VarOrderPtr order;
    MultiPoly base;
    MultiPoly increment;
};

struct GeneratorParams {
    unsigned terms = 0;        // 0 = kind default (3 bivariate, 4 trivariate)
    unsigned max_degree = 5;   // total degree bound
    long coeff_bound = 99;     // coefficients in [-bound, bound] \ {0}
};

BenchCase random_system(BenchKind kind, std::uint64_t seed, GeneratorParams params = {});

// Measured kernel for one role; the digest canonically captures the result
// for the oracle equality check. Timing covers the algorithmic stage only.
struct StageRun {
    double seconds = 0.0;
    std::string digest;
};
StageRun run_stage_classical(const BenchCase& c, BenchStage stage);
StageRun run_stage_incremental(const BenchCase& c, BenchStage stage);

struct CaseMeasurement {
    std::uint64_t seed = 0;
    double classical_seconds = 0.0;
    double incremental_seconds = 0.0;
    bool equal = false;
};

// Five-number summary (Tukey hinges for the quartiles).
struct StatsRow {
    double variance = 0.0;
    double mean = 0.0;
    double lower_quartile = 0.0;
    double median = 0.0;
    double upper_quartile = 0.0;
};
StatsRow tukey_stats(std::vector<double> xs);

struct ComparisonResult {
    std::vector<CaseMeasurement> cases;
    StatsRow classical;
    StatsRow incremental;
};

// Runs every case through the supplied runner (the CLI supplies a
// fresh-subprocess runner), verifies the oracle equality per case, and
// aggregates the five statistics. Throws on any oracle mismatch or when
// fewer than two cases are supplied.
using CaseRunner = std::function<CaseMeasurement(const BenchCase&, BenchStage)>;
ComparisonResult run_comparison(const std::vector<BenchCase>& cases, BenchStage stage,
                                const CaseRunner& runner);

const char* to_string(BenchKind k);
const char* to_string(BenchStage s);

}  // namespace lazcad
