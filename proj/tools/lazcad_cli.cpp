// Command-line front end: build a CAD from a polynomial system, refine it
// incrementally with further constraints across invocations (persistent
// session files), inspect/export the result, and run the benchmark harness.
//
// Exit codes: 0 ok, 2 parse failure, 3 degenerate input, 4 unsupported new
// variable, 5 invalid session (1 is generic usage/internal failure).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lazcad/bench.hpp"
#include "lazcad/lifting.hpp"
#include "lazcad/parse.hpp"
#include "lazcad/session.hpp"

namespace {

using namespace lazcad;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitNewVariable = 4;
constexpr int kExitBadSession = 5;

struct InputSystem {
    VarOrderPtr order;
    std::vector<MultiPoly> polys;
};

// Input file format: a header line `vars: x1 < x2 < ...` followed by one
// polynomial per line. Blank lines and `#` comments are ignored.
InputSystem read_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file " + path, 0);
    InputSystem sys;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        auto pos = trimmed.find('#');
        if (pos != std::string::npos) trimmed.erase(pos);
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        std::size_t start = 0;
        while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start])))
            ++start;
        trimmed = trimmed.substr(start);
        if (trimmed.empty()) continue;
        if (!sys.order) {
            if (trimmed.rfind("vars:", 0) != 0)
                throw ParseError("expected a `vars: x1 < x2 < ...` header line", lineno);
            std::string rest = trimmed.substr(5);
            std::vector<std::string> names;
            std::string tok;
            std::istringstream is(rest);
            while (is >> tok) {
                if (tok == "<") continue;
                // allow x1<x2 without spaces
                std::string cur;
                for (char ch : tok) {
                    if (ch == '<') {
                        if (!cur.empty()) names.push_back(cur);
                        cur.clear();
                    } else {
                        cur += ch;
                    }
                }
                if (!cur.empty()) names.push_back(cur);
            }
            if (names.empty()) throw ParseError("no variables declared", lineno);
            sys.order = make_order(std::move(names));
            continue;
        }
        sys.polys.push_back(parse_poly(trimmed, sys.order));
    }
    if (!sys.order) throw ParseError("missing `vars:` header", 0);
    return sys;
}

double seconds_between(std::chrono::steady_clock::time_point a,
                       std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

void print_level_counts(const CadTree& tree) {
    for (std::size_t k = 1; k <= tree.depth(); ++k)
        std::cout << "level" << k << ": " << tree.cell_count(k) << " cells\n";
}

int cmd_build(const std::string& input, const std::string& session_out, const std::string& mode) {
    InputSystem sys;
    try {
        sys = read_input_file(input);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    if (sys.polys.empty()) {
        std::cerr << "degenerate input: no polynomials\n";
        return kExitDegenerate;
    }
    PolySet inputs;
    for (const auto& p : sys.polys) inputs.insert(p);
    if (inputs.empty()) {
        std::cerr << "degenerate input: only constant polynomials\n";
        return kExitDegenerate;
    }
    CadMode m = mode == "full" ? CadMode::Full : CadMode::Open;
    try {
        auto t0 = std::chrono::steady_clock::now();
        ProjectionTable table = projection_polys(inputs, sys.order);
        auto t1 = std::chrono::steady_clock::now();
        CadTree tree = lift(table, m);
        auto t2 = std::chrono::steady_clock::now();
        print_level_counts(tree);
        std::printf("timing: projection %.4fs, lift %.4fs, total %.4fs\n", seconds_between(t0, t1),
                    seconds_between(t1, t2), seconds_between(t0, t2));
        if (!session_out.empty()) {
            SessionState s{sys.order, m, inputs, table, tree};
            save_session(s, session_out);
            std::cout << "session: " << session_out << "\n";
        }
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kExitDegenerate;
    }
}

int cmd_add(const std::string& session_in, const std::string& poly_text,
            const std::string& session_out) {
    SessionState s;
    try {
        s = load_session(session_in);
    } catch (const SessionError& e) {
        std::cerr << "invalid session: " << e.what() << "\n";
        return kExitBadSession;
    }
    MultiPoly g;
    try {
        g = parse_poly(poly_text, s.order);
    } catch (const ParseError& e) {
        if (e.undeclared) {
            std::cerr << "unsupported: the added polynomial uses a variable not present in the "
                         "session's ordering (adding unseen variables is out of scope)\n";
            return kExitNewVariable;
        }
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    if (g.is_constant()) {
        std::cerr << "degenerate input: constant polynomial\n";
        return kExitDegenerate;
    }
    try {
        auto t0 = std::chrono::steady_clock::now();
        IncrementalProjection inc = projection_polys_add(s.table, [&] {
            PolySet one;
            one.insert(g);
            return one;
        }());
        auto t1 = std::chrono::steady_clock::now();
        CadTree tree = lift_add(inc.delta, inc.updated, s.tree, s.mode);
        auto t2 = std::chrono::steady_clock::now();

        for (std::size_t k = 1; k <= tree.depth(); ++k) {
            std::size_t fresh = 0;
            for (const auto& c : tree.level(k))
                if (c.flag == CellFlag::New) ++fresh;
            std::size_t total = tree.cell_count(k);
            std::cout << "level" << k << ": " << total << " cells (" << fresh << " new, "
                      << (total - fresh) << " reused)\n";
        }
        std::printf("timing: projection %.4fs, lift %.4fs, total %.4fs\n", seconds_between(t0, t1),
                    seconds_between(t1, t2), seconds_between(t0, t2));
        s.inputs.insert(g);
        s.table = std::move(inc.updated);
        s.tree = std::move(tree);
        std::string out = session_out.empty() ? session_in : session_out;
        save_session(s, out);
        std::cout << "session: " << out << "\n";
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid session state: " << e.what() << "\n";
        return kExitBadSession;
    }
}

int cmd_export(const std::string& session_in, const std::string& format, unsigned digits,
               const std::string& out_path) {
    SessionState s;
    try {
        s = load_session(session_in);
    } catch (const SessionError& e) {
        std::cerr << "invalid session: " << e.what() << "\n";
        return kExitBadSession;
    }
    std::string payload;
    if (format == "dot") {
        payload = export_dot(s.tree);
    } else if (format == "cells") {
        payload = export_cells(s.tree, digits);
    } else {
        std::ostringstream os;
        for (std::size_t i = 0; i < s.table.nlevels(); ++i) {
            os << "level " << i << " (main variable " << s.order->name(s.table.main_var(i))
               << "):\n";
            for (const auto& p : s.table.level(i)) os << "  " << p.to_string() << "\n";
        }
        payload = os.str();
    }
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 1;
        }
        out << payload;
    }
    return kExitOk;
}

BenchKind parse_kind(const std::string& k) {
    if (k == "bivariate3term") return BenchKind::Bivariate3Term;
    if (k == "trivariate4term") return BenchKind::Trivariate4Term;
    throw CLI::ValidationError("--kind", "unknown kind " + k);
}

BenchStage parse_stage(const std::string& s) {
    if (s == "projection") return BenchStage::Projection;
    if (s == "lift") return BenchStage::Lift;
    if (s == "full") return BenchStage::Full;
    throw CLI::ValidationError("--stage", "unknown stage " + s);
}

int cmd_bench_child(const std::string& kind, std::uint64_t seed, const std::string& stage,
                    const std::string& role, unsigned terms, const std::string& digest_out) {
    GeneratorParams params;
    params.terms = terms;
    BenchCase c = random_system(parse_kind(kind), seed, params);
    StageRun run = role == "classical" ? run_stage_classical(c, parse_stage(stage))
                                       : run_stage_incremental(c, parse_stage(stage));
    std::printf("seconds=%.9f\n", run.seconds);
    if (!digest_out.empty()) {
        std::ofstream out(digest_out);
        out << run.digest;
    }
    return kExitOk;
}

// Runs one measured role in a fresh process (paper protocol: no warm caches).
double spawn_child(const std::string& self, const std::string& kind, std::uint64_t seed,
                   const std::string& stage, const std::string& role, unsigned terms,
                   const std::string& digest_path) {
    std::ostringstream cmd;
    cmd << "'" << self << "' bench-child --kind " << kind << " --seed " << seed << " --stage "
        << stage << " --role " << role << " --terms " << terms << " --digest-out '" << digest_path
        << "'";
    FILE* pipe = popen(cmd.str().c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot spawn bench child");
    char buf[256];
    double seconds = -1;
    while (fgets(buf, sizeof buf, pipe)) {
        if (sscanf(buf, "seconds=%lf", &seconds) == 1) continue;
    }
    int rc = pclose(pipe);
    if (rc != 0 || seconds < 0) throw std::runtime_error("bench child failed");
    return seconds;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int cmd_bench(const std::string& self, const std::string& kind, unsigned n, const std::string& stage,
              std::uint64_t seed, unsigned terms, const std::string& out_csv) {
    if (n < 2) {
        std::cerr << "need at least 2 cases\n";
        return 1;
    }
    std::vector<BenchCase> cases;
    GeneratorParams params;
    params.terms = terms;
    for (unsigned i = 0; i < n; ++i) cases.push_back(random_system(parse_kind(kind), seed + i, params));

    std::string tmpdir = "/tmp";
    if (const char* env = std::getenv("TMPDIR")) tmpdir = env;
    auto runner = [&](const BenchCase& c, BenchStage st) {
        CaseMeasurement m;
        std::string dc = tmpdir + "/lazcad_bench_c_" + std::to_string(c.seed) + ".txt";
        std::string di = tmpdir + "/lazcad_bench_i_" + std::to_string(c.seed) + ".txt";
        m.classical_seconds = spawn_child(self, kind, c.seed, stage, "classical", terms, dc);
        m.incremental_seconds = spawn_child(self, kind, c.seed, stage, "incremental", terms, di);
        m.equal = slurp(dc) == slurp(di) && !slurp(dc).empty();
        std::remove(dc.c_str());
        std::remove(di.c_str());
        return m;
    };

    ComparisonResult result;
    try {
        result = run_comparison(cases, parse_stage(stage), runner);
    } catch (const std::exception& e) {
        std::cerr << "bench failed: " << e.what() << "\n";
        return 1;
    }

    if (!out_csv.empty()) {
        std::ofstream csv(out_csv);
        csv << "seed,stage,t_classical,t_incremental,equal\n";
        for (const auto& m : result.cases)
            csv << m.seed << "," << stage << "," << m.classical_seconds << ","
                << m.incremental_seconds << "," << (m.equal ? "true" : "false") << "\n";
    }

    auto pct = [](double c, double i) {
        if (c == 0) return 0.0;
        return (c - i) / c * 100.0;
    };
    std::printf("stage: %s  kind: %s  cases: %u  seed: %llu\n", stage.c_str(), kind.c_str(), n,
                static_cast<unsigned long long>(seed));
    std::printf("%-16s %12s %12s %10s\n", "", "classical", "incremental", "delta");
    std::printf("%-16s %12.6f %12.6f %9.2f%%\n", "variance", result.classical.variance,
                result.incremental.variance, pct(result.classical.variance, result.incremental.variance));
    std::printf("%-16s %12.6f %12.6f %9.2f%%\n", "mean", result.classical.mean,
                result.incremental.mean, pct(result.classical.mean, result.incremental.mean));
    std::printf("%-16s %12.6f %12.6f %9.2f%%\n", "lower_quartile", result.classical.lower_quartile,
                result.incremental.lower_quartile,
                pct(result.classical.lower_quartile, result.incremental.lower_quartile));
    std::printf("%-16s %12.6f %12.6f %9.2f%%\n", "median", result.classical.median,
                result.incremental.median, pct(result.classical.median, result.incremental.median));
    std::printf("%-16s %12.6f %12.6f %9.2f%%\n", "upper_quartile", result.classical.upper_quartile,
                result.incremental.upper_quartile,
                pct(result.classical.upper_quartile, result.incremental.upper_quartile));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lazcad: incremental cylindrical algebraic decomposition"};
    app.require_subcommand(1);

    std::string input, session, session_out, mode = "open", format = "cells", poly;
    std::string kind = "bivariate3term", stage = "full", out_path;
    unsigned digits = 4, ncases = 60, terms = 0;
    std::uint64_t seed = 1;
    std::string role = "classical", digest_out;

    auto* build = app.add_subcommand("build", "build a CAD from an input file");
    build->add_option("--input,-i", input, "input file (vars: header + one polynomial per line)")
        ->required();
    build->add_option("--session,-s", session_out, "session file to write");
    build->add_option("--mode,-m", mode, "open|full")->check(CLI::IsMember({"open", "full"}));

    auto* add = app.add_subcommand("add", "add one polynomial to an existing session");
    add->add_option("--session,-s", session, "session file")->required();
    add->add_option("--poly,-p", poly, "polynomial to add")->required();
    add->add_option("--session-out", session_out, "write the result here (default: in place)");

    auto* show = app.add_subcommand("show", "print a view of the session to stdout");
    show->add_option("--session,-s", session, "session file")->required();
    show->add_option("--format,-f", format, "dot|cells|projection")
        ->check(CLI::IsMember({"dot", "cells", "projection"}));
    show->add_option("--digits", digits, "decimal digits for approximate hints");

    auto* exp = app.add_subcommand("export", "write a view of the session to a file");
    exp->add_option("--session,-s", session, "session file")->required();
    exp->add_option("--format,-f", format, "dot|cells|projection")
        ->check(CLI::IsMember({"dot", "cells", "projection"}));
    exp->add_option("--out,-o", out_path, "output path")->required();
    exp->add_option("--digits", digits, "decimal digits for approximate hints");

    auto* bench = app.add_subcommand("bench", "classical-vs-incremental timing harness");
    bench->add_option("--kind", kind, "bivariate3term|trivariate4term");
    bench->add_option("--n", ncases, "number of random cases");
    bench->add_option("--stage", stage, "projection|lift|full");
    bench->add_option("--seed", seed, "base seed");
    bench->add_option("--terms", terms, "terms per polynomial (0 = kind default)");
    bench->add_option("--out", out_path, "results CSV path");

    auto* child = app.add_subcommand("bench-child", "single measured case (internal)");
    child->add_option("--kind", kind)->required();
    child->add_option("--seed", seed)->required();
    child->add_option("--stage", stage)->required();
    child->add_option("--role", role)->required();
    child->add_option("--terms", terms);
    child->add_option("--digest-out", digest_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(input, session_out, mode);
        if (add->parsed()) return cmd_add(session, poly, session_out);
        if (show->parsed()) return cmd_export(session, format, digits, "");
        if (exp->parsed()) return cmd_export(session, format, digits, out_path);
        if (bench->parsed()) return cmd_bench(argv[0], kind, ncases, stage, seed, terms, out_path);
        if (child->parsed()) return cmd_bench_child(kind, seed, stage, role, terms, digest_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
