// Command-line front end. Links the C API only.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tenscol.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

char g_err[512];

[[noreturn]] void die(tc_status rc, const std::string& context) {
    throw CliError(context + ": " + g_err + " (status " + std::to_string(rc) + ")");
}

struct GraphHandle {
    tc_graph* g = nullptr;
    ~GraphHandle() { tc_graph_free(g); }
};

struct OutcomeHandle {
    tc_outcome* o = nullptr;
    ~OutcomeHandle() { tc_outcome_free(o); }
};

void load_instance(const std::string& path, GraphHandle& gh) {
    const tc_status rc = tc_graph_parse_file(path.c_str(), &gh.g, g_err, sizeof(g_err));
    if (rc != TC_OK) die(rc, "loading " + path);
    const int warnings = tc_graph_warning_count(gh.g);
    for (int i = 0; i < warnings; ++i)
        std::cerr << "warning: " << path << ": " << tc_graph_warning(gh.g, i) << "\n";
}

// Seed syntax: "0..9", "0,3,7" or a single integer.
std::vector<uint64_t> parse_seeds(const std::string& spec) {
    std::vector<uint64_t> seeds;
    if (const auto dots = spec.find(".."); dots != std::string::npos) {
        const uint64_t lo = std::stoull(spec.substr(0, dots));
        const uint64_t hi = std::stoull(spec.substr(dots + 2));
        if (hi < lo) throw CliError("seed range is empty: " + spec);
        for (uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        return seeds;
    }
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) seeds.push_back(std::stoull(tok));
    if (seeds.empty()) throw CliError("no seeds in: " + spec);
    return seeds;
}

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> vals;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) vals.push_back(std::stod(tok));
    return vals;
}

std::string sanitize(const std::string& name) {
    std::string out;
    for (char c : name) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-') ? c : '_';
    return out.empty() ? "instance" : out;
}

struct CommonOpts {
    std::string instance;
    std::string mode = "gcp";
    std::string seeds = "0";
    std::string out_dir;
    std::string precision = "f32";
    int population = -1;
    double sigma0 = -1, eta = -1, rho = -1, alpha = -1, beta = -1;
    double lambda = -1, mu = -1, nu = -1;
    int nb_iter = -1;
    long long max_iter = -1, trace_stride = -1;
    double time_limit = 0;
    bool deterministic = false;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o, bool needs_instance = true) {
    auto* inst = cmd->add_option("--instance", o.instance, "DIMACS .col instance path");
    if (needs_instance) inst->required();
    cmd->add_option("--mode", o.mode, "problem mode: gcp or ecp")
        ->check(CLI::IsMember({"gcp", "ecp"}));
    cmd->add_option("--seeds", o.seeds, "seed list: N, a,b,c or lo..hi (default 0)");
    cmd->add_option("--out-dir", o.out_dir, "output directory (default $TENSCOL_OUT_DIR or ./tenscol_out)");
    cmd->add_option("-D,--population", o.population, "population size D");
    cmd->add_option("--sigma0", o.sigma0, "stddev of initial weights");
    cmd->add_option("--eta", o.eta, "learning rate");
    cmd->add_option("--nb-iter", o.nb_iter, "smoothing period");
    cmd->add_option("--rho", o.rho, "smoothing divisor, typically from {1,2,10,100,200} (default 10)");
    cmd->add_option("--alpha", o.alpha, "penalization exponent");
    cmd->add_option("--beta", o.beta, "bonus exponent");
    cmd->add_option("--lambda", o.lambda, "penalization weight");
    cmd->add_option("--mu", o.mu, "bonus weight");
    cmd->add_option("--nu", o.nu, "equity weight");
    cmd->add_option("--max-iter", o.max_iter, "iteration budget");
    cmd->add_option("--trace-stride", o.trace_stride, "iterations between trace records");
    cmd->add_option("--time-limit", o.time_limit, "wall-clock limit in seconds (0 = off)");
    cmd->add_flag("--deterministic", o.deterministic,
                  "zero wall-time fields so traces are byte-identical across runs");
    cmd->add_option("--precision", o.precision, "float width: f32 or f64")
        ->check(CLI::IsMember({"f32", "f64"}));
}

tc_config build_config(const CommonOpts& o, int k) {
    const tc_mode mode = o.mode == "ecp" ? TC_MODE_ECP : TC_MODE_GCP;
    tc_config cfg;
    tc_config_defaults(mode, &cfg);
    cfg.k = k;
    if (o.population > 0) cfg.population = o.population;
    if (o.sigma0 >= 0) cfg.sigma0 = o.sigma0;
    if (o.eta >= 0) cfg.eta = o.eta;
    if (o.nb_iter > 0) cfg.nb_iter = o.nb_iter;
    if (o.rho >= 0) cfg.rho = o.rho;
    if (o.alpha >= 0) cfg.alpha = o.alpha;
    if (o.beta >= 0) cfg.beta = o.beta;
    if (o.lambda >= 0) cfg.lambda = o.lambda;
    if (o.mu >= 0) cfg.mu = o.mu;
    if (o.nu >= 0) cfg.nu = o.nu;
    if (o.max_iter >= 0) cfg.max_iter = o.max_iter;
    if (o.trace_stride > 0) cfg.trace_stride = o.trace_stride;
    cfg.time_limit_s = o.time_limit;
    cfg.deterministic = o.deterministic ? 1 : 0;
    cfg.precision = o.precision == "f64" ? TC_PRECISION_F64 : TC_PRECISION_F32;
    if (mode == TC_MODE_GCP && cfg.nu > 0)
        std::cerr << "warning: nu > 0 with mode gcp adds equity pressure to the gradient while"
                     " the stopping rule stays conflicts-only\n";
    return cfg;
}

fs::path resolve_out_dir(const CommonOpts& o) {
    std::string dir = o.out_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("TENSCOL_OUT_DIR")) dir = env;
        if (dir.empty()) dir = "tenscol_out";
    }
    fs::path p(dir);
    fs::create_directories(p);
    return p;
}

std::string config_echo(const tc_config& c, const std::string& instance) {
    std::ostringstream ss;
    ss << "instance=" << instance << " mode=" << (c.mode == TC_MODE_ECP ? "ecp" : "gcp")
       << " k=" << c.k << " D=" << c.population << " sigma0=" << c.sigma0 << " eta=" << c.eta
       << " nb_iter=" << c.nb_iter << " rho=" << c.rho << " alpha=" << c.alpha
       << " beta=" << c.beta << " lambda=" << c.lambda << " mu=" << c.mu << " nu=" << c.nu
       << " max_iter=" << c.max_iter << " seed=" << c.seed << " stride=" << c.trace_stride
       << " deterministic=" << c.deterministic
       << " precision=" << (c.precision == TC_PRECISION_F64 ? "f64" : "f32")
       << " version=" << tc_version() << " prng=" << tc_prng_name();
    return ss.str();
}

void write_trace_csv(const fs::path& path, const tc_outcome* o, const tc_config& cfg,
                     const std::string& instance) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CliError("cannot write trace file " + path.string());
    f << "# " << config_echo(cfg, instance) << "\n";
    f << "iter,best_fcolor,best_feq,best_total,wall_s\n";
    const long long nrec = tc_outcome_trace_size(o);
    char line[160];
    for (long long i = 0; i < nrec; ++i) {
        tc_trace_record r;
        if (tc_outcome_trace_get(o, i, &r, g_err, sizeof(g_err)) != TC_OK)
            throw CliError("trace read failed");
        std::snprintf(line, sizeof(line), "%lld,%lld,%lld,%lld,%.6f\n", r.iter, r.best_fcolor,
                      r.best_feq, r.best_total, r.wall_s);
        f << line;
    }
}

struct TraceSummary {
    long long final_iter = 0;
    long long final_best_total = -1;
    double final_wall = 0.0;
};

// Re-reads a trace CSV; batch statistics are derived from the files on disk so
// the summary cannot diverge from the traces.
TraceSummary read_trace_csv(const fs::path& path) {
    std::ifstream f(path);
    if (!f) throw CliError("cannot re-read trace file " + path.string());
    std::string line;
    TraceSummary s;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'i') continue;
        long long iter, fc, fe, tot;
        double wall;
        if (std::sscanf(line.c_str(), "%lld,%lld,%lld,%lld,%lf", &iter, &fc, &fe, &tot, &wall) == 5) {
            s.final_iter = iter;
            s.final_best_total = tot;
            s.final_wall = wall;
        }
    }
    if (s.final_best_total < 0) throw CliError("trace file has no records: " + path.string());
    return s;
}

int cmd_solve(const CommonOpts& opts, int k) {
    GraphHandle gh;
    load_instance(opts.instance, gh);
    const std::string iname = sanitize(tc_graph_name(gh.g));
    const fs::path out_dir = resolve_out_dir(opts);
    const std::vector<uint64_t> seeds = parse_seeds(opts.seeds);

    const std::string stem =
        iname + "_" + opts.mode + "_k" + std::to_string(k);
    std::vector<fs::path> trace_files;
    std::vector<int> best_coloring;
    long long best_fitness = -1;
    json runs = json::array();

    for (uint64_t seed : seeds) {
        tc_config cfg = build_config(opts, k);
        cfg.seed = seed;
        OutcomeHandle oh;
        const tc_status rc = tc_solve(gh.g, &cfg, &oh.o, g_err, sizeof(g_err));
        if (rc != TC_OK) die(rc, "solve");

        const fs::path trace_path = out_dir / (stem + "_s" + std::to_string(seed) + ".trace.csv");
        write_trace_csv(trace_path, oh.o, cfg, iname);
        trace_files.push_back(trace_path);

        const bool solved = tc_outcome_status(oh.o) == TC_SOLVED;
        const long long fitness = tc_outcome_best_fitness(oh.o);
        if (best_fitness < 0 || fitness < best_fitness) {
            best_fitness = fitness;
            const int n = tc_outcome_coloring(oh.o, nullptr, 0);
            best_coloring.assign(n, 0);
            tc_outcome_coloring(oh.o, best_coloring.data(), n);
        }
        runs.push_back({{"type", "run"},
                        {"instance", iname},
                        {"mode", opts.mode},
                        {"k", k},
                        {"seed", seed},
                        {"status", solved ? "solved" : "budget_exhausted"},
                        {"iterations", tc_outcome_iterations(oh.o)},
                        {"best_fitness", fitness},
                        {"seconds", tc_outcome_seconds(oh.o)},
                        {"trace", trace_path.string()}});
        std::cout << "seed " << seed << ": " << (solved ? "solved" : "budget exhausted")
                  << " best_fitness=" << fitness << " iterations=" << tc_outcome_iterations(oh.o)
                  << " (" << tc_outcome_seconds(oh.o) << " s)\n";
    }

    // Batch statistics recomputed from the trace files.
    int successes = 0;
    double sec_sum = 0, iter_sum = 0;
    for (const fs::path& tf : trace_files) {
        const TraceSummary ts = read_trace_csv(tf);
        if (ts.final_best_total == 0) {
            ++successes;
            sec_sum += ts.final_wall;
            iter_sum += static_cast<double>(ts.final_iter);
        }
    }

    std::string solution_path;
    if (successes > 0) {
        const fs::path sp = out_dir / (stem + ".sol");
        const tc_mode mode = opts.mode == "ecp" ? TC_MODE_ECP : TC_MODE_GCP;
        const tc_status rc =
            tc_solution_write(sp.string().c_str(), gh.g, best_coloring.data(),
                              static_cast<int>(best_coloring.size()), k, mode, g_err, sizeof(g_err));
        if (rc != TC_OK) die(rc, "writing solution");
        solution_path = sp.string();
    }

    json batch = {{"type", "batch"},
                  {"instance", iname},
                  {"mode", opts.mode},
                  {"k", k},
                  {"runs", seeds.size()},
                  {"successes", successes},
                  {"sr", std::to_string(successes) + "/" + std::to_string(seeds.size())},
                  {"mean_seconds_success", successes ? sec_sum / successes : 0.0},
                  {"mean_iterations_success", successes ? iter_sum / successes : 0.0},
                  {"solution", solution_path}};

    std::ofstream summary(out_dir / "summary.jsonl", std::ios::app);
    for (const auto& r : runs) summary << r.dump() << "\n";
    summary << batch.dump() << "\n";

    std::cout << "SR " << successes << "/" << seeds.size();
    if (successes) std::cout << ", mean time of successful runs " << sec_sum / successes << " s";
    std::cout << "\n";
    if (!solution_path.empty()) std::cout << "best solution: " << solution_path << "\n";
    return successes > 0 ? 0 : 1;
}

int cmd_sweep(const CommonOpts& opts, int k_start) {
    GraphHandle gh;
    load_instance(opts.instance, gh);
    const std::string iname = sanitize(tc_graph_name(gh.g));
    const fs::path out_dir = resolve_out_dir(opts);
    const std::vector<uint64_t> seeds = parse_seeds(opts.seeds);

    tc_config base = build_config(opts, k_start > 0 ? k_start : 1);
    tc_sweep* sw = nullptr;
    const tc_status rc = tc_k_sweep(gh.g, &base, seeds.data(), static_cast<int>(seeds.size()),
                                    k_start, &sw, g_err, sizeof(g_err));
    if (rc != TC_OK) die(rc, "sweep");

    json entries = json::array();
    for (int i = 0; i < tc_sweep_entry_count(sw); ++i) {
        tc_sweep_entry e;
        tc_sweep_entry_get(sw, i, &e, g_err, sizeof(g_err));
        entries.push_back({{"k", e.k},
                           {"successes", e.successes},
                           {"runs", e.runs},
                           {"sr", std::to_string(e.successes) + "/" + std::to_string(e.runs)},
                           {"mean_iterations_success", e.mean_iters_success},
                           {"mean_seconds_success", e.mean_seconds_success}});
        std::cout << "k=" << e.k << " SR " << e.successes << "/" << e.runs;
        if (e.successes)
            std::cout << " mean_iters " << e.mean_iters_success << " mean_s "
                      << e.mean_seconds_success;
        std::cout << "\n";
    }
    const int best_k = tc_sweep_best_k(sw);
    std::cout << "best k: " << best_k;
    if (tc_sweep_greedy_k(sw) > 0) std::cout << " (dsatur start " << tc_sweep_greedy_k(sw) << ")";
    std::cout << "\n";

    std::string solution_path;
    const int n = tc_sweep_coloring(sw, nullptr, 0);
    if (n > 0 && best_k > 0) {
        std::vector<int> col(n);
        tc_sweep_coloring(sw, col.data(), n);
        const fs::path sp = out_dir / (iname + "_" + opts.mode + "_sweep.sol");
        const tc_mode mode = opts.mode == "ecp" ? TC_MODE_ECP : TC_MODE_GCP;
        if (tc_solution_write(sp.string().c_str(), gh.g, col.data(), n, tc_sweep_coloring_k(sw),
                              mode, g_err, sizeof(g_err)) != TC_OK)
            die(TC_ERR_IO, "writing sweep solution");
        solution_path = sp.string();
        std::cout << "best solution: " << solution_path << "\n";
    }

    json rec = {{"type", "sweep"},   {"instance", iname},          {"mode", opts.mode},
                {"best_k", best_k},  {"greedy_k", tc_sweep_greedy_k(sw)}, {"entries", entries},
                {"solution", solution_path}};
    std::ofstream summary(out_dir / "summary.jsonl", std::ios::app);
    summary << rec.dump() << "\n";
    tc_sweep_free(sw);
    return best_k > 0 ? 0 : 1;
}

int cmd_sensitivity(const CommonOpts& opts, int k, const std::string& lambda_grid,
                    const std::string& mu_grid, int repeats) {
    const std::vector<double> lambdas = parse_grid(lambda_grid);
    const std::vector<double> mus = parse_grid(mu_grid);
    if (lambdas.empty() || mus.empty()) throw CliError("sensitivity grid is empty");
    if (repeats < 1) throw CliError("repeats must be >= 1");

    GraphHandle gh;
    load_instance(opts.instance, gh);
    const std::string iname = sanitize(tc_graph_name(gh.g));
    const fs::path out_dir = resolve_out_dir(opts);
    const fs::path grid_path = out_dir / (iname + "_" + opts.mode + "_k" + std::to_string(k) +
                                          "_sensitivity.csv");
    std::ofstream f(grid_path, std::ios::binary);
    if (!f) throw CliError("cannot write " + grid_path.string());
    f << "lambda,mu,repeats,solved,mean_best_fitness,mean_iterations\n";

    const std::vector<uint64_t> seeds = parse_seeds(opts.seeds);
    for (double lam : lambdas) {
        for (double mu : mus) {
            double fit_sum = 0, iter_sum = 0;
            int solved = 0;
            for (int r = 0; r < repeats; ++r) {
                tc_config cfg = build_config(opts, k);
                cfg.lambda = lam;
                cfg.mu = mu;
                cfg.seed = seeds[r % seeds.size()] + static_cast<uint64_t>(r / seeds.size());
                OutcomeHandle oh;
                const tc_status rc = tc_solve(gh.g, &cfg, &oh.o, g_err, sizeof(g_err));
                if (rc != TC_OK) die(rc, "sensitivity solve");
                fit_sum += static_cast<double>(tc_outcome_best_fitness(oh.o));
                iter_sum += static_cast<double>(tc_outcome_iterations(oh.o));
                if (tc_outcome_status(oh.o) == TC_SOLVED) ++solved;
            }
            char line[200];
            std::snprintf(line, sizeof(line), "%.9g,%.9g,%d,%d,%.6f,%.1f\n", lam, mu, repeats,
                          solved, fit_sum / repeats, iter_sum / repeats);
            f << line;
            std::cout << "lambda=" << lam << " mu=" << mu
                      << " mean_best_fitness=" << fit_sum / repeats << " solved=" << solved << "/"
                      << repeats << "\n";
        }
    }
    std::cout << "grid written to " << grid_path.string() << "\n";
    return 0;
}

int cmd_validate(const std::string& instance, const std::string& solution,
                 const std::string& mode_override) {
    GraphHandle gh;
    load_instance(instance, gh);

    int n = 0, k = 0, mode_raw = 0;
    tc_status rc = tc_solution_read(solution.c_str(), &n, &k, &mode_raw, nullptr, g_err,
                                    sizeof(g_err));
    if (rc != TC_OK) die(rc, "reading solution");
    std::vector<int> assignment(n);
    rc = tc_solution_read(solution.c_str(), &n, &k, &mode_raw, assignment.data(), g_err,
                          sizeof(g_err));
    if (rc != TC_OK) die(rc, "reading solution");

    tc_mode mode = static_cast<tc_mode>(mode_raw);
    if (mode_override == "gcp") mode = TC_MODE_GCP;
    if (mode_override == "ecp") mode = TC_MODE_ECP;

    tc_validation rep;
    rc = tc_validate(gh.g, assignment.data(), n, k, mode, &rep, g_err, sizeof(g_err));
    if (rc != TC_OK) die(rc, "validate");
    std::cout << "instance=" << tc_graph_name(gh.g) << " mode="
              << (mode == TC_MODE_ECP ? "ecp" : "gcp") << " k=" << k
              << " conflicts=" << rep.conflicts << " equity_violation=" << rep.equity_violation
              << " legal=" << (rep.legal ? "yes" : "no") << "\n";
    return rep.legal ? 0 : 1;
}

int cmd_exact(const std::string& instance, const std::string& mode_s, int max_n) {
    GraphHandle gh;
    load_instance(instance, gh);
    const tc_mode mode = mode_s == "ecp" ? TC_MODE_ECP : TC_MODE_GCP;
    const int n = tc_graph_vertex_count(gh.g);
    std::vector<int> witness(n);
    int chi = 0;
    long long nodes = 0;
    const tc_status rc = tc_exact_chromatic(gh.g, mode, max_n, &chi, witness.data(), &nodes,
                                            g_err, sizeof(g_err));
    if (rc != TC_OK) die(rc, "exact");
    std::cout << "instance=" << tc_graph_name(gh.g) << " mode=" << mode_s
              << (mode == TC_MODE_ECP ? " equitable_chromatic_number=" : " chromatic_number=")
              << chi << " explored_nodes=" << nodes << "\n";
    return 0;
}

int cmd_gen(const std::string& family, const std::string& out, int n, int level, double p,
            double radius, uint64_t seed) {
    tc_graph* g = nullptr;
    tc_status rc = TC_OK;
    if (family == "mycielski") {
        rc = tc_graph_mycielski(level, &g, g_err, sizeof(g_err));
    } else if (family == "gnp") {
        rc = tc_graph_gnp(n, p, seed, &g, g_err, sizeof(g_err));
    } else if (family == "geometric") {
        rc = tc_graph_geometric(n, radius, seed, &g, g_err, sizeof(g_err));
    } else if (family == "complete" || family == "edgeless" || family == "cycle") {
        std::ostringstream text;
        std::vector<std::pair<int, int>> edges;
        if (family == "complete")
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
        else if (family == "cycle")
            for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
        text << "p edge " << n << ' ' << edges.size() << '\n';
        for (auto [a, b] : edges) text << "e " << a << ' ' << b << '\n';
        rc = tc_graph_parse_text(text.str().c_str(), family.c_str(), &g, g_err, sizeof(g_err));
    } else {
        throw CliError("unknown family: " + family);
    }
    if (rc != TC_OK) die(rc, "generating " + family);
    rc = tc_graph_write_file(g, out.c_str(), g_err, sizeof(g_err));
    if (rc != TC_OK) {
        tc_graph_free(g);
        die(rc, "writing " + out);
    }
    std::cout << "wrote " << out << " (n=" << tc_graph_vertex_count(g)
              << " m=" << tc_graph_edge_count(g) << ")\n";
    tc_graph_free(g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tenscol: population-based gradient-descent weight learning for graph coloring"};
    app.require_subcommand(1);

    CommonOpts solve_opts;
    int solve_k = 0;
    auto* solve = app.add_subcommand("solve", "solve k-COL for a fixed k over a seed batch");
    add_common_flags(solve, solve_opts);
    solve->add_option("--k", solve_k, "color count")->required();

    CommonOpts sweep_opts;
    int sweep_k_start = 0;
    auto* sweep = app.add_subcommand("sweep", "decreasing-k sweep from the DSATUR bound");
    add_common_flags(sweep, sweep_opts);
    sweep->add_option("--k-start", sweep_k_start, "start k (default: DSATUR bound)");

    CommonOpts sens_opts;
    int sens_k = 0, sens_repeats = 3;
    std::string lambda_grid, mu_grid;
    auto* sens = app.add_subcommand("sensitivity", "lambda/mu grid for heat-map data");
    add_common_flags(sens, sens_opts);
    sens->add_option("--k", sens_k, "color count")->required();
    sens->add_option("--lambda-grid", lambda_grid, "comma-separated lambda values")->required();
    sens->add_option("--mu-grid", mu_grid, "comma-separated mu values")->required();
    sens->add_option("--repeats", sens_repeats, "runs per cell");

    std::string val_instance, val_solution, val_mode;
    auto* val = app.add_subcommand("validate", "revalidate a solution file against an instance");
    val->add_option("--instance", val_instance)->required();
    val->add_option("--solution", val_solution)->required();
    val->add_option("--mode", val_mode, "override the mode recorded in the file")
        ->check(CLI::IsMember({"gcp", "ecp"}));

    std::string ex_instance, ex_mode = "gcp";
    int ex_max_n = 12;
    auto* ex = app.add_subcommand("exact", "exhaustive oracle for small instances");
    ex->add_option("--instance", ex_instance)->required();
    ex->add_option("--mode", ex_mode)->check(CLI::IsMember({"gcp", "ecp"}));
    ex->add_option("--max-n", ex_max_n, "refuse instances larger than this");

    std::string gen_family, gen_out;
    int gen_n = 0, gen_level = 4;
    double gen_p = 0.5, gen_radius = 0.1;
    uint64_t gen_seed = 1;
    auto* gen = app.add_subcommand("gen", "write a benchmark-family instance");
    gen->add_option("--family", gen_family, "mycielski|gnp|geometric|complete|edgeless|cycle")
        ->required();
    gen->add_option("--out", gen_out)->required();
    gen->add_option("--n", gen_n, "vertex count (gnp/geometric/complete/edgeless/cycle)");
    gen->add_option("--level", gen_level, "mycielski level (4 -> n=23, 7 -> n=191)");
    gen->add_option("--p", gen_p, "gnp edge probability");
    gen->add_option("--radius", gen_radius, "geometric distance threshold");
    gen->add_option("--seed", gen_seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_opts, solve_k);
        if (sweep->parsed()) return cmd_sweep(sweep_opts, sweep_k_start);
        if (sens->parsed())
            return cmd_sensitivity(sens_opts, sens_k, lambda_grid, mu_grid, sens_repeats);
        if (val->parsed()) return cmd_validate(val_instance, val_solution, val_mode);
        if (ex->parsed()) return cmd_exact(ex_instance, ex_mode, ex_max_n);
        if (gen->parsed())
            return cmd_gen(gen_family, gen_out, gen_n, gen_level, gen_p, gen_radius, gen_seed);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
