#include "tenscol.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "core/exact.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/rng.hpp"
#include "core/solution_io.hpp"
#include "core/solver.hpp"

struct tc_graph {
    tenscol::Graph g;
    std::vector<std::string> warnings;
};

struct tc_outcome {
    tenscol::SolveOutcome o;
};

struct tc_sweep {
    tenscol::SweepReport r;
};

namespace {

void set_err(char* errbuf, size_t errlen, const std::string& msg) {
    if (!errbuf || errlen == 0) return;
    const size_t n = std::min(errlen - 1, msg.size());
    std::memcpy(errbuf, msg.data(), n);
    errbuf[n] = '\0';
}

template <typename Fn>
tc_status guarded(char* errbuf, size_t errlen, Fn&& fn) {
    try {
        return fn();
    } catch (const tenscol::ParseError& e) {
        set_err(errbuf, errlen, e.what());
        return TC_ERR_PARSE;
    } catch (const tenscol::NumericError& e) {
        set_err(errbuf, errlen, e.what());
        return TC_ERR_NUMERIC;
    } catch (const std::invalid_argument& e) {
        set_err(errbuf, errlen, e.what());
        const std::string what = e.what();
        return what.find("refuses") != std::string::npos ? TC_ERR_TOO_LARGE : TC_ERR_INVALID;
    } catch (const std::bad_alloc&) {
        set_err(errbuf, errlen, "out of memory");
        return TC_ERR_TOO_LARGE;
    } catch (const std::runtime_error& e) {
        set_err(errbuf, errlen, e.what());
        return TC_ERR_IO;
    } catch (const std::exception& e) {
        set_err(errbuf, errlen, e.what());
        return TC_ERR_INTERNAL;
    }
}

tenscol::Mode to_mode(tc_mode m) { return m == TC_MODE_ECP ? tenscol::Mode::ECP : tenscol::Mode::GCP; }

tenscol::SolverConfig to_cpp(const tc_config& c) {
    tenscol::SolverConfig cfg;
    cfg.k = c.k;
    cfg.mode = to_mode(c.mode);
    cfg.population = c.population;
    cfg.sigma0 = c.sigma0;
    cfg.eta = c.eta;
    cfg.nb_iter = c.nb_iter;
    cfg.rho = c.rho;
    cfg.alpha = c.alpha;
    cfg.beta = c.beta;
    cfg.lambda = c.lambda;
    cfg.mu = c.mu;
    cfg.nu = c.nu;
    cfg.max_iter = c.max_iter;
    cfg.seed = c.seed;
    cfg.trace_stride = c.trace_stride;
    cfg.deterministic = c.deterministic != 0;
    cfg.time_limit_s = c.time_limit_s;
    cfg.precision = c.precision == TC_PRECISION_F64 ? tenscol::Precision::F64
                                                    : tenscol::Precision::F32;
    if (c.memory_budget_bytes > 0) cfg.memory_budget_bytes = c.memory_budget_bytes;
    return cfg;
}

tc_status make_graph(tenscol::Graph&& g, std::vector<std::string>&& warnings, tc_graph** out) {
    *out = new tc_graph{std::move(g), std::move(warnings)};
    return TC_OK;
}

int copy_coloring(const tenscol::Coloring& c, int* buf, int buflen) {
    const int n = static_cast<int>(c.assignment.size());
    if (!buf || buflen < n) return n;
    std::memcpy(buf, c.assignment.data(), sizeof(int) * static_cast<size_t>(n));
    return n;
}

}  // namespace

extern "C" {

const char* tc_version(void) { return tenscol::solver_version(); }
const char* tc_prng_name(void) { return tenscol::SplitMix64::name(); }

tc_status tc_graph_parse_file(const char* path, tc_graph** out, char* errbuf, size_t errlen) {
    return guarded(errbuf, errlen, [&] {
        if (!path || !out) throw std::invalid_argument("null argument");
        std::vector<std::string> warnings;
        tenscol::Graph g = tenscol::parse_dimacs_file(path, &warnings);
        return make_graph(std::move(g), std::move(warnings), out);
    });
}

tc_status tc_graph_parse_text(const char* text, const char* name, tc_graph** out, char* errbuf,
                              size_t errlen) {
    return guarded(errbuf, errlen, [&] {
        if (!text || !out) throw std::invalid_argument("null argument");
        std::vector<std::string> warnings;
        tenscol::Graph g = tenscol::parse_dimacs(text, &warnings, name ? name : "");
        return make_graph(std::move(g), std::move(warnings), out);
    });
}

void tc_graph_free(tc_graph* g) { delete g; }

int tc_graph_vertex_count(const tc_graph* g) { return g ? g->g.n() : 0; }
long long tc_graph_edge_count(const tc_graph* g) { return g ? g->g.m() : 0; }
double tc_graph_density(const tc_graph* g) { return g ? g->g.density() : 0.0; }
const char* tc_graph_name(const tc_graph* g) { return g ? g->g.name().c_str() : ""; }
int tc_graph_warning_count(const tc_graph* g) {
    return g ? static_cast<int>(g->warnings.size()) : 0;
}
const char* tc_graph_warning(const tc_graph* g, int idx) {
    if (!g || idx < 0 || idx >= static_cast<int>(g->warnings.size())) return nullptr;
    return g->warnings[idx].c_str();
}

tc_status tc_graph_write_file(const tc_graph* g, const char* path, char* errbuf, size_t errlen) {
    return guarded(errbuf, errlen, [&] {
        if (!g || !path) throw std::invalid_argument("null argument");
        tenscol::write_dimacs_file(g->g, path);
        return TC_OK;
    });
}

tc_status tc_graph_mycielski(int level, tc_graph** out, char* errbuf, size_t errlen) {
    return guarded(errbuf, errlen, [&] {
        if (!out) throw std::invalid_argument("null argument");
        return make_graph(tenscol::mycielski_graph(level), {}, out);
    });
}

tc_status tc_graph_gnp(int n, double p, uint64_t seed, tc_graph** out, char* errbuf,
                       size_t errlen) {
    return guarded(errbuf, errlen, [&] {
        if (!out) throw std::invalid_argument("null argument");
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability out of [0,1]");
        return make_graph(tenscol::gnp_graph(n, p, seed), {}, out);
    });
}

tc_status tc_graph_geometric(int n, double radius, uint64_t seed, tc_graph** out, char* errbuf,
                             size_t errlen) {
    return guarded(errbuf, errlen, [&] {
        if (!out) throw std::invalid_argument("null argument");
        if (radius < 0.0) throw std::invalid_argument("radius must be non-negative");
        return make_graph(tenscol::geometric_graph(n, radius, seed), {}, out);
    });
}

tc_status tc_validate(const tc_graph* g, const int* assignment, int n, int k, tc_mode mode,
                      tc_validation* out, char* errbuf, size_t errlen) {
    return guarded(errbuf, errlen, [&] {
        if (!g || !assignment || !out) throw std::invalid_argument("null argument");
        tenscol::Coloring c;
        c.assignment.assign(assignment, assignment + n);
        c.k = k;
        const tenscol::ValidationReport rep = tenscol::validate(g->g, c, to_mode(mode));
        out->conflicts = rep.conflict_count;
        out->equity_violation = rep.equity_violation;
        out->legal = rep.legal ? 1 : 0;
        return TC_OK;
    });
}

tc_status tc_greedy_coloring(const tc_graph* g, uint64_t seed, int* k_out, int* assignment,
                             char* errbuf, size_t errlen) {
    return guarded(errbuf, errlen, [&] {
        if (!g || !k_out) throw std::invalid_argument("null argument");
        const tenscol::Coloring c = tenscol::greedy_upper_bound(g->g, seed);
        *k_out = c.k;
        if (assignment)
            std::memcpy(assignment, c.assignment.data(),
                        sizeof(int) * c.assignment.size());
        return TC_OK;
    });
}

tc_status tc_exact_chromatic(const tc_graph* g, tc_mode mode, int max_n, int* chi_out,
                             int* witness, long long* explored_nodes, char* errbuf,
                             size_t errlen) {
    return guarded(errbuf, errlen, [&] {
        if (!g || !chi_out) throw std::invalid_argument("null argument");
        const tenscol::ExactResult res =
            tenscol::exact_chromatic(g->g, to_mode(mode), max_n > 0 ? max_n : 12);
        *chi_out = res.chromatic_number;
        if (witness)
            std::memcpy(witness, res.witness.assignment.data(),
                        sizeof(int) * res.witness.assignment.size());
        if (explored_nodes) *explored_nodes = res.explored_nodes;
        return TC_OK;
    });
}

void tc_config_defaults(tc_mode mode, tc_config* cfg) {
    if (!cfg) return;
    const tenscol::SolverConfig d = tenscol::SolverConfig::defaults(to_mode(mode));
    *cfg = tc_config{};
    cfg->k = 0;
    cfg->mode = mode;
    cfg->population = d.population;
    cfg->sigma0 = d.sigma0;
    cfg->eta = d.eta;
    cfg->nb_iter = d.nb_iter;
    cfg->rho = d.rho;
    cfg->alpha = d.alpha;
    cfg->beta = d.beta;
    cfg->lambda = d.lambda;
    cfg->mu = d.mu;
    cfg->nu = d.nu;
    cfg->max_iter = d.max_iter;
    cfg->seed = 0;
    cfg->trace_stride = d.trace_stride;
    cfg->deterministic = 0;
    cfg->time_limit_s = 0.0;
    cfg->precision = TC_PRECISION_F32;
    cfg->memory_budget_bytes = d.memory_budget_bytes;
}

tc_status tc_solve(const tc_graph* g, const tc_config* cfg, tc_outcome** out, char* errbuf,
                   size_t errlen) {
    return guarded(errbuf, errlen, [&] {
        if (!g || !cfg || !out) throw std::invalid_argument("null argument");
        *out = new tc_outcome{tenscol::solve_fixed_k(g->g, to_cpp(*cfg))};
        return TC_OK;
    });
}

void tc_outcome_free(tc_outcome* o) { delete o; }

tc_solve_status tc_outcome_status(const tc_outcome* o) {
    return o && o->o.status == tenscol::SolveStatus::Solved ? TC_SOLVED : TC_BUDGET_EXHAUSTED;
}
long long tc_outcome_best_fitness(const tc_outcome* o) { return o ? o->o.best_fitness : -1; }
long long tc_outcome_iterations(const tc_outcome* o) { return o ? o->o.iterations_used : -1; }
double tc_outcome_seconds(const tc_outcome* o) { return o ? o->o.seconds : 0.0; }
int tc_outcome_k(const tc_outcome* o) { return o ? o->o.best_coloring.k : 0; }

int tc_outcome_coloring(const tc_outcome* o, int* buf, int buflen) {
    return o ? copy_coloring(o->o.best_coloring, buf, buflen) : 0;
}

long long tc_outcome_trace_size(const tc_outcome* o) {
    return o ? static_cast<long long>(o->o.trace.records.size()) : 0;
}

tc_status tc_outcome_trace_get(const tc_outcome* o, long long idx, tc_trace_record* rec,
                               char* errbuf, size_t errlen) {
    return guarded(errbuf, errlen, [&] {
        if (!o || !rec) throw std::invalid_argument("null argument");
        if (idx < 0 || idx >= static_cast<long long>(o->o.trace.records.size()))
            throw std::invalid_argument("trace index out of range");
        const tenscol::TraceRecord& r = o->o.trace.records[static_cast<size_t>(idx)];
        rec->iter = r.iter;
        rec->best_fcolor = r.best_fcolor;
        rec->best_feq = r.best_feq;
        rec->best_total = r.best_total;
        rec->wall_s = r.wall_s;
        return TC_OK;
    });
}

tc_status tc_k_sweep(const tc_graph* g, const tc_config* base, const uint64_t* seeds, int nseeds,
                     int k_start, tc_sweep** out, char* errbuf, size_t errlen) {
    return guarded(errbuf, errlen, [&] {
        if (!g || !base || !seeds || !out) throw std::invalid_argument("null argument");
        std::vector<uint64_t> s(seeds, seeds + nseeds);
        tenscol::SolverConfig cfg = to_cpp(*base);
        if (cfg.k < 1) cfg.k = 1;  // per-k value is set by the sweep
        *out = new tc_sweep{tenscol::k_sweep(g->g, cfg, s, k_start)};
        return TC_OK;
    });
}

void tc_sweep_free(tc_sweep* s) { delete s; }

int tc_sweep_best_k(const tc_sweep* s) { return s ? s->r.best_k : 0; }
int tc_sweep_greedy_k(const tc_sweep* s) { return s ? s->r.greedy_k : 0; }
int tc_sweep_entry_count(const tc_sweep* s) {
    return s ? static_cast<int>(s->r.entries.size()) : 0;
}

tc_status tc_sweep_entry_get(const tc_sweep* s, int idx, tc_sweep_entry* e, char* errbuf,
                             size_t errlen) {
    return guarded(errbuf, errlen, [&] {
        if (!s || !e) throw std::invalid_argument("null argument");
        if (idx < 0 || idx >= static_cast<int>(s->r.entries.size()))
            throw std::invalid_argument("sweep entry index out of range");
        const tenscol::SweepKEntry& src = s->r.entries[static_cast<size_t>(idx)];
        e->k = src.k;
        e->successes = src.successes;
        e->runs = src.runs;
        e->mean_iters_success = src.mean_iters_success;
        e->mean_seconds_success = src.mean_seconds_success;
        return TC_OK;
    });
}

int tc_sweep_coloring(const tc_sweep* s, int* buf, int buflen) {
    return s ? copy_coloring(s->r.best_coloring, buf, buflen) : 0;
}
int tc_sweep_coloring_k(const tc_sweep* s) { return s ? s->r.best_coloring.k : 0; }

tc_status tc_solution_write(const char* path, const tc_graph* g, const int* assignment, int n,
                            int k, tc_mode mode, char* errbuf, size_t errlen) {
    return guarded(errbuf, errlen, [&] {
        if (!path || !g || !assignment) throw std::invalid_argument("null argument");
        tenscol::SolutionFile s;
        s.instance = g->g.name();
        s.mode = to_mode(mode);
        s.coloring.assignment.assign(assignment, assignment + n);
        s.coloring.k = k;
        const tenscol::ValidationReport rep = tenscol::validate(g->g, s.coloring, s.mode);
        s.conflicts = rep.conflict_count;
        s.equity_violation = rep.equity_violation;
        tenscol::write_solution_file(s, path);
        return TC_OK;
    });
}

tc_status tc_solution_read(const char* path, int* n_out, int* k_out, int* mode_out,
                           int* assignment, char* errbuf, size_t errlen) {
    return guarded(errbuf, errlen, [&] {
        if (!path) throw std::invalid_argument("null argument");
        const tenscol::SolutionFile s = tenscol::load_solution_file(path);
        if (n_out) *n_out = static_cast<int>(s.coloring.assignment.size());
        if (k_out) *k_out = s.coloring.k;
        if (mode_out) *mode_out = s.mode == tenscol::Mode::ECP ? TC_MODE_ECP : TC_MODE_GCP;
        if (assignment)
            std::memcpy(assignment, s.coloring.assignment.data(),
                        sizeof(int) * s.coloring.assignment.size());
        return TC_OK;
    });
}

}  // extern "C"
