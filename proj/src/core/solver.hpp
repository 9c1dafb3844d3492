#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "core/fastmath.hpp"
#include "core/fitness.hpp"
#include "core/graph.hpp"
#include "core/rng.hpp"
#include "core/tensor.hpp"

namespace tenscol {

enum class Precision { F32, F64 };
enum class SolveStatus { Solved, BudgetExhausted };

struct SolverConfig {
    int k = 0;
    Mode mode = Mode::GCP;
    int population = 200;   // D
    double sigma0 = 0.01;
    double eta = 0.001;
    int nb_iter = 5;        // smoothing period
    double rho = 10.0;      // smoothing divisor, >= 1; 1 disables smoothing
    double alpha = 2.5;
    double beta = 1.2;
    double lambda = 1e-5;
    double mu = 1e-6;
    double nu = 0.0;
    long long max_iter = 2'000'000;
    uint64_t seed = 0;
    long long trace_stride = 100;
    bool deterministic = false;  // zero wall-time fields so traces are byte-identical
    double time_limit_s = 0.0;   // 0 disables the wall-clock stop
    Precision precision = Precision::F32;
    size_t memory_budget_bytes = 6ull << 30;

    // Baseline parameter set per mode (mu and nu swap roles between GCP/ECP).
    static SolverConfig defaults(Mode mode);
    void check(const Graph& g) const;
    // The solver applies nu exactly as configured; GCP defaults set it to 0.
    LossParams loss_params(long long t) const {
        return LossParams{lambda, mu, nu, alpha, beta, t};
    }
};

struct TraceRecord {
    long long iter = 0;
    long long best_fcolor = 0;
    long long best_feq = 0;
    long long best_total = 0;
    double wall_s = 0.0;
};

struct RunTrace {
    std::string instance;
    std::string prng;
    std::string version;
    SolverConfig config;
    std::vector<TraceRecord> records;
};

struct StepStats {
    long long min_fcolor = 0;
    long long min_feq = 0;
    long long min_total = 0;
    int best_d = 0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::BudgetExhausted;
    Coloring best_coloring;
    long long best_fitness = 0;
    long long iterations_used = 0;
    double seconds = 0.0;
    RunTrace trace;
};

const char* solver_version();

// One population state of the gradient-descent weight learner. Exposed so
// tests can drive single iterations; solve_fixed_k below wraps the full loop.
//
// The hot path never materializes the per-solution association tensors: it
// works on the color-index form of the one-hot S, accumulates the group
// concentration counts directly and folds the adjacency, penalization and
// bonus coefficients into one n*n matrix per iteration. The result is
// identical to composing the generic tensor kernels (asserted in tests).
template <typename T>
class SolverState {
public:
    SolverState(const Graph& g, const SolverConfig& cfg);

    // Step 1 + Step 2: decode S from W, evaluate the fitness vector.
    StepStats evaluate();
    // Steps 3 + 4 at iteration t: loss gradient, ST gradient, weight update,
    // periodic smoothing. Requires a preceding evaluate().
    void update(long long t);
    StepStats step(long long t) {
        StepStats s = evaluate();
        update(t);
        return s;
    }

    const std::vector<T>& weights() const { return w_; }
    const std::vector<int32_t>& colors() const { return colors_; }
    const FitnessVector& fitness() const { return fit_; }
    Coloring coloring_of(int d) const;
    const Graph& graph() const { return *g_; }

private:
    void init_weights();
    void accumulate_group_concentration();
    void build_coefficient_matrix(long long t);
    void compute_grad_s(long long t);
    void apply_st_update(long long t);

    const Graph* g_;
    SolverConfig cfg_;
    int n_, k_, pop_;
    std::vector<T> w_;              // D*n*k weights
    std::vector<T> grad_;           // D*n*k dL/dS
    std::vector<int32_t> colors_;   // D*n decoded colors
    std::vector<int32_t> col_counts_;  // D*k group sizes
    std::vector<int32_t> mtilde_;      // n*n group concentration counts
    std::vector<T> bmat_;              // n*n combined coefficient matrix
    std::vector<double> pen_table_, bon_table_;  // pow tables over 0..D
    std::vector<int32_t> edges_flat_;            // 2*|E| endpoints
    FitnessVector fit_;
    bool evaluated_ = false;
    bool colors_fresh_ = false;  // colors_ matches the current weights
};

// Weight tensor initialization as a standalone operation: D*n*k i.i.d.
// N(0, sigma0) draws from the seeded splitmix64+Box-Muller stream in flat
// row-major order. Same (seed, D, n, k) gives bitwise-identical tensors.
template <typename T>
Tensor3<T> init_weights(const SolverConfig& cfg, int n) {
    Tensor3<T> w(cfg.population, n, cfg.k);
    SplitMix64 rng(cfg.seed);
    for (auto& x : w.v) x = static_cast<T>(rng.next_normal() * cfg.sigma0);
    return w;
}

// Straight-through gradient: Shat (.) (grad_s - (Shat (.) grad_s) . J) with
// J the k*k all-ones matrix; equivalently per entry
// shat*g - shat * sum_l shat_l g_l.
template <typename T>
Tensor3<T> st_gradient(const Tensor3<T>& w, const Tensor3<T>& grad_s) {
    detail::require(w.same_shape(grad_s), "st_gradient: shape mismatch");
    Tensor3<T> shat = softmax_lastaxis(w);
    Tensor3<T> out(w.d0, w.d1, w.d2);
    for (int d = 0; d < w.d0; ++d)
        for (int i = 0; i < w.d1; ++i) {
            const T* s = shat.slice(d, i);
            const T* g = grad_s.slice(d, i);
            T* o = out.slice(d, i);
            T dot = T(0);
            for (int j = 0; j < w.d2; ++j) dot += s[j] * g[j];
            for (int j = 0; j < w.d2; ++j) o[j] = s[j] * (g[j] - dot);
        }
    return out;
}

SolveOutcome solve_fixed_k(const Graph& g, const SolverConfig& cfg);

struct SweepKEntry {
    int k = 0;
    int successes = 0;
    int runs = 0;
    double mean_iters_success = 0.0;
    double mean_seconds_success = 0.0;
};

struct SweepReport {
    int best_k = 0;
    Coloring best_coloring;
    int greedy_k = 0;  // 0 when the sweep started from a user-supplied k
    std::vector<SweepKEntry> entries;
};

// Decreasing-k driver: start at the DSATUR bound (or k_start when > 0), run
// every seed at each k, decrement while at least one seed solves, stop at the
// first k where all fail.
SweepReport k_sweep(const Graph& g, const SolverConfig& base_cfg,
                    const std::vector<uint64_t>& seeds, int k_start = 0);

}  // namespace tenscol
