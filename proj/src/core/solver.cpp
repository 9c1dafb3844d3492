#include "core/solver.hpp"

#include <algorithm>
#include <climits>
#include <cstring>
#include <limits>

#if defined(__SSE2__)
#include <immintrin.h>
#endif

namespace tenscol {

namespace {

// Flush denormals while a solve runs: repeated weight smoothing (W /= rho)
// otherwise drags stale entries into the subnormal range, where every
// arithmetic op pays a microcode penalty. Values below ~1e-38 are dead
// propensities; flushing them to zero is semantically a no-op.
class DenormalGuard {
public:
#if defined(__SSE2__)
    DenormalGuard() : csr_(_mm_getcsr()) { _mm_setcsr(csr_ | 0x8040); }  // FTZ | DAZ
    ~DenormalGuard() { _mm_setcsr(csr_); }

private:
    unsigned csr_;
#else
    DenormalGuard() = default;
#endif
};

}  // namespace

const char* solver_version() { return "1.0.0"; }

SolverConfig SolverConfig::defaults(Mode mode) {
    SolverConfig c;
    c.mode = mode;
    if (mode == Mode::GCP) {
        c.mu = 1e-6;
        c.nu = 0.0;
    } else {
        c.mu = 0.0;
        c.nu = 1e-5;
    }
    return c;
}

void SolverConfig::check(const Graph& g) const {
    if (k < 1) throw std::invalid_argument("config: k must be >= 1");
    if (population < 1) throw std::invalid_argument("config: population must be >= 1");
    if (sigma0 <= 0.0) throw std::invalid_argument("config: sigma0 must be > 0");
    if (eta < 0.0) throw std::invalid_argument("config: eta must be >= 0");
    if (nb_iter < 1) throw std::invalid_argument("config: nb_iter must be >= 1");
    if (rho < 1.0) throw std::invalid_argument("config: rho must be >= 1");
    if (max_iter < 0) throw std::invalid_argument("config: max_iter must be >= 0");
    if (trace_stride < 1) throw std::invalid_argument("config: trace_stride must be >= 1");
    loss_params(0).check();

    const size_t elem = precision == Precision::F32 ? 4 : 8;
    const size_t dnk = static_cast<size_t>(population) * g.n() * k;
    const size_t nn = static_cast<size_t>(g.n()) * g.n();
    const size_t need = 2 * dnk * elem             // weights + gradient
                        + nn * (4 + elem)          // concentration counts + coefficients
                        + static_cast<size_t>(population) * (g.n() + k) * 4;
    if (need > memory_budget_bytes)
        throw std::invalid_argument(
            "config: population " + std::to_string(population) + " needs about " +
            std::to_string(need >> 20) + " MiB (budget " +
            std::to_string(memory_budget_bytes >> 20) + " MiB); reduce the population D");
}

template <typename T>
SolverState<T>::SolverState(const Graph& g, const SolverConfig& cfg)
    : g_(&g), cfg_(cfg), n_(g.n()), k_(cfg.k), pop_(cfg.population) {
    cfg_.check(g);
    w_.resize(static_cast<size_t>(pop_) * n_ * k_);
    grad_.resize(w_.size());
    colors_.resize(static_cast<size_t>(pop_) * n_);
    col_counts_.resize(static_cast<size_t>(pop_) * k_);
    mtilde_.assign(static_cast<size_t>(n_) * n_, 0);
    bmat_.resize(static_cast<size_t>(n_) * n_);
    pen_table_.resize(pop_ + 1);
    bon_table_.resize(pop_ + 1);
    fit_.color_conflicts.assign(pop_, 0);
    fit_.equity_violation.assign(pop_, 0);
    edges_flat_.reserve(2 * g.edges().size());
    for (auto [a, b] : g.edges()) {
        edges_flat_.push_back(a);
        edges_flat_.push_back(b);
    }
    init_weights();
}

template <typename T>
void SolverState<T>::init_weights() {
    SplitMix64 rng(cfg_.seed);
    const double sigma = cfg_.sigma0;
    for (auto& x : w_) x = static_cast<T>(rng.next_normal() * sigma);
}

template <typename T>
StepStats SolverState<T>::evaluate() {
    // Step 1: decode colors (argmax along the color axis, ties to low index).
    // The update pass refreshes the decoded colors itself, so this only runs
    // on the initial weights.
    if (!colors_fresh_) {
        for (int d = 0; d < pop_; ++d) {
            const T* wd = w_.data() + static_cast<size_t>(d) * n_ * k_;
            int32_t* cd = colors_.data() + static_cast<size_t>(d) * n_;
            for (int i = 0; i < n_; ++i) {
                const T* row = wd + static_cast<size_t>(i) * k_;
                int best = 0;
                for (int j = 1; j < k_; ++j)
                    if (row[j] > row[best]) best = j;
                cd[i] = best;
            }
        }
        colors_fresh_ = true;
    }

    // Step 2: conflicts by edge scan, equity from group sizes.
    std::fill(col_counts_.begin(), col_counts_.end(), 0);
    const auto [c1, c2] = equity_bounds(n_, k_);
    const bool ecp = cfg_.mode == Mode::ECP;
    StepStats out;
    out.min_total = LLONG_MAX;
    const size_t ecnt = edges_flat_.size();
    for (int d = 0; d < pop_; ++d) {
        const int32_t* cd = colors_.data() + static_cast<size_t>(d) * n_;
        int32_t* counts = col_counts_.data() + static_cast<size_t>(d) * k_;
        for (int i = 0; i < n_; ++i) ++counts[cd[i]];
        long long conf = 0;
        for (size_t e = 0; e < ecnt; e += 2) conf += cd[edges_flat_[e]] == cd[edges_flat_[e + 1]];
        fit_.color_conflicts[d] = conf;
        long long eq = 0;
        if (ecp)
            for (int j = 0; j < k_; ++j) {
                const long long s = counts[j];
                eq += std::min(std::llabs(s - c1), std::llabs(s - c2));
            }
        fit_.equity_violation[d] = eq;
        const long long tot = conf + eq;
        if (tot < out.min_total) {
            out.min_total = tot;
            out.min_fcolor = conf;
            out.min_feq = eq;
            out.best_d = d;
        }
    }
    // Report the per-criterion minima seen anywhere in the population.
    for (int d = 0; d < pop_; ++d) {
        out.min_fcolor = std::min(out.min_fcolor, fit_.color_conflicts[d]);
        if (ecp) out.min_feq = std::min(out.min_feq, fit_.equity_violation[d]);
    }
    evaluated_ = true;
    return out;
}

template <typename T>
void SolverState<T>::accumulate_group_concentration() {
    std::fill(mtilde_.begin(), mtilde_.end(), 0);
    const int n = n_, pop = pop_;
    for (int d = 0; d < pop; ++d) {
        const int32_t* __restrict cd = colors_.data() + static_cast<size_t>(d) * n;
        for (int i = 0; i < n; ++i) {
            const int32_t ci = cd[i];
            int32_t* __restrict row = mtilde_.data() + static_cast<size_t>(i) * n;
            for (int j = 0; j < n; ++j) row[j] += cd[j] == ci;
        }
    }
}

template <typename T>
void SolverState<T>::build_coefficient_matrix(long long t) {
    const double td = static_cast<double>(t);
    const double pen_coeff = 2.0 * cfg_.alpha * cfg_.lambda * td;
    const double bon_coeff = 2.0 * cfg_.beta * cfg_.mu * td;
    const std::vector<uint8_t>& adj = g_->adjacency();

    if (pen_coeff == 0.0 && bon_coeff == 0.0) {
        for (size_t i = 0; i < bmat_.size(); ++i) bmat_[i] = static_cast<T>(adj[i]);
        return;
    }

    accumulate_group_concentration();
    for (int v = 0; v <= pop_; ++v) {
        pen_table_[v] = pen_coeff * std::pow(static_cast<double>(v), cfg_.alpha - 1.0);
        bon_table_[v] = bon_coeff * std::pow(static_cast<double>(v), cfg_.beta - 1.0);
    }
    for (size_t i = 0; i < bmat_.size(); ++i) {
        const int32_t m = mtilde_[i];
        bmat_[i] = adj[i] ? static_cast<T>(1.0 + pen_table_[m]) : static_cast<T>(-bon_table_[m]);
    }
}

template <typename T>
void SolverState<T>::compute_grad_s(long long t) {
    build_coefficient_matrix(t);

    const bool eq_term = cfg_.nu != 0.0 && t > 0;
    const T nut = static_cast<T>(cfg_.nu * static_cast<double>(t));
    const auto [c1, c2] = equity_bounds(n_, k_);

    // grad[d,i,c] = sum over the color-c vertices m of B[i,m]. B is symmetric,
    // so the sum runs over rows B[m,:] and vectorizes; the k-strided writeback
    // is the cheap part.
    const int n = n_, k = k_, pop = pop_;
    std::vector<int32_t> order(n);
    std::vector<int32_t> start(k + 1);
    std::vector<int32_t> cursor(k);
    std::vector<T> acc(n);
    T* const __restrict accp = acc.data();
    for (int d = 0; d < pop; ++d) {
        const int32_t* cd = colors_.data() + static_cast<size_t>(d) * n;
        const int32_t* counts = col_counts_.data() + static_cast<size_t>(d) * k;
        start[0] = 0;
        for (int c = 0; c < k; ++c) start[c + 1] = start[c] + counts[c];
        std::copy(start.begin(), start.end() - 1, cursor.begin());
        for (int m = 0; m < n; ++m) order[cursor[cd[m]]++] = m;
        T* gd = grad_.data() + static_cast<size_t>(d) * n * k;
        for (int c = 0; c < k; ++c) {
            T eq_shift = T(0);
            if (eq_term) {
                const long long s = counts[c];
                eq_shift = s > c2 ? nut : (s < c1 ? -nut : T(0));
            }
            if (start[c] == start[c + 1]) {
                for (int i = 0; i < n; ++i) gd[static_cast<size_t>(i) * k + c] = eq_shift;
                continue;
            }
            const T* first = bmat_.data() + static_cast<size_t>(order[start[c]]) * n;
            std::copy(first, first + n, accp);
            for (int idx = start[c] + 1; idx < start[c + 1]; ++idx) {
                const T* __restrict brow = bmat_.data() + static_cast<size_t>(order[idx]) * n;
                for (int i = 0; i < n; ++i) accp[i] += brow[i];
            }
            if (eq_shift != T(0))
                for (int i = 0; i < n; ++i) gd[static_cast<size_t>(i) * k + c] = accp[i] + eq_shift;
            else
                for (int i = 0; i < n; ++i) gd[static_cast<size_t>(i) * k + c] = accp[i];
        }
    }
}

namespace {

// Softmax + straight-through chain + gradient step for one (d,i) row; decodes
// the updated row's argmax (ties to the lowest index) and returns the row sum
// for the finiteness monitor.
template <typename T>
inline T st_update_row(T* __restrict wr, const T* __restrict gr, T* __restrict eb, int k, T eta,
                       int32_t* best_out) {
    T mx = wr[0];
    for (int j = 1; j < k; ++j) mx = std::max(mx, wr[j]);
    for (int j = 0; j < k; ++j) eb[j] = solver_exp(wr[j] - mx);
    T sum = T(0), dot = T(0);
    for (int j = 0; j < k; ++j) {
        sum += eb[j];
        dot += eb[j] * gr[j];
    }
    const T inv = T(1) / sum;
    const T dotn = dot * inv;
    const T scale = eta * inv;
    for (int j = 0; j < k; ++j) wr[j] -= scale * eb[j] * (gr[j] - dotn);
    T row_sum = wr[0];
    int best = 0;
    for (int j = 1; j < k; ++j) {
        row_sum += wr[j];
        if (wr[j] > wr[best]) best = j;
    }
    *best_out = best;
    return row_sum;
}

#ifdef TENSCOL_AVX2

inline float st_update_row(float* __restrict wr, const float* __restrict gr,
                           float* __restrict eb, int k, float eta, int32_t* best_out) {
    const int kv = k & ~7;
    __m256 vmax = _mm256_set1_ps(-std::numeric_limits<float>::infinity());
    for (int j = 0; j < kv; j += 8) vmax = _mm256_max_ps(vmax, _mm256_loadu_ps(wr + j));
    float mx = hmax256(vmax);
    for (int j = kv; j < k; ++j) mx = std::max(mx, wr[j]);

    const __m256 vmx = _mm256_set1_ps(mx);
    __m256 vsum = _mm256_setzero_ps(), vdot = _mm256_setzero_ps();
    for (int j = 0; j < kv; j += 8) {
        const __m256 e = exp256(_mm256_sub_ps(_mm256_loadu_ps(wr + j), vmx));
        _mm256_storeu_ps(eb + j, e);
        vsum = _mm256_add_ps(vsum, e);
        vdot = _mm256_fmadd_ps(e, _mm256_loadu_ps(gr + j), vdot);
    }
    float sum = hsum256(vsum), dot = hsum256(vdot);
    for (int j = kv; j < k; ++j) {
        const float e = fast_expf(wr[j] - mx);
        eb[j] = e;
        sum += e;
        dot += e * gr[j];
    }

    const float inv = 1.0f / sum;
    const float dotn = dot * inv;
    const float scale = eta * inv;
    const __m256 vdotn = _mm256_set1_ps(dotn), vscale = _mm256_set1_ps(scale);
    __m256 vrow = _mm256_setzero_ps();
    __m256 vnewmax = _mm256_set1_ps(-std::numeric_limits<float>::infinity());
    for (int j = 0; j < kv; j += 8) {
        const __m256 e = _mm256_loadu_ps(eb + j);
        const __m256 g = _mm256_loadu_ps(gr + j);
        const __m256 w = _mm256_fnmadd_ps(_mm256_mul_ps(vscale, e), _mm256_sub_ps(g, vdotn),
                                          _mm256_loadu_ps(wr + j));
        _mm256_storeu_ps(wr + j, w);
        vrow = _mm256_add_ps(vrow, w);
        vnewmax = _mm256_max_ps(vnewmax, w);
    }
    float row_sum = hsum256(vrow);
    float new_max = hmax256(vnewmax);
    for (int j = kv; j < k; ++j) {
        wr[j] -= scale * eb[j] * (gr[j] - dotn);
        row_sum += wr[j];
        new_max = std::max(new_max, wr[j]);
    }
    // first index attaining the max keeps the low-index tie rule; bounded scan
    // so NaN rows (caught by the caller's monitor) cannot run past the row
    int best = 0;
    for (int j = 0; j < k; ++j)
        if (wr[j] == new_max) {
            best = j;
            break;
        }
    *best_out = best;
    return row_sum;
}

#endif  // TENSCOL_AVX2

}  // namespace

template <typename T>
void SolverState<T>::apply_st_update(long long t) {
    const T eta = static_cast<T>(cfg_.eta);
    const int k = k_;
    double weight_sum = 0.0;
    const size_t rows = static_cast<size_t>(pop_) * n_;
    std::vector<T> expbuf(k);
    T* const __restrict eb = expbuf.data();
    int32_t* const __restrict cols = colors_.data();
    for (size_t r = 0; r < rows; ++r) {
        T* __restrict wr = w_.data() + r * k;
        const T* __restrict gr = grad_.data() + r * k;
        weight_sum += static_cast<double>(st_update_row(wr, gr, eb, k, eta, cols + r));
    }
    if (!std::isfinite(weight_sum))
        throw NumericError("solver: non-finite weights after update at iteration " +
                           std::to_string(t) + " (eta=" + std::to_string(cfg_.eta) +
                           ", rho=" + std::to_string(cfg_.rho) + ")");

    if (t > 0 && t % cfg_.nb_iter == 0 && cfg_.rho != 1.0) {
        const T inv_rho = static_cast<T>(1.0 / cfg_.rho);
        for (auto& x : w_) x *= inv_rho;
    }
}

template <typename T>
void SolverState<T>::update(long long t) {
    if (!evaluated_) throw std::logic_error("solver: update() before evaluate()");
    compute_grad_s(t);
    apply_st_update(t);
    colors_fresh_ = true;   // refreshed inside the update pass
    evaluated_ = false;     // fitness now stale
}

template <typename T>
Coloring SolverState<T>::coloring_of(int d) const {
    Coloring c;
    c.k = k_;
    const int32_t* cd = colors_.data() + static_cast<size_t>(d) * n_;
    c.assignment.assign(cd, cd + n_);
    return c;
}

template class SolverState<float>;
template class SolverState<double>;

namespace {

template <typename T>
SolveOutcome run_impl(const Graph& g, const SolverConfig& cfg) {
    DenormalGuard ftz;
    SolverState<T> state(g, cfg);
    SolveOutcome out;
    out.trace.instance = g.name();
    out.trace.prng = SplitMix64::name();
    out.trace.version = solver_version();
    out.trace.config = cfg;

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    long long best_total = LLONG_MAX;
    for (long long t = 0;; ++t) {
        const StepStats s = state.evaluate();
        const double wall = elapsed();
        if (s.min_total < best_total) {
            best_total = s.min_total;
            out.best_coloring = state.coloring_of(s.best_d);
        }
        const bool solved = s.min_total == 0;
        const bool budget = t >= cfg.max_iter;
        const bool timeout = cfg.time_limit_s > 0.0 && wall >= cfg.time_limit_s;
        if (solved || budget || timeout || t % cfg.trace_stride == 0)
            out.trace.records.push_back({t, s.min_fcolor, s.min_feq, s.min_total,
                                         cfg.deterministic ? 0.0 : wall});
        if (solved) {
            out.status = SolveStatus::Solved;
            out.iterations_used = t;
            break;
        }
        if (budget || timeout) {
            out.status = SolveStatus::BudgetExhausted;
            out.iterations_used = t;
            break;
        }
        state.update(t);
    }
    out.best_fitness = best_total;
    out.seconds = elapsed();

    if (out.status == SolveStatus::Solved) {
        // Validator backstop: a Solved outcome must be certified legal.
        const ValidationReport rep = validate(g, out.best_coloring, cfg.mode);
        if (!rep.legal)
            throw std::logic_error("solver: Solved outcome failed independent validation");
    }
    return out;
}

}  // namespace

SolveOutcome solve_fixed_k(const Graph& g, const SolverConfig& cfg) {
    cfg.check(g);
    return cfg.precision == Precision::F32 ? run_impl<float>(g, cfg) : run_impl<double>(g, cfg);
}

SweepReport k_sweep(const Graph& g, const SolverConfig& base_cfg,
                    const std::vector<uint64_t>& seeds, int k_start) {
    if (seeds.empty()) throw std::invalid_argument("k_sweep: seed list is empty");
    SweepReport report;
    int k;
    if (k_start > 0) {
        k = k_start;
    } else {
        Coloring greedy = greedy_upper_bound(g, seeds.front());
        report.greedy_k = greedy.k;
        report.best_k = greedy.k;
        report.best_coloring = std::move(greedy);
        k = report.greedy_k;
    }

    while (k >= 1) {
        SweepKEntry entry;
        entry.k = k;
        entry.runs = static_cast<int>(seeds.size());
        double iter_sum = 0.0, sec_sum = 0.0;
        Coloring k_witness;
        for (uint64_t s : seeds) {
            SolverConfig cfg = base_cfg;
            cfg.k = k;
            cfg.seed = s;
            SolveOutcome o = solve_fixed_k(g, cfg);
            if (o.status == SolveStatus::Solved) {
                ++entry.successes;
                iter_sum += static_cast<double>(o.iterations_used);
                sec_sum += o.seconds;
                k_witness = std::move(o.best_coloring);
            }
        }
        if (entry.successes > 0) {
            entry.mean_iters_success = iter_sum / entry.successes;
            entry.mean_seconds_success = sec_sum / entry.successes;
        }
        report.entries.push_back(entry);
        if (entry.successes == 0) break;
        report.best_k = k;
        report.best_coloring = std::move(k_witness);
        --k;
    }
    return report;
}

}  // namespace tenscol
