#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/tensor.hpp"

namespace tenscol {

// Loss weighting for the time-scaled penalization/bonus/equity terms.
struct LossParams {
    double lambda = 1e-5;  // penalization weight, >= 0
    double mu = 1e-6;      // bonus weight, >= 0
    double nu = 0.0;       // equity weight, >= 0
    double alpha = 2.5;    // penalization exponent, > 1
    double beta = 1.2;     // bonus exponent, > 1
    long long t = 0;       // iteration counter

    void check() const {
        if (alpha <= 1.0 || beta <= 1.0)
            throw std::invalid_argument("loss exponents alpha and beta must be > 1");
        if (lambda < 0.0 || mu < 0.0 || nu < 0.0)
            throw std::invalid_argument("loss weights must be non-negative");
        if (t < 0) throw std::invalid_argument("iteration counter must be non-negative");
    }
};

struct FitnessVector {
    std::vector<long long> color_conflicts;  // per solution, <= |E|
    std::vector<long long> equity_violation; // per solution, <= n; zeros in GCP mode

    long long total(int d) const { return color_conflicts[d] + equity_violation[d]; }
};

namespace detail {

template <typename T>
void require_onehot(const Tensor3<T>& s, const char* who) {
    for (int d = 0; d < s.d0; ++d)
        for (int i = 0; i < s.d1; ++i) {
            const T* row = s.slice(d, i);
            int ones = 0;
            for (int j = 0; j < s.d2; ++j) {
                if (row[j] == T(1))
                    ++ones;
                else if (row[j] != T(0))
                    throw NumericError(std::string(who) + ": tensor is not one-hot");
            }
            if (ones != 1) throw NumericError(std::string(who) + ": tensor is not one-hot");
        }
}

}  // namespace detail

// m[d,i,j] = 1 iff vertices i and j share a color in solution d. Symmetric,
// unit diagonal, invariant under per-solution color permutations.
template <typename T>
Tensor3<T> association_tensor(const Tensor3<T>& s) {
    detail::require_onehot(s, "association_tensor");
    return batched_gram(s);
}

// C = A (.) M and the per-solution conflict counts (exact integers).
template <typename T>
std::pair<Tensor3<T>, std::vector<long long>> conflict_fitness(const Graph& g,
                                                               const Tensor3<T>& m) {
    if (m.d1 != g.n() || m.d2 != g.n()) throw ShapeError("conflict_fitness: shape mismatch");
    Tensor3<T> c(m.d0, m.d1, m.d2);
    std::vector<long long> conflicts(m.d0, 0);
    for (int d = 0; d < m.d0; ++d) {
        long long acc = 0;
        for (int i = 0; i < m.d1; ++i) {
            const uint8_t* arow = g.adjacency_row(i);
            const T* mrow = m.slice(d, i);
            T* crow = c.slice(d, i);
            for (int j = 0; j < m.d2; ++j) {
                crow[j] = arow[j] ? mrow[j] : T(0);
                acc += arow[j] && mrow[j] != T(0) ? 1 : 0;
            }
        }
        conflicts[d] = acc / 2;
    }
    return {std::move(c), std::move(conflicts)};
}

// Equity fitness per solution: sum_l min(|#V_dl - c1|, |#V_dl - c2|).
template <typename T>
std::vector<long long> equity_fitness(const Tensor3<T>& s) {
    detail::require_onehot(s, "equity_fitness");
    const auto [c1, c2] = equity_bounds(s.d1, s.d2);
    std::vector<long long> out(s.d0, 0);
    for (int d = 0; d < s.d0; ++d) {
        std::vector<long long> cnt(s.d2, 0);
        for (int i = 0; i < s.d1; ++i) {
            const T* row = s.slice(d, i);
            for (int j = 0; j < s.d2; ++j)
                if (row[j] != T(0)) ++cnt[j];
        }
        for (long long v : cnt) out[d] += std::min(std::llabs(v - c1), std::llabs(v - c2));
    }
    return out;
}

// Group concentration matrix: per vertex pair, the number of solutions that
// put the pair in one color group. Diagonal equals the population size.
template <typename T>
Mat<T> group_concentration(const Tensor3<T>& m) {
    return sum_axis0(m);
}

// Penalization kappa and bonus varpi. Diagnostic only; the solver hot loop
// computes their gradients without materializing these scalars.
template <typename T>
std::pair<double, double> penalty_bonus_values(const Graph& g, const Mat<T>& mt,
                                               const LossParams& p) {
    p.check();
    if (mt.rows != g.n() || mt.cols != g.n())
        throw ShapeError("penalty_bonus_values: shape mismatch");
    double kap = 0.0, var = 0.0;
    for (int i = 0; i < mt.rows; ++i) {
        const uint8_t* arow = g.adjacency_row(i);
        const T* mrow = mt.row(i);
        for (int j = 0; j < mt.cols; ++j) {
            if (arow[j])
                kap += checked_pow(static_cast<double>(mrow[j]), p.alpha);
            else
                var += checked_pow(static_cast<double>(mrow[j]), p.beta);
        }
    }
    return {kap, var};
}

// Per-(d,j) equity gradient sign per the three-case group-count rule. When
// c1 == c2 the upper branch degenerates to "count > c1".
template <typename T>
std::vector<int8_t> equity_gradient_signs(const Tensor3<T>& s) {
    const auto [c1, c2] = equity_bounds(s.d1, s.d2);
    std::vector<int8_t> signs(static_cast<size_t>(s.d0) * s.d2, 0);
    for (int d = 0; d < s.d0; ++d) {
        std::vector<long long> cnt(s.d2, 0);
        for (int i = 0; i < s.d1; ++i) {
            const T* row = s.slice(d, i);
            for (int j = 0; j < s.d2; ++j)
                if (row[j] != T(0)) ++cnt[j];
        }
        for (int j = 0; j < s.d2; ++j) {
            int8_t sg = 0;
            if (cnt[j] > c2)
                sg = 1;
            else if (cnt[j] < c1)
                sg = -1;
            signs[static_cast<size_t>(d) * s.d2 + j] = sg;
        }
    }
    return signs;
}

// Gradient of the global loss with respect to S at iteration p.t:
//   A.S + nu*t*grad_feq + 2*alpha*lambda*t*(A (.) Mt^(alpha-1)).S
//       - 2*beta*mu*t*(Abar (.) Mt^(beta-1)).S
template <typename T>
Tensor3<T> loss_gradient_wrt_s(const Graph& g, const Tensor3<T>& s, const Mat<T>& mt,
                               const LossParams& p, Mode mode) {
    p.check();
    detail::require_onehot(s, "loss_gradient_wrt_s");
    if (s.d1 != g.n() || mt.rows != g.n() || mt.cols != g.n())
        throw ShapeError("loss_gradient_wrt_s: shape mismatch");

    const double t = static_cast<double>(p.t);
    const double pen_coeff = 2.0 * p.alpha * p.lambda * t;
    const double bon_coeff = 2.0 * p.beta * p.mu * t;

    // Combined coefficient matrix: A + pen*(A (.) Mt^(a-1)) - bon*(Abar (.) Mt^(b-1)).
    Mat<T> b(g.n(), g.n());
    for (int i = 0; i < g.n(); ++i) {
        const uint8_t* arow = g.adjacency_row(i);
        const T* mrow = mt.row(i);
        for (int j = 0; j < g.n(); ++j) {
            double coeff;
            if (arow[j])
                coeff = 1.0 + pen_coeff * checked_pow(static_cast<double>(mrow[j]), p.alpha - 1.0);
            else
                coeff = -bon_coeff * checked_pow(static_cast<double>(mrow[j]), p.beta - 1.0);
            b.at(i, j) = static_cast<T>(coeff);
        }
    }
    Tensor3<T> grad = broadcast_matmul(b, s);

    if (mode == Mode::ECP && p.nu != 0.0 && p.t != 0) {
        const auto signs = equity_gradient_signs(s);
        const T scale = static_cast<T>(p.nu * t);
        for (int d = 0; d < s.d0; ++d) {
            const int8_t* sg = signs.data() + static_cast<size_t>(d) * s.d2;
            for (int i = 0; i < s.d1; ++i) {
                T* row = grad.slice(d, i);
                for (int j = 0; j < s.d2; ++j) row[j] += scale * static_cast<T>(sg[j]);
            }
        }
    }
    detail::require_finite(grad.v, "loss_gradient_wrt_s");
    return grad;
}

}  // namespace tenscol
