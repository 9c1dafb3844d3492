#include "reference_loops.hpp"

#include <cmath>
#include <cstdlib>

namespace refloops {

Vec onehot_argmax(const Vec& w, int D, int n, int k) {
    Vec s(w.size(), 0.0);
    for (int d = 0; d < D; ++d)
        for (int i = 0; i < n; ++i) {
            int best = 0;
            for (int j = 1; j < k; ++j)
                if (at3(w, d, i, j, n, k) > at3(w, d, i, best, n, k)) best = j;
            at3(s, d, i, best, n, k) = 1.0;
        }
    return s;
}

Vec association(const Vec& s, int D, int n, int k) {
    Vec m(static_cast<size_t>(D) * n * n, 0.0);
    for (int d = 0; d < D; ++d)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double acc = 0.0;
                for (int l = 0; l < k; ++l) acc += at3(s, d, i, l, n, k) * at3(s, d, j, l, n, k);
                at3(m, d, i, j, n, n) = acc;
            }
    return m;
}

Vec conflict_tensor(const Vec& adj, const Vec& m, int D, int n) {
    Vec c(m.size(), 0.0);
    for (int d = 0; d < D; ++d)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                at3(c, d, i, j, n, n) = adj[static_cast<size_t>(i) * n + j] * at3(m, d, i, j, n, n);
    return c;
}

std::vector<long long> fcolor(const Vec& c, int D, int n) {
    std::vector<long long> f(D, 0);
    for (int d = 0; d < D; ++d) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc += at3(c, d, i, j, n, n);
        f[d] = static_cast<long long>(acc / 2.0 + 0.5);
    }
    return f;
}

std::vector<long long> fequity(const Vec& s, int D, int n, int k) {
    const long long c1 = n / k;
    const long long c2 = (n % k == 0) ? c1 : c1 + 1;
    std::vector<long long> f(D, 0);
    for (int d = 0; d < D; ++d)
        for (int l = 0; l < k; ++l) {
            long long cnt = 0;
            for (int i = 0; i < n; ++i) cnt += static_cast<long long>(at3(s, d, i, l, n, k));
            f[d] += std::min(std::llabs(cnt - c1), std::llabs(cnt - c2));
        }
    return f;
}

Vec group_concentration(const Vec& m, int D, int n) {
    Vec mt(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int d = 0; d < D; ++d) acc += at3(m, d, i, j, n, n);
            mt[static_cast<size_t>(i) * n + j] = acc;
        }
    return mt;
}

double kappa(const Vec& adj, const Vec& mt, int n, double alpha) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            acc += adj[static_cast<size_t>(i) * n + j] *
                   std::pow(mt[static_cast<size_t>(i) * n + j], alpha);
    return acc;
}

double varpi(const Vec& adj, const Vec& mt, int n, double beta) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            acc += (1.0 - adj[static_cast<size_t>(i) * n + j]) *
                   std::pow(mt[static_cast<size_t>(i) * n + j], beta);
    return acc;
}

Vec grad_s(const Vec& adj, const Vec& s, const Vec& mt, int D, int n, int k, double lambda,
           double mu, double nu, double alpha, double beta, long long t, bool ecp) {
    Vec g(static_cast<size_t>(D) * n * k, 0.0);
    const long long c1 = n / k;
    const long long c2 = (n % k == 0) ? c1 : c1 + 1;
    for (int d = 0; d < D; ++d) {
        // group sizes for the equity part
        std::vector<long long> cnt(k, 0);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i) cnt[j] += static_cast<long long>(at3(s, d, i, j, n, k));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) {
                double acc = 0.0;
                for (int mm = 0; mm < n; ++mm) {
                    const double a = adj[static_cast<size_t>(i) * n + mm];
                    const double mtv = mt[static_cast<size_t>(i) * n + mm];
                    double coeff = a;
                    coeff += 2.0 * alpha * lambda * static_cast<double>(t) * a * std::pow(mtv, alpha - 1.0);
                    coeff -= 2.0 * beta * mu * static_cast<double>(t) * (1.0 - a) * std::pow(mtv, beta - 1.0);
                    acc += coeff * at3(s, d, mm, j, n, k);
                }
                if (ecp) {
                    double eq = 0.0;
                    if (cnt[j] > c2)
                        eq = 1.0;
                    else if (cnt[j] < c1)
                        eq = -1.0;
                    acc += nu * static_cast<double>(t) * eq;
                }
                at3(g, d, i, j, n, k) = acc;
            }
    }
    return g;
}

Vec softmax(const Vec& w, int D, int n, int k) {
    Vec s(w.size(), 0.0);
    for (int d = 0; d < D; ++d)
        for (int i = 0; i < n; ++i) {
            double mx = at3(w, d, i, 0, n, k);
            for (int j = 1; j < k; ++j) mx = std::max(mx, at3(w, d, i, j, n, k));
            double sum = 0.0;
            for (int j = 0; j < k; ++j) sum += std::exp(at3(w, d, i, j, n, k) - mx);
            for (int j = 0; j < k; ++j)
                at3(s, d, i, j, n, k) = std::exp(at3(w, d, i, j, n, k) - mx) / sum;
        }
    return s;
}

Vec grad_w_chain(const Vec& shat, const Vec& g, int D, int n, int k) {
    Vec out(g.size(), 0.0);
    for (int d = 0; d < D; ++d)
        for (int i = 0; i < n; ++i) {
            double dot = 0.0;
            for (int l = 0; l < k; ++l) dot += at3(shat, d, i, l, n, k) * at3(g, d, i, l, n, k);
            for (int j = 0; j < k; ++j)
                at3(out, d, i, j, n, k) =
                    at3(shat, d, i, j, n, k) * at3(g, d, i, j, n, k) - at3(shat, d, i, j, n, k) * dot;
        }
    return out;
}

Vec matmul_broadcast(const Vec& a, const Vec& s, int D, int n, int k) {
    Vec out(static_cast<size_t>(D) * n * k, 0.0);
    for (int d = 0; d < D; ++d)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) {
                double acc = 0.0;
                for (int m = 0; m < n; ++m)
                    acc += a[static_cast<size_t>(i) * n + m] * at3(s, d, m, j, n, k);
                at3(out, d, i, j, n, k) = acc;
            }
    return out;
}

}  // namespace refloops
