#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tenscol {

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NumericError : std::domain_error {
    using std::domain_error::domain_error;
};

// Dense row-major rank-3 tensor (population axis first). Plain value type;
// operations below take read-only inputs and return fresh outputs.
template <typename T>
struct Tensor3 {
    int d0 = 0, d1 = 0, d2 = 0;
    std::vector<T> v;

    Tensor3() = default;
    Tensor3(int a, int b, int c, T fill = T(0))
        : d0(a), d1(b), d2(c), v(static_cast<size_t>(a) * b * c, fill) {}

    size_t size() const { return v.size(); }
    T& at(int d, int i, int j) { return v[(static_cast<size_t>(d) * d1 + i) * d2 + j]; }
    T at(int d, int i, int j) const { return v[(static_cast<size_t>(d) * d1 + i) * d2 + j]; }
    T* slice(int d, int i) { return v.data() + (static_cast<size_t>(d) * d1 + i) * d2; }
    const T* slice(int d, int i) const { return v.data() + (static_cast<size_t>(d) * d1 + i) * d2; }

    bool same_shape(const Tensor3& o) const { return d0 == o.d0 && d1 == o.d1 && d2 == o.d2; }
};

template <typename T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> v;

    Mat() = default;
    Mat(int r, int c, T fill = T(0)) : rows(r), cols(c), v(static_cast<size_t>(r) * c, fill) {}

    T& at(int i, int j) { return v[static_cast<size_t>(i) * cols + j]; }
    T at(int i, int j) const { return v[static_cast<size_t>(i) * cols + j]; }
    const T* row(int i) const { return v.data() + static_cast<size_t>(i) * cols; }
};

namespace detail {

template <typename T>
void require_finite(const std::vector<T>& v, const char* who) {
    for (const T& x : v)
        if (!std::isfinite(static_cast<double>(x)))
            throw NumericError(std::string(who) + ": non-finite tensor entry");
}

inline void require(bool cond, const char* msg) {
    if (!cond) throw ShapeError(msg);
}

}  // namespace detail

// Per-slice Gram matrix: out[d,i,j] = sum_l x[d,i,l] * x[d,j,l]. This is the
// dot product of the tensor with its own last-two-axes transpose.
template <typename T>
Tensor3<T> batched_gram(const Tensor3<T>& x) {
    detail::require_finite(x.v, "batched_gram");
    Tensor3<T> out(x.d0, x.d1, x.d1);
    for (int d = 0; d < x.d0; ++d)
        for (int i = 0; i < x.d1; ++i) {
            const T* xi = x.slice(d, i);
            for (int j = i; j < x.d1; ++j) {
                const T* xj = x.slice(d, j);
                T acc = T(0);
                for (int l = 0; l < x.d2; ++l) acc += xi[l] * xj[l];
                out.at(d, i, j) = acc;
                out.at(d, j, i) = acc;
            }
        }
    detail::require_finite(out.v, "batched_gram");
    return out;
}

// out[d,i,j] = sum_m a[i,m] * s[d,m,j]; `a` is broadcast across the population
// axis (stored once, never duplicated per slice).
template <typename T>
Tensor3<T> broadcast_matmul(const Mat<T>& a, const Tensor3<T>& s) {
    detail::require(a.rows == a.cols && a.rows == s.d1, "broadcast_matmul: shape mismatch");
    detail::require_finite(a.v, "broadcast_matmul");
    detail::require_finite(s.v, "broadcast_matmul");
    Tensor3<T> out(s.d0, s.d1, s.d2);
    for (int d = 0; d < s.d0; ++d)
        for (int i = 0; i < s.d1; ++i) {
            T* dst = out.slice(d, i);
            const T* arow = a.row(i);
            for (int m = 0; m < s.d1; ++m) {
                const T w = arow[m];
                if (w == T(0)) continue;
                const T* src = s.slice(d, m);
                for (int j = 0; j < s.d2; ++j) dst[j] += w * src[j];
            }
        }
    detail::require_finite(out.v, "broadcast_matmul");
    return out;
}

// Numerically stable softmax along the last axis (max subtraction per slice).
template <typename T>
Tensor3<T> softmax_lastaxis(const Tensor3<T>& w) {
    detail::require_finite(w.v, "softmax_lastaxis");
    Tensor3<T> out(w.d0, w.d1, w.d2);
    for (int d = 0; d < w.d0; ++d)
        for (int i = 0; i < w.d1; ++i) {
            const T* src = w.slice(d, i);
            T* dst = out.slice(d, i);
            T mx = src[0];
            for (int j = 1; j < w.d2; ++j) mx = std::max(mx, src[j]);
            T sum = T(0);
            for (int j = 0; j < w.d2; ++j) {
                dst[j] = std::exp(src[j] - mx);
                sum += dst[j];
            }
            const T inv = T(1) / sum;
            for (int j = 0; j < w.d2; ++j) dst[j] *= inv;
        }
    return out;
}

// One-hot of the per-slice argmax along the last axis; ties break to the
// lowest color index.
template <typename T>
Tensor3<T> argmax_onehot(const Tensor3<T>& w) {
    detail::require_finite(w.v, "argmax_onehot");
    Tensor3<T> out(w.d0, w.d1, w.d2);
    for (int d = 0; d < w.d0; ++d)
        for (int i = 0; i < w.d1; ++i) {
            const T* src = w.slice(d, i);
            int best = 0;
            for (int j = 1; j < w.d2; ++j)
                if (src[j] > src[best]) best = j;
            out.slice(d, i)[best] = T(1);
        }
    return out;
}

template <typename T>
std::vector<int> argmax_lastaxis(const Tensor3<T>& w) {
    std::vector<int> idx(static_cast<size_t>(w.d0) * w.d1);
    for (int d = 0; d < w.d0; ++d)
        for (int i = 0; i < w.d1; ++i) {
            const T* src = w.slice(d, i);
            int best = 0;
            for (int j = 1; j < w.d2; ++j)
                if (src[j] > src[best]) best = j;
            idx[static_cast<size_t>(d) * w.d1 + i] = best;
        }
    return idx;
}

// Elementwise ops. Power handles the count-valued bases of the loss terms:
// 0^x = 0 for x > 0, negative base with fractional exponent is an error.
template <typename T>
T checked_pow(T base, double expnt, const char* who = "power") {
    if (base < T(0) && expnt != std::floor(expnt))
        throw NumericError(std::string(who) + ": negative base with fractional exponent");
    if (base == T(0)) return expnt == 0.0 ? T(1) : T(0);
    return static_cast<T>(std::pow(static_cast<double>(base), expnt));
}

template <typename T>
Tensor3<T> elementwise_multiply(const Tensor3<T>& a, const Tensor3<T>& b) {
    detail::require(a.same_shape(b), "elementwise_multiply: shape mismatch");
    Tensor3<T> out(a.d0, a.d1, a.d2);
    for (size_t i = 0; i < a.size(); ++i) out.v[i] = a.v[i] * b.v[i];
    detail::require_finite(out.v, "elementwise_multiply");
    return out;
}

template <typename T>
Tensor3<T> elementwise_subtract(const Tensor3<T>& a, const Tensor3<T>& b) {
    detail::require(a.same_shape(b), "elementwise_subtract: shape mismatch");
    Tensor3<T> out(a.d0, a.d1, a.d2);
    for (size_t i = 0; i < a.size(); ++i) out.v[i] = a.v[i] - b.v[i];
    detail::require_finite(out.v, "elementwise_subtract");
    return out;
}

template <typename T>
Tensor3<T> elementwise_scale(const Tensor3<T>& a, T c) {
    Tensor3<T> out(a.d0, a.d1, a.d2);
    for (size_t i = 0; i < a.size(); ++i) out.v[i] = a.v[i] * c;
    detail::require_finite(out.v, "elementwise_scale");
    return out;
}

template <typename T>
Tensor3<T> elementwise_power(const Tensor3<T>& a, double expnt) {
    Tensor3<T> out(a.d0, a.d1, a.d2);
    for (size_t i = 0; i < a.size(); ++i) out.v[i] = checked_pow(a.v[i], expnt);
    detail::require_finite(out.v, "elementwise_power");
    return out;
}

template <typename T>
Mat<T> mat_elementwise_power(const Mat<T>& a, double expnt) {
    Mat<T> out(a.rows, a.cols);
    for (size_t i = 0; i < a.v.size(); ++i) out.v[i] = checked_pow(a.v[i], expnt);
    return out;
}

// Axis reductions. Axes are 0-based: 0 is the population axis, (1,2) the two
// trailing axes. Reduction order is ascending index, so single-threaded runs
// are bit-reproducible.
template <typename T>
T sum_all(const Tensor3<T>& x) {
    T acc = T(0);
    for (const T& e : x.v) acc += e;
    return acc;
}

// sum over the population axis -> (d1, d2) matrix (the group concentration
// reduction when applied to the association tensor).
template <typename T>
Mat<T> sum_axis0(const Tensor3<T>& x) {
    Mat<T> out(x.d1, x.d2);
    for (int d = 0; d < x.d0; ++d) {
        const T* src = x.slice(d, 0);
        for (size_t i = 0; i < out.v.size(); ++i) out.v[i] += src[i];
    }
    return out;
}

// sum over the two trailing axes -> length-d0 vector (per-solution totals).
template <typename T>
std::vector<T> sum_slicewise(const Tensor3<T>& x) {
    std::vector<T> out(x.d0, T(0));
    for (int d = 0; d < x.d0; ++d) {
        const T* src = x.slice(d, 0);
        T acc = T(0);
        for (size_t i = 0; i < static_cast<size_t>(x.d1) * x.d2; ++i) acc += src[i];
        out[d] = acc;
    }
    return out;
}

// Generic entry point used where the axis set arrives as data. Supported sets
// mirror the call graph: {0}, {1,2}, {0,1,2}.
template <typename T>
Tensor3<T> reduce_sum(const Tensor3<T>& x, std::span<const int> axes) {
    std::vector<int> a(axes.begin(), axes.end());
    std::sort(a.begin(), a.end());
    for (int ax : a)
        if (ax < 0 || ax > 2) throw ShapeError("reduce_sum: axis out of range");
    if (a == std::vector<int>{0}) {
        Mat<T> m = sum_axis0(x);
        Tensor3<T> out(1, x.d1, x.d2);
        out.v = std::move(m.v);
        return out;
    }
    if (a == std::vector<int>{1, 2}) {
        Tensor3<T> out(x.d0, 1, 1);
        out.v = sum_slicewise(x);
        return out;
    }
    if (a == std::vector<int>{0, 1, 2}) {
        Tensor3<T> out(1, 1, 1);
        out.v[0] = sum_all(x);
        return out;
    }
    throw ShapeError("reduce_sum: unsupported axis set");
}

}  // namespace tenscol
