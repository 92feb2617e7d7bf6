#include "logdet/dense_cholesky.hpp"

#include <cmath>

#include "logdet/errors.hpp"

namespace logdet {
namespace detail {

namespace {

// dot(x, y) over len entries, four fixed accumulators. The accumulation
// order is part of the determinism contract, so it must not depend on
// compiler flags or worker count.
inline double dot4(const double* x, const double* y, Index len) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    Index k = 0;
    for (; k + 4 <= len; k += 4) {
        s0 += x[k] * y[k];
        s1 += x[k + 1] * y[k + 1];
        s2 += x[k + 2] * y[k + 2];
        s3 += x[k + 3] * y[k + 3];
    }
    for (; k < len; ++k) {
        s0 += x[k] * y[k];
    }
    return (s0 + s1) + (s2 + s3);
}

}  // namespace

bool cholesky_lower_in_place(std::span<double> a, Index n) {
    double* m = a.data();
    for (Index i = 0; i < n; ++i) {
        double* row_i = m + i * n;
        for (Index j = 0; j < i; ++j) {
            const double* row_j = m + j * n;
            row_i[j] = (row_i[j] - dot4(row_i, row_j, j)) / row_j[j];
        }
        const double pivot = row_i[i] - dot4(row_i, row_i, i);
        if (!(pivot > 0.0) || !std::isfinite(pivot)) {
            return false;
        }
        row_i[i] = std::sqrt(pivot);
    }
    return true;
}

bool last_pivot_in_place(std::span<double> a, Index n, double& pivot_sqrt) {
    if (!cholesky_lower_in_place(a, n)) {
        return false;
    }
    pivot_sqrt = a[(n - 1) * n + (n - 1)];
    return true;
}

}  // namespace detail

CholeskyFactor cholesky(const DenseSubmatrix& m) {
    const Index n = m.size;
    std::vector<double> work(m.entries);
    if (!detail::cholesky_lower_in_place(work, n)) {
        throw NotPositiveDefiniteError("nonpositive pivot in dense Cholesky");
    }

    CholeskyFactor r;
    r.size = n;
    r.entries.assign(n * n, 0.0);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j <= i; ++j) {
            r.entries[j * n + i] = work[i * n + j];  // R = L^T
        }
    }
    return r;
}

double bottom_right_pivot(const DenseSubmatrix& m) {
    const Index n = m.size;
    std::vector<double> work(m.entries);
    double pivot_sqrt = 0.0;
    if (!detail::last_pivot_in_place(work, n, pivot_sqrt)) {
        throw NotPositiveDefiniteError("nonpositive pivot in dense Cholesky");
    }
    return pivot_sqrt * pivot_sqrt;
}

}  // namespace logdet
