#include "logdet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "logdet/dense_cholesky.hpp"

namespace logdet {

namespace {

// 2 * sum(log diag(L)) of a destroyed dense buffer.
double logdet_of_dense(std::vector<double>& dense, Index n) {
    if (!detail::cholesky_lower_in_place(dense, n)) {
        throw NotPositiveDefiniteError("nonpositive pivot in the dense factorization");
    }
    double acc = 0.0;
    for (Index i = 0; i < n; ++i) {
        acc += std::log(dense[i * n + i]);
    }
    return 2.0 * acc;
}

void validate_index_set(const SparseSpdMatrix& a, std::span<const Index> s) {
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] >= a.order()) {
            throw IndexOutOfRangeError("index " + std::to_string(s[k]) + " outside order-" +
                                       std::to_string(a.order()) + " matrix");
        }
        if (k > 0 && s[k] <= s[k - 1]) {
            throw DomainError("index set must be sorted and distinct");
        }
    }
}

}  // namespace

double exact_logdet(const SparseSpdMatrix& a, Index dense_limit) {
    const Index n = a.order();
    if (n > dense_limit) {
        throw TooLargeForOracleError("order " + std::to_string(n) +
                                     " exceeds the dense limit " + std::to_string(dense_limit));
    }
    std::vector<double> dense(n * n, 0.0);
    for (Index i = 0; i < n; ++i) {
        auto cols = a.row_cols(i);
        auto vals = a.row_values(i);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            dense[i * n + cols[k]] = vals[k];
        }
    }
    return logdet_of_dense(dense, n);
}

double principal_minor_logdet(const SparseSpdMatrix& a, std::span<const Index> s) {
    validate_index_set(a, s);
    if (s.empty()) {
        return 0.0;  // |A(empty)| = 1
    }
    PatternRow beta{s.back(), {s.begin(), s.end()}};
    DenseSubmatrix sub = extract_submatrix(a, beta);
    return logdet_of_dense(sub.entries, sub.size);
}

bool hadamard_fischer_check(const SparseSpdMatrix& a, std::span<const Index> alpha,
                            std::span<const Index> beta, double log_tolerance) {
    validate_index_set(a, alpha);
    validate_index_set(a, beta);

    std::vector<Index> unified;
    unified.reserve(alpha.size() + beta.size());
    std::set_union(alpha.begin(), alpha.end(), beta.begin(), beta.end(),
                   std::back_inserter(unified));
    std::vector<Index> common;
    std::set_intersection(alpha.begin(), alpha.end(), beta.begin(), beta.end(),
                          std::back_inserter(common));

    const double lhs = principal_minor_logdet(a, unified);
    const double rhs = principal_minor_logdet(a, alpha) + principal_minor_logdet(a, beta) -
                       principal_minor_logdet(a, common);
    return lhs <= rhs + log_tolerance;
}

}  // namespace logdet
