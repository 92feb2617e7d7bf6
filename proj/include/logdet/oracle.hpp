#pragma once

#include <span>

#include "logdet/sparse_matrix.hpp"

namespace logdet {

inline constexpr Index kDefaultDenseLimit = 8192;

// Exact log-determinant via a dense Cholesky of a full copy, accumulated in
// the log domain. Intended as a correctness reference at desk scale.
//
// Throws TooLargeForOracleError (order above dense_limit) and
// NotPositiveDefiniteError.
double exact_logdet(const SparseSpdMatrix& a, Index dense_limit = kDefaultDenseLimit);

// log |A(s)| for a sorted, distinct index set s; the empty set gives 0.
// Throws IndexOutOfRangeError, DomainError (unsorted or duplicate indices).
double principal_minor_logdet(const SparseSpdMatrix& a, std::span<const Index> s);

// Checks |A(a u b)| <= |A(a)| |A(b)| / |A(a n b)| in the log domain with the
// given absolute tolerance. Holds for every SPD matrix; a false return
// indicates a violated contract (or a bug).
bool hadamard_fischer_check(const SparseSpdMatrix& a, std::span<const Index> alpha,
                            std::span<const Index> beta, double log_tolerance = 1e-9);

}  // namespace logdet
