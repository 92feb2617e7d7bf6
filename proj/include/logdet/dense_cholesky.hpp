#pragma once

#include <span>
#include <vector>

#include "logdet/sparse_matrix.hpp"

namespace logdet {

// Upper-triangular Cholesky factor R with positive diagonal, R^T R = input.
struct CholeskyFactor {
    Index size = 0;
    std::vector<double> entries;  // row-major, size x size, zero below diagonal
};

// Dense Cholesky factorization of a symmetric positive definite submatrix.
// Throws NotPositiveDefiniteError when a pivot is nonpositive or non-finite.
CholeskyFactor cholesky(const DenseSubmatrix& m);

// Last pivot of the unpivoted factorization of m: equals the bottom-right
// entry of the LU factor L, and the square of the bottom-right entry of the
// Cholesky factor. Strictly positive for SPD input.
double bottom_right_pivot(const DenseSubmatrix& m);

namespace detail {

// In-place lower Cholesky (a becomes L, row-major, A = L L^T); returns false
// on a nonpositive or non-finite pivot. Entries above the diagonal are left
// untouched.
bool cholesky_lower_in_place(std::span<double> a, Index n);

// Same factorization, but only the last diagonal entry of L is returned
// through `pivot_sqrt`; false on factorization failure. Destroys a.
bool last_pivot_in_place(std::span<double> a, Index n, double& pivot_sqrt);

}  // namespace detail

}  // namespace logdet
