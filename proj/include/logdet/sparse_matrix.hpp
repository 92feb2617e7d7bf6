#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "logdet/errors.hpp"

namespace logdet {

using Index = std::size_t;

struct Triplet {
    Index row;
    Index col;
    double value;
};

// Compressed sparse row storage of a symmetric positive definite matrix.
//
// Invariants established at construction:
//   - column indices strictly increasing within each row,
//   - structurally and numerically symmetric,
//   - every diagonal entry present and strictly positive.
//
// Positive definiteness beyond the diagonal check is a caller contract.
// All accessors are pure reads; a constructed matrix is safe to share
// across threads.
class SparseSpdMatrix {
  public:
    SparseSpdMatrix() = default;

    // Builds from coordinate triplets. Both (i,j) and (j,i) must be given
    // explicitly for off-diagonal entries; no symmetric closure is applied.
    //
    // Throws IndexOutOfRangeError, DuplicateEntryError, AsymmetricInputError,
    // MissingDiagonalError, NonPositiveDiagonalError, DomainError (n == 0).
    static SparseSpdMatrix from_triplets(Index n, std::vector<Triplet> triplets);

    Index order() const { return n_; }

    // Number of stored entries (full symmetric storage, both triangles).
    Index nnz() const { return col_indices_.size(); }

    std::span<const Index> row_cols(Index i) const {
        return {col_indices_.data() + row_offsets_[i], col_indices_.data() + row_offsets_[i + 1]};
    }

    std::span<const double> row_values(Index i) const {
        return {values_.data() + row_offsets_[i], values_.data() + row_offsets_[i + 1]};
    }

    // Value at (i, j), or 0 when the entry is not stored.
    double entry(Index i, Index j) const;

    // Stored entries divided by n^2 (full-storage density).
    double storage_density() const {
        return static_cast<double>(nnz()) / (static_cast<double>(n_) * static_cast<double>(n_));
    }

    bool operator==(const SparseSpdMatrix& other) const = default;

  private:
    Index n_ = 0;
    std::vector<Index> row_offsets_{0};
    std::vector<Index> col_indices_;
    std::vector<double> values_;
};

// Sorted column-index set of one row of a sparsity pattern, before or after
// lower-triangular restriction.
struct PatternRow {
    Index row = 0;
    std::vector<Index> cols;

    bool operator==(const PatternRow&) const = default;
};

// Dense symmetric submatrix A(beta, beta). index_map holds the originating
// indices; for lower-restricted patterns its last element is the row itself.
struct DenseSubmatrix {
    Index size = 0;
    std::vector<double> entries;   // row-major, size x size
    std::vector<Index> index_map;  // strictly increasing
};

// Structural nonzero pattern of row i of A (full row, unrestricted).
PatternRow row_pattern(const SparseSpdMatrix& a, Index i);

// One boolean vector-matrix product: the union of the patterns of the rows
// named in alpha. Iterating from row_pattern(a, i) yields row i of the
// pattern of successive matrix powers.
PatternRow expand_row(const PatternRow& alpha, const SparseSpdMatrix& a);

// Keeps indices <= alpha.row; the diagonal index is appended when absent.
PatternRow lower_restrict(const PatternRow& alpha);

// Dense copy of A(beta.cols, beta.cols); absent entries become zero.
// beta must be lower-restricted (cols end at beta.row).
DenseSubmatrix extract_submatrix(const SparseSpdMatrix& a, const PatternRow& beta);

// Reuses out's buffers; same result as extract_submatrix.
void extract_submatrix_into(const SparseSpdMatrix& a, const PatternRow& beta, DenseSubmatrix& out);

// total_entries / (n(n+1)/2) for a lower-triangular pattern.
// Throws DomainError unless 0 < total_entries <= n(n+1)/2.
double pattern_density(Index total_entries, Index n);

// n(n+1)/2, guarded against overflow.
Index max_lower_entries(Index n);

}  // namespace logdet
