#pragma once

#include <vector>

#include "logdet/sparse_matrix.hpp"

namespace logdet {

// The monotone estimate sequence D^1..D^m with the lower-pattern entry
// counts and densities x_1..x_m of the nested patterns that produced it.
struct EstimateSeries {
    std::vector<double> estimates;     // D^j, nonincreasing in j
    std::vector<Index> entry_counts;   // lower-pattern entries per j
    std::vector<double> densities;     // entry_counts[j] / (n(n+1)/2)

    std::size_t size() const { return estimates.size(); }
};

struct RowContribution {
    double log_pivot;
    Index pattern_size;  // lower-restricted pattern entries for this row
};

// Contributions of one row for powers 1..max_power: entry j holds the log of
// the bottom-right pivot of the submatrix induced by the lower restriction of
// row i's pattern of A^(j+1), together with that pattern's size.
std::vector<RowContribution> row_contributions(const SparseSpdMatrix& a, Index i,
                                               std::size_t max_power);

// Runs the per-row loop over all rows with the given parallelism degree and
// folds the results in ascending row order, so the output is bit-identical
// for every worker count. workers == 0 selects the hardware concurrency.
//
// Throws NotPositiveDefiniteError (lowest failing row attached).
EstimateSeries estimate_series(const SparseSpdMatrix& a, std::size_t max_power,
                               std::size_t workers = 0);

}  // namespace logdet
