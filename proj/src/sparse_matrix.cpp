#include "logdet/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace logdet {

namespace {

std::string entry_name(Index i, Index j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

SparseSpdMatrix SparseSpdMatrix::from_triplets(Index n, std::vector<Triplet> triplets) {
    if (n == 0) {
        throw DomainError("matrix order must be at least 1");
    }
    for (const Triplet& t : triplets) {
        if (t.row >= n || t.col >= n) {
            throw IndexOutOfRangeError("triplet " + entry_name(t.row, t.col) +
                                       " outside order-" + std::to_string(n) + " matrix");
        }
    }

    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t k = 1; k < triplets.size(); ++k) {
        if (triplets[k].row == triplets[k - 1].row && triplets[k].col == triplets[k - 1].col) {
            throw DuplicateEntryError("duplicate entry " +
                                      entry_name(triplets[k].row, triplets[k].col));
        }
    }

    SparseSpdMatrix m;
    m.n_ = n;
    m.row_offsets_.assign(n + 1, 0);
    m.col_indices_.reserve(triplets.size());
    m.values_.reserve(triplets.size());
    for (const Triplet& t : triplets) {
        ++m.row_offsets_[t.row + 1];
        m.col_indices_.push_back(t.col);
        m.values_.push_back(t.value);
    }
    for (Index i = 0; i < n; ++i) {
        m.row_offsets_[i + 1] += m.row_offsets_[i];
    }

    // Symmetry: every (i,j) needs a matching (j,i) with the same value.
    for (Index i = 0; i < n; ++i) {
        auto cols = m.row_cols(i);
        auto vals = m.row_values(i);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const Index j = cols[k];
            if (j == i) {
                continue;
            }
            auto mirror_cols = m.row_cols(j);
            auto pos = std::lower_bound(mirror_cols.begin(), mirror_cols.end(), i);
            if (pos == mirror_cols.end() || *pos != i) {
                throw AsymmetricInputError("entry " + entry_name(i, j) +
                                           " has no transposed counterpart");
            }
            const double mirror = m.row_values(j)[
                static_cast<std::size_t>(pos - mirror_cols.begin())];
            if (mirror != vals[k]) {
                throw AsymmetricInputError("entries " + entry_name(i, j) + " and " +
                                           entry_name(j, i) + " differ");
            }
        }
    }

    for (Index i = 0; i < n; ++i) {
        const double d = m.entry(i, i);
        auto cols = m.row_cols(i);
        if (!std::binary_search(cols.begin(), cols.end(), i)) {
            throw MissingDiagonalError("diagonal entry " + entry_name(i, i) + " is missing");
        }
        if (!(d > 0.0) || !std::isfinite(d)) {
            throw NonPositiveDiagonalError("diagonal entry " + entry_name(i, i) +
                                           " must be strictly positive");
        }
    }
    return m;
}

double SparseSpdMatrix::entry(Index i, Index j) const {
    auto cols = row_cols(i);
    auto pos = std::lower_bound(cols.begin(), cols.end(), j);
    if (pos == cols.end() || *pos != j) {
        return 0.0;
    }
    return row_values(i)[static_cast<std::size_t>(pos - cols.begin())];
}

PatternRow row_pattern(const SparseSpdMatrix& a, Index i) {
    if (i >= a.order()) {
        throw IndexOutOfRangeError("row " + std::to_string(i) + " outside order-" +
                                   std::to_string(a.order()) + " matrix");
    }
    auto cols = a.row_cols(i);
    return {i, {cols.begin(), cols.end()}};
}

PatternRow expand_row(const PatternRow& alpha, const SparseSpdMatrix& a) {
    const Index n = a.order();
    for (Index k : alpha.cols) {
        if (k >= n) {
            throw IndexOutOfRangeError("pattern index " + std::to_string(k) +
                                       " outside order-" + std::to_string(n) + " matrix");
        }
    }

    // Per-thread visit mask, reused across calls; cleared via the collected
    // indices so the cost tracks the output size, not n.
    thread_local std::vector<char> mask;
    if (mask.size() < n) {
        mask.assign(n, 0);
    }

    PatternRow out;
    out.row = alpha.row;
    out.cols.reserve(alpha.cols.size() * 4);
    for (Index k : alpha.cols) {
        for (Index c : a.row_cols(k)) {
            if (!mask[c]) {
                mask[c] = 1;
                out.cols.push_back(c);
            }
        }
    }
    for (Index c : out.cols) {
        mask[c] = 0;
    }
    std::sort(out.cols.begin(), out.cols.end());
    return out;
}

PatternRow lower_restrict(const PatternRow& alpha) {
    PatternRow out;
    out.row = alpha.row;
    out.cols.reserve(alpha.cols.size());
    for (Index c : alpha.cols) {
        if (c <= alpha.row) {
            out.cols.push_back(c);
        }
    }
    // The pattern always contains the diagonal.
    if (out.cols.empty() || out.cols.back() != alpha.row) {
        out.cols.push_back(alpha.row);
    }
    return out;
}

void extract_submatrix_into(const SparseSpdMatrix& a, const PatternRow& beta,
                            DenseSubmatrix& out) {
    const Index nb = beta.cols.size();
    for (Index c : beta.cols) {
        if (c >= a.order()) {
            throw IndexOutOfRangeError("pattern index " + std::to_string(c) +
                                       " outside order-" + std::to_string(a.order()) +
                                       " matrix");
        }
    }

    out.size = nb;
    out.index_map.assign(beta.cols.begin(), beta.cols.end());
    out.entries.assign(nb * nb, 0.0);

    // Each output row is the sorted intersection of a stored row with beta.
    for (Index p = 0; p < nb; ++p) {
        const Index r = beta.cols[p];
        auto cols = a.row_cols(r);
        auto vals = a.row_values(r);
        double* dst = out.entries.data() + p * nb;
        std::size_t s = 0;
        Index q = 0;
        while (s < cols.size() && q < nb) {
            if (cols[s] < beta.cols[q]) {
                ++s;
            } else if (cols[s] > beta.cols[q]) {
                ++q;
            } else {
                dst[q] = vals[s];
                ++s;
                ++q;
            }
        }
    }
}

DenseSubmatrix extract_submatrix(const SparseSpdMatrix& a, const PatternRow& beta) {
    DenseSubmatrix out;
    extract_submatrix_into(a, beta, out);
    return out;
}

Index max_lower_entries(Index n) {
    // n(n+1)/2 without intermediate overflow.
    const Index half = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
    const Index other = (n % 2 == 0) ? n + 1 : n;
    if (half != 0 && other > std::numeric_limits<Index>::max() / half) {
        throw OverflowError("n(n+1)/2 overflows the index range");
    }
    return half * other;
}

double pattern_density(Index total_entries, Index n) {
    const Index max_entries = max_lower_entries(n);
    if (total_entries == 0 || total_entries > max_entries) {
        throw DomainError("pattern entry count " + std::to_string(total_entries) +
                          " outside (0, " + std::to_string(max_entries) + "]");
    }
    return static_cast<double>(total_entries) / static_cast<double>(max_entries);
}

}  // namespace logdet
