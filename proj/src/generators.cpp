#include "logdet/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <utility>

namespace logdet {

namespace {

Index checked_power(Index base, Index exponent) {
    Index result = 1;
    for (Index k = 0; k < exponent; ++k) {
        if (result > std::numeric_limits<Index>::max() / base) {
            throw OverflowError("grid order overflows the index range");
        }
        result *= base;
    }
    return result;
}

// Uniform double in [-1, 1) from the raw 64-bit stream; avoids the
// implementation-defined std distributions so a seed means the same matrix
// everywhere.
double unit_value(std::mt19937_64& rng) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
    return 2.0 * u - 1.0;
}

}  // namespace

SparseSpdMatrix grid_laplacian(const GridSpec& spec) {
    if (spec.side < 2 || spec.dim < 1) {
        throw DomainError("grid needs side >= 2 and dim >= 1");
    }
    const Index n = checked_power(spec.side, spec.dim);

    // Row-major lattice indexing, last axis fastest: stride of axis a is
    // side^(dim-1-a).
    std::vector<Index> strides(spec.dim);
    Index s = 1;
    for (Index a = spec.dim; a-- > 0;) {
        strides[a] = s;
        s *= spec.side;
    }

    std::vector<Triplet> triplets;
    triplets.reserve(n * (2 * spec.dim + 1));
    const double diagonal = 2.0 * static_cast<double>(spec.dim);

    std::vector<Index> coords(spec.dim, 0);
    for (Index i = 0; i < n; ++i) {
        triplets.push_back({i, i, diagonal});
        for (Index a = 0; a < spec.dim; ++a) {
            if (coords[a] > 0) {
                triplets.push_back({i, i - strides[a], -1.0});
            }
            if (coords[a] + 1 < spec.side) {
                triplets.push_back({i, i + strides[a], -1.0});
            }
        }
        // Advance the lattice point, last axis fastest.
        for (Index a = spec.dim; a-- > 0;) {
            if (++coords[a] < spec.side) {
                break;
            }
            coords[a] = 0;
        }
    }
    return SparseSpdMatrix::from_triplets(n, std::move(triplets));
}

SparseSpdMatrix random_dd_spd(Index n, Index extra_offdiag_per_row, std::uint64_t seed) {
    if (n == 0) {
        throw DomainError("matrix order must be at least 1");
    }
    std::mt19937_64 rng(seed);

    // Upper-triangle draws; collisions keep the first value. Self-draws are
    // dropped rather than redrawn to keep the stream consumption fixed.
    std::map<std::pair<Index, Index>, double> upper;
    for (Index i = 0; i < n; ++i) {
        for (Index t = 0; t < extra_offdiag_per_row; ++t) {
            const Index j = static_cast<Index>(rng() % n);
            const double v = unit_value(rng);
            if (j == i) {
                continue;
            }
            const auto key = std::minmax(i, j);
            upper.emplace(std::pair<Index, Index>(key.first, key.second), v);
        }
    }

    std::vector<double> abs_row_sum(n, 0.0);
    std::vector<Triplet> triplets;
    triplets.reserve(2 * upper.size() + n);
    for (const auto& [key, v] : upper) {
        triplets.push_back({key.first, key.second, v});
        triplets.push_back({key.second, key.first, v});
        abs_row_sum[key.first] += std::abs(v);
        abs_row_sum[key.second] += std::abs(v);
    }
    for (Index i = 0; i < n; ++i) {
        triplets.push_back({i, i, 1.0 + abs_row_sum[i]});
    }
    return SparseSpdMatrix::from_triplets(n, std::move(triplets));
}

}  // namespace logdet
