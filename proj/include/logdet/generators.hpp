#pragma once

#include <cstdint>

#include "logdet/sparse_matrix.hpp"

namespace logdet {

// Cube of side `side` in `dim` dimensions; matrix order is side^dim.
struct GridSpec {
    Index side = 2;
    Index dim = 1;
};

// Restriction of the infinite grid Laplacian with unit weights to the cube:
// diagonal 2*dim everywhere, -1 between lattice points differing by one in
// exactly one coordinate. Lattice indexing is row-major, last axis fastest.
//
// Throws DomainError (side < 2 or dim < 1) and OverflowError (side^dim does
// not fit the index range).
SparseSpdMatrix grid_laplacian(const GridSpec& spec);

// Random strictly diagonally dominant symmetric matrix: up to
// extra_offdiag_per_row off-diagonal entries per row drawn in [-1, 1), and
// diagonal 1 + sum of absolute off-diagonals in the row. Deterministic for a
// fixed seed on every platform.
SparseSpdMatrix random_dd_spd(Index n, Index extra_offdiag_per_row, std::uint64_t seed);

}  // namespace logdet
