#pragma once

#include <iosfwd>
#include <string>

#include "logdet/sparse_matrix.hpp"

namespace logdet {

// Reads a Matrix Market "matrix coordinate real" stream. Symmetric files
// (lower triangle stored) are expanded to full symmetric storage; "general"
// files must contain both halves explicitly. The result satisfies all
// SparseSpdMatrix invariants.
//
// Throws ParseError (with line number), UnsupportedFormatError, and the
// SparseSpdMatrix construction errors.
SparseSpdMatrix read_matrix_market(std::istream& source);

SparseSpdMatrix read_matrix_market_file(const std::string& path);

// Writes "coordinate real symmetric" with the lower triangle only. Values
// are printed in shortest round-trip decimal form, so read after write
// reproduces structure and values bit-exactly.
//
// Throws DomainError (empty matrix) and SinkError.
void write_matrix_market(const SparseSpdMatrix& a, std::ostream& sink);

void write_matrix_market_file(const SparseSpdMatrix& a, const std::string& path);

}  // namespace logdet
