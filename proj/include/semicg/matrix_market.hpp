/// \file matrix_market.hpp
/// \brief Matrix Market coordinate reader/writer.
///
/// Supports `matrix coordinate real` in `general` and `symmetric` form
/// (symmetric files are expanded to full storage). Indices are 1-based in
/// the file and converted to 0-based. Duplicate entries are summed, matching
/// the collection convention.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "semicg/sparse_matrix.hpp"

namespace semicg {

struct MatrixMarketError : std::runtime_error {
  explicit MatrixMarketError(const std::string& what) : std::runtime_error(what) {}
};

SparseMatrix read_matrix_market(std::istream& in);
SparseMatrix read_matrix_market_file(const std::string& path);

/// Writes `coordinate real general` with full double precision.
void write_matrix_market(std::ostream& out, const SparseMatrix& a);

}  // namespace semicg
