#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hopfkit/matrix.hpp"

namespace hopfkit {

/// Sorted (index, nonzero coefficient) pairs.
struct SparseVec {
  std::vector<std::pair<std::size_t, Scalar>> terms;

  bool empty() const { return terms.empty(); }
  static SparseVec single(std::size_t i, Scalar c);
  static SparseVec from_dense(const Vector& v);
  Vector to_dense(FieldSpec f, std::size_t n) const;
  /// Sorts, merges duplicates, drops zeros.
  void normalize();
};

/// Incremental row-space basis for long, very sparse rows.
///
/// Each inserted row is reduced against the pivots found so far; survivors
/// become new pivot rows. rank() is exact.
class SparseRowReducer {
 public:
  explicit SparseRowReducer(FieldSpec f) : field_(f) {}

  /// Returns true when the row increased the rank.
  bool insert(SparseVec row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  FieldSpec field_;
  std::map<std::size_t, SparseVec> pivots_;  // leading column -> row with leading coefficient 1
};

/// Basis of {v : r . v = 0 for every row r}, via a fully reduced echelon form.
std::vector<SparseVec> sparse_kernel(std::vector<SparseVec> rows, std::size_t ncols, FieldSpec f);

}  // namespace hopfkit
