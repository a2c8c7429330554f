#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "core/numeric.hpp"

namespace modstab {

/// Sparse vector over Q: (column, value) pairs, strictly increasing columns,
/// no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Normalizes an unsorted list of (column, value) contributions into a SparseVector.
SparseVector make_sparse(std::vector<std::pair<std::size_t, Rational>> entries);

/// v += factor * w
void axpy(SparseVector& v, const Rational& factor, const SparseVector& w);

Rational entry(const SparseVector& v, std::size_t column);

/// Incrementally built row-echelon basis of a subspace of Q^columns.
///
/// Every stored row has leading entry 1 at its pivot column, and no two rows
/// share a pivot. Rows are not back-substituted; reduce() handles that lazily.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t columns);

  std::size_t columns() const { return pivot_row_.size(); }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v to the spanning set. Returns the pivot column of the new row, or
  /// columns() when v was already in the span.
  std::size_t insert(SparseVector v);

  bool is_pivot(std::size_t column) const { return pivot_row_[column] != kNone; }
  const std::vector<SparseVector>& rows() const { return rows_; }
  std::size_t pivot_of_row(std::size_t row) const { return rows_[row].front().first; }

  /// Normal form of v modulo the span: the unique representative supported on
  /// non-pivot columns.
  SparseVector reduce(SparseVector v) const;

  /// Writes v = Σ_r coordinates[r] * rows()[r] + remainder; the remainder is
  /// supported on non-pivot columns and is zero iff v lies in the span.
  SparseVector reduce(SparseVector v, std::vector<Rational>& coordinates) const;

  /// A solution x of the system whose augmented rows were inserted, with the
  /// last column as right-hand side. Free variables are set to zero. Only
  /// meaningful when no row has its pivot in the last column.
  std::vector<Rational> back_substitute() const;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivot_row_;
};

}  // namespace modstab
