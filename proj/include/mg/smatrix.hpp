#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mg/field.hpp"

namespace mg {

/// Sparse vector: (index, value) pairs sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sparseFromDense(const std::vector<Scalar>& v, const Field& f);
std::vector<Scalar> denseFromSparse(const SparseVec& v, int n);
/// a + c*b, dropping zeros.
SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b,
               const Field& f);
SparseVec scale(const SparseVec& a, const Scalar& c, const Field& f);

/// Incremental reduced row echelon span. Rows keep a leading 1 at their pivot
/// index and are fully back-eliminated, so reducing any vector against the
/// span leaves a residual that vanishes on every pivot index. Insertion order
/// is the only source of pivot choice, which keeps results deterministic.
class Echelon {
public:
  explicit Echelon(const Field& f) : f_(f) {}

  /// Residual of v modulo the current span.
  SparseVec reduce(const SparseVec& v) const;
  /// Reduce and insert the residual if nonzero. Returns true if rank grew.
  bool insert(const SparseVec& v);
  /// Like insert but also reports the residual that was inserted.
  bool insertReduced(const SparseVec& v, SparseVec* residual);

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool isPivot(int index) const;

private:
  const Field& f_;
  std::vector<SparseVec> rows_;   // parallel to pivots_, sorted by pivot
  std::vector<int> pivots_;
};

/// A sparse exact matrix, rows x cols, zeros omitted.
class SparseMatrix {
public:
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  void set(int r, int c, const Scalar& v);
  void add(int r, int c, const Scalar& v, const Field& f);
  Scalar get(int r, int c) const;
  const SparseVec& row(int r) const { return data_[r]; }
  SparseVec column(int c) const;
  SparseMatrix transpose() const;

  int rank(const Field& f) const;
  bool isZero() const;

  bool operator==(const SparseMatrix& o) const;

private:
  int rows_, cols_;
  std::vector<SparseVec> data_;
};

/// Exact basis of the right kernel { x : A x = 0 }, one vector per free
/// column of the reduced echelon form, in ascending column order.
std::vector<SparseVec> kernelBasis(const SparseMatrix& a, const Field& f);

/// Same, for a matrix given as a list of columns over `rows` coordinates.
std::vector<SparseVec> kernelBasisOfColumns(const std::vector<SparseVec>& cols,
                                            int rows, const Field& f);

/// Some exact solution of A x = b under the deterministic pivot rule (free
/// variables set to zero), or nothing.
std::optional<std::vector<Scalar>> solveOrReject(const SparseMatrix& a,
                                                 const std::vector<Scalar>& b,
                                                 const Field& f);

}  // namespace mg
