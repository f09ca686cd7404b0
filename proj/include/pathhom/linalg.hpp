#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pathhom/scalar.hpp"

namespace pathhom {

/// Sparse coordinate vector: (index, value) pairs sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Adds factor * x into y.
void axpy(SparseVector& y, const Scalar& factor, const SparseVector& x);
SparseVector scaled(const SparseVector& x, const Scalar& factor);

/// Sparse matrix over a field, stored column-major.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Field field);

  static Matrix from_rows(Field field, std::size_t cols, const std::vector<SparseVector>& rows);
  /// Dense integer literal, handy for small fixed matrices.
  static Matrix from_ints(Field field, const std::vector<std::vector<long long>>& rows);
  static Matrix identity(std::size_t n, Field field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const Field& field() const noexcept { return field_; }

  const SparseVector& column(std::size_t j) const { return columns_.at(j); }
  /// Throws std::out_of_range on entries past rows().
  void set_column(std::size_t j, SparseVector v);
  void set(std::size_t i, std::size_t j, const Scalar& value);
  Scalar at(std::size_t i, std::size_t j) const;

  std::vector<SparseVector> row_vectors() const;
  std::size_t nonzeros() const;
  bool is_zero() const;

  /// this * v, where v is indexed by columns.
  SparseVector apply(const SparseVector& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  Field field_;
  std::vector<SparseVector> columns_;
};

struct EliminationOptions {
  /// Matrices with rows * cols at or below this are eliminated densely.
  std::size_t dense_threshold = std::size_t{1} << 16;
  enum class Strategy { Auto, Dense, Sparse } strategy = Strategy::Auto;
};

struct RowEchelon {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by exact elimination. Over Q the dense path is
/// fraction-free (Bareiss) with a final normalization. Pivots are taken by
/// smallest column, then smallest original row. The result is canonical.
RowEchelon rref(const Matrix& m, const EliminationOptions& opts = {});

/// Nonzero RREF rows of the given row vectors and their pivot columns.
std::pair<std::vector<SparseVector>, std::vector<std::size_t>> reduce_rows(
    std::vector<SparseVector> rows, std::size_t cols, const Field& field,
    const EliminationOptions& opts = {});

std::size_t rank(const Matrix& m, const EliminationOptions& opts = {});

/// Subspace of F^ambient held by its canonical RREF basis: pivots strictly
/// increasing, normalized to 1, and cleared from every other basis row.
/// Two spanning sets of the same space give equal Subspace values.
class Subspace {
 public:
  Subspace(std::size_t ambient, Field field);

  static Subspace span(std::size_t ambient, Field field, std::vector<SparseVector> vectors,
                       const EliminationOptions& opts = {});
  static Subspace whole(std::size_t ambient, Field field);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const Field& field() const noexcept { return field_; }
  const std::vector<SparseVector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v with every pivot coordinate eliminated by the basis.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const;
  /// Coefficients of v in the basis, or nullopt when v is not in the span.
  std::optional<std::vector<Scalar>> coordinates(const SparseVector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  Field field_;
  std::vector<SparseVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of the null space. Throws ConsistencyError if
/// rank + nullity != cols.
Subspace kernel(const Matrix& m, const EliminationOptions& opts = {});

/// dim m(s). Throws std::invalid_argument on a dimension mismatch.
std::size_t rank_of_restriction(const Matrix& m, const Subspace& s,
                                const EliminationOptions& opts = {});

/// Rank of the images of `vectors` in F^n / modulo.
std::size_t quotient_rank(const std::vector<SparseVector>& vectors, const Subspace& modulo,
                          const EliminationOptions& opts = {});

}  // namespace pathhom
