#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "psl/field.hpp"

namespace psl {

/// Coordinate vector. All entries share one field.
using Vec = std::vector<Scalar>;

Vec zero_vec(Field field, std::size_t n);
Vec unit_vec(Field field, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vec add(std::span<const Scalar> a, std::span<const Scalar> b);
Vec sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vec scale(const Scalar& c, std::span<const Scalar> v);
/// y += c * x
void axpy(Vec& y, const Scalar& c, std::span<const Scalar> x);
std::string to_string(std::span<const Scalar> v);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Stacks the given vectors as rows; every vector must have length `cols`.
  static Matrix from_rows(Field field, std::size_t cols, std::span<const Vec> rows);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  Vec col_vec(std::size_t c) const;
  std::vector<Vec> row_vectors() const;

  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
/// Matrix-vector product m * v (v as a column).
Vec apply(const Matrix& m, std::span<const Scalar> v);
/// Row-vector product v * m, i.e. sum_i v_i * row_i(m). Operators stored with
/// "row i = image of basis vector i" act through this.
Vec row_times(std::span<const Scalar> v, const Matrix& m);
/// Composition of row-convention operators: first `f`, then `g`.
Matrix then(const Matrix& f, const Matrix& g);

struct RrefResult {
  Matrix reduced;                   ///< same shape as the input
  std::size_t rank = 0;             ///< number of nonzero rows
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);

/// Linear subspace of k^n held as an RREF basis without zero rows, so that
/// equal subspaces have equal representations.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Field field, std::size_t ambient);
  static Subspace full(Field field, std::size_t ambient);
  static Subspace span(Field field, std::size_t ambient, std::span<const Vec> vectors);
  static Subspace row_space(const Matrix& m);

  Field field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient(); }

  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vec basis_vector(std::size_t i) const { return basis_.row_vec(i); }
  std::vector<Vec> basis_vectors() const { return basis_.row_vectors(); }

  /// x minus its projection along the basis pivots; zero iff x lies in the space.
  Vec reduce(std::span<const Scalar> x) const;
  bool contains(std::span<const Scalar> x) const;
  /// Coefficients of x in the RREF basis. Throws InvalidArgument if x is outside.
  Vec coordinates(std::span<const Scalar> x) const;
  /// Non-pivot columns in increasing order; their unit vectors complete the basis.
  std::vector<std::size_t> complement_columns() const;

  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field() == b.field() && a.basis_ == b.basis_ && a.ambient() == b.ambient();
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {x : m x = 0} as a subspace of k^cols.
Subspace kernel(const Matrix& m);
Subspace sum_spaces(const Subspace& u, const Subspace& v);
Subspace intersect_spaces(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, std::span<const Scalar> x);
/// {y : <u, y> = 0 for all u in U}.
Subspace orthogonal(const Subspace& u);
/// Image of U under the row-convention operator `op`.
Subspace image(const Matrix& op, const Subspace& u);
/// {x : row_times(x, op) = 0 for every op}; all operators share the row count.
Subspace common_kernel(Field field, std::size_t n, std::span<const Matrix> ops);
/// {x : row_times(x, op) lies in U}.
Subspace preimage(const Matrix& op, const Subspace& u);
/// Coefficients c with sum_i c_i rows_i = target, or empty if target is not in the span.
bool solve_in_span(const Matrix& rows, std::span<const Scalar> target, Vec& coefficients);

/// Strict weak order: by dimension, then lexicographically by basis entries.
bool canonical_less(const Subspace& a, const Subspace& b);

}  // namespace psl
