#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "psl/linalg.hpp"
#include "psl/report.hpp"

namespace psl {

/// Finite-dimensional associative algebra given by structure constants
/// e_i e_j = sum_k c[i][j][k] e_k. The unit is optional so that the full
/// (possibly non-unital) smash product can be represented.
class Algebra {
 public:
  Algebra() = default;
  /// `table[i * dim + j]` holds e_i e_j. Labels default to "e0", "e1", ...
  Algebra(Field field, std::size_t dim, std::vector<Vec> table, std::optional<Vec> unit,
          std::vector<std::string> labels = {});

  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  bool has_unit() const noexcept { return unit_.has_value(); }
  /// Throws MissingUnit for non-unital algebras.
  const Vec& unit() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const Vec& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  const Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) const { return table_[i * dim_ + j][k]; }

  Vec multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// Operator y -> x y in row convention (row j = x e_j).
  Matrix left_mult(std::span<const Scalar> x) const;
  /// Operator y -> y x in row convention (row j = e_j x).
  Matrix right_mult(std::span<const Scalar> x) const;
  Matrix left_mult_basis(std::size_t i) const;
  Matrix right_mult_basis(std::size_t i) const;

  Vec basis_vector(std::size_t i) const { return unit_vec(field_, dim_, i); }
  Vec zero() const { return zero_vec(field_, dim_); }

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  struct Term {
    std::size_t k;
    Scalar c;
  };

  Field field_;
  std::size_t dim_ = 0;
  std::vector<Vec> table_;
  std::vector<std::vector<Term>> sparse_;
  std::optional<Vec> unit_;
  std::vector<std::string> labels_;
};

/// Linear map between algebras; column j of `matrix` is the image of source e_j.
struct AlgebraMap {
  Algebra source;
  Algebra target;
  Matrix matrix;

  Vec apply(std::span<const Scalar> x) const { return psl::apply(matrix, x); }
};

enum class IdealSide { Left, Right, TwoSided };

/// Associativity on all basis triples, unit laws, and table shape.
CheckReport check_algebra(const Algebra& a);
/// Multiplicativity on basis pairs and unitality when both units exist.
CheckReport check_algebra_map(const AlgebraMap& f);

/// Smallest subspace containing `gens` closed under multiplication by A on the requested side(s).
Subspace ideal_closure(const Algebra& a, std::span<const Vec> gens, IdealSide side);
bool is_ideal(const Algebra& a, const Subspace& i, IdealSide side = IdealSide::TwoSided);
/// span{xy : x in I, y in J}.
Subspace product_space(const Algebra& a, const Subspace& i, const Subspace& j);

struct QuotientAlgebra {
  Algebra algebra;
  AlgebraMap projection;
  /// Ambient indices whose unit vectors lift the quotient basis, increasing.
  std::vector<std::size_t> lift;
  Subspace ideal;

  Vec project(std::span<const Scalar> x) const;
  Vec lift_vector(std::span<const Scalar> q) const;
};

/// Throws NotAnIdeal unless I is a two-sided ideal.
QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& i);

/// True iff I^m = 0 for some m <= dim(A) + 1.
bool is_nilpotent_subspace(const Algebra& a, const Subspace& i);
/// Least m with I^m = 0, if any.
std::optional<std::size_t> nilpotency_index(const Algebra& a, const Subspace& i);

Algebra direct_product(const Algebra& a, const Algebra& b);
/// Basis e_i (x) f_j at index i * dim(B) + j.
Algebra tensor_product(const Algebra& a, const Algebra& b);
/// Smallest unital multiplicatively closed subspace containing `gens`.
Subspace subalgebra_closure(const Algebra& a, std::span<const Vec> gens);
/// Structure on a subspace closed under multiplication, in its RREF basis.
Algebra restrict_to_subalgebra(const Algebra& a, const Subspace& s);
/// k + A with the adjoined unit at index 0.
Algebra unitization(const Algebra& a);

Algebra base_field_algebra(Field field);
/// k^n with componentwise product.
Algebra product_of_fields(Field field, std::size_t n);
/// Upper triangular n x n matrices, basis E_ij (i <= j) in row-major order.
Algebra upper_triangular(Field field, std::size_t n);
/// Full matrix algebra M_n(k), basis E_ij at index i * n + j.
Algebra matrix_algebra(Field field, std::size_t n);
/// k[x]/(x^n), basis 1, x, ..., x^{n-1}.
Algebra truncated_polynomial(Field field, std::size_t n);

}  // namespace psl
