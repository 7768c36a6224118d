#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "psl/algebra.hpp"

namespace psl {

/// Finite group as a Cayley table over indices 0..n-1.
class GroupTable {
 public:
  GroupTable() = default;
  /// Validates closure, associativity, identity and inverses (InvalidGroupTable).
  static GroupTable from_cayley(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names = {});
  /// C_n with element i = g^i.
  static GroupTable cyclic(std::size_t n);
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
  /// S_3 with elements listed as permutations of {0,1,2} in lexicographic order.
  static GroupTable symmetric3();

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool is_subgroup(const std::vector<std::size_t>& elems) const;
  bool is_normal_subgroup(const std::vector<std::size_t>& elems) const;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::vector<std::string> names_;
};

/// Finite-dimensional Hopf algebra: algebra plus Delta(e_i) = sum d[i][p][q] e_p (x) e_q,
/// counit covector and antipode (column i = S(e_i)).
class HopfAlgebra {
 public:
  HopfAlgebra() = default;
  /// `comul[i]` has length m*m with entry p*m+q the coefficient of e_p (x) e_q.
  HopfAlgebra(Algebra alg, std::vector<Vec> comul, Vec counit, Matrix antipode);

  const Algebra& alg() const noexcept { return alg_; }
  Field field() const noexcept { return alg_.field(); }
  std::size_t dim() const noexcept { return alg_.dim(); }
  const Vec& comul(std::size_t i) const { return comul_[i]; }
  const Scalar& comul_coeff(std::size_t i, std::size_t p, std::size_t q) const { return comul_[i][p * dim() + q]; }
  const Vec& counit() const noexcept { return counit_; }
  const Matrix& antipode() const noexcept { return antipode_; }

  struct Term {
    std::size_t p, q;
    Scalar c;
  };
  /// Nonzero terms of Delta(e_i).
  const std::vector<Term>& coproduct_terms(std::size_t i) const { return terms_[i]; }

  Vec apply_antipode(std::span<const Scalar> x) const { return apply(antipode_, x); }
  Scalar counit_of(std::span<const Scalar> x) const;
  /// Delta(x) as a length m*m vector.
  Vec coproduct(std::span<const Scalar> x) const;

  friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b);

 private:
  Algebra alg_;
  std::vector<Vec> comul_;
  Vec counit_;
  Matrix antipode_;
  std::vector<std::vector<Term>> terms_;
};

/// Algebra axioms, coassociativity, counit laws, Delta and epsilon multiplicative
/// and unital, and both antipode convolution identities.
CheckReport check_hopf(const HopfAlgebra& h);

HopfAlgebra group_algebra(Field field, const GroupTable& g);
/// (kG)* in the dual basis {p_g}.
HopfAlgebra dual_group_algebra(Field field, const GroupTable& g);
/// H* in the dual basis of H's basis.
HopfAlgebra dual_hopf(const HopfAlgebra& h);
/// Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx. Throws BadCharacteristic in char 2.
HopfAlgebra sweedler_h4(Field field);

/// {L : h L = eps(h) L for all h}.
Subspace left_integrals(const HopfAlgebra& h);
/// Maschke criterion: eps(Lambda) != 0 for a nonzero left integral.
bool is_semisimple(const HopfAlgebra& h);

}  // namespace psl
