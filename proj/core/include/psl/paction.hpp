#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "psl/hopf.hpp"

namespace psl {

/// Partial action h_i . a_j = sum_k t[i][j][k] a_k of a Hopf algebra H on a unital algebra A.
class PartialAction {
 public:
  PartialAction() = default;
  /// `act[i * dim(A) + j]` holds h_i . a_j. Rejects A = 0 and non-unital A.
  PartialAction(HopfAlgebra hopf, Algebra alg, std::vector<Vec> act);

  const HopfAlgebra& hopf() const noexcept { return hopf_; }
  const Algebra& alg() const noexcept { return alg_; }
  Field field() const noexcept { return alg_.field(); }
  std::size_t hdim() const noexcept { return hopf_.dim(); }
  std::size_t adim() const noexcept { return alg_.dim(); }

  const Vec& act_basis(std::size_t i, std::size_t j) const { return act_[i * adim() + j]; }
  /// h . a for h in H and a in A (bilinear).
  Vec act(std::span<const Scalar> h, std::span<const Scalar> a) const;
  /// h_i . a
  Vec act_on(std::size_t i, std::span<const Scalar> a) const;
  /// Operator a -> h_i . a in row convention.
  Matrix act_operator(std::size_t i) const;
  /// h_i . 1_A, cached.
  const Vec& act_unit(std::size_t i) const { return act_unit_[i]; }

 private:
  HopfAlgebra hopf_;
  Algebra alg_;
  std::vector<Vec> act_;
  std::vector<Vec> act_unit_;
};

/// Partial coaction rho: A -> A (x) H*, stored as one length n*m vector per
/// basis element with entry j*m + i the coefficient of a_j (x) p_i.
struct PartialCoaction {
  Algebra alg;
  HopfAlgebra hopf;  ///< the coacting Hopf algebra (here H*)
  std::vector<Vec> rho;
};

/// PA1, PA3, PA4 on all basis tuples plus PA2 on `pa2_samples` random triples.
CheckReport check_partial_action(const PartialAction& pa, std::size_t pa2_samples = 16, std::uint64_t seed = 1);
bool is_global(const PartialAction& pa);

/// Partial action on eB induced from a global action on B by h . a = e(h > a).
/// The basis of eB is its RREF basis. Throws NotIdempotent, NotRightIdealUnit.
PartialAction induce_from_ideal(const PartialAction& global, std::span<const Scalar> e);
/// h . a = eps(h) a.
PartialAction trivial_action(const HopfAlgebra& h, const Algebra& a);
/// C_4 acting partially on k^3 = B x B x B with B = k.
PartialAction c4_triple(Field field);
/// (kG)* acting on e_N kG, e_N = (1/|N|) sum_{n in N} n. Throws BadSubgroup, CharDividesOrder.
PartialAction dual_group_idempotent(Field field, const GroupTable& g, const std::vector<std::size_t>& n);
/// The global action of (kG)* on kG: p_g > h = delta_{g,h} h.
PartialAction dual_group_regular_action(Field field, const GroupTable& g);

/// {a : h . a = a (h . 1_A) for all h}.
Subspace invariant_subalgebra(const PartialAction& pa);
/// {x in I : h_i . x in I for all i}. Throws NotAnIdeal.
Subspace colon_ideal(const PartialAction& pa, const Subspace& i);
bool is_h_stable(const PartialAction& pa, const Subspace& i);
/// Smallest H-stable two-sided ideal containing the generators.
Subspace h_stable_ideal_closure(const PartialAction& pa, std::span<const Vec> gens);
/// Operators whose common invariant subspaces are the H-stable ideals.
std::vector<Matrix> h_stable_ideal_operators(const PartialAction& pa);

struct QuotientAction {
  PartialAction action;
  QuotientAlgebra quotient;
};
/// Action on A/I; throws NotHStable.
QuotientAction quotient_action(const PartialAction& pa, const Subspace& i);

/// rho(a) = sum_i (h_i . a) (x) p_i, coacting with H*.
PartialCoaction action_to_coaction(const PartialAction& pa);
CheckReport check_partial_coaction(const PartialCoaction& pc);
/// {x : rho(x) = (x (x) 1) rho(1)}.
Subspace coinvariant_subalgebra(const PartialCoaction& pc);
/// Recovers the action tensor via h . a = sum a_0 a_1(h), for H = (pc.hopf)*.
std::vector<Vec> coaction_to_action_tensor(const PartialCoaction& pc);

/// Random element of the span of the given rows (uniform coefficients in a
/// small range over Q, uniform residues over F_p).
Vec random_combination(Field field, std::size_t ambient, std::span<const Vec> rows, std::mt19937_64& rng);
Vec random_vector(Field field, std::size_t n, std::mt19937_64& rng);

}  // namespace psl
