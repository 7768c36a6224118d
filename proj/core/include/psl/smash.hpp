#pragma once

#include <cstddef>

#include "psl/paction.hpp"

namespace psl {

/// Partial smash product (A # H)(1_A # 1_H). Elements of A (x) H use the
/// A-block-major index j * dim(H) + i for a_j # h_i.
struct SmashProduct {
  PartialAction pa;
  Algebra full;          ///< A # H on all of A (x) H, possibly non-unital
  Subspace image;        ///< the carrier inside A (x) H
  Algebra carrier;       ///< structure on the RREF basis of `image`
  AlgebraMap include_A;  ///< a -> a # 1_H
  Vec unit_element;      ///< 1_A # 1_H in A (x) H coordinates
  PartialAction dual_action;  ///< global action of H* on the carrier

  std::size_t full_dim() const noexcept { return full.dim(); }
  std::size_t dim() const noexcept { return carrier.dim(); }
  /// x (1_A # 1_H) for x in A (x) H.
  Vec project(std::span<const Scalar> x) const { return full.multiply(x, unit_element); }
  /// Carrier coordinates of an element of the image.
  Vec to_carrier(std::span<const Scalar> x) const { return image.coordinates(x); }
  /// A (x) H coordinates of a carrier element.
  Vec to_full(std::span<const Scalar> c) const { return row_times(c, image.basis()); }
  /// Carrier coordinates of pi(a_j # h_i).
  Vec pi_basis(std::size_t j, std::size_t i) const;
};

/// (a # h)(b # g) = sum a(h_1 . b) # h_2 g on A (x) H.
Algebra build_full_smash(const PartialAction& pa);
SmashProduct build_partial_smash(const PartialAction& pa);
/// phi > (a # h) = sum a # h_1 phi(h_2), as an action of dual_hopf(H) on the carrier.
PartialAction dual_hopf_action(const SmashProduct& sp);

/// span{pi(x # h)} for x in I; throws NotHStable.
Subspace phi_ideal(const SmashProduct& sp, const Subspace& i);
/// Pullback of (ideal intersected with A # 1_H) to A; throws NotAnIdeal.
Subspace psi_ideal(const SmashProduct& sp, const Subspace& ideal);

}  // namespace psl
