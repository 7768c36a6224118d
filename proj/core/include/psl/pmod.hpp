#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "psl/lattice.hpp"
#include "psl/smash.hpp"

namespace psl {

enum class Side { Left, Right };

/// Module over an algebra. ops[b] is the action of basis element b as a
/// row-convention operator on the carrier: m -> m e_b (right) or m -> e_b m (left).
struct Module {
  Side side = Side::Right;
  Algebra alg;
  std::size_t dim = 0;
  std::vector<Matrix> ops;

  /// Operator of an arbitrary algebra element.
  Matrix op(std::span<const Scalar> x) const;
};

/// Unit acts as the identity and ops compose like the algebra product.
CheckReport check_module(const Module& m);
Module regular_module(const Algebra& a, Side side);
/// Restriction to an invariant subspace (in its RREF basis); throws NotAModule.
Module submodule(const Module& m, const Subspace& u);
/// Action on M/U with the complement-column basis; throws NotAModule.
Module quotient_module(const Module& m, const Subspace& u);
/// {a : M a = 0} (right) or {a : a M = 0} (left).
Subspace module_annihilator(const Module& m);

/// Partial (A,H)-module: A acts through a_ops, H through h_ops
/// (m < h for right modules, h > m for left modules), all row convention.
struct PartialModule {
  Side side = Side::Right;
  PartialAction pa;
  std::size_t dim = 0;
  std::vector<Matrix> a_ops;
  std::vector<Matrix> h_ops;

  Matrix a_op(std::span<const Scalar> x) const;
  Matrix h_op(std::span<const Scalar> h) const;
  /// Operators whose common invariant subspaces are the partial submodules.
  std::vector<Matrix> all_ops() const;
  Module as_a_module() const { return Module{side, pa.alg(), dim, a_ops}; }
};

/// A-module axioms plus PM1, PM3, PM4 on all basis tuples.
CheckReport check_partial_module(const PartialModule& m);

/// m(a # h) = (m a) < h, resp. (a # h) m = a (h > m).
Module to_smash_module(const PartialModule& m, const SmashProduct& sp);
/// m < h = m (1_A # h) and m a = m (a # 1_H), resp. the left analogues. Throws AxiomViolation
/// if the result fails the partial-module axioms.
PartialModule from_smash_module(const SmashProduct& sp, const Module& m);

/// Annihilator in A; H-stable for every partial module.
Subspace annihilator(const PartialModule& m);

PartialModule submodule(const PartialModule& m, const Subspace& u);
PartialModule quotient_module(const PartialModule& m, const Subspace& u);
/// A as a left partial (A,H)-module: a m = product, h > m = h . m.
PartialModule left_regular_partial_module(const PartialAction& pa);

enum class Irreducibility { Irreducible, Reducible, Unknown };
std::string_view to_string(Irreducibility r);

/// Over finite fields: exhaustive (every nonzero vector generates). Over Q:
/// Irreducible if dim 1 or the operators generate all of End(M), Reducible if
/// some basis vector generates a proper submodule, otherwise Unknown.
/// Throws ZeroModule.
Irreducibility is_irreducible(const PartialModule& m, const Caps& caps = {});
Irreducibility is_irreducible(const Module& m, const Caps& caps = {});

struct Extension {
  PartialModule module;
  Subspace ambient_span;  ///< W inside V (x) H (right) or V (x) H* (left)
  Matrix embedding;       ///< row v = image of the V basis vector v in module coordinates
};

/// W = span{sum v(k_1 . x) (x) k_2} in V (x) H with the induced actions. Throws NotAModule.
Extension extend_right_module(const PartialAction& pa, const Module& v);
/// W = rho(A)(V (x) H*) with a . w = rho(a) w and h > w = rho(1)(id (x) h ->)(w);
/// V embeds as V (x) lambda for a left integral lambda of H*. Throws NotAModule.
Extension extend_left_module(const PartialAction& pa, const Module& v);

struct IrreducibleExtension {
  Extension extension;  ///< W before the quotient
  Subspace kernel;      ///< the chosen U, maximal with U n V = 0
  PartialModule module; ///< M = W/U
  Matrix embedding;     ///< V -> M
};

/// M = W/U for a largest submodule U of W with U n V = 0 (first in canonical
/// order among those of largest dimension). Finite fields only; V must be an
/// irreducible right A-module. Throws FieldNotFinite, DimensionTooLarge, NotAModule.
IrreducibleExtension irreducible_extension(const PartialAction& pa, const Module& v, const Caps& caps = {});

/// A/m for each maximal right ideal m (finite fields only).
std::vector<Module> simple_right_modules(const Algebra& a, const Caps& caps = {});

}  // namespace psl
