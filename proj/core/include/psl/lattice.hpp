#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "psl/linalg.hpp"

namespace psl {

/// Limits on exhaustive searches over finite fields. A search over k^n is
/// allowed when n <= dim_cap and |k| <= field_cap.
struct Caps {
  std::size_t dim_cap = 6;
  std::uint32_t field_cap = 5;
  /// Hard stop on the number of distinct invariant subspaces collected.
  std::size_t max_subspaces = 200000;
};

/// Throws FieldNotFinite over Q and DimensionTooLarge when (field, n) exceeds caps.
void require_enumerable(Field field, std::size_t n, const Caps& caps);

/// Smallest subspace containing `seed` and mapped into itself by every
/// operator (row convention: row i of an operator is the image of e_i).
/// Works over any field.
Subspace invariant_closure(const std::vector<Matrix>& ops, const Subspace& seed);

/// Distinct closures of the lines k*v over every projective point v of k^n,
/// sorted canonically.
std::vector<Subspace> cyclic_invariant_subspaces(Field field, std::size_t n, const std::vector<Matrix>& ops,
                                                 const Caps& caps);

/// Every invariant subspace of k^n (including 0 and k^n), sorted canonically.
std::vector<Subspace> invariant_subspaces(Field field, std::size_t n, const std::vector<Matrix>& ops,
                                          const Caps& caps);

/// A nonzero vector whose closure is a proper subspace, if any; std::nullopt
/// means k^n has no proper nonzero invariant subspace.
std::optional<Vec> proper_cyclic_witness(Field field, std::size_t n, const std::vector<Matrix>& ops,
                                         const Caps& caps);

}  // namespace psl
