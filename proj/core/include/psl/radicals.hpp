#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "psl/lattice.hpp"
#include "psl/paction.hpp"

namespace psl {

enum class RadicalMethod { TraceForm, BruteNilpotent };
std::string_view to_string(RadicalMethod m);

struct RadicalReport {
  Subspace radical;
  RadicalMethod method = RadicalMethod::TraceForm;
  std::size_t nilpotency_index = 1;  ///< least m with J^m = 0
};

/// Trace form when char = 0 or char > dim (dim + 1 for non-unital algebras),
/// otherwise exhaustive search for nilpotent principal ideals within `caps`.
/// With `verify`, asserts that the result is a nilpotent ideal and that the
/// quotient has zero radical. Throws UnsupportedCharacteristic when neither
/// method applies.
RadicalReport jacobson_radical(const Algebra& a, const Caps& caps = {}, bool verify = true);
/// Forces one method; throws UnsupportedCharacteristic if it does not apply.
RadicalReport jacobson_radical_by(const Algebra& a, RadicalMethod method, const Caps& caps = {});
/// Equals J(A) for finite-dimensional algebras.
Subspace prime_radical(const Algebra& a, const Caps& caps = {});

/// (J(A):H)
Subspace h_jacobson_radical(const PartialAction& pa, const Caps& caps = {});
/// (P(A):H)
Subspace h_prime_radical(const PartialAction& pa, const Caps& caps = {});
/// Smallest H-semiprime ideal containing the H-stable ideal I, computed as the
/// preimage of (P(A/I):H). Throws NotHStable.
Subspace h_radical_of_ideal(const PartialAction& pa, const Subspace& i, const Caps& caps = {});

bool is_semiprime(const Algebra& a, const Caps& caps = {});
bool is_semiprimitive(const Algebra& a, const Caps& caps = {});
bool is_h_semiprime(const PartialAction& pa, const Caps& caps = {});
bool is_h_semiprimitive(const PartialAction& pa, const Caps& caps = {});

/// All H-stable two-sided ideals, sorted canonically. Finite fields only.
std::vector<Subspace> enumerate_h_stable_ideals(const PartialAction& pa, const Caps& caps = {});
/// For a proper H-stable ideal p: IJ in p implies I in p or J in p, over all
/// H-stable ideals I, J. Finite fields only.
bool is_h_prime(const PartialAction& pa, const Subspace& p, const Caps& caps = {});

}  // namespace psl
