#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "psl/paction.hpp"

namespace psl {

/// (QC_2)* acting on e_N QC_2 with N = C_2; p_1 . e_N = p_g . e_N = e_N / 2.
PartialAction dual_c2_example();
/// Trivial global action of QC_2 on Q^3.
PartialAction trivial_c2_on_q3();
/// F_2 C_2 acting trivially on F_2.
PartialAction trivial_f2c2_on_f2();
/// Sweedler's algebra acting trivially on the base field.
PartialAction sweedler_trivial(Field field);

struct NamedAction {
  std::string name;
  PartialAction action;
};

/// The four standard examples: dual-c2, c4-triple, trivial-c2-q3, trivial-f2c2.
std::vector<NamedAction> fixtures();

/// Normal subgroups of g (including 1 and g), each as a sorted element list.
std::vector<std::vector<std::size_t>> normal_subgroups(const GroupTable& g);

/// Primitive n-th root of unity in F_p, if n divides p - 1.
std::optional<Scalar> root_of_unity(Field field, std::size_t n);

struct RandomOptions {
  /// Upper bound on dim(A) for generated instances.
  std::size_t max_adim = 6;
  /// Upper bound on dim(H).
  std::size_t max_hdim = 6;
  /// Probability of replacing the instance by a quotient modulo a random H-stable ideal.
  double quotient_probability = 0.3;
};

/// Random partial action over a finite field, built only through constructors
/// that preserve the axioms: restrictions of G-set actions to central
/// idempotents, (kG)* on e kG for central idempotents e, trivial actions and
/// quotients by H-stable ideals.
NamedAction random_partial_action(Field field, std::mt19937_64& rng, const RandomOptions& opts = {});

}  // namespace psl
