#include "psl/radicals.hpp"

namespace psl {

std::string_view to_string(RadicalMethod m) {
  return m == RadicalMethod::TraceForm ? "trace-form" : "brute-nilpotent";
}

namespace {

bool trace_form_applies(const Algebra& a) {
  const std::size_t n = a.has_unit() ? a.dim() : a.dim() + 1;
  return a.field().is_rational() || a.field().characteristic() > n;
}

/// {x : Tr(L_{xy}) = 0 for all y} for a unital algebra.
Subspace trace_form_radical(const Algebra& a) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  Vec tr(n, f.zero());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) tr[k] += a.coeff(k, l, l);
  Matrix g(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.coeff(i, j, k).is_zero()) g(i, j) += a.coeff(i, j, k) * tr[k];
  return kernel(g);
}

Subspace brute_radical(const Algebra& a, const Caps& caps) {
  std::vector<Matrix> ops;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    ops.push_back(a.left_mult_basis(b));
    ops.push_back(a.right_mult_basis(b));
  }
  // J is the sum of all nilpotent ideals; every x in J generates one.
  std::vector<Vec> gens;
  for (const auto& ideal : cyclic_invariant_subspaces(a.field(), a.dim(), ops, caps))
    if (is_nilpotent_subspace(a, ideal))
      for (auto& v : ideal.basis_vectors()) gens.push_back(std::move(v));
  return Subspace::span(a.field(), a.dim(), gens);
}

RadicalReport compute(const Algebra& a, RadicalMethod method, const Caps& caps, bool verify) {
  RadicalReport r;
  r.method = method;
  if (a.dim() == 0) {
    r.radical = Subspace::zero(a.field(), 0);
    return r;
  }
  if (method == RadicalMethod::TraceForm) {
    if (!trace_form_applies(a))
      throw Error(ErrorKind::UnsupportedCharacteristic, "trace form needs char 0 or char > dim");
    if (a.has_unit()) {
      r.radical = trace_form_radical(a);
    } else {
      Subspace j = trace_form_radical(unitization(a));
      std::vector<Vec> rows;
      for (const auto& v : j.basis_vectors()) rows.emplace_back(v.begin() + 1, v.end());
      r.radical = Subspace::span(a.field(), a.dim(), rows);
    }
  } else {
    if (!a.field().is_finite() || a.dim() > caps.dim_cap || a.field().characteristic() > caps.field_cap)
      throw Error(ErrorKind::UnsupportedCharacteristic,
                  "radical over " + a.field().name() + " of dim " + std::to_string(a.dim()) +
                      " needs char > dim or a search within caps (dim <= " + std::to_string(caps.dim_cap) +
                      ", field <= " + std::to_string(caps.field_cap) + "); raise --dim-cap/--field-cap");
    r.radical = brute_radical(a, caps);
  }
  auto idx = nilpotency_index(a, r.radical);
  if (verify) {
    if (!is_ideal(a, r.radical)) throw Error(ErrorKind::AxiomViolation, "computed radical is not an ideal");
    if (!idx) throw Error(ErrorKind::AxiomViolation, "computed radical is not nilpotent");
    if (!r.radical.is_zero() && !r.radical.is_full()) {
      QuotientAlgebra q = quotient_algebra(a, r.radical);
      if (!jacobson_radical(q.algebra, caps, false).radical.is_zero())
        throw Error(ErrorKind::AxiomViolation, "quotient by the computed radical has nonzero radical");
    }
  }
  r.nilpotency_index = idx.value_or(0);
  return r;
}

}  // namespace

RadicalReport jacobson_radical(const Algebra& a, const Caps& caps, bool verify) {
  return compute(a, trace_form_applies(a) ? RadicalMethod::TraceForm : RadicalMethod::BruteNilpotent, caps, verify);
}

RadicalReport jacobson_radical_by(const Algebra& a, RadicalMethod method, const Caps& caps) {
  return compute(a, method, caps, true);
}

Subspace prime_radical(const Algebra& a, const Caps& caps) { return jacobson_radical(a, caps).radical; }

Subspace h_jacobson_radical(const PartialAction& pa, const Caps& caps) {
  return colon_ideal(pa, jacobson_radical(pa.alg(), caps).radical);
}

Subspace h_prime_radical(const PartialAction& pa, const Caps& caps) {
  return colon_ideal(pa, prime_radical(pa.alg(), caps));
}

Subspace h_radical_of_ideal(const PartialAction& pa, const Subspace& i, const Caps& caps) {
  if (!is_h_stable(pa, i)) throw Error(ErrorKind::NotHStable, "Hrz of " + i.to_string());
  if (!is_ideal(pa.alg(), i)) throw Error(ErrorKind::NotAnIdeal, "Hrz of " + i.to_string());
  if (i.is_full()) return i;
  QuotientAction q = quotient_action(pa, i);
  Subspace k = h_prime_radical(q.action, caps);
  std::vector<Vec> rows = i.basis_vectors();
  for (const auto& v : k.basis_vectors()) rows.push_back(q.quotient.lift_vector(v));
  return Subspace::span(pa.field(), pa.adim(), rows);
}

bool is_semiprime(const Algebra& a, const Caps& caps) { return prime_radical(a, caps).is_zero(); }
bool is_semiprimitive(const Algebra& a, const Caps& caps) { return jacobson_radical(a, caps).radical.is_zero(); }
bool is_h_semiprime(const PartialAction& pa, const Caps& caps) { return h_prime_radical(pa, caps).is_zero(); }
bool is_h_semiprimitive(const PartialAction& pa, const Caps& caps) {
  return h_jacobson_radical(pa, caps).is_zero();
}

std::vector<Subspace> enumerate_h_stable_ideals(const PartialAction& pa, const Caps& caps) {
  return invariant_subspaces(pa.field(), pa.adim(), h_stable_ideal_operators(pa), caps);
}

bool is_h_prime(const PartialAction& pa, const Subspace& p, const Caps& caps) {
  require_enumerable(pa.field(), pa.adim(), caps);
  if (p.is_full()) throw Error(ErrorKind::InvalidArgument, "H-prime ideals are proper");
  if (!is_ideal(pa.alg(), p)) throw Error(ErrorKind::NotAnIdeal, p.to_string());
  if (!is_h_stable(pa, p)) throw Error(ErrorKind::NotHStable, p.to_string());
  std::vector<Subspace> outside;
  for (auto& i : enumerate_h_stable_ideals(pa, caps))
    if (!i.is_subspace_of(p)) outside.push_back(std::move(i));
  for (const auto& i : outside)
    for (const auto& j : outside)
      if (product_space(pa.alg(), i, j).is_subspace_of(p)) return false;
  return true;
}

}  // namespace psl
