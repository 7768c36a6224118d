#include "psl/smash.hpp"

namespace psl {

Algebra build_full_smash(const PartialAction& pa) {
  const auto& a = pa.alg();
  const auto& h = pa.hopf();
  const std::size_t n = pa.adim(), m = pa.hdim(), d = n * m;
  const Field f = pa.field();
  std::vector<Vec> table(d * d, zero_vec(f, d));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          Vec& out = table[(j * m + i) * d + k * m + l];
          for (const auto& t : h.coproduct_terms(i)) {
            Vec left = a.multiply(a.basis_vector(j), pa.act_basis(t.p, k));
            const Vec& right = h.alg().product(t.q, l);
            for (std::size_t u = 0; u < n; ++u) {
              if (left[u].is_zero()) continue;
              for (std::size_t v = 0; v < m; ++v)
                if (!right[v].is_zero()) out[u * m + v] += t.c * left[u] * right[v];
            }
          }
        }
  std::optional<Vec> unit;
  if (is_global(pa)) {
    Vec u = zero_vec(f, d);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < m; ++i) u[j * m + i] = a.unit()[j] * h.alg().unit()[i];
    unit = std::move(u);
  }
  std::vector<std::string> labels;
  for (const auto& x : a.labels())
    for (const auto& y : h.alg().labels()) labels.push_back(x + "#" + y);
  return Algebra(f, d, std::move(table), std::move(unit), std::move(labels));
}

Vec SmashProduct::pi_basis(std::size_t j, std::size_t i) const {
  return to_carrier(project(unit_vec(full.field(), full.dim(), j * pa.hdim() + i)));
}

SmashProduct build_partial_smash(const PartialAction& pa) {
  SmashProduct sp;
  sp.pa = pa;
  sp.full = build_full_smash(pa);
  const auto& a = pa.alg();
  const auto& h = pa.hopf();
  const std::size_t n = pa.adim(), m = pa.hdim(), d = n * m;
  const Field f = pa.field();

  sp.unit_element = zero_vec(f, d);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) sp.unit_element[j * m + i] = a.unit()[j] * h.alg().unit()[i];

  std::vector<Vec> images;
  for (std::size_t t = 0; t < d; ++t) images.push_back(sp.project(unit_vec(f, d, t)));
  sp.image = Subspace::span(f, d, images);

  auto basis = sp.image.basis_vectors();
  const std::size_t c = basis.size();
  std::vector<Vec> table;
  table.reserve(c * c);
  for (const auto& x : basis)
    for (const auto& y : basis) table.push_back(sp.image.coordinates(sp.full.multiply(x, y)));
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < c; ++r) {
    std::string s;
    for (std::size_t t = 0; t < d; ++t) {
      if (basis[r][t].is_zero()) continue;
      if (!s.empty()) s += "+";
      if (!basis[r][t].is_one()) s += basis[r][t].to_string() + "*";
      s += sp.full.labels()[t];
    }
    labels.push_back(s);
  }
  sp.carrier = Algebra(f, c, std::move(table), sp.image.coordinates(sp.unit_element), std::move(labels));

  Matrix inc(f, c, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec x = zero_vec(f, d);
    for (std::size_t i = 0; i < m; ++i) x[j * m + i] = h.alg().unit()[i];
    Vec cx = sp.image.coordinates(x);
    for (std::size_t r = 0; r < c; ++r) inc(r, j) = cx[r];
  }
  sp.include_A = AlgebraMap{a, sp.carrier, std::move(inc)};
  sp.dual_action = dual_hopf_action(sp);
  return sp;
}

PartialAction dual_hopf_action(const SmashProduct& sp) {
  const auto& h = sp.pa.hopf();
  const std::size_t n = sp.pa.adim(), m = sp.pa.hdim(), d = n * m;
  const Field f = sp.pa.field();
  HopfAlgebra hstar = dual_hopf(h);
  auto basis = sp.image.basis_vectors();
  std::vector<Vec> act;
  for (std::size_t k = 0; k < m; ++k)
    for (const auto& x : basis) {
      // p_k > (a # h_i) = sum over Delta(h_i) terms with second leg h_k of a # h_p.
      Vec y = zero_vec(f, d);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) {
          const Scalar& c = x[j * m + i];
          if (c.is_zero()) continue;
          for (const auto& t : h.coproduct_terms(i))
            if (t.q == k) y[j * m + t.p] += c * t.c;
        }
      act.push_back(sp.image.coordinates(y));
    }
  return PartialAction(std::move(hstar), sp.carrier, std::move(act));
}

Subspace phi_ideal(const SmashProduct& sp, const Subspace& i) {
  if (!is_h_stable(sp.pa, i)) throw Error(ErrorKind::NotHStable, "phi of " + i.to_string());
  const std::size_t m = sp.pa.hdim(), d = sp.full_dim();
  std::vector<Vec> gens;
  for (const auto& x : i.basis_vectors())
    for (std::size_t k = 0; k < m; ++k) {
      Vec t = zero_vec(sp.pa.field(), d);
      for (std::size_t j = 0; j < sp.pa.adim(); ++j) t[j * m + k] = x[j];
      gens.push_back(sp.to_carrier(sp.project(t)));
    }
  return Subspace::span(sp.pa.field(), sp.dim(), gens);
}

Subspace psi_ideal(const SmashProduct& sp, const Subspace& ideal) {
  if (!is_ideal(sp.carrier, ideal)) throw Error(ErrorKind::NotAnIdeal, "psi of " + ideal.to_string());
  return preimage(sp.include_A.matrix.transpose(), ideal);
}

}  // namespace psl
