#include "psl/paction.hpp"

#include <algorithm>

#include "psl/lattice.hpp"

namespace psl {

PartialAction::PartialAction(HopfAlgebra hopf, Algebra alg, std::vector<Vec> act)
    : hopf_(std::move(hopf)), alg_(std::move(alg)), act_(std::move(act)) {
  if (alg_.dim() == 0) throw Error(ErrorKind::InvalidArgument, "partial action on the zero algebra");
  if (!alg_.has_unit()) throw Error(ErrorKind::MissingUnit, "partial actions need a unital algebra");
  if (hopf_.field() != alg_.field()) throw Error(ErrorKind::FieldMismatch, "Hopf algebra vs algebra");
  const std::size_t m = hopf_.dim(), n = alg_.dim();
  if (act_.size() != m * n) throw Error(ErrorKind::DimensionMismatch, "action tensor needs dim(H)*dim(A) entries");
  for (const auto& v : act_) {
    if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "action entry length");
    for (const auto& s : v)
      if (s.field() != alg_.field()) throw Error(ErrorKind::FieldMismatch, "action entry field");
  }
  for (std::size_t i = 0; i < m; ++i) act_unit_.push_back(act_on(i, alg_.unit()));
}

Vec PartialAction::act_on(std::size_t i, std::span<const Scalar> a) const {
  Vec out = alg_.zero();
  for (std::size_t j = 0; j < adim(); ++j)
    if (!a[j].is_zero()) axpy(out, a[j], act_basis(i, j));
  return out;
}

Vec PartialAction::act(std::span<const Scalar> h, std::span<const Scalar> a) const {
  Vec out = alg_.zero();
  for (std::size_t i = 0; i < hdim(); ++i)
    if (!h[i].is_zero()) axpy(out, h[i], act_on(i, a));
  return out;
}

Matrix PartialAction::act_operator(std::size_t i) const {
  Matrix m(field(), adim(), adim());
  for (std::size_t j = 0; j < adim(); ++j)
    for (std::size_t k = 0; k < adim(); ++k) m(j, k) = act_basis(i, j)[k];
  return m;
}

Vec random_vector(Field field, std::size_t n, std::mt19937_64& rng) {
  Vec v;
  v.reserve(n);
  if (field.is_finite()) {
    std::uniform_int_distribution<std::uint32_t> d(0, field.characteristic() - 1);
    for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar::residue(d(rng), field));
  } else {
    std::uniform_int_distribution<int> d(-3, 3);
    for (std::size_t i = 0; i < n; ++i) v.push_back(field.from_int(d(rng)));
  }
  return v;
}

Vec random_combination(Field field, std::size_t ambient, std::span<const Vec> rows, std::mt19937_64& rng) {
  Vec c = random_vector(field, rows.size(), rng);
  Vec out = zero_vec(field, ambient);
  for (std::size_t i = 0; i < rows.size(); ++i) axpy(out, c[i], rows[i]);
  return out;
}

CheckReport check_partial_action(const PartialAction& pa, std::size_t pa2_samples, std::uint64_t seed) {
  CheckReport r;
  const auto& h = pa.hopf();
  const auto& a = pa.alg();
  const std::size_t m = pa.hdim(), n = pa.adim();
  r.subject = "partial action (dim H " + std::to_string(m) + ", dim A " + std::to_string(n) + ")";

  for (std::size_t j = 0; j < n; ++j) {
    ++r.checks;
    Vec e = a.basis_vector(j);
    if (pa.act(h.alg().unit(), e) != e) r.fail("PA1", {j});
  }
  // PA3: h_i . (a_j a_k) = sum (h_p . a_j)(h_q . a_k)
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++r.checks;
        Vec lhs = pa.act_on(i, a.product(j, k));
        Vec rhs = a.zero();
        for (const auto& t : h.coproduct_terms(i))
          axpy(rhs, t.c, a.multiply(pa.act_basis(t.p, j), pa.act_basis(t.q, k)));
        if (lhs != rhs) r.fail("PA3", {i, j, k}, to_string(lhs) + " != " + to_string(rhs));
      }
  // PA4: h_i . (h_l . a_k) = sum (h_p . 1)((h_q h_l) . a_k)
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < m; ++l)
      for (std::size_t k = 0; k < n; ++k) {
        ++r.checks;
        Vec lhs = pa.act_on(i, pa.act_basis(l, k));
        Vec rhs = a.zero();
        for (const auto& t : h.coproduct_terms(i))
          axpy(rhs, t.c, a.multiply(pa.act_unit(t.p), pa.act(h.alg().product(t.q, l), a.basis_vector(k))));
        if (lhs != rhs) r.fail("PA4", {i, l, k}, to_string(lhs) + " != " + to_string(rhs));
      }
  // PA2 on random samples: h . (a (g . b)) = sum (h_1 . a)((h_2 g) . b)
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < pa2_samples; ++s) {
    Vec hv = random_vector(pa.field(), m, rng), gv = random_vector(pa.field(), m, rng);
    Vec av = random_vector(pa.field(), n, rng), bv = random_vector(pa.field(), n, rng);
    ++r.checks;
    Vec lhs = pa.act(hv, a.multiply(av, pa.act(gv, bv)));
    Vec rhs = a.zero();
    Vec dh = h.coproduct(hv);
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        const Scalar& c = dh[p * m + q];
        if (c.is_zero()) continue;
        axpy(rhs, c, a.multiply(pa.act_on(p, av), pa.act(h.alg().multiply(h.alg().basis_vector(q), gv), bv)));
      }
    if (lhs != rhs) r.fail("PA2", {s}, "random sample");
  }
  return r;
}

bool is_global(const PartialAction& pa) {
  for (std::size_t i = 0; i < pa.hdim(); ++i)
    if (pa.act_unit(i) != scale(pa.hopf().counit()[i], pa.alg().unit())) return false;
  return true;
}

PartialAction induce_from_ideal(const PartialAction& global, std::span<const Scalar> e) {
  const Algebra& b = global.alg();
  if (!is_global(global)) throw Error(ErrorKind::InvalidArgument, "induce_from_ideal needs a global action");
  if (e.size() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "idempotent length");
  Vec ev(e.begin(), e.end());
  if (b.multiply(ev, ev) != ev) throw Error(ErrorKind::NotIdempotent, to_string(ev));
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < b.dim(); ++j) gens.push_back(b.multiply(ev, b.basis_vector(j)));
  Subspace eb = Subspace::span(b.field(), b.dim(), gens);
  for (const auto& x : eb.basis_vectors())
    if (b.multiply(ev, x) != x || b.multiply(x, ev) != x)
      throw Error(ErrorKind::NotRightIdealUnit, "e is not an identity for " + to_string(x));
  auto basis = eb.basis_vectors();
  std::vector<Vec> table;
  for (const auto& x : basis)
    for (const auto& y : basis) table.push_back(eb.coordinates(b.multiply(x, y)));
  Algebra a(b.field(), eb.dim(), std::move(table), eb.coordinates(ev));
  std::vector<Vec> act;
  for (std::size_t i = 0; i < global.hdim(); ++i)
    for (const auto& x : basis) act.push_back(eb.coordinates(b.multiply(ev, global.act_on(i, x))));
  return PartialAction(global.hopf(), std::move(a), std::move(act));
}

PartialAction trivial_action(const HopfAlgebra& h, const Algebra& a) {
  if (h.field() != a.field()) throw Error(ErrorKind::FieldMismatch, "trivial action");
  std::vector<Vec> act;
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) act.push_back(scale(h.counit()[i], a.basis_vector(j)));
  return PartialAction(h, a, std::move(act));
}

PartialAction c4_triple(Field field) {
  HopfAlgebra h = group_algebra(field, GroupTable::cyclic(4));
  Algebra a = product_of_fields(field, 3);
  // g^k . e_x = e_{x-k} when x-k lies in {1,2,3} (mod 4), else 0.
  std::vector<Vec> act;
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t x = 1; x <= 3; ++x) {
      std::size_t y = (x + 4 - k) % 4;
      act.push_back(y == 0 ? zero_vec(field, 3) : unit_vec(field, 3, y - 1));
    }
  return PartialAction(std::move(h), std::move(a), std::move(act));
}

PartialAction dual_group_regular_action(Field field, const GroupTable& g) {
  HopfAlgebra h = dual_group_algebra(field, g);
  HopfAlgebra kg = group_algebra(field, g);
  const std::size_t n = g.order();
  std::vector<Vec> act;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) act.push_back(a == b ? unit_vec(field, n, b) : zero_vec(field, n));
  return PartialAction(std::move(h), kg.alg(), std::move(act));
}

PartialAction dual_group_idempotent(Field field, const GroupTable& g, const std::vector<std::size_t>& n) {
  if (!g.is_normal_subgroup(n)) throw Error(ErrorKind::BadSubgroup, "N is not a normal subgroup");
  if (field.is_finite() && n.size() % field.characteristic() == 0)
    throw Error(ErrorKind::CharDividesOrder, "char " + std::to_string(field.characteristic()) + " divides |N|");
  // Cosets tN, each represented by its smallest element; basis e_N t.
  const std::size_t order = g.order();
  std::vector<std::size_t> coset_of(order, order), reps;
  for (std::size_t t = 0; t < order; ++t) {
    if (coset_of[t] != order) continue;
    for (auto x : n) coset_of[g.mul(t, x)] = reps.size();
    reps.push_back(t);
  }
  const std::size_t d = reps.size();
  std::vector<Vec> table;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < d; ++s) {
    labels.push_back(reps[s] == g.identity() ? "e_N" : "e_N" + g.names()[reps[s]]);
    for (std::size_t t = 0; t < d; ++t) table.push_back(unit_vec(field, d, coset_of[g.mul(reps[s], reps[t])]));
  }
  Algebra a(field, d, std::move(table), unit_vec(field, d, coset_of[g.identity()]), std::move(labels));
  // p_x . (e_N t) = (1/|N|) e_N t if x lies in tN, else 0.
  Scalar inv = field.from_int(static_cast<long long>(n.size())).inverse();
  std::vector<Vec> act;
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t t = 0; t < d; ++t) act.push_back(coset_of[x] == t ? scale(inv, unit_vec(field, d, t)) : zero_vec(field, d));
  return PartialAction(dual_group_algebra(field, g), std::move(a), std::move(act));
}

Subspace invariant_subalgebra(const PartialAction& pa) {
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < pa.hdim(); ++i) {
    Matrix t = pa.act_operator(i);
    Matrix r = pa.alg().right_mult(pa.act_unit(i));
    for (std::size_t j = 0; j < pa.adim(); ++j)
      for (std::size_t k = 0; k < pa.adim(); ++k) t(j, k) -= r(j, k);
    ops.push_back(std::move(t));
  }
  return common_kernel(pa.field(), pa.adim(), ops);
}

Subspace colon_ideal(const PartialAction& pa, const Subspace& i) {
  if (!is_ideal(pa.alg(), i)) throw Error(ErrorKind::NotAnIdeal, "colon ideal of " + i.to_string());
  Subspace out = i;
  for (std::size_t k = 0; k < pa.hdim() && !out.is_zero(); ++k)
    out = intersect_spaces(out, preimage(pa.act_operator(k), i));
  return out;
}

bool is_h_stable(const PartialAction& pa, const Subspace& i) {
  if (i.ambient() != pa.adim()) throw Error(ErrorKind::AmbientMismatch, "H-stability: ambient vs dim A");
  auto basis = i.basis_vectors();
  for (std::size_t k = 0; k < pa.hdim(); ++k)
    for (const auto& x : basis)
      if (!i.contains(pa.act_on(k, x))) return false;
  return true;
}

std::vector<Matrix> h_stable_ideal_operators(const PartialAction& pa) {
  std::vector<Matrix> ops;
  for (std::size_t b = 0; b < pa.adim(); ++b) {
    ops.push_back(pa.alg().left_mult_basis(b));
    ops.push_back(pa.alg().right_mult_basis(b));
  }
  for (std::size_t k = 0; k < pa.hdim(); ++k) ops.push_back(pa.act_operator(k));
  return ops;
}

Subspace h_stable_ideal_closure(const PartialAction& pa, std::span<const Vec> gens) {
  return invariant_closure(h_stable_ideal_operators(pa), Subspace::span(pa.field(), pa.adim(), gens));
}

QuotientAction quotient_action(const PartialAction& pa, const Subspace& i) {
  if (!is_h_stable(pa, i)) throw Error(ErrorKind::NotHStable, i.to_string());
  QuotientAlgebra q = quotient_algebra(pa.alg(), i);
  std::vector<Vec> act;
  for (std::size_t k = 0; k < pa.hdim(); ++k)
    for (auto c : q.lift) act.push_back(q.project(pa.act_basis(k, c)));
  PartialAction qa(pa.hopf(), q.algebra, std::move(act));
  return QuotientAction{std::move(qa), std::move(q)};
}

PartialCoaction action_to_coaction(const PartialAction& pa) {
  const std::size_t m = pa.hdim(), n = pa.adim();
  PartialCoaction pc{pa.alg(), dual_hopf(pa.hopf()), {}};
  for (std::size_t j = 0; j < n; ++j) {
    Vec r = zero_vec(pa.field(), n * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < n; ++k) r[k * m + i] = pa.act_basis(i, j)[k];
    pc.rho.push_back(std::move(r));
  }
  return pc;
}

namespace {

Vec rho_of(const PartialCoaction& pc, std::span<const Scalar> x) {
  Vec out = zero_vec(pc.alg.field(), pc.alg.dim() * pc.hopf.dim());
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!x[j].is_zero()) axpy(out, x[j], pc.rho[j]);
  return out;
}

/// (x (x) 1) rho(1)
Vec twisted_unit(const PartialCoaction& pc, std::span<const Scalar> x) {
  const std::size_t n = pc.alg.dim(), m = pc.hopf.dim();
  const Vec r1 = rho_of(pc, pc.alg.unit());
  Vec out = zero_vec(pc.alg.field(), n * m);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      const Scalar& c = r1[u * m + v];
      if (c.is_zero()) continue;
      Vec xa = pc.alg.multiply(x, pc.alg.basis_vector(u));
      for (std::size_t k = 0; k < n; ++k)
        if (!xa[k].is_zero()) out[k * m + v] += c * xa[k];
    }
  return out;
}

}  // namespace

CheckReport check_partial_coaction(const PartialCoaction& pc) {
  CheckReport r;
  const auto& a = pc.alg;
  const auto& k = pc.hopf;
  const std::size_t n = a.dim(), m = k.dim();
  const Field f = a.field();
  r.subject = "partial coaction (dim A " + std::to_string(n) + ", dim H " + std::to_string(m) + ")";
  if (pc.rho.size() != n) {
    r.fail("shape", {pc.rho.size()});
    return r;
  }
  Algebra ak = tensor_product(a, k.alg());
  const Vec r1 = rho_of(pc, a.unit());
  for (std::size_t j = 0; j < n; ++j) {
    // PC1: sum x_0 eps(x_1) = x
    Vec x = a.zero();
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t i = 0; i < m; ++i) x[u] += pc.rho[j][u * m + i] * k.counit()[i];
    ++r.checks;
    if (x != a.basis_vector(j)) r.fail("PC1", {j});

    // PC2 on basis pairs.
    for (std::size_t l = 0; l < n; ++l) {
      ++r.checks;
      if (rho_of(pc, a.product(j, l)) != ak.multiply(pc.rho[j], pc.rho[l])) r.fail("PC2", {j, l});
    }

    // PC3: (rho (x) id) rho(x) = (rho(1) (x) 1)(id (x) Delta) rho(x), as n*m*m tensors.
    Vec lhs = zero_vec(f, n * m * m), delta = zero_vec(f, n * m * m);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t i = 0; i < m; ++i) {
        const Scalar& c = pc.rho[j][u * m + i];
        if (c.is_zero()) continue;
        for (std::size_t u2 = 0; u2 < n; ++u2)
          for (std::size_t i2 = 0; i2 < m; ++i2) {
            const Scalar& d = pc.rho[u][u2 * m + i2];
            if (!d.is_zero()) lhs[(u2 * m + i2) * m + i] += c * d;
          }
        for (const auto& t : k.coproduct_terms(i)) delta[(u * m + t.p) * m + t.q] += c * t.c;
      }
    Vec rhs = zero_vec(f, n * m * m);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < m; ++v) {
        const Scalar& c = r1[u * m + v];
        if (c.is_zero()) continue;
        for (std::size_t u2 = 0; u2 < n; ++u2)
          for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q) {
              const Scalar& d = delta[(u2 * m + p) * m + q];
              if (d.is_zero()) continue;
              const Vec& au = a.product(u, u2);
              const Vec& kp = k.alg().product(v, p);
              for (std::size_t s = 0; s < n; ++s) {
                if (au[s].is_zero()) continue;
                for (std::size_t t = 0; t < m; ++t)
                  if (!kp[t].is_zero()) rhs[(s * m + t) * m + q] += c * d * au[s] * kp[t];
              }
            }
      }
    ++r.checks;
    if (lhs != rhs) r.fail("PC3", {j});
  }
  return r;
}

Subspace coinvariant_subalgebra(const PartialCoaction& pc) {
  const std::size_t n = pc.alg.dim(), m = pc.hopf.dim();
  Matrix op(pc.alg.field(), n, n * m);
  for (std::size_t j = 0; j < n; ++j) {
    Vec d = sub(pc.rho[j], twisted_unit(pc, pc.alg.basis_vector(j)));
    for (std::size_t c = 0; c < n * m; ++c) op(j, c) = d[c];
  }
  std::vector<Matrix> ops{op};
  return common_kernel(pc.alg.field(), n, ops);
}

std::vector<Vec> coaction_to_action_tensor(const PartialCoaction& pc) {
  const std::size_t n = pc.alg.dim(), m = pc.hopf.dim();
  std::vector<Vec> act;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = pc.alg.zero();
      for (std::size_t k = 0; k < n; ++k) v[k] = pc.rho[j][k * m + i];
      act.push_back(std::move(v));
    }
  return act;
}

}  // namespace psl
