#include "psl/pmod.hpp"

#include <algorithm>

namespace psl {

namespace {

void add_scaled(Matrix& acc, const Scalar& c, const Matrix& m) {
  if (c.is_zero()) return;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t k = 0; k < m.cols(); ++k)
      if (!m(r, k).is_zero()) acc(r, k) += c * m(r, k);
}

Matrix combine(Field f, std::size_t dim, const std::vector<Matrix>& ops, std::span<const Scalar> x) {
  if (x.size() != ops.size()) throw Error(ErrorKind::DimensionMismatch, "coefficient count vs operator count");
  Matrix acc(f, dim, dim);
  for (std::size_t b = 0; b < ops.size(); ++b) add_scaled(acc, x[b], ops[b]);
  return acc;
}

std::vector<Matrix> restrict_ops(const std::vector<Matrix>& ops, const Subspace& u) {
  std::vector<Matrix> out;
  auto basis = u.basis_vectors();
  for (const auto& op : ops) {
    Matrix r(u.field(), u.dim(), u.dim());
    for (std::size_t t = 0; t < basis.size(); ++t) {
      Vec img = row_times(basis[t], op);
      if (!u.contains(img)) throw Error(ErrorKind::NotAModule, "subspace is not invariant");
      Vec c = u.coordinates(img);
      for (std::size_t k = 0; k < u.dim(); ++k) r(t, k) = c[k];
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Matrix> quotient_ops(const std::vector<Matrix>& ops, const Subspace& u) {
  for (const auto& op : ops)
    if (!image(op, u).is_subspace_of(u)) throw Error(ErrorKind::NotAModule, "subspace is not invariant");
  const auto lift = u.complement_columns();
  const std::size_t n = u.ambient();
  std::vector<Matrix> out;
  for (const auto& op : ops) {
    Matrix q(u.field(), lift.size(), lift.size());
    for (std::size_t t = 0; t < lift.size(); ++t) {
      Vec r = u.reduce(row_times(unit_vec(u.field(), n, lift[t]), op));
      for (std::size_t k = 0; k < lift.size(); ++k) q(t, k) = r[lift[k]];
    }
    out.push_back(std::move(q));
  }
  return out;
}

Subspace annihilator_of(Field f, std::size_t dim, const std::vector<Matrix>& ops) {
  Matrix sys(f, dim * dim, ops.size());
  for (std::size_t b = 0; b < ops.size(); ++b)
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) sys(r * dim + c, b) = ops[b](r, c);
  return kernel(sys);
}

/// Dimension of the unital algebra generated by the operators inside End(k^d).
std::size_t operator_algebra_dim(Field f, std::size_t d, const std::vector<Matrix>& ops) {
  auto flat = [&](const Matrix& m) {
    Vec v;
    v.reserve(d * d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) v.push_back(m(r, c));
    return v;
  };
  auto unflat = [&](const Vec& v) {
    Matrix m(f, d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m(r, c) = v[r * d + c];
    return m;
  };
  std::vector<Vec> rows{flat(Matrix::identity(f, d))};
  for (const auto& op : ops) rows.push_back(flat(op));
  Subspace s = Subspace::span(f, d * d, rows);
  while (!s.is_full()) {
    std::vector<Vec> more = s.basis_vectors();
    for (const auto& b : s.basis_vectors()) {
      Matrix m = unflat(b);
      for (const auto& op : ops) more.push_back(flat(multiply(m, op)));
    }
    Subspace next = Subspace::span(f, d * d, more);
    if (next == s) break;
    s = std::move(next);
  }
  return s.dim();
}

Irreducibility irreducibility(Field f, std::size_t d, const std::vector<Matrix>& ops, const Caps& caps) {
  if (d == 0) throw Error(ErrorKind::ZeroModule, "irreducibility of the zero module");
  if (d == 1) return Irreducibility::Irreducible;
  for (std::size_t i = 0; i < d; ++i) {
    Vec e = unit_vec(f, d, i);
    std::vector<Vec> seed{e};
    if (!invariant_closure(ops, Subspace::span(f, d, seed)).is_full()) return Irreducibility::Reducible;
  }
  if (operator_algebra_dim(f, d, ops) == d * d) return Irreducibility::Irreducible;
  if (!f.is_finite()) return Irreducibility::Unknown;
  return proper_cyclic_witness(f, d, ops, caps) ? Irreducibility::Reducible : Irreducibility::Irreducible;
}

void require_side(const Module& v, Side side, const char* what) {
  if (v.side != side) throw Error(ErrorKind::NotAModule, std::string(what) + ": wrong module side");
  CheckReport r = check_module(v);
  if (!r.passed()) throw Error(ErrorKind::NotAModule, r.to_text());
}

}  // namespace

Matrix Module::op(std::span<const Scalar> x) const { return combine(alg.field(), dim, ops, x); }

CheckReport check_module(const Module& m) {
  CheckReport r;
  r.subject = std::string(m.side == Side::Right ? "right" : "left") + " module (dim " + std::to_string(m.dim) + ")";
  const auto& a = m.alg;
  if (m.ops.size() != a.dim()) {
    r.fail("shape", {m.ops.size()});
    return r;
  }
  for (const auto& op : m.ops)
    if (op.rows() != m.dim || op.cols() != m.dim) {
      r.fail("shape", {op.rows(), op.cols()});
      return r;
    }
  if (a.has_unit()) {
    ++r.checks;
    if (m.op(a.unit()) != Matrix::identity(a.field(), m.dim)) r.fail("unit", {});
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      ++r.checks;
      Matrix comp = m.side == Side::Right ? multiply(m.ops[i], m.ops[j]) : multiply(m.ops[j], m.ops[i]);
      if (m.op(a.product(i, j)) != comp) r.fail("assoc", {i, j});
    }
  return r;
}

Module regular_module(const Algebra& a, Side side) {
  Module m{side, a, a.dim(), {}};
  for (std::size_t b = 0; b < a.dim(); ++b)
    m.ops.push_back(side == Side::Right ? a.right_mult_basis(b) : a.left_mult_basis(b));
  return m;
}

Module submodule(const Module& m, const Subspace& u) {
  return Module{m.side, m.alg, u.dim(), restrict_ops(m.ops, u)};
}

Module quotient_module(const Module& m, const Subspace& u) {
  return Module{m.side, m.alg, m.dim - u.dim(), quotient_ops(m.ops, u)};
}

Subspace module_annihilator(const Module& m) { return annihilator_of(m.alg.field(), m.dim, m.ops); }

Matrix PartialModule::a_op(std::span<const Scalar> x) const { return combine(pa.field(), dim, a_ops, x); }
Matrix PartialModule::h_op(std::span<const Scalar> h) const { return combine(pa.field(), dim, h_ops, h); }

std::vector<Matrix> PartialModule::all_ops() const {
  std::vector<Matrix> ops = a_ops;
  ops.insert(ops.end(), h_ops.begin(), h_ops.end());
  return ops;
}

CheckReport check_partial_module(const PartialModule& m) {
  CheckReport r;
  const bool right = m.side == Side::Right;
  r.subject = std::string(right ? "right" : "left") + " partial module (dim " + std::to_string(m.dim) + ")";
  if (m.h_ops.size() != m.pa.hdim()) {
    r.fail("shape", {m.h_ops.size()});
    return r;
  }
  for (const auto& op : m.h_ops)
    if (op.rows() != m.dim || op.cols() != m.dim) {
      r.fail("shape", {op.rows(), op.cols()});
      return r;
    }
  CheckReport base = check_module(m.as_a_module());
  r.merge(base, "A-module/");
  if (!base.passed()) return r;

  const auto& h = m.pa.hopf();
  const Field f = m.pa.field();
  const std::size_t hd = m.pa.hdim(), ad = m.pa.adim();
  ++r.checks;
  if (m.h_op(h.alg().unit()) != Matrix::identity(f, m.dim)) r.fail("PM1", {});

  // Unit-action operators a -> (h_p . 1_A) on M.
  std::vector<Matrix> unit_ops;
  for (std::size_t p = 0; p < hd; ++p) unit_ops.push_back(m.a_op(m.pa.act_unit(p)));

  for (std::size_t i = 0; i < hd; ++i) {
    for (std::size_t j = 0; j < ad; ++j) {
      ++r.checks;
      Matrix rhs(f, m.dim, m.dim);
      for (const auto& t : h.coproduct_terms(i)) {
        Matrix act = m.a_op(m.pa.act_basis(t.p, j));
        add_scaled(rhs, t.c, right ? multiply(act, m.h_ops[t.q]) : multiply(m.h_ops[t.q], act));
      }
      Matrix lhs = right ? multiply(m.h_ops[i], m.a_ops[j]) : multiply(m.a_ops[j], m.h_ops[i]);
      if (lhs != rhs) r.fail("PM3", {i, j});
    }
    for (std::size_t l = 0; l < hd; ++l) {
      ++r.checks;
      Matrix rhs(f, m.dim, m.dim);
      for (const auto& t : h.coproduct_terms(i)) {
        Matrix hg = m.h_op(h.alg().product(t.q, l));
        add_scaled(rhs, t.c, right ? multiply(unit_ops[t.p], hg) : multiply(hg, unit_ops[t.p]));
      }
      Matrix lhs = right ? multiply(m.h_ops[i], m.h_ops[l]) : multiply(m.h_ops[l], m.h_ops[i]);
      if (lhs != rhs) r.fail("PM4", {i, l});
    }
  }
  return r;
}

Module to_smash_module(const PartialModule& m, const SmashProduct& sp) {
  const std::size_t hd = m.pa.hdim(), ad = m.pa.adim();
  const Field f = m.pa.field();
  Module out{m.side, sp.carrier, m.dim, {}};
  for (const auto& x : sp.image.basis_vectors()) {
    Matrix op(f, m.dim, m.dim);
    for (std::size_t j = 0; j < ad; ++j)
      for (std::size_t i = 0; i < hd; ++i) {
        const Scalar& c = x[j * hd + i];
        if (c.is_zero()) continue;
        add_scaled(op, c,
                   m.side == Side::Right ? multiply(m.a_ops[j], m.h_ops[i]) : multiply(m.h_ops[i], m.a_ops[j]));
      }
    out.ops.push_back(std::move(op));
  }
  return out;
}

PartialModule from_smash_module(const SmashProduct& sp, const Module& m) {
  if (m.alg.dim() != sp.dim() || m.ops.size() != sp.dim())
    throw Error(ErrorKind::DimensionMismatch, "module is not over the smash carrier");
  const std::size_t hd = sp.pa.hdim(), ad = sp.pa.adim();
  const Field f = sp.pa.field();
  PartialModule pm{m.side, sp.pa, m.dim, {}, {}};
  for (std::size_t j = 0; j < ad; ++j) pm.a_ops.push_back(m.op(sp.include_A.matrix.col_vec(j)));
  for (std::size_t i = 0; i < hd; ++i) {
    Vec x = zero_vec(f, sp.full_dim());
    for (std::size_t j = 0; j < ad; ++j) x[j * hd + i] = sp.pa.alg().unit()[j];
    pm.h_ops.push_back(m.op(sp.to_carrier(sp.project(x))));
  }
  CheckReport r = check_partial_module(pm);
  if (!r.passed()) throw Error(ErrorKind::AxiomViolation, r.to_text());
  return pm;
}

Subspace annihilator(const PartialModule& m) { return annihilator_of(m.pa.field(), m.dim, m.a_ops); }

PartialModule submodule(const PartialModule& m, const Subspace& u) {
  return PartialModule{m.side, m.pa, u.dim(), restrict_ops(m.a_ops, u), restrict_ops(m.h_ops, u)};
}

PartialModule quotient_module(const PartialModule& m, const Subspace& u) {
  return PartialModule{m.side, m.pa, m.dim - u.dim(), quotient_ops(m.a_ops, u), quotient_ops(m.h_ops, u)};
}

PartialModule left_regular_partial_module(const PartialAction& pa) {
  PartialModule m{Side::Left, pa, pa.adim(), {}, {}};
  for (std::size_t b = 0; b < pa.adim(); ++b) m.a_ops.push_back(pa.alg().left_mult_basis(b));
  for (std::size_t i = 0; i < pa.hdim(); ++i) m.h_ops.push_back(pa.act_operator(i));
  return m;
}

std::string_view to_string(Irreducibility r) {
  switch (r) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Unknown: return "unknown";
  }
  return "unknown";
}

Irreducibility is_irreducible(const PartialModule& m, const Caps& caps) {
  return irreducibility(m.pa.field(), m.dim, m.all_ops(), caps);
}

Irreducibility is_irreducible(const Module& m, const Caps& caps) {
  return irreducibility(m.alg.field(), m.dim, m.ops, caps);
}

namespace {

Extension finish_extension(const PartialAction& pa, Side side, const std::vector<Matrix>& a_full,
                           const std::vector<Matrix>& h_full, const std::vector<Vec>& embedded) {
  const Field f = pa.field();
  const std::size_t n = a_full.empty() ? 0 : a_full.front().rows();
  std::vector<Vec> gens;
  for (const auto& op : a_full)
    for (std::size_t r = 0; r < op.rows(); ++r) gens.push_back(op.row_vec(r));
  Subspace w = Subspace::span(f, n, gens);
  Extension ext;
  ext.ambient_span = w;
  ext.module = PartialModule{side, pa, w.dim(), restrict_ops(a_full, w), restrict_ops(h_full, w)};
  ext.embedding = Matrix(f, embedded.size(), w.dim());
  for (std::size_t v = 0; v < embedded.size(); ++v) {
    if (!w.contains(embedded[v])) throw Error(ErrorKind::AxiomViolation, "V does not embed in W");
    Vec c = w.coordinates(embedded[v]);
    for (std::size_t k = 0; k < w.dim(); ++k) ext.embedding(v, k) = c[k];
  }
  CheckReport r = check_partial_module(ext.module);
  if (!r.passed()) throw Error(ErrorKind::AxiomViolation, r.to_text());
  return ext;
}

}  // namespace

Extension extend_right_module(const PartialAction& pa, const Module& v) {
  require_side(v, Side::Right, "extend_right_module");
  if (v.alg.dim() != pa.adim()) throw Error(ErrorKind::NotAModule, "module over a different algebra");
  const auto& h = pa.hopf();
  const Field f = pa.field();
  const std::size_t m = pa.hdim(), dv = v.dim, d = dv * m;

  // (u (x) k) a = sum u (k_1 . a) (x) k_2, index u * m + k.
  auto apply_split = [&](Matrix& out, std::size_t row_u, std::size_t k, const Scalar& coef,
                         const std::vector<Matrix>& first_leg) {
    for (const auto& t : h.coproduct_terms(k)) {
      const Matrix& act = first_leg[t.p];
      for (std::size_t s = 0; s < dv; ++s)
        if (!act(row_u, s).is_zero()) out(row_u * m + k, s * m + t.q) += coef * t.c * act(row_u, s);
    }
  };
  std::vector<Matrix> a_full, h_full;
  for (std::size_t j = 0; j < pa.adim(); ++j) {
    std::vector<Matrix> first;  // u -> u (h_p . a_j)
    for (std::size_t p = 0; p < m; ++p) first.push_back(v.op(pa.act_basis(p, j)));
    Matrix op(f, d, d);
    for (std::size_t u = 0; u < dv; ++u)
      for (std::size_t k = 0; k < m; ++k) apply_split(op, u, k, f.one(), first);
    a_full.push_back(std::move(op));
  }
  std::vector<Matrix> unit_first;  // u -> u (h_p . 1_A)
  for (std::size_t p = 0; p < m; ++p) unit_first.push_back(v.op(pa.act_unit(p)));
  for (std::size_t i = 0; i < m; ++i) {
    // (u (x) k) < h_i = sum u ((k h_i)_1 . 1) (x) (k h_i)_2
    Matrix op(f, d, d);
    for (std::size_t u = 0; u < dv; ++u)
      for (std::size_t k = 0; k < m; ++k) {
        const Vec& kh = h.alg().product(k, i);
        for (std::size_t s = 0; s < m; ++s) {
          if (kh[s].is_zero()) continue;
          for (const auto& t : h.coproduct_terms(s)) {
            const Matrix& act = unit_first[t.p];
            for (std::size_t w = 0; w < dv; ++w)
              if (!act(u, w).is_zero()) op(u * m + k, w * m + t.q) += kh[s] * t.c * act(u, w);
          }
        }
      }
    h_full.push_back(std::move(op));
  }
  std::vector<Vec> embedded;
  for (std::size_t u = 0; u < dv; ++u) {
    Vec x = zero_vec(f, d);
    for (std::size_t k = 0; k < m; ++k) x[u * m + k] = h.alg().unit()[k];
    embedded.push_back(std::move(x));
  }
  return finish_extension(pa, Side::Right, a_full, h_full, embedded);
}

Extension extend_left_module(const PartialAction& pa, const Module& v) {
  require_side(v, Side::Left, "extend_left_module");
  if (v.alg.dim() != pa.adim()) throw Error(ErrorKind::NotAModule, "module over a different algebra");
  const auto& h = pa.hopf();
  const Field f = pa.field();
  const std::size_t m = pa.hdim(), dv = v.dim, d = dv * m;
  HopfAlgebra dual = dual_hopf(h);
  const Algebra& k = dual.alg();

  // Index u * m + l for v_u (x) p_l. rho(y)(v_u (x) p_l) = sum_i (h_i . y) v_u (x) p_i p_l.
  auto rho_op = [&](const std::vector<Matrix>& first) {
    Matrix op(f, d, d);
    for (std::size_t u = 0; u < dv; ++u)
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t i = 0; i < m; ++i) {
          const Vec& pil = k.product(i, l);
          for (std::size_t s = 0; s < dv; ++s) {
            const Scalar& c = first[i](u, s);
            if (c.is_zero()) continue;
            for (std::size_t t = 0; t < m; ++t)
              if (!pil[t].is_zero()) op(u * m + l, s * m + t) += c * pil[t];
          }
        }
    return op;
  };
  std::vector<Matrix> a_full, h_full;
  for (std::size_t j = 0; j < pa.adim(); ++j) {
    std::vector<Matrix> first;
    for (std::size_t i = 0; i < m; ++i) first.push_back(v.op(pa.act_basis(i, j)));
    a_full.push_back(rho_op(first));
  }
  std::vector<Matrix> unit_first;
  for (std::size_t i = 0; i < m; ++i) unit_first.push_back(v.op(pa.act_unit(i)));
  const Matrix rho_one = rho_op(unit_first);
  for (std::size_t i = 0; i < m; ++i) {
    // id (x) (h_i ->): p_l -> sum_a c[a][i][l] p_a, then rho(1_A).
    Matrix hit(f, d, d);
    for (std::size_t u = 0; u < dv; ++u)
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t a = 0; a < m; ++a) {
          const Scalar& c = h.alg().coeff(a, i, l);
          if (!c.is_zero()) hit(u * m + l, u * m + a) = c;
        }
    h_full.push_back(multiply(hit, rho_one));
  }
  Subspace ints = left_integrals(dual);
  if (ints.dim() != 1) throw Error(ErrorKind::AxiomViolation, "left integrals of H* are not one-dimensional");
  Vec lambda = ints.basis_vector(0);
  std::vector<Vec> embedded;
  for (std::size_t u = 0; u < dv; ++u) {
    Vec x = zero_vec(f, d);
    for (std::size_t l = 0; l < m; ++l) x[u * m + l] = lambda[l];
    embedded.push_back(std::move(x));
  }
  return finish_extension(pa, Side::Left, a_full, h_full, embedded);
}

IrreducibleExtension irreducible_extension(const PartialAction& pa, const Module& v, const Caps& caps) {
  if (!pa.field().is_finite()) throw Error(ErrorKind::FieldNotFinite, "irreducible_extension");
  if (is_irreducible(v, caps) != Irreducibility::Irreducible)
    throw Error(ErrorKind::NotAModule, "V is not an irreducible A-module");
  IrreducibleExtension out;
  out.extension = extend_right_module(pa, v);
  const PartialModule& w = out.extension.module;
  const Subspace vsub = Subspace::row_space(out.extension.embedding);
  const Subspace* best = nullptr;
  auto subs = invariant_subspaces(pa.field(), w.dim, w.all_ops(), caps);
  for (const auto& u : subs)
    if (intersect_spaces(u, vsub).is_zero() && (!best || u.dim() > best->dim())) best = &u;
  out.kernel = *best;  // the zero submodule always qualifies
  out.module = quotient_module(w, out.kernel);
  const auto lift = out.kernel.complement_columns();
  out.embedding = Matrix(pa.field(), v.dim, out.module.dim);
  for (std::size_t r = 0; r < v.dim; ++r) {
    Vec red = out.kernel.reduce(out.extension.embedding.row(r));
    for (std::size_t k = 0; k < lift.size(); ++k) out.embedding(r, k) = red[lift[k]];
  }
  if (rref(out.embedding).rank != v.dim) throw Error(ErrorKind::AxiomViolation, "V does not embed in W/U");
  if (out.module.dim > pa.hdim() * v.dim) throw Error(ErrorKind::AxiomViolation, "dim(M) exceeds dim(H) dim(V)");
  if (is_irreducible(out.module, caps) != Irreducibility::Irreducible)
    throw Error(ErrorKind::AxiomViolation, "W/U is not irreducible");
  return out;
}

std::vector<Module> simple_right_modules(const Algebra& a, const Caps& caps) {
  std::vector<Matrix> ops;
  for (std::size_t b = 0; b < a.dim(); ++b) ops.push_back(a.right_mult_basis(b));
  auto ideals = invariant_subspaces(a.field(), a.dim(), ops, caps);
  std::vector<Module> out;
  Module reg = regular_module(a, Side::Right);
  for (const auto& i : ideals) {
    if (i.is_full()) continue;
    bool maximal = std::none_of(ideals.begin(), ideals.end(), [&](const Subspace& j) {
      return !j.is_full() && j.dim() > i.dim() && i.is_subspace_of(j);
    });
    if (maximal) out.push_back(quotient_module(reg, i));
  }
  return out;
}

}  // namespace psl
