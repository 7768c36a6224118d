#include "psl/hopf.hpp"

#include <algorithm>
#include <array>

namespace psl {

GroupTable GroupTable::from_cayley(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names) {
  const std::size_t n = table.size();
  auto bad = [](const std::string& why) { return Error(ErrorKind::InvalidGroupTable, why); };
  if (n == 0) throw bad("empty table");
  for (const auto& row : table) {
    if (row.size() != n) throw bad("table is not square");
    for (auto x : row)
      if (x >= n) throw bad("entry out of range");
  }
  GroupTable g;
  g.table_ = std::move(table);
  const auto& t = g.table_;
  std::size_t id = n;
  for (std::size_t e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = t[e][a] == a && t[a][e] == a;
    if (ok) id = e;
  }
  if (id == n) throw bad("no identity element");
  g.identity_ = id;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          throw bad("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
  g.inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (t[a][b] == id && t[b][a] == id) g.inverse_[a] = b;
    if (g.inverse_[a] == n) throw bad("element " + std::to_string(a) + " has no inverse");
  }
  if (names.empty())
    for (std::size_t a = 0; a < n; ++a) names.push_back(a == id ? "1" : "x" + std::to_string(a));
  if (names.size() != n) throw bad("name count");
  g.names_ = std::move(names);
  return g;
}

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidGroupTable, "cyclic group of order 0");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return from_cayley(std::move(t), std::move(names));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t n = a.order(), m = b.order();
  std::vector<std::vector<std::size_t>> t(n * m, std::vector<std::size_t>(n * m));
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      names.push_back("(" + a.names()[x] + "," + b.names()[y] + ")");
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < m; ++v) t[x * m + y][u * m + v] = a.mul(x, u) * m + b.mul(y, v);
    }
  return from_cayley(std::move(t), std::move(names));
}

GroupTable GroupTable::symmetric3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < 6; ++a) {
    names.push_back(std::string("[") + char('0' + perms[a][0]) + char('0' + perms[a][1]) + char('0' + perms[a][2]) + "]");
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> c{};
      for (std::size_t x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return from_cayley(std::move(t), std::move(names));
}

bool GroupTable::is_subgroup(const std::vector<std::size_t>& elems) const {
  if (elems.empty()) return false;
  auto in = [&](std::size_t x) { return std::find(elems.begin(), elems.end(), x) != elems.end(); };
  for (auto x : elems) {
    if (x >= order()) return false;
    if (!in(inverse(x))) return false;
    for (auto y : elems)
      if (!in(mul(x, y))) return false;
  }
  return true;
}

bool GroupTable::is_normal_subgroup(const std::vector<std::size_t>& elems) const {
  if (!is_subgroup(elems)) return false;
  auto in = [&](std::size_t x) { return std::find(elems.begin(), elems.end(), x) != elems.end(); };
  for (std::size_t g = 0; g < order(); ++g)
    for (auto n : elems)
      if (!in(mul(mul(g, n), inverse(g)))) return false;
  return true;
}

HopfAlgebra::HopfAlgebra(Algebra alg, std::vector<Vec> comul, Vec counit, Matrix antipode)
    : alg_(std::move(alg)), comul_(std::move(comul)), counit_(std::move(counit)), antipode_(std::move(antipode)) {
  const std::size_t m = alg_.dim();
  if (!alg_.has_unit()) throw Error(ErrorKind::MissingUnit, "Hopf algebra needs a unital algebra");
  if (comul_.size() != m) throw Error(ErrorKind::DimensionMismatch, "comultiplication needs one entry per basis vector");
  for (const auto& c : comul_)
    if (c.size() != m * m) throw Error(ErrorKind::DimensionMismatch, "comultiplication entry length");
  if (counit_.size() != m) throw Error(ErrorKind::DimensionMismatch, "counit length");
  if (antipode_.rows() != m || antipode_.cols() != m) throw Error(ErrorKind::DimensionMismatch, "antipode shape");
  terms_.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q)
        if (!comul_[i][p * m + q].is_zero()) terms_[i].push_back({p, q, comul_[i][p * m + q]});
}

Scalar HopfAlgebra::counit_of(std::span<const Scalar> x) const {
  Scalar s = field().zero();
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x[i].is_zero()) s += x[i] * counit_[i];
  return s;
}

Vec HopfAlgebra::coproduct(std::span<const Scalar> x) const {
  Vec out = zero_vec(field(), dim() * dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x[i].is_zero()) axpy(out, x[i], comul_[i]);
  return out;
}

bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
  return a.alg_ == b.alg_ && a.comul_ == b.comul_ && a.counit_ == b.counit_ && a.antipode_ == b.antipode_;
}

namespace {

/// Product in H (x) H of two length m*m tensors.
Vec tensor_multiply(const Algebra& a, const Vec& x, const Vec& y) {
  const std::size_t m = a.dim();
  Vec out = zero_vec(a.field(), m * m);
  for (std::size_t p1 = 0; p1 < m; ++p1)
    for (std::size_t q1 = 0; q1 < m; ++q1) {
      const Scalar& c1 = x[p1 * m + q1];
      if (c1.is_zero()) continue;
      for (std::size_t p2 = 0; p2 < m; ++p2)
        for (std::size_t q2 = 0; q2 < m; ++q2) {
          const Scalar& c2 = y[p2 * m + q2];
          if (c2.is_zero()) continue;
          Scalar c = c1 * c2;
          for (std::size_t k = 0; k < m; ++k) {
            const Scalar& u = a.coeff(p1, p2, k);
            if (u.is_zero()) continue;
            for (std::size_t l = 0; l < m; ++l) {
              const Scalar& v = a.coeff(q1, q2, l);
              if (!v.is_zero()) out[k * m + l] += c * u * v;
            }
          }
        }
    }
  return out;
}

}  // namespace

CheckReport check_hopf(const HopfAlgebra& h) {
  CheckReport r;
  const std::size_t m = h.dim();
  const Field f = h.field();
  r.subject = "Hopf algebra (dim " + std::to_string(m) + " over " + f.name() + ")";
  r.merge(check_algebra(h.alg()), "algebra/");
  const Algebra& a = h.alg();

  for (std::size_t i = 0; i < m; ++i) {
    // Coassociativity as m^3 tensors.
    Vec left = zero_vec(f, m * m * m), right = zero_vec(f, m * m * m);
    for (const auto& t : h.coproduct_terms(i)) {
      for (const auto& u : h.coproduct_terms(t.p)) left[(u.p * m + u.q) * m + t.q] += t.c * u.c;
      for (const auto& u : h.coproduct_terms(t.q)) right[(t.p * m + u.p) * m + u.q] += t.c * u.c;
    }
    ++r.checks;
    if (left != right) r.fail("coassoc", {i});

    Vec cl = zero_vec(f, m), cr = zero_vec(f, m);
    for (const auto& t : h.coproduct_terms(i)) {
      cl[t.q] += h.counit()[t.p] * t.c;
      cr[t.p] += t.c * h.counit()[t.q];
    }
    ++r.checks;
    if (cl != a.basis_vector(i)) r.fail("counit-left", {i});
    ++r.checks;
    if (cr != a.basis_vector(i)) r.fail("counit-right", {i});

    Vec s1 = zero_vec(f, m), s2 = zero_vec(f, m);
    for (const auto& t : h.coproduct_terms(i)) {
      axpy(s1, t.c, a.multiply(h.antipode().col_vec(t.p), a.basis_vector(t.q)));
      axpy(s2, t.c, a.multiply(a.basis_vector(t.p), h.antipode().col_vec(t.q)));
    }
    Vec expect = scale(h.counit()[i], a.unit());
    ++r.checks;
    if (s1 != expect) r.fail("antipode-left", {i}, to_string(s1) + " != " + to_string(expect));
    ++r.checks;
    if (s2 != expect) r.fail("antipode-right", {i}, to_string(s2) + " != " + to_string(expect));
  }

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ++r.checks;
      if (h.coproduct(a.product(i, j)) != tensor_multiply(a, h.comul(i), h.comul(j)))
        r.fail("comul-multiplicative", {i, j});
      ++r.checks;
      if (h.counit_of(a.product(i, j)) != h.counit()[i] * h.counit()[j]) r.fail("counit-multiplicative", {i, j});
    }
  Vec one_one = zero_vec(f, m * m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) one_one[p * m + q] = a.unit()[p] * a.unit()[q];
  ++r.checks;
  if (h.coproduct(a.unit()) != one_one) r.fail("comul-unital", {});
  ++r.checks;
  if (!h.counit_of(a.unit()).is_one()) r.fail("counit-unital", {});
  return r;
}

HopfAlgebra group_algebra(Field field, const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<Vec> table;
  table.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table.push_back(unit_vec(field, n, g.mul(a, b)));
  Algebra alg(field, n, std::move(table), unit_vec(field, n, g.identity()), g.names());
  std::vector<Vec> comul;
  Matrix s(field, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    comul.push_back(unit_vec(field, n * n, a * n + a));
    s(g.inverse(a), a) = field.one();
  }
  return HopfAlgebra(std::move(alg), std::move(comul), Vec(n, field.one()), std::move(s));
}

HopfAlgebra dual_group_algebra(Field field, const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<Vec> table(n * n, zero_vec(field, n));
  for (std::size_t a = 0; a < n; ++a) table[a * n + a][a] = field.one();
  std::vector<std::string> labels;
  for (const auto& name : g.names()) labels.push_back("p_" + name);
  Algebra alg(field, n, std::move(table), Vec(n, field.one()), std::move(labels));
  std::vector<Vec> comul(n, zero_vec(field, n * n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) comul[g.mul(u, v)][u * n + v] = field.one();
  Matrix s(field, n, n);
  for (std::size_t a = 0; a < n; ++a) s(g.inverse(a), a) = field.one();
  return HopfAlgebra(std::move(alg), std::move(comul), unit_vec(field, n, g.identity()), std::move(s));
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  const std::size_t m = h.dim();
  const Field f = h.field();
  // (p_i p_j)(e_k) = (p_i (x) p_j)(Delta e_k); Delta*(p_k) = sum c[i][j][k] p_i (x) p_j.
  std::vector<Vec> table(m * m, zero_vec(f, m));
  for (std::size_t k = 0; k < m; ++k)
    for (const auto& t : h.coproduct_terms(k)) table[t.p * m + t.q][k] = t.c;
  std::vector<Vec> comul(m, zero_vec(f, m * m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) comul[k][i * m + j] = h.alg().coeff(i, j, k);
  std::vector<std::string> labels;
  for (const auto& l : h.alg().labels()) labels.push_back(l + "*");
  Algebra alg(f, m, std::move(table), h.counit(), std::move(labels));
  return HopfAlgebra(std::move(alg), std::move(comul), h.alg().unit(), h.antipode().transpose());
}

HopfAlgebra sweedler_h4(Field field) {
  if (field.characteristic() == 2) throw Error(ErrorKind::BadCharacteristic, "Sweedler's algebra needs char != 2");
  const Scalar one = field.one(), neg = -field.one();
  // Basis 0 = 1, 1 = g, 2 = x, 3 = gx.
  auto e = [&](std::size_t i, const Scalar& c) {
    Vec v = zero_vec(field, 4);
    v[i] = c;
    return v;
  };
  const Vec z = zero_vec(field, 4);
  std::vector<Vec> table = {
      e(0, one), e(1, one), e(2, one), e(3, one),   // 1 * _
      e(1, one), e(0, one), e(3, one), e(2, one),   // g * _
      e(2, one), e(3, neg), z,         z,           // x * _
      e(3, one), e(2, neg), z,         z,           // gx * _
  };
  Algebra alg(field, 4, std::move(table), e(0, one), {"1", "g", "x", "gx"});
  std::vector<Vec> comul(4, zero_vec(field, 16));
  comul[0][0 * 4 + 0] = one;
  comul[1][1 * 4 + 1] = one;
  comul[2][2 * 4 + 0] = one;  // x (x) 1
  comul[2][1 * 4 + 2] = one;  // g (x) x
  comul[3][3 * 4 + 1] = one;  // gx (x) g
  comul[3][0 * 4 + 3] = one;  // 1 (x) gx
  Vec counit{one, one, field.zero(), field.zero()};
  Matrix s(field, 4, 4);
  s(0, 0) = one;
  s(1, 1) = one;
  s(3, 2) = neg;  // S(x) = -gx
  s(2, 3) = one;  // S(gx) = x
  return HopfAlgebra(std::move(alg), std::move(comul), std::move(counit), std::move(s));
}

Subspace left_integrals(const HopfAlgebra& h) {
  const std::size_t m = h.dim();
  const Field f = h.field();
  // Rows (i, k): sum_j lambda_j c[i][j][k] - eps(e_i) lambda_k = 0.
  Matrix sys(f, m * m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < m; ++j) sys(i * m + k, j) = h.alg().coeff(i, j, k);
      sys(i * m + k, k) -= h.counit()[i];
    }
  return kernel(sys);
}

bool is_semisimple(const HopfAlgebra& h) {
  Subspace ints = left_integrals(h);
  if (ints.is_zero()) throw Error(ErrorKind::AxiomViolation, "no nonzero left integral; not a Hopf algebra");
  return !h.counit_of(ints.basis_vector(0)).is_zero();
}

}  // namespace psl
