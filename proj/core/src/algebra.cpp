#include "psl/algebra.hpp"

#include "psl/lattice.hpp"

namespace psl {

Algebra::Algebra(Field field, std::size_t dim, std::vector<Vec> table, std::optional<Vec> unit,
                 std::vector<std::string> labels)
    : field_(field), dim_(dim), table_(std::move(table)), unit_(std::move(unit)), labels_(std::move(labels)) {
  if (table_.size() != dim_ * dim_)
    throw Error(ErrorKind::DimensionMismatch, "structure table needs " + std::to_string(dim_ * dim_) + " products");
  for (const auto& v : table_) {
    if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "structure vector length");
    for (const auto& s : v)
      if (s.field() != field_) throw Error(ErrorKind::FieldMismatch, "structure constant field");
  }
  if (unit_) {
    if (unit_->size() != dim_) throw Error(ErrorKind::DimensionMismatch, "unit length");
    for (const auto& s : *unit_)
      if (s.field() != field_) throw Error(ErrorKind::FieldMismatch, "unit field");
  }
  if (labels_.empty())
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
  if (labels_.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "label count");
  sparse_.resize(table_.size());
  for (std::size_t t = 0; t < table_.size(); ++t)
    for (std::size_t k = 0; k < dim_; ++k)
      if (!table_[t][k].is_zero()) sparse_[t].push_back({k, table_[t][k]});
}

const Vec& Algebra::unit() const {
  if (!unit_) throw Error(ErrorKind::MissingUnit, "algebra has no unit");
  return *unit_;
}

Vec Algebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw Error(ErrorKind::DimensionMismatch, "multiply: operand length vs dim " + std::to_string(dim_));
  Vec out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& t : sparse_[i * dim_ + j]) out[t.k] += c * t.c;
    }
  }
  return out;
}

Matrix Algebra::left_mult(std::span<const Scalar> x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec r = multiply(x, basis_vector(j));
    for (std::size_t k = 0; k < dim_; ++k) m(j, k) = r[k];
  }
  return m;
}

Matrix Algebra::right_mult(std::span<const Scalar> x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec r = multiply(basis_vector(j), x);
    for (std::size_t k = 0; k < dim_; ++k) m(j, k) = r[k];
  }
  return m;
}

Matrix Algebra::left_mult_basis(std::size_t i) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (const auto& t : sparse_[i * dim_ + j]) m(j, t.k) = t.c;
  return m;
}

Matrix Algebra::right_mult_basis(std::size_t i) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (const auto& t : sparse_[j * dim_ + i]) m(j, t.k) = t.c;
  return m;
}

bool operator==(const Algebra& a, const Algebra& b) {
  return a.field_ == b.field_ && a.dim_ == b.dim_ && a.table_ == b.table_ && a.unit_ == b.unit_;
}

CheckReport check_algebra(const Algebra& a) {
  CheckReport r;
  r.subject = "algebra (dim " + std::to_string(a.dim()) + " over " + a.field().name() + ")";
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        ++r.checks;
        Vec lhs = a.multiply(ij, a.basis_vector(k));
        Vec rhs = a.multiply(a.basis_vector(i), a.product(j, k));
        if (lhs != rhs) r.fail("assoc", {i, j, k}, to_string(lhs) + " != " + to_string(rhs));
      }
    }
  if (a.has_unit()) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec e = a.basis_vector(i);
      ++r.checks;
      if (a.multiply(a.unit(), e) != e) r.fail("left-unit", {i});
      ++r.checks;
      if (a.multiply(e, a.unit()) != e) r.fail("right-unit", {i});
    }
  }
  return r;
}

CheckReport check_algebra_map(const AlgebraMap& f) {
  CheckReport r;
  r.subject = "algebra map";
  const auto& s = f.source;
  const auto& t = f.target;
  if (f.matrix.rows() != t.dim() || f.matrix.cols() != s.dim()) {
    r.fail("shape", {f.matrix.rows(), f.matrix.cols()});
    return r;
  }
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      ++r.checks;
      Vec lhs = f.apply(s.product(i, j));
      Vec rhs = t.multiply(f.matrix.col_vec(i), f.matrix.col_vec(j));
      if (lhs != rhs) r.fail("multiplicative", {i, j});
    }
  if (s.has_unit() && t.has_unit()) {
    ++r.checks;
    if (f.apply(s.unit()) != t.unit()) r.fail("unital", {});
  }
  return r;
}

Subspace ideal_closure(const Algebra& a, std::span<const Vec> gens, IdealSide side) {
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (side != IdealSide::Right) ops.push_back(a.left_mult_basis(i));
    if (side != IdealSide::Left) ops.push_back(a.right_mult_basis(i));
  }
  return invariant_closure(ops, Subspace::span(a.field(), a.dim(), gens));
}

bool is_ideal(const Algebra& a, const Subspace& i, IdealSide side) {
  if (i.ambient() != a.dim()) throw Error(ErrorKind::AmbientMismatch, "ideal ambient vs algebra dim");
  for (const auto& x : i.basis_vectors())
    for (std::size_t b = 0; b < a.dim(); ++b) {
      Vec e = a.basis_vector(b);
      if (side != IdealSide::Right && !i.contains(a.multiply(e, x))) return false;
      if (side != IdealSide::Left && !i.contains(a.multiply(x, e))) return false;
    }
  return true;
}

Subspace product_space(const Algebra& a, const Subspace& i, const Subspace& j) {
  std::vector<Vec> prods;
  auto ib = i.basis_vectors();
  auto jb = j.basis_vectors();
  for (const auto& x : ib)
    for (const auto& y : jb) prods.push_back(a.multiply(x, y));
  return Subspace::span(a.field(), a.dim(), prods);
}

Vec QuotientAlgebra::project(std::span<const Scalar> x) const {
  Vec r = ideal.reduce(x);
  Vec q;
  q.reserve(lift.size());
  for (auto c : lift) q.push_back(r[c]);
  return q;
}

Vec QuotientAlgebra::lift_vector(std::span<const Scalar> q) const {
  Vec x = zero_vec(ideal.field(), ideal.ambient());
  for (std::size_t t = 0; t < lift.size(); ++t) x[lift[t]] = q[t];
  return x;
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& i) {
  if (!is_ideal(a, i)) throw Error(ErrorKind::NotAnIdeal, "quotient by " + i.to_string());
  QuotientAlgebra q;
  q.ideal = i;
  q.lift = i.complement_columns();
  const std::size_t m = q.lift.size();
  std::vector<Vec> table;
  table.reserve(m * m);
  for (auto ci : q.lift)
    for (auto cj : q.lift) table.push_back(q.project(a.product(ci, cj)));
  std::optional<Vec> unit;
  if (a.has_unit()) unit = q.project(a.unit());
  std::vector<std::string> labels;
  for (auto c : q.lift) labels.push_back(a.labels()[c] + "+I");
  q.algebra = Algebra(a.field(), m, std::move(table), std::move(unit), std::move(labels));
  Matrix proj(a.field(), m, a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Vec img = q.project(a.basis_vector(j));
    for (std::size_t t = 0; t < m; ++t) proj(t, j) = img[t];
  }
  q.projection = AlgebraMap{a, q.algebra, std::move(proj)};
  return q;
}

std::optional<std::size_t> nilpotency_index(const Algebra& a, const Subspace& i) {
  if (i.is_zero()) return 1;
  Subspace power = i;
  for (std::size_t m = 2; m <= a.dim() + 1; ++m) {
    Subspace next = product_space(a, power, i);
    if (next.is_zero()) return m;
    if (next == power) return std::nullopt;
    power = std::move(next);
  }
  return std::nullopt;
}

bool is_nilpotent_subspace(const Algebra& a, const Subspace& i) { return nilpotency_index(a, i).has_value(); }

Algebra direct_product(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) throw Error(ErrorKind::FieldMismatch, "direct product");
  Field f = a.field();
  const std::size_t n = a.dim(), m = b.dim(), d = n + m;
  std::vector<Vec> table(d * d, zero_vec(f, d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) table[i * d + j][k] = a.coeff(i, j, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) table[(n + i) * d + n + j][n + k] = b.coeff(i, j, k);
  std::optional<Vec> unit;
  if (a.has_unit() && b.has_unit()) {
    Vec u = a.unit();
    u.insert(u.end(), b.unit().begin(), b.unit().end());
    unit = std::move(u);
  }
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : b.labels()) labels.push_back("(0," + l + ")");
  return Algebra(f, d, std::move(table), std::move(unit), std::move(labels));
}

Algebra tensor_product(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) throw Error(ErrorKind::FieldMismatch, "tensor product");
  Field f = a.field();
  const std::size_t n = a.dim(), m = b.dim(), d = n * m;
  std::vector<Vec> table(d * d, zero_vec(f, d));
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < m; ++j1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < m; ++j2) {
          Vec& out = table[(i1 * m + j1) * d + i2 * m + j2];
          for (std::size_t k1 = 0; k1 < n; ++k1) {
            const Scalar& x = a.coeff(i1, i2, k1);
            if (x.is_zero()) continue;
            for (std::size_t k2 = 0; k2 < m; ++k2) {
              const Scalar& y = b.coeff(j1, j2, k2);
              if (!y.is_zero()) out[k1 * m + k2] = x * y;
            }
          }
        }
  std::optional<Vec> unit;
  if (a.has_unit() && b.has_unit()) {
    Vec u = zero_vec(f, d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) u[i * m + j] = a.unit()[i] * b.unit()[j];
    unit = std::move(u);
  }
  std::vector<std::string> labels;
  for (const auto& x : a.labels())
    for (const auto& y : b.labels()) labels.push_back(x + "#" + y);
  return Algebra(f, d, std::move(table), std::move(unit), std::move(labels));
}

Subspace subalgebra_closure(const Algebra& a, std::span<const Vec> gens) {
  std::vector<Vec> rows(gens.begin(), gens.end());
  rows.push_back(a.unit());
  Subspace s = Subspace::span(a.field(), a.dim(), rows);
  while (true) {
    std::vector<Vec> more = s.basis_vectors();
    auto basis = s.basis_vectors();
    for (const auto& x : basis)
      for (const auto& y : basis) more.push_back(a.multiply(x, y));
    Subspace next = Subspace::span(a.field(), a.dim(), more);
    if (next == s) return s;
    s = std::move(next);
  }
}

Algebra restrict_to_subalgebra(const Algebra& a, const Subspace& s) {
  const std::size_t m = s.dim();
  auto basis = s.basis_vectors();
  std::vector<Vec> table;
  table.reserve(m * m);
  for (const auto& x : basis)
    for (const auto& y : basis) table.push_back(s.coordinates(a.multiply(x, y)));
  std::optional<Vec> unit;
  if (a.has_unit() && s.contains(a.unit())) unit = s.coordinates(a.unit());
  return Algebra(a.field(), m, std::move(table), std::move(unit));
}

Algebra unitization(const Algebra& a) {
  Field f = a.field();
  const std::size_t n = a.dim(), d = n + 1;
  std::vector<Vec> table(d * d, zero_vec(f, d));
  for (std::size_t i = 0; i < d; ++i) {
    table[i][i] = f.one();
    table[i * d][i] = f.one();
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) table[(i + 1) * d + j + 1][k + 1] = a.coeff(i, j, k);
  std::vector<std::string> labels{"1"};
  labels.insert(labels.end(), a.labels().begin(), a.labels().end());
  return Algebra(f, d, std::move(table), unit_vec(f, d, 0), std::move(labels));
}

Algebra base_field_algebra(Field field) { return product_of_fields(field, 1); }

Algebra product_of_fields(Field field, std::size_t n) {
  std::vector<Vec> table(n * n, zero_vec(field, n));
  for (std::size_t i = 0; i < n; ++i) table[i * n + i][i] = field.one();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  if (n == 1) labels = {"1"};
  return Algebra(field, n, std::move(table), Vec(n, field.one()), std::move(labels));
}

Algebra upper_triangular(Field field, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) idx.emplace_back(i, j);
  const std::size_t d = idx.size();
  auto index_of = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < d; ++t)
      if (idx[t] == std::pair{i, j}) return t;
    return d;
  };
  std::vector<Vec> table(d * d, zero_vec(field, d));
  Vec unit = zero_vec(field, d);
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < d; ++s) {
    auto [i, j] = idx[s];
    if (i == j) unit[s] = field.one();
    labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    for (std::size_t t = 0; t < d; ++t) {
      auto [k, l] = idx[t];
      if (j == k) table[s * d + t][index_of(i, l)] = field.one();
    }
  }
  return Algebra(field, d, std::move(table), std::move(unit), std::move(labels));
}

Algebra matrix_algebra(Field field, std::size_t n) {
  const std::size_t d = n * n;
  std::vector<Vec> table(d * d, zero_vec(field, d));
  Vec unit = zero_vec(field, d);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      if (i == j) unit[i * n + j] = field.one();
      for (std::size_t l = 0; l < n; ++l) table[(i * n + j) * d + j * n + l][i * n + l] = field.one();
    }
  return Algebra(field, d, std::move(table), std::move(unit), std::move(labels));
}

Algebra truncated_polynomial(Field field, std::size_t n) {
  std::vector<Vec> table(n * n, zero_vec(field, n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) table[i * n + j][i + j] = field.one();
  }
  return Algebra(field, n, std::move(table), unit_vec(field, n, 0), std::move(labels));
}

}  // namespace psl
