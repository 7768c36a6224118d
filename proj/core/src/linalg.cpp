#include "psl/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace psl {

namespace {

void require_len(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": lengths " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

Vec zero_vec(Field field, std::size_t n) { return Vec(n, field.zero()); }

Vec unit_vec(Field field, std::size_t n, std::size_t i) {
  Vec v = zero_vec(field, n);
  v.at(i) = field.one();
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_len(a.size(), b.size(), "add");
  Vec r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_len(a.size(), b.size(), "sub");
  Vec r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, std::span<const Scalar> v) {
  Vec r(v.begin(), v.end());
  for (auto& x : r) x *= c;
  return r;
}

void axpy(Vec& y, const Scalar& c, std::span<const Scalar> x) {
  require_len(y.size(), x.size(), "axpy");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

std::string to_string(std::span<const Scalar> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, std::span<const Vec> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_len(rows[r].size(), cols, "from_rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != field)
        throw Error(ErrorKind::FieldMismatch, "row entry over " + rows[r][c].field().name());
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Vec Matrix::col_vec(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vec> Matrix::row_vectors() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return psl::is_zero(data_); }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(ErrorKind::FieldMismatch, "matrix product");
  require_len(a.cols(), b.rows(), "multiply");
  Matrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vec apply(const Matrix& m, std::span<const Scalar> v) {
  require_len(m.cols(), v.size(), "apply");
  Vec out = zero_vec(m.field(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!v[c].is_zero() && !m(r, c).is_zero()) out[r] += m(r, c) * v[c];
  return out;
}

Vec row_times(std::span<const Scalar> v, const Matrix& m) {
  require_len(m.rows(), v.size(), "row_times");
  Vec out = zero_vec(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!v[r].is_zero()) axpy(out, v[r], m.row(r));
  return out;
}

Matrix then(const Matrix& f, const Matrix& g) { return multiply(f, g); }

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  const Field field = m.field();
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c).field() != field) throw Error(ErrorKind::FieldMismatch, "rref entries");

  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(lead, c));
    Scalar inv = a(lead, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c)
      if (!a(lead, c).is_zero()) a(lead, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(lead, c).is_zero()) a(r, c) -= f * a(lead, c);
    }
    res.pivots.push_back(col);
    ++lead;
  }
  res.rank = lead;
  return res;
}

Subspace Subspace::zero(Field field, std::size_t ambient) { return Subspace(Matrix(field, 0, ambient), {}); }

Subspace Subspace::full(Field field, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix::identity(field, ambient), std::move(piv));
}

Subspace Subspace::span(Field field, std::size_t ambient, std::span<const Vec> vectors) {
  return row_space(Matrix::from_rows(field, ambient, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult r = rref(m);
  Matrix basis(m.field(), r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) basis(i, c) = r.reduced(i, c);
  return Subspace(std::move(basis), std::move(r.pivots));
}

Vec Subspace::reduce(std::span<const Scalar> x) const {
  require_len(x.size(), ambient(), "reduce");
  Vec r(x.begin(), x.end());
  for (const auto& s : r)
    if (s.field() != field()) throw Error(ErrorKind::FieldMismatch, "vector vs subspace");
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(r, -c, basis_.row(i));
  }
  return r;
}

bool Subspace::contains(std::span<const Scalar> x) const { return psl::is_zero(reduce(x)); }

Vec Subspace::coordinates(std::span<const Scalar> x) const {
  if (!contains(x)) throw Error(ErrorKind::InvalidArgument, "vector " + psl::to_string(x) + " not in subspace");
  Vec c;
  c.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) c.push_back(x[pivots_[i]]);
  return c;
}

std::vector<std::size_t> Subspace::complement_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  if (ambient() != other.ambient()) throw Error(ErrorKind::AmbientMismatch, "is_subspace_of");
  if (field() != other.field()) throw Error(ErrorKind::FieldMismatch, "is_subspace_of");
  for (std::size_t i = 0; i < dim(); ++i)
    if (!other.contains(basis_.row(i))) return false;
  return true;
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < dim(); ++i) os << (i ? ", " : "") << psl::to_string(basis_.row(i));
  os << "} (dim " << dim() << " in " << ambient() << ")";
  return os.str();
}

namespace {

void require_compatible(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient())
    throw Error(ErrorKind::AmbientMismatch,
                "ambient " + std::to_string(u.ambient()) + " vs " + std::to_string(v.ambient()));
  if (u.field() != v.field()) throw Error(ErrorKind::FieldMismatch, u.field().name() + " vs " + v.field().name());
}

}  // namespace

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.field(), m.cols());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), basis);
}

Subspace sum_spaces(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  std::vector<Vec> rows = u.basis_vectors();
  for (auto& r : v.basis_vectors()) rows.push_back(std::move(r));
  return Subspace::span(u.field(), u.ambient(), rows);
}

Subspace intersect_spaces(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  if (u.is_zero() || v.is_zero()) return Subspace::zero(u.field(), u.ambient());
  // Relations sum_i a_i u_i = sum_j b_j v_j: kernel of the n x (du+dv) matrix [U^T | -V^T].
  const std::size_t n = u.ambient(), du = u.dim(), dv = v.dim();
  Matrix rel(u.field(), n, du + dv);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < du; ++i) rel(c, i) = u.basis()(i, c);
    for (std::size_t j = 0; j < dv; ++j) rel(c, du + j) = -v.basis()(j, c);
  }
  Subspace k = kernel(rel);
  std::vector<Vec> out;
  for (std::size_t t = 0; t < k.dim(); ++t) {
    Vec x = zero_vec(u.field(), n);
    for (std::size_t i = 0; i < du; ++i) axpy(x, k.basis()(t, i), u.basis().row(i));
    out.push_back(std::move(x));
  }
  return Subspace::span(u.field(), n, out);
}

bool contains(const Subspace& u, std::span<const Scalar> x) { return u.contains(x); }

Subspace orthogonal(const Subspace& u) { return kernel(u.basis()); }

Subspace image(const Matrix& op, const Subspace& u) {
  if (op.rows() != u.ambient()) throw Error(ErrorKind::DimensionMismatch, "image: operator/subspace");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < u.dim(); ++i) rows.push_back(row_times(u.basis().row(i), op));
  return Subspace::span(op.field(), op.cols(), rows);
}

Subspace preimage(const Matrix& op, const Subspace& u) {
  if (op.cols() != u.ambient()) throw Error(ErrorKind::DimensionMismatch, "preimage: operator/subspace");
  Subspace perp = orthogonal(u);
  // x in preimage  <=>  (x * op) . y = 0 for every y in perp  <=>  x^T (op * Y) = 0.
  Matrix y = perp.basis().transpose();
  Matrix m = multiply(op, y);
  return kernel(m.transpose());
}

Subspace common_kernel(Field field, std::size_t n, std::span<const Matrix> ops) {
  std::size_t total = 0;
  for (const auto& op : ops) {
    if (op.rows() != n) throw Error(ErrorKind::DimensionMismatch, "common_kernel: operator rows");
    total += op.cols();
  }
  // x * op = 0  <=>  op^T x = 0; stack every transpose.
  Matrix sys(field, total, n);
  std::size_t r0 = 0;
  for (const auto& op : ops) {
    for (std::size_t c = 0; c < op.cols(); ++c)
      for (std::size_t i = 0; i < n; ++i) sys(r0 + c, i) = op(i, c);
    r0 += op.cols();
  }
  return kernel(sys);
}

bool solve_in_span(const Matrix& rows, std::span<const Scalar> target, Vec& coefficients) {
  require_len(rows.cols(), target.size(), "solve_in_span");
  const std::size_t k = rows.rows(), n = rows.cols();
  // Augmented system rows^T c = target.
  Matrix aug(rows.field(), n, k + 1);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < k; ++i) aug(c, i) = rows(i, c);
    aug(c, k) = target[c];
  }
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == k) return false;
  coefficients = zero_vec(rows.field(), k);
  for (std::size_t i = 0; i < r.rank; ++i) coefficients[r.pivots[i]] = r.reduced(i, k);
  return true;
}

bool canonical_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t c = 0; c < a.ambient(); ++c) {
      const Scalar& x = a.basis()(i, c);
      const Scalar& y = b.basis()(i, c);
      if (x != y) return canonical_less(x, y);
    }
  return false;
}

}  // namespace psl
