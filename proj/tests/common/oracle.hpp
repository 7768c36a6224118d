#pragma once

// Brute-force reference computations used as independent oracles. They only
// touch raw structure constants and never call the library's elimination,
// closure or radical code.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "psl/psl.hpp"

namespace oracle {

using psl::Algebra;
using psl::Field;
using psl::Scalar;
using psl::Vec;

using Key = std::vector<std::uint32_t>;

inline Key key(const Vec& v) {
  Key k;
  for (const auto& s : v) k.push_back(s.residue_value());
  return k;
}

inline Vec from_key(Field f, const Key& k) {
  Vec v;
  for (auto x : k) v.push_back(f.element(x));
  return v;
}

/// Every vector of F_p^n.
inline std::vector<Vec> all_vectors(Field f, std::size_t n) {
  const std::uint32_t p = f.characteristic();
  std::vector<Vec> out;
  Key k(n, 0);
  while (true) {
    out.push_back(from_key(f, k));
    std::size_t i = 0;
    while (i < n && ++k[i] == p) k[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// All linear combinations of the rows.
inline std::set<Key> span_set(Field f, std::size_t n, const std::vector<Vec>& rows) {
  std::set<Key> out{key(psl::zero_vec(f, n))};
  for (const auto& r : rows) {
    std::set<Key> next;
    for (const auto& k : out) {
      Vec v = from_key(f, k);
      for (std::uint32_t c = 0; c < f.characteristic(); ++c) {
        Vec w = v;
        for (std::size_t i = 0; i < n; ++i) w[i] += f.element(c) * r[i];
        next.insert(key(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::set<Key> subspace_set(const psl::Subspace& s) {
  return span_set(s.field(), s.ambient(), s.basis_vectors());
}

inline std::set<Key> filter(Field f, std::size_t n, const std::function<bool(const Vec&)>& pred) {
  std::set<Key> out;
  for (const auto& v : all_vectors(f, n))
    if (pred(v)) out.insert(key(v));
  return out;
}

/// x y straight from the structure constants.
inline Vec mult(const Algebra& a, const Vec& x, const Vec& y) {
  Vec out = psl::zero_vec(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Scalar c = x[i] * y[j];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < a.dim(); ++k) out[k] += c * a.coeff(i, j, k);
    }
  return out;
}

inline bool is_zero_vec(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

inline bool nilpotent(const Algebra& a, const Vec& x) {
  Vec p = x;
  for (std::size_t k = 0; k <= a.dim(); ++k) {
    if (is_zero_vec(p)) return true;
    p = mult(a, p, x);
  }
  return is_zero_vec(p);
}

/// J(A) over a small finite field as {x : a x is nilpotent for every a}.
inline std::set<Key> radical_set(const Algebra& a) {
  auto all = all_vectors(a.field(), a.dim());
  std::set<Key> out;
  for (const auto& x : all) {
    bool ok = true;
    for (const auto& y : all)
      if (!nilpotent(a, mult(a, y, x))) {
        ok = false;
        break;
      }
    if (ok) out.insert(key(x));
  }
  return out;
}

/// Rank by plain Gaussian elimination on a copy of the rows.
inline std::size_t rank(std::vector<Vec> rows) {
  std::size_t r = 0;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    Scalar inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

/// Gram matrix of (x, y) -> trace(L_{xy}) on the basis.
inline std::vector<Vec> trace_gram(const Algebra& a) {
  const std::size_t n = a.dim();
  Vec t;
  for (std::size_t k = 0; k < n; ++k) {
    Scalar s = a.field().zero();
    for (std::size_t l = 0; l < n; ++l) s += a.coeff(k, l, l);
    t.push_back(s);
  }
  std::vector<Vec> g(n, psl::zero_vec(a.field(), n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) g[i][j] += a.coeff(i, j, k) * t[k];
  return g;
}

/// The smallest subspace containing v and closed under the operators, by
/// repeated application (row convention).
inline std::set<Key> closure_set(Field f, const Vec& v, const std::vector<psl::Matrix>& ops) {
  const std::size_t n = v.size();
  std::vector<Vec> gens{v};
  std::set<Key> span = span_set(f, n, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& k : std::set<Key>(span)) {
      Vec x = from_key(f, k);
      for (const auto& op : ops) {
        Vec y = psl::zero_vec(f, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) y[j] += x[i] * op(i, j);
        if (!span.contains(key(y))) {
          gens.push_back(y);
          span = span_set(f, n, gens);
          grew = true;
        }
      }
    }
  }
  return span;
}

/// (a_j # h_i)(a_k # h_l) = sum a_j (h_i1 . a_k) # h_i2 h_l, expanded from the
/// raw action, coproduct and product tensors. Entry (j*m+i)*d + k*m+l.
inline std::vector<Vec> smash_table(const psl::PartialAction& pa) {
  const auto& a = pa.alg();
  const auto& h = pa.hopf();
  const std::size_t n = pa.adim(), m = pa.hdim(), d = n * m;
  std::vector<Vec> table(d * d, psl::zero_vec(pa.field(), d));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          Vec& out = table[(j * m + i) * d + k * m + l];
          for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q) {
              const Scalar& c = h.comul_coeff(i, p, q);
              if (c.is_zero()) continue;
              const Vec& hk = pa.act_basis(p, k);
              for (std::size_t u = 0; u < n; ++u) {
                Scalar left = a.field().zero();
                for (std::size_t s = 0; s < n; ++s) left += hk[s] * a.coeff(j, s, u);
                if (left.is_zero()) continue;
                for (std::size_t v = 0; v < m; ++v) out[u * m + v] += c * left * h.alg().coeff(q, l, v);
              }
            }
        }
  return table;
}

inline Vec table_mult(const std::vector<Vec>& table, const Vec& x, const Vec& y) {
  const std::size_t d = x.size();
  Vec out = psl::zero_vec(x.empty() ? Field() : x[0].field(), d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      Scalar w = x[r] * y[c];
      if (w.is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k) out[k] += w * table[r * d + c][k];
    }
  return out;
}

/// 1_A # 1_H in A (x) H coordinates.
inline Vec smash_unit(const psl::PartialAction& pa) {
  const std::size_t n = pa.adim(), m = pa.hdim();
  Vec u = psl::zero_vec(pa.field(), n * m);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) u[j * m + i] = pa.alg().unit()[j] * pa.hopf().alg().unit()[i];
  return u;
}

/// All (a_j # h_i)(1 # 1), in A (x) H coordinates.
inline std::vector<Vec> smash_projections(const psl::PartialAction& pa) {
  auto table = smash_table(pa);
  Vec u = smash_unit(pa);
  const std::size_t d = u.size();
  std::vector<Vec> out;
  for (std::size_t t = 0; t < d; ++t) out.push_back(table_mult(table, psl::unit_vec(pa.field(), d, t), u));
  return out;
}

}  // namespace oracle
