#include "psl/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace psl {

namespace {

using Row = std::vector<std::uint32_t>;

/// Echelon basis over F_p kept in reduced form, used for the hot loops of the
/// exhaustive searches where Scalar overhead dominates.
class FpSpace {
 public:
  FpSpace(std::uint32_t p, std::size_t n) : p_(p), n_(n) {}

  std::size_t dim() const { return rows_.size(); }

  /// Reduces x in place against the basis; returns true if x becomes zero.
  bool reduce(Row& x) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::uint32_t c = x[piv_[i]];
      if (!c) continue;
      std::uint64_t f = p_ - c;
      const Row& r = rows_[i];
      for (std::size_t k = piv_[i]; k < n_; ++k)
        if (r[k]) x[k] = static_cast<std::uint32_t>((x[k] + f * r[k]) % p_);
    }
    return std::all_of(x.begin(), x.end(), [](std::uint32_t v) { return v == 0; });
  }

  /// Adds x if it is independent of the current basis.
  bool insert(Row x) {
    if (reduce(x)) return false;
    std::size_t pc = 0;
    while (x[pc] == 0) ++pc;
    std::uint64_t inv = inverse(x[pc]);
    for (auto& v : x) v = static_cast<std::uint32_t>(v * inv % p_);
    for (auto& r : rows_) {
      std::uint32_t c = r[pc];
      if (!c) continue;
      std::uint64_t f = p_ - c;
      for (std::size_t k = pc; k < n_; ++k)
        if (x[k]) r[k] = static_cast<std::uint32_t>((r[k] + f * x[k]) % p_);
    }
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), pc) - piv_.begin();
    piv_.insert(piv_.begin() + pos, pc);
    rows_.insert(rows_.begin() + pos, std::move(x));
    return true;
  }

  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::uint64_t inverse(std::uint64_t a) const {
    std::uint64_t r = 1, e = p_ - 2, b = a % p_;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return r;
  }

  std::uint32_t p_;
  std::size_t n_;
  std::vector<Row> rows_;
  std::vector<std::size_t> piv_;
};

struct FpOps {
  std::uint32_t p;
  std::size_t n;
  std::vector<std::vector<Row>> ops;  // ops[o][i] = image of e_i

  Row apply(std::size_t o, const Row& v) const {
    Row out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!v[i]) continue;
      const Row& img = ops[o][i];
      std::uint64_t c = v[i];
      for (std::size_t k = 0; k < n; ++k)
        if (img[k]) out[k] = static_cast<std::uint32_t>((out[k] + c * img[k]) % p);
    }
    return out;
  }
};

FpOps to_fp(Field field, std::size_t n, const std::vector<Matrix>& ops) {
  FpOps f{field.characteristic(), n, {}};
  for (const auto& m : ops) {
    if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "operator is not square of size n");
    if (m.field() != field) throw Error(ErrorKind::FieldMismatch, "operator field");
    std::vector<Row> rows(n, Row(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) rows[i][k] = m(i, k).residue_value();
    f.ops.push_back(std::move(rows));
  }
  return f;
}

/// Closure of the span of `seed` under the operators, by breadth-first search.
FpSpace fp_closure(const FpOps& ops, const std::vector<Row>& seed, std::size_t stop_at) {
  FpSpace s(ops.p, ops.n);
  std::deque<Row> queue;
  for (const auto& v : seed)
    if (s.insert(v)) queue.push_back(v);
  while (!queue.empty() && s.dim() < stop_at) {
    Row v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t o = 0; o < ops.ops.size(); ++o) {
      Row w = ops.apply(o, v);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return s;
}

/// Calls f(v) for one representative (first nonzero entry 1) of every line of F_p^n.
template <class F>
bool for_each_projective_point(std::uint32_t p, std::size_t n, F&& f) {
  for (std::size_t lead = 0; lead < n; ++lead) {
    Row v(n, 0);
    v[lead] = 1;
    while (true) {
      if (!f(v)) return false;
      // Advance the entries after `lead` as a base-p counter.
      bool carried_out = true;
      for (std::size_t k = n; k > lead + 1;) {
        --k;
        if (++v[k] < p) {
          carried_out = false;
          break;
        }
        v[k] = 0;
      }
      if (carried_out) break;
    }
  }
  return true;
}

Subspace to_subspace(Field field, std::size_t n, const FpSpace& s) {
  std::vector<Vec> rows;
  for (const auto& r : s.rows()) {
    Vec v;
    v.reserve(n);
    for (auto x : r) v.push_back(Scalar::residue(x, field));
    rows.push_back(std::move(v));
  }
  return Subspace::span(field, n, rows);
}

struct KeyLess {
  bool operator()(const std::vector<Row>& a, const std::vector<Row>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace

void require_enumerable(Field field, std::size_t n, const Caps& caps) {
  if (!field.is_finite()) throw Error(ErrorKind::FieldNotFinite, "exhaustive search needs a finite field");
  if (n > caps.dim_cap || field.characteristic() > caps.field_cap)
    throw Error(ErrorKind::DimensionTooLarge, "search over " + field.name() + "^" + std::to_string(n) +
                                                  " exceeds caps (dim <= " + std::to_string(caps.dim_cap) +
                                                  ", field <= " + std::to_string(caps.field_cap) + ")");
}

Subspace invariant_closure(const std::vector<Matrix>& ops, const Subspace& seed) {
  Field field = seed.field();
  const std::size_t n = seed.ambient();
  std::vector<Vec> basis = seed.basis_vectors();
  Subspace cur = seed;
  std::deque<Vec> queue(basis.begin(), basis.end());
  while (!queue.empty() && !cur.is_full()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& op : ops) {
      Vec w = row_times(v, op);
      if (cur.contains(w)) continue;
      basis.push_back(w);
      cur = Subspace::span(field, n, basis);
      queue.push_back(std::move(w));
    }
  }
  return cur;
}

std::vector<Subspace> cyclic_invariant_subspaces(Field field, std::size_t n, const std::vector<Matrix>& ops,
                                                 const Caps& caps) {
  require_enumerable(field, n, caps);
  FpOps f = to_fp(field, n, ops);
  std::set<std::vector<Row>, KeyLess> seen;
  for_each_projective_point(f.p, n, [&](const Row& v) {
    seen.insert(fp_closure(f, {v}, n).rows());
    if (seen.size() > caps.max_subspaces)
      throw Error(ErrorKind::DimensionTooLarge, "more than " + std::to_string(caps.max_subspaces) + " subspaces");
    return true;
  });
  std::vector<Subspace> out;
  for (const auto& rows : seen) {
    FpSpace s(f.p, n);
    for (const auto& r : rows) s.insert(r);
    out.push_back(to_subspace(field, n, s));
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return canonical_less(a, b); });
  return out;
}

std::vector<Subspace> invariant_subspaces(Field field, std::size_t n, const std::vector<Matrix>& ops,
                                          const Caps& caps) {
  require_enumerable(field, n, caps);
  FpOps f = to_fp(field, n, ops);
  std::set<std::vector<Row>, KeyLess> cyclic;
  for_each_projective_point(f.p, n, [&](const Row& v) {
    cyclic.insert(fp_closure(f, {v}, n).rows());
    if (cyclic.size() > caps.max_subspaces)
      throw Error(ErrorKind::DimensionTooLarge, "more than " + std::to_string(caps.max_subspaces) + " subspaces");
    return true;
  });

  // Every invariant subspace is a sum of cyclic ones; close under sums with
  // the cyclic generators until nothing new appears.
  std::set<std::vector<Row>, KeyLess> all(cyclic.begin(), cyclic.end());
  all.insert(std::vector<Row>{});
  std::vector<std::vector<Row>> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<std::vector<Row>> next;
    for (const auto& a : frontier)
      for (const auto& c : cyclic) {
        FpSpace s(f.p, n);
        for (const auto& r : a) s.insert(r);
        bool grew = false;
        for (const auto& r : c) grew = s.insert(r) || grew;
        if (!grew) continue;
        if (all.insert(s.rows()).second) {
          next.push_back(s.rows());
          if (all.size() > caps.max_subspaces)
            throw Error(ErrorKind::DimensionTooLarge,
                        "more than " + std::to_string(caps.max_subspaces) + " subspaces");
        }
      }
    frontier = std::move(next);
  }

  std::vector<Subspace> out;
  for (const auto& rows : all) {
    FpSpace s(f.p, n);
    for (const auto& r : rows) s.insert(r);
    out.push_back(to_subspace(field, n, s));
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return canonical_less(a, b); });
  return out;
}

std::optional<Vec> proper_cyclic_witness(Field field, std::size_t n, const std::vector<Matrix>& ops,
                                         const Caps& caps) {
  require_enumerable(field, n, caps);
  FpOps f = to_fp(field, n, ops);
  std::optional<Vec> witness;
  for_each_projective_point(f.p, n, [&](const Row& v) {
    if (fp_closure(f, {v}, n).dim() == n) return true;
    Vec w;
    for (auto x : v) w.push_back(Scalar::residue(x, field));
    witness = std::move(w);
    return false;
  });
  return witness;
}

}  // namespace psl
