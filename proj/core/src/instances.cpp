#include "psl/instances.hpp"

#include <algorithm>

#include "psl/error.hpp"

namespace psl {

PartialAction dual_c2_example() { return dual_group_idempotent(Field::rationals(), GroupTable::cyclic(2), {0, 1}); }

PartialAction trivial_c2_on_q3() {
  Field q = Field::rationals();
  return trivial_action(group_algebra(q, GroupTable::cyclic(2)), product_of_fields(q, 3));
}

PartialAction trivial_f2c2_on_f2() {
  Field f2 = Field::prime(2);
  return trivial_action(group_algebra(f2, GroupTable::cyclic(2)), base_field_algebra(f2));
}

PartialAction sweedler_trivial(Field field) { return trivial_action(sweedler_h4(field), base_field_algebra(field)); }

std::vector<NamedAction> fixtures() {
  return {{"dual-c2", dual_c2_example()},
          {"c4-triple", c4_triple(Field::rationals())},
          {"trivial-c2-q3", trivial_c2_on_q3()},
          {"trivial-f2c2", trivial_f2c2_on_f2()}};
}

std::vector<std::vector<std::size_t>> normal_subgroups(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> g.identity() & 1)) continue;
    std::vector<std::size_t> elems;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) elems.push_back(i);
    if (n % elems.size() == 0 && g.is_normal_subgroup(elems)) out.push_back(std::move(elems));
  }
  return out;
}

std::optional<Scalar> root_of_unity(Field field, std::size_t n) {
  if (!field.is_finite() || n == 0 || (field.characteristic() - 1) % n != 0) return std::nullopt;
  for (std::uint32_t c = 1; c < field.characteristic(); ++c) {
    Scalar w = field.element(c), pw = field.one();
    std::size_t order = 0;
    do {
      pw *= w;
      ++order;
    } while (!pw.is_one());
    if (order == n) return w;
  }
  return std::nullopt;
}

namespace {

struct NamedGroup {
  std::string name;
  GroupTable group;
  bool cyclic;
};

std::vector<NamedGroup> small_groups(std::size_t max_order) {
  std::vector<NamedGroup> all{{"C2", GroupTable::cyclic(2), true},
                              {"C3", GroupTable::cyclic(3), true},
                              {"C4", GroupTable::cyclic(4), true},
                              {"C2xC2", GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2)), false},
                              {"C5", GroupTable::cyclic(5), true},
                              {"C6", GroupTable::cyclic(6), true},
                              {"S3", GroupTable::symmetric3(), false}};
  std::erase_if(all, [&](const NamedGroup& g) { return g.group.order() > max_order; });
  return all;
}

struct NamedAlgebra {
  std::string name;
  Algebra alg;
};

std::vector<NamedAlgebra> small_algebras(Field f, std::size_t max_dim) {
  std::vector<NamedAlgebra> all{{"k", base_field_algebra(f)},
                                {"k[t]/t^2", truncated_polynomial(f, 2)},
                                {"k[t]/t^3", truncated_polynomial(f, 3)},
                                {"k^2", product_of_fields(f, 2)},
                                {"k^3", product_of_fields(f, 3)},
                                {"T2(k)", upper_triangular(f, 2)},
                                {"M2(k)", matrix_algebra(f, 2)},
                                {"kC2", group_algebra(f, GroupTable::cyclic(2)).alg()}};
  std::erase_if(all, [&](const NamedAlgebra& a) { return a.alg.dim() > max_dim; });
  return all;
}

template <class T>
T pick(const std::vector<T>& v, std::mt19937_64& rng) {
  if (v.empty()) throw Error(ErrorKind::InvalidArgument, "random instance: empty candidate list");
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

/// Nonempty random subset of {0..n-1} as a bitmask.
std::vector<bool> random_subset(std::size_t n, std::size_t max_size, std::mt19937_64& rng) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, std::min(n, max_size)))(rng);
  std::vector<bool> in(n, false);
  for (std::size_t i = 0; i < k; ++i) in[idx[i]] = true;
  return in;
}

/// kG acting on k^X (x) B' with X = G (left translation) plus fixed points,
/// restricted to e = sum_{y in Y} delta_y (x) 1.
NamedAction gset_restriction(Field f, std::mt19937_64& rng, const RandomOptions& opts) {
  const auto g = pick(small_groups(opts.max_hdim), rng);
  const auto b = pick(small_algebras(f, std::max<std::size_t>(1, opts.max_adim / 2)), rng);
  const std::size_t n = g.group.order();
  const std::size_t fixed = std::uniform_int_distribution<std::size_t>(0, 1)(rng);
  const std::size_t xs = n + fixed, db = b.alg.dim();
  Algebra big = tensor_product(product_of_fields(f, xs), b.alg);
  HopfAlgebra h = group_algebra(f, g.group);
  std::vector<Vec> act;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t x = 0; x < xs; ++x)
      for (std::size_t k = 0; k < db; ++k) {
        std::size_t y = x < n ? g.group.mul(s, x) : x;
        act.push_back(unit_vec(f, xs * db, y * db + k));
      }
  PartialAction global(h, big, std::move(act));
  auto in = random_subset(xs, std::max<std::size_t>(1, opts.max_adim / db), rng);
  Vec e = zero_vec(f, xs * db);
  std::string ys;
  for (std::size_t x = 0; x < xs; ++x)
    if (in[x]) {
      for (std::size_t k = 0; k < db; ++k) e[x * db + k] = b.alg.unit()[k];
      ys += (ys.empty() ? "" : ",") + std::to_string(x);
    }
  return {"k" + g.name + " on k^X(x)" + b.name + " restricted to {" + ys + "}", induce_from_ideal(global, e)};
}

/// (kG)* acting on e kG for a central idempotent e.
NamedAction dual_group_restriction(Field f, std::mt19937_64& rng, const RandomOptions& opts) {
  auto groups = small_groups(std::min(opts.max_hdim, opts.max_adim));
  const auto g = pick(groups, rng);
  const std::size_t n = g.group.order();
  PartialAction global = dual_group_regular_action(f, g.group);
  auto w = g.cyclic ? root_of_unity(f, n) : std::nullopt;
  if (w && std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
    // Sum of character idempotents e_j = (1/n) sum_k w^{-jk} g^k.
    auto in = random_subset(n, n, rng);
    Vec e = zero_vec(f, n);
    const Scalar inv_n = f.from_int(static_cast<long long>(n)).inverse();
    const Scalar w_inv = w->inverse();
    std::string js;
    for (std::size_t j = 0; j < n; ++j) {
      if (!in[j]) continue;
      js += (js.empty() ? "" : ",") + std::to_string(j);
      Scalar step = f.one();
      for (std::size_t t = 0; t < j; ++t) step *= w_inv;
      Scalar c = inv_n;
      for (std::size_t k = 0; k < n; ++k) {
        e[k] += c;
        c *= step;
      }
    }
    return {"(k" + g.name + ")* on e k" + g.name + ", characters {" + js + "}", induce_from_ideal(global, e)};
  }
  std::vector<std::vector<std::size_t>> ns;
  for (auto& sub : normal_subgroups(g.group))
    if (sub.size() % f.characteristic() != 0) ns.push_back(std::move(sub));
  const auto sub = pick(ns, rng);
  Vec e = zero_vec(f, n);
  const Scalar inv = f.from_int(static_cast<long long>(sub.size())).inverse();
  for (auto x : sub) e[x] = inv;
  return {"(k" + g.name + ")* on e_N k" + g.name + ", |N| = " + std::to_string(sub.size()),
          induce_from_ideal(global, e)};
}

NamedAction random_trivial(Field f, std::mt19937_64& rng, const RandomOptions& opts) {
  const auto a = pick(small_algebras(f, opts.max_adim), rng);
  const auto g = pick(small_groups(opts.max_hdim), rng);
  const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
  if (kind == 2 && f.characteristic() != 2 && opts.max_hdim >= 4)
    return {"H4 trivial on " + a.name, trivial_action(sweedler_h4(f), a.alg)};
  if (kind == 1) return {"(k" + g.name + ")* trivial on " + a.name, trivial_action(dual_group_algebra(f, g.group), a.alg)};
  return {"k" + g.name + " trivial on " + a.name, trivial_action(group_algebra(f, g.group), a.alg)};
}

}  // namespace

NamedAction random_partial_action(Field field, std::mt19937_64& rng, const RandomOptions& opts) {
  if (!field.is_finite()) throw Error(ErrorKind::FieldNotFinite, "random instances are generated over F_p");
  NamedAction out;
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: out = gset_restriction(field, rng, opts); break;
    case 1: out = dual_group_restriction(field, rng, opts); break;
    default: out = random_trivial(field, rng, opts); break;
  }
  if (std::bernoulli_distribution(opts.quotient_probability)(rng)) {
    Vec x = random_vector(field, out.action.adim(), rng);
    std::vector<Vec> gens{x};
    Subspace i = h_stable_ideal_closure(out.action, gens);
    if (!i.is_zero() && !i.is_full()) {
      out.name += " modulo an H-stable ideal of dim " + std::to_string(i.dim());
      out.action = quotient_action(out.action, i).action;
    }
  }
  return out;
}

}  // namespace psl
