#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "psl/psl.hpp"

using namespace psl;

namespace {

const Field kQ = Field::rationals();

PartialModule right_regular(const PartialAction& pa) {
  PartialModule m{Side::Right, pa, pa.adim(), {}, {}};
  for (std::size_t b = 0; b < pa.adim(); ++b) m.a_ops.push_back(pa.alg().right_mult_basis(b));
  for (std::size_t i = 0; i < pa.hdim(); ++i) m.h_ops.push_back(pa.act_operator(i));
  return m;
}

/// A cyclic submodule or the matching quotient of the regular carrier module.
Module random_carrier_module(const SmashProduct& sp, Side side, std::mt19937_64& rng) {
  Module reg = regular_module(sp.carrier, side);
  std::vector<Vec> seed{random_vector(sp.pa.field(), sp.dim(), rng)};
  Subspace u = invariant_closure(reg.ops, Subspace::span(sp.pa.field(), sp.dim(), seed));
  if (u.is_zero() || u.is_full()) return reg;
  return rng() % 2 ? submodule(reg, u) : quotient_module(reg, u);
}

std::vector<PartialAction> finite_instances(std::uint64_t seed, int count, std::uint32_t p0, std::uint32_t p1) {
  std::mt19937_64 rng(seed);
  std::vector<PartialAction> out;
  for (int t = 0; t < count; ++t)
    out.push_back(random_partial_action(Field::prime(t % 2 ? p1 : p0), rng, RandomOptions{3, 3, 0.3}).action);
  return out;
}

/// Exhaustive: every nonzero vector generates the whole space.
bool brute_irreducible(Field f, std::size_t d, const std::vector<Matrix>& ops) {
  const std::size_t total = oracle::all_vectors(f, d).size();
  for (const auto& v : oracle::all_vectors(f, d)) {
    if (oracle::is_zero_vec(v)) continue;
    if (oracle::closure_set(f, v, ops).size() != total) return false;
  }
  return true;
}

bool same_ops(const std::vector<Matrix>& a, const std::vector<Matrix>& b) { return a == b; }

}  // namespace

TEST_CASE("modules over algebras") {
  Algebra t2 = upper_triangular(kQ, 2);
  for (Side s : {Side::Left, Side::Right}) {
    Module reg = regular_module(t2, s);
    CHECK(check_module(reg).passed());
    CHECK(module_annihilator(reg).is_zero());
  }
  Module bad = regular_module(t2, Side::Right);
  bad.side = Side::Left;
  CHECK_FALSE(check_module(bad).passed());

  Field f2 = Field::prime(2);
  Module r = regular_module(product_of_fields(f2, 2), Side::Right);
  CHECK(is_irreducible(r) == Irreducibility::Reducible);
  CHECK(is_irreducible(regular_module(base_field_algebra(kQ), Side::Right)) == Irreducibility::Irreducible);
  CHECK_THROWS_AS(is_irreducible(Module{Side::Right, base_field_algebra(kQ), 0, {Matrix(kQ, 0, 0)}}), Error);

  // Q(i) = Q[t]/(t^2 + 1) on itself: irreducible, but the operators span only a
  // 2-dimensional commutative algebra, so Q mode cannot decide.
  std::vector<Vec> table{{kQ.one(), kQ.zero()}, {kQ.zero(), kQ.one()}, {kQ.zero(), kQ.one()}, {kQ.from_int(-1), kQ.zero()}};
  Algebra qi(kQ, 2, table, Vec{kQ.one(), kQ.zero()});
  REQUIRE(check_algebra(qi).passed());
  CHECK(is_irreducible(regular_module(qi, Side::Right)) == Irreducibility::Unknown);
  CHECK(is_irreducible(regular_module(matrix_algebra(kQ, 2), Side::Right)) == Irreducibility::Reducible);
  Module col = quotient_module(regular_module(matrix_algebra(kQ, 2), Side::Left),
                               Subspace::span(kQ, 4, std::vector<Vec>{unit_vec(kQ, 4, 1), unit_vec(kQ, 4, 3)}));
  CHECK(check_module(col).passed());
  CHECK(is_irreducible(col) == Irreducibility::Irreducible);

  auto simples = simple_right_modules(product_of_fields(Field::prime(5), 3));
  CHECK(simples.size() == 3);
  for (const auto& s : simples) CHECK(s.dim == 1);
  CHECK_THROWS_AS(simple_right_modules(product_of_fields(kQ, 2)), Error);
}

TEST_CASE("partial module axioms") {
  PartialAction c = trivial_c2_on_q3();
  PartialModule reg = right_regular(c);
  CHECK(check_partial_module(reg).passed());
  CHECK(check_partial_module(left_regular_partial_module(c)).passed());
  CHECK(check_partial_module(left_regular_partial_module(c4_triple(kQ))).passed());
  for (const auto& f : fixtures()) CHECK(check_partial_module(left_regular_partial_module(f.action)).passed());

  SmashProduct sb = build_partial_smash(c4_triple(kQ));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 4; ++t) {
    PartialModule pm = from_smash_module(sb, random_carrier_module(sb, Side::Right, rng));
    CHECK(check_partial_module(pm).passed());
    PartialModule broken = pm;
    for (std::size_t r = 0; r < pm.dim; ++r)
      for (std::size_t k = 0; k < pm.dim; ++k) broken.h_ops[1](r, k) *= kQ.from_int(2);
    CheckReport rep = check_partial_module(broken);
    CHECK_FALSE(rep.passed());
    bool pm4 = false;
    for (const auto& v : rep.violations) pm4 = pm4 || v.axiom == "PM4";
    CHECK(pm4);
    CHECK_THROWS_AS(from_smash_module(sb, Module{Side::Right, sb.carrier, 1, {}}), Error);
  }
}

TEST_CASE("smash module conversions") {
  SmashProduct sa = build_partial_smash(dual_c2_example());
  PartialModule one = from_smash_module(sa, regular_module(sa.carrier, Side::Right));
  CHECK(one.dim == 1);
  CHECK(one.a_ops[0] == Matrix::identity(kQ, 1));

  std::mt19937_64 rng(4);
  std::vector<PartialAction> all;
  for (const auto& f : fixtures()) all.push_back(f.action);
  for (const auto& pa : finite_instances(9, 12, 3, 5)) all.push_back(pa);
  for (const auto& pa : all) {
    SmashProduct sp = build_partial_smash(pa);
    for (Side side : {Side::Right, Side::Left}) {
      Module reg = regular_module(sp.carrier, side);
      PartialModule pm = from_smash_module(sp, reg);
      CHECK(same_ops(to_smash_module(pm, sp).ops, reg.ops));
      for (int t = 0; t < 3; ++t) {
        Module m = random_carrier_module(sp, side, rng);
        PartialModule p = from_smash_module(sp, m);
        Module back = to_smash_module(p, sp);
        CHECK(same_ops(back.ops, m.ops));
        PartialModule again = from_smash_module(sp, back);
        CHECK(same_ops(again.a_ops, p.a_ops));
        CHECK(same_ops(again.h_ops, p.h_ops));
        Subspace ann = annihilator(p);
        CHECK(is_h_stable(pa, ann));
        CHECK(psi_ideal(sp, module_annihilator(m)) == ann);
      }
    }
  }
}

TEST_CASE("annihilators") {
  PartialAction c = trivial_c2_on_q3();
  CHECK(annihilator(right_regular(c)).is_zero());
  Subspace e1 = Subspace::span(kQ, 3, std::vector<Vec>{unit_vec(kQ, 3, 0)});
  PartialModule q = quotient_module(right_regular(c), e1);
  CHECK(check_partial_module(q).passed());
  CHECK(annihilator(q) == e1);
  CHECK_THROWS_AS(submodule(right_regular(c4_triple(kQ)), e1), Error);
}

TEST_CASE("right extensions") {
  PartialAction c = trivial_c2_on_q3();
  Module v = regular_module(c.alg(), Side::Right);
  Extension e = extend_right_module(c, v);
  CHECK(e.module.dim == 6);
  CHECK(check_partial_module(e.module).passed());

  PartialAction a = dual_c2_example();
  Extension ea = extend_right_module(a, regular_module(a.alg(), Side::Right));
  CHECK(ea.module.dim <= 2);
  CHECK(check_partial_module(ea.module).passed());

  CHECK_THROWS_AS(extend_right_module(c, regular_module(c.alg(), Side::Left)), Error);

  std::mt19937_64 rng(6);
  std::vector<PartialAction> all{c4_triple(kQ), c4_triple(Field::prime(5))};
  for (const auto& pa : finite_instances(10, 10, 3, 5)) all.push_back(pa);
  for (const auto& pa : all) {
    const Field f = pa.field();
    Module reg = regular_module(pa.alg(), Side::Right);
    std::vector<Vec> seed{random_vector(f, pa.adim(), rng)};
    Subspace u = invariant_closure(reg.ops, Subspace::span(f, pa.adim(), seed));
    Module vm = u.is_full() || u.is_zero() ? reg : quotient_module(reg, u);
    Extension ext = extend_right_module(pa, vm);
    CHECK(check_partial_module(ext.module).passed());
    CHECK(ext.module.dim <= vm.dim * pa.hdim());
    // (v (x) 1) a = v a (x) 1.
    for (int t = 0; t < 3; ++t) {
      Vec x = random_vector(f, pa.adim(), rng);
      CHECK(multiply(ext.embedding, ext.module.a_op(x)) == multiply(vm.op(x), ext.embedding));
    }
    // V generates W.
    CHECK(invariant_closure(ext.module.all_ops(), Subspace::row_space(ext.embedding)).is_full());
    CHECK(is_h_stable(pa, annihilator(ext.module)));
  }
}

TEST_CASE("left extensions") {
  PartialAction c = trivial_c2_on_q3();
  Extension e = extend_left_module(c, regular_module(c.alg(), Side::Left));
  CHECK(e.module.dim == 6);
  CHECK(check_partial_module(e.module).passed());

  std::mt19937_64 rng(7);
  std::vector<PartialAction> all{dual_c2_example(), c4_triple(kQ)};
  for (const auto& pa : finite_instances(12, 12, 5, 3)) all.push_back(pa);
  for (const auto& pa : all) {
    const Field f = pa.field();
    Module vm = regular_module(pa.alg(), Side::Left);
    Extension ext = extend_left_module(pa, vm);
    CHECK(check_partial_module(ext.module).passed());
    for (int t = 0; t < 3; ++t) {
      Vec x = random_vector(f, pa.adim(), rng);
      CHECK(multiply(ext.embedding, ext.module.a_op(x)) == multiply(vm.op(x), ext.embedding));
    }
    CHECK(invariant_closure(ext.module.all_ops(), Subspace::row_space(ext.embedding)).is_full());
    CHECK(is_h_stable(pa, annihilator(ext.module)));
  }
}

TEST_CASE("irreducible extensions") {
  Field f3 = Field::prime(3);
  PartialAction triv = trivial_action(group_algebra(f3, GroupTable::cyclic(2)), base_field_algebra(f3));
  IrreducibleExtension t = irreducible_extension(triv, regular_module(triv.alg(), Side::Right));
  CHECK(t.extension.module.dim == 2);
  CHECK(t.module.dim == 1);
  CHECK(t.kernel.dim() == 1);

  Field f5 = Field::prime(5);
  PartialAction b = c4_triple(f5);
  auto simples = simple_right_modules(b.alg());
  REQUIRE(simples.size() == 3);
  for (const auto& v : simples) {
    IrreducibleExtension ie = irreducible_extension(b, v);
    CHECK(ie.module.dim <= 4);
    CHECK(check_partial_module(ie.module).passed());
    CHECK(is_irreducible(ie.module) == Irreducibility::Irreducible);
    CHECK(brute_irreducible(f5, ie.module.dim, ie.module.all_ops()));
    CHECK(rref(ie.embedding).rank == v.dim);
    CHECK(annihilator(ie.module) == colon_ideal(b, module_annihilator(v)));
  }
  CHECK_THROWS_AS(irreducible_extension(c4_triple(kQ), regular_module(product_of_fields(kQ, 3), Side::Right)), Error);
  CHECK_THROWS_AS(irreducible_extension(b, regular_module(b.alg(), Side::Right)), Error);
}

TEST_CASE("irreducibility matches on the smash side") {
  std::mt19937_64 rng(15);
  int seen = 0;
  for (const auto& pa : finite_instances(14, 16, 2, 3)) {
    SmashProduct sp = build_partial_smash(pa);
    if (sp.dim() > 6) continue;
    for (int t = 0; t < 3; ++t) {
      Module m = random_carrier_module(sp, Side::Right, rng);
      if (m.dim > 4 || m.dim == 0) continue;
      PartialModule p = from_smash_module(sp, m);
      Irreducibility a = is_irreducible(p), s = is_irreducible(m);
      CHECK(a == s);
      CHECK((a == Irreducibility::Irreducible) == brute_irreducible(pa.field(), m.dim, m.ops));
      ++seen;
    }
  }
  CHECK(seen >= 10);
}
