#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "psl/psl.hpp"

using namespace psl;

namespace {

const Field kQ = Field::rationals();

std::vector<PartialAction> finite_instances(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<PartialAction> out{c4_triple(Field::prime(3)), trivial_f2c2_on_f2(),
                                 dual_group_idempotent(Field::prime(3), GroupTable::cyclic(2), {0, 1})};
  for (int t = 0; t < count; ++t)
    out.push_back(random_partial_action(Field::prime(t % 2 ? 3 : 2), rng, RandomOptions{3, 3, 0.3}).action);
  return out;
}

Subspace carrier_span(const SmashProduct& sp, const std::vector<Vec>& full_vectors) {
  std::vector<Vec> rows;
  for (const auto& v : full_vectors) rows.push_back(sp.to_carrier(v));
  return Subspace::span(sp.pa.field(), sp.dim(), rows);
}

}  // namespace

TEST_CASE("full smash product") {
  std::vector<PartialAction> all;
  for (const auto& f : fixtures()) all.push_back(f.action);
  for (const auto& pa : finite_instances(1, 10)) all.push_back(pa);
  for (const auto& pa : all) {
    Algebra full = build_full_smash(pa);
    auto table = oracle::smash_table(pa);
    const std::size_t d = full.dim();
    REQUIRE(d == pa.adim() * pa.hdim());
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) CHECK(full.product(r, c) == table[r * d + c]);
  }

  PartialAction c = trivial_c2_on_q3();
  CHECK(build_full_smash(c) == tensor_product(c.alg(), c.hopf().alg()));

  // (e_N # p_1)(e_N # p_1) = e_N (p_1 . e_N) # p_1 + e_N (p_g . e_N) # p_g p_1 = 1/2 e_N # p_1.
  Algebra fa = build_full_smash(dual_c2_example());
  CHECK(fa.dim() == 2);
  CHECK(fa.product(0, 0) == Vec{kQ.from_fraction(1, 2), kQ.zero()});
  CHECK(fa.product(1, 1) == Vec{kQ.zero(), kQ.from_fraction(1, 2)});
  CHECK(fa.product(0, 1) == Vec{kQ.zero(), kQ.from_fraction(1, 2)});
  CHECK(fa.product(1, 0) == Vec{kQ.from_fraction(1, 2), kQ.zero()});

  Algebra fb = build_full_smash(c4_triple(kQ));
  CHECK(fb.dim() == 12);
  CheckReport r = check_algebra(fb);
  for (const auto& v : r.violations) CHECK(v.axiom != "assoc");
  CHECK_FALSE(fb.has_unit());
}

TEST_CASE("partial smash product") {
  SmashProduct a = build_partial_smash(dual_c2_example());
  CHECK(a.full_dim() == 2);
  CHECK(a.dim() == 1);
  Scalar half = kQ.from_fraction(1, 2);
  Vec expected{half, half};
  CHECK(a.project(unit_vec(kQ, 2, 0)) == expected);
  CHECK(a.project(unit_vec(kQ, 2, 1)) == expected);

  SmashProduct b = build_partial_smash(c4_triple(kQ));
  CHECK(b.full_dim() == 12);
  CHECK(b.dim() == 9);
  // e_j # g^i sits at index 4 j + i.
  std::vector<Vec> gens;
  for (std::size_t idx : {0u, 4u, 8u, 1u, 5u, 2u, 10u, 7u, 11u}) gens.push_back(unit_vec(kQ, 12, idx));
  CHECK(b.image == Subspace::span(kQ, 12, gens));

  SmashProduct c = build_partial_smash(trivial_c2_on_q3());
  CHECK(c.dim() == 6);
  CHECK(c.image.is_full());

  std::vector<PartialAction> all;
  for (const auto& f : fixtures()) all.push_back(f.action);
  for (const auto& pa : finite_instances(2, 10)) all.push_back(pa);
  for (const auto& pa : all) {
    SmashProduct sp = build_partial_smash(pa);
    auto proj = oracle::smash_projections(pa);
    CHECK(sp.dim() == oracle::rank(proj));
    for (const auto& v : proj) CHECK(sp.image.contains(v));
    CHECK(check_algebra(sp.carrier).passed());
    Vec u = sp.carrier.unit();
    CHECK(sp.to_full(u) == oracle::smash_unit(pa));
    CHECK(check_algebra_map(sp.include_A).passed());
    CHECK(oracle::rank(sp.include_A.matrix.transpose().row_vectors()) == pa.adim());
    if (is_global(pa)) CHECK(sp.dim() == pa.adim() * pa.hdim());
    // pi_basis agrees with the oracle projection.
    for (std::size_t j = 0; j < pa.adim(); ++j)
      for (std::size_t i = 0; i < pa.hdim(); ++i)
        CHECK(sp.to_full(sp.pi_basis(j, i)) == proj[j * pa.hdim() + i]);
  }
}

TEST_CASE("dual action") {
  PartialAction c = trivial_action(group_algebra(kQ, GroupTable::cyclic(2)), base_field_algebra(kQ));
  SmashProduct sp = build_partial_smash(c);
  REQUIRE(sp.dim() == 2);
  REQUIRE(sp.image.is_full());
  // p_g > (a # g) = a # g and p_1 > (a # g) = 0.
  CHECK(sp.dual_action.act_basis(1, 1) == unit_vec(kQ, 2, 1));
  CHECK(is_zero(sp.dual_action.act_basis(0, 1)));
  CHECK(sp.dual_action.act_basis(0, 0) == unit_vec(kQ, 2, 0));

  std::vector<PartialAction> all;
  for (const auto& f : fixtures()) all.push_back(f.action);
  for (const auto& pa : finite_instances(3, 10)) all.push_back(pa);
  for (const auto& pa : all) {
    SmashProduct s = build_partial_smash(pa);
    const PartialAction& d = s.dual_action;
    CHECK(check_partial_action(d).passed());
    CHECK(is_global(d));
    Vec one = d.hopf().alg().unit();
    for (std::size_t r = 0; r < s.dim(); ++r) CHECK(d.act(one, s.carrier.basis_vector(r)) == s.carrier.basis_vector(r));
    Subspace inc = Subspace::span(pa.field(), s.dim(), s.include_A.matrix.transpose().row_vectors());
    CHECK(invariant_subalgebra(d) == inc);
  }
  SmashProduct b = build_partial_smash(c4_triple(kQ));
  CHECK(invariant_subalgebra(b.dual_action).dim() == 3);
}

TEST_CASE("phi and psi") {
  PartialAction c = trivial_c2_on_q3();
  SmashProduct sc = build_partial_smash(c);
  CHECK(phi_ideal(sc, Subspace::zero(kQ, 3)).is_zero());
  CHECK(psi_ideal(sc, Subspace::zero(kQ, 6)).is_zero());
  CHECK(phi_ideal(sc, Subspace::full(kQ, 3)).is_full());
  Subspace e1 = Subspace::span(kQ, 3, std::vector<Vec>{unit_vec(kQ, 3, 0)});
  Subspace pe1 = phi_ideal(sc, e1);
  CHECK(pe1 == carrier_span(sc, {unit_vec(kQ, 6, 0), unit_vec(kQ, 6, 1)}));
  CHECK(psi_ideal(sc, pe1) == e1);

  SmashProduct sb = build_partial_smash(c4_triple(kQ));
  CHECK_THROWS_AS(phi_ideal(sb, e1), Error);
  CHECK(phi_ideal(sb, Subspace::full(kQ, 3)).is_full());
  Subspace not_ideal = Subspace::span(kQ, 9, std::vector<Vec>{sb.carrier.basis_vector(1)});
  if (!is_ideal(sb.carrier, not_ideal)) CHECK_THROWS_AS(psi_ideal(sb, not_ideal), Error);

  std::mt19937_64 rng(17);
  for (const auto& pa : finite_instances(4, 16)) {
    SmashProduct sp = build_partial_smash(pa);
    const Field f = pa.field();
    auto table = oracle::smash_table(pa);
    Vec u = oracle::smash_unit(pa);
    std::vector<Subspace> stable;
    for (int t = 0; t < 4; ++t) {
      std::vector<Vec> gens{random_vector(f, pa.adim(), rng)};
      stable.push_back(colon_ideal(pa, ideal_closure(pa.alg(), gens, IdealSide::TwoSided)));
      std::vector<Vec> sgens{random_vector(f, pa.adim(), rng)};
      stable.push_back(h_stable_ideal_closure(pa, sgens));
    }
    for (const auto& i : stable) {
      Subspace p = phi_ideal(sp, i);
      CHECK(psi_ideal(sp, p) == i);
      CHECK(is_ideal(sp.carrier, p));
      CHECK(is_h_stable(sp.dual_action, p));
      // Oracle generators (x # h)(1 # 1) from the raw expansion.
      std::vector<Vec> og;
      for (const auto& x : i.basis_vectors())
        for (std::size_t k = 0; k < pa.hdim(); ++k) {
          Vec t = zero_vec(f, sp.full_dim());
          for (std::size_t j = 0; j < pa.adim(); ++j) t[j * pa.hdim() + k] = x[j];
          og.push_back(oracle::table_mult(table, t, u));
        }
      CHECK(p.dim() == oracle::rank(og));
      for (const auto& g : og) CHECK(p.contains(sp.to_carrier(g)));
    }
    for (int t = 0; t < 4; ++t) {
      std::vector<Vec> gens{random_vector(f, sp.dim(), rng)};
      Subspace big = h_stable_ideal_closure(sp.dual_action, gens);
      CHECK(phi_ideal(sp, psi_ideal(sp, big)) == big);
    }
    for (const auto& i : stable)
      for (const auto& j : stable) {
        Subspace pi = phi_ideal(sp, i), pj = phi_ideal(sp, j);
        CHECK(phi_ideal(sp, sum_spaces(i, j)) == sum_spaces(pi, pj));
        CHECK(phi_ideal(sp, intersect_spaces(i, j)) == intersect_spaces(pi, pj));
        CHECK(phi_ideal(sp, product_space(pa.alg(), i, j)) == product_space(sp.carrier, pi, pj));
        if (intersect_spaces(i, j).is_zero()) CHECK(intersect_spaces(pi, pj).is_zero());
      }
  }
}

TEST_CASE("radical of the carrier meets A inside J(A)") {
  for (const auto& f : fixtures()) {
    SmashProduct sp = build_partial_smash(f.action);
    Subspace jc = jacobson_radical(sp.carrier).radical;
    Subspace ja = jacobson_radical(f.action.alg()).radical;
    Subspace back = psi_ideal(sp, jc);
    CHECK(back.is_subspace_of(ja));
  }
}
