#include <doctest.h>

#include "oracle.hpp"
#include "psl/psl.hpp"

using namespace psl;

namespace {

const Field kQ = Field::rationals();

bool same_tensors(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.comul(i) != b.comul(i)) return false;
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.alg().product(i, j) != b.alg().product(i, j)) return false;
  }
  return a.counit() == b.counit() && a.antipode() == b.antipode() && a.alg().unit() == b.alg().unit();
}

HopfAlgebra with_antipode(const HopfAlgebra& h, const Matrix& s) {
  std::vector<Vec> comul;
  for (std::size_t i = 0; i < h.dim(); ++i) comul.push_back(h.comul(i));
  return HopfAlgebra(h.alg(), comul, h.counit(), s);
}

Matrix power(const Matrix& m, int k) {
  Matrix out = Matrix::identity(m.field(), m.rows());
  for (int i = 0; i < k; ++i) out = multiply(out, m);
  return out;
}

}  // namespace

TEST_CASE("group tables") {
  GroupTable c4 = GroupTable::cyclic(4);
  CHECK(c4.order() == 4);
  CHECK(c4.inverse(1) == 3);
  GroupTable s3 = GroupTable::symmetric3();
  CHECK(s3.order() == 6);
  std::size_t non_commuting = 0;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) non_commuting += s3.mul(a, b) != s3.mul(b, a);
  CHECK(non_commuting > 0);
  CHECK(GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(3)).order() == 6);
  CHECK_THROWS_AS(GroupTable::from_cayley({{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(GroupTable::from_cayley({{0, 2}, {1, 0}}), Error);
  CHECK_THROWS_AS(GroupTable::cyclic(0), Error);
}

TEST_CASE("check_hopf examples") {
  HopfAlgebra c4 = group_algebra(kQ, GroupTable::cyclic(4));
  CHECK(check_hopf(c4).passed());
  CHECK(check_hopf(dual_group_algebra(kQ, GroupTable::cyclic(2))).passed());

  // S(g) := g on QC4.
  Matrix s = c4.antipode();
  for (std::size_t r = 0; r < 4; ++r) s(r, 1) = r == 1 ? kQ.one() : kQ.zero();
  CheckReport r = check_hopf(with_antipode(c4, s));
  CHECK_FALSE(r.passed());
  bool at_g = false;
  for (const auto& v : r.violations) {
    CHECK(v.axiom.rfind("antipode", 0) == 0);
    if (v.witness == std::vector<std::size_t>{1}) at_g = true;
  }
  CHECK(at_g);
}

TEST_CASE("group algebras") {
  HopfAlgebra c1 = group_algebra(kQ, GroupTable::cyclic(1));
  CHECK(c1.alg() == base_field_algebra(kQ));
  CHECK(c1.counit() == Vec{kQ.one()});
  HopfAlgebra c4 = group_algebra(kQ, GroupTable::cyclic(4));
  CHECK(c4.dim() == 4);
  for (std::size_t g = 0; g < 4; ++g) {
    CHECK(c4.coproduct_terms(g).size() == 1);
    CHECK(c4.comul_coeff(g, g, g).is_one());
    CHECK(c4.counit()[g].is_one());
    CHECK(c4.apply_antipode(c4.alg().basis_vector(g)) == c4.alg().basis_vector((4 - g) % 4));
  }
  HopfAlgebra f2 = group_algebra(Field::prime(2), GroupTable::cyclic(2));
  CHECK(check_hopf(f2).passed());
  CHECK(f2.field() == Field::prime(2));
}

TEST_CASE("dual group algebra and dual_hopf") {
  GroupTable c3 = GroupTable::cyclic(3);
  HopfAlgebra d = dual_group_algebra(kQ, c3);
  for (std::size_t g = 0; g < 3; ++g) {
    for (std::size_t h = 0; h < 3; ++h)
      CHECK(d.alg().product(g, h) == (g == h ? d.alg().basis_vector(g) : d.alg().zero()));
    // Delta(p_g) = sum_{uv = g} p_u (x) p_v.
    for (std::size_t u = 0; u < 3; ++u)
      for (std::size_t v = 0; v < 3; ++v) CHECK(d.comul_coeff(g, u, v) == (c3.mul(u, v) == g ? kQ.one() : kQ.zero()));
    CHECK(d.counit()[g] == (g == 0 ? kQ.one() : kQ.zero()));
    CHECK(d.apply_antipode(d.alg().basis_vector(g)) == d.alg().basis_vector(c3.inverse(g)));
  }

  HopfAlgebra c2 = group_algebra(kQ, GroupTable::cyclic(2));
  CHECK(same_tensors(dual_hopf(c2), dual_group_algebra(kQ, GroupTable::cyclic(2))));
  HopfAlgebra c4 = group_algebra(kQ, GroupTable::cyclic(4));
  CHECK(same_tensors(dual_hopf(dual_hopf(c4)), c4));

  // Transposition of the structure tensors, read entry by entry.
  for (const HopfAlgebra& h : {c4, sweedler_h4(kQ), dual_group_algebra(kQ, GroupTable::symmetric3())}) {
    HopfAlgebra dh = dual_hopf(h);
    CHECK(check_hopf(dh).passed());
    const std::size_t m = h.dim();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
          CHECK(dh.alg().coeff(p, q, i) == h.comul_coeff(i, p, q));
          CHECK(dh.comul_coeff(i, p, q) == h.alg().coeff(p, q, i));
        }
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(dh.counit()[i] == h.alg().unit()[i]);
      CHECK(dh.alg().unit()[i] == h.counit()[i]);
      for (std::size_t j = 0; j < m; ++j) CHECK(dh.antipode()(i, j) == h.antipode()(j, i));
    }
    CHECK(same_tensors(dual_hopf(dh), h));
  }
}

TEST_CASE("sweedler") {
  HopfAlgebra h = sweedler_h4(kQ);
  CHECK(check_hopf(h).passed());
  CHECK_FALSE(is_semisimple(h));
  CHECK_THROWS_AS(sweedler_h4(Field::prime(2)), Error);
  CHECK(check_hopf(sweedler_h4(Field::prime(3))).passed());
  // Basis 1, g, x, gx. S(x) = -gx, S(gx) = x, so S^2(x) = -x and S^4 = id.
  Vec x = h.alg().basis_vector(2), gx = h.alg().basis_vector(3);
  CHECK(h.apply_antipode(x) == scale(kQ.from_int(-1), gx));
  CHECK(h.apply_antipode(gx) == x);
  Matrix s2 = power(h.antipode(), 2);
  CHECK(s2 != Matrix::identity(kQ, 4));
  CHECK(psl::apply(s2, x) == scale(kQ.from_int(-1), x));
  CHECK(power(h.antipode(), 4) == Matrix::identity(kQ, 4));
  // Delta(x) = x (x) 1 + g (x) x.
  Vec dx = h.coproduct(x);
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = 0; q < 4; ++q) {
      bool on = (p == 2 && q == 0) || (p == 1 && q == 2);
      CHECK(dx[p * 4 + q] == (on ? kQ.one() : kQ.zero()));
    }
}

TEST_CASE("left integrals") {
  for (std::size_t n = 1; n <= 5; ++n) {
    HopfAlgebra h = group_algebra(kQ, GroupTable::cyclic(n));
    Vec all(n, kQ.one());
    CHECK(left_integrals(h) == Subspace::span(kQ, n, std::vector<Vec>{all}));
  }
  HopfAlgebra d2 = dual_group_algebra(kQ, GroupTable::cyclic(2));
  CHECK(left_integrals(d2) == Subspace::span(kQ, 2, std::vector<Vec>{d2.alg().basis_vector(0)}));
  Field f2 = Field::prime(2);
  HopfAlgebra f2c2 = group_algebra(f2, GroupTable::cyclic(2));
  Vec one_plus_g{f2.one(), f2.one()};
  CHECK(left_integrals(f2c2) == Subspace::span(f2, 2, std::vector<Vec>{one_plus_g}));

  // Oracle: h L = eps(h) L for every basis h, on the returned generator.
  for (const HopfAlgebra& h : {sweedler_h4(kQ), dual_group_algebra(kQ, GroupTable::symmetric3()),
                               group_algebra(Field::prime(3), GroupTable::symmetric3())}) {
    Subspace l = left_integrals(h);
    REQUIRE(l.dim() == 1);
    Vec lam = l.basis_vector(0);
    for (std::size_t i = 0; i < h.dim(); ++i)
      CHECK(oracle::mult(h.alg(), h.alg().basis_vector(i), lam) == scale(h.counit()[i], lam));
  }
}

TEST_CASE("semisimplicity of group algebras") {
  Caps caps;
  for (Field f : {kQ, Field::prime(2), Field::prime(3), Field::prime(5)})
    for (std::size_t n = 2; n <= 6; ++n) {
      HopfAlgebra h = group_algebra(f, GroupTable::cyclic(n));
      bool expected = f.is_rational() || n % f.characteristic() != 0;
      CHECK(is_semisimple(h) == expected);
      CHECK(left_integrals(h).dim() == 1);
      CHECK(jacobson_radical(h.alg(), caps).radical.is_zero() == expected);
    }
  CHECK(is_semisimple(dual_group_algebra(kQ, GroupTable::cyclic(2))));
  CHECK(is_semisimple(group_algebra(kQ, GroupTable::cyclic(4))));
  CHECK_FALSE(is_semisimple(group_algebra(Field::prime(2), GroupTable::cyclic(2))));
}
