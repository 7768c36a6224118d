#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace psl::app {

namespace {

struct SkipCase {
  std::string reason;
};

using Check = std::function<std::optional<std::string>(const PartialAction&, const Caps&, std::mt19937_64&)>;

bool enumerable(Field f, std::size_t n, const Caps& caps) {
  return f.is_finite() && n <= caps.dim_cap && f.characteristic() <= caps.field_cap;
}

std::string mismatch(const std::string& what, const Subspace& expected, const Subspace& got) {
  return what + ": expected " + expected.to_string() + ", got " + got.to_string();
}

void require_semisimple(const PartialAction& pa) {
  if (!is_semisimple(pa.hopf())) throw SkipCase{"H is not semisimple"};
}

void add_unique(std::vector<Subspace>& out, Subspace s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
}

/// Every H-stable ideal when enumeration applies, otherwise 0, A and ideals
/// generated by random elements (and colon ideals of random ideals).
std::vector<Subspace> stable_ideals(const PartialAction& pa, const Caps& caps, std::mt19937_64& rng) {
  if (enumerable(pa.field(), pa.adim(), caps)) return enumerate_h_stable_ideals(pa, caps);
  std::vector<Subspace> out{Subspace::zero(pa.field(), pa.adim()), Subspace::full(pa.field(), pa.adim())};
  for (int t = 0; t < 4; ++t) {
    std::vector<Vec> g{random_vector(pa.field(), pa.adim(), rng)};
    add_unique(out, h_stable_ideal_closure(pa, g));
    Subspace ideal = ideal_closure(pa.alg(), g, IdealSide::TwoSided);
    add_unique(out, colon_ideal(pa, ideal));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs(std::size_t n, std::size_t limit, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.emplace_back(i, j);
  if (out.size() > limit) {
    std::shuffle(out.begin(), out.end(), rng);
    out.resize(limit);
  }
  return out;
}

std::optional<std::string> check_t36(const PartialAction& pa, const Caps& caps, std::mt19937_64& rng) {
  SmashProduct sp = build_partial_smash(pa);
  auto ideals = stable_ideals(pa, caps, rng);
  std::vector<Subspace> phi;
  for (const auto& i : ideals) {
    phi.push_back(phi_ideal(sp, i));
    Subspace back = psi_ideal(sp, phi.back());
    if (back != i) return mismatch("Psi(Phi(I))", i, back);
  }
  for (auto [a, b] : pairs(ideals.size(), 400, rng)) {
    const Subspace &i = ideals[a], &j = ideals[b];
    if (i.is_subspace_of(j) && !phi[a].is_subspace_of(phi[b])) return "Phi does not preserve I <= J";
    Subspace s = phi_ideal(sp, sum_spaces(i, j));
    if (s != sum_spaces(phi[a], phi[b])) return mismatch("Phi(I + J)", sum_spaces(phi[a], phi[b]), s);
    Subspace p = phi_ideal(sp, product_space(pa.alg(), i, j));
    Subspace pp = product_space(sp.carrier, phi[a], phi[b]);
    if (p != pp) return mismatch("Phi(IJ)", pp, p);
    Subspace x = phi_ideal(sp, intersect_spaces(i, j));
    Subspace xx = intersect_spaces(phi[a], phi[b]);
    if (x != xx) return mismatch("Phi(I n J)", xx, x);
  }
  return std::nullopt;
}

std::optional<std::string> check_c37(const PartialAction& pa, const Caps& caps, std::mt19937_64& rng) {
  SmashProduct sp = build_partial_smash(pa);
  std::vector<Subspace> ideals;
  const bool exhaustive = enumerable(pa.field(), sp.dim(), caps);
  if (exhaustive) {
    ideals = enumerate_h_stable_ideals(sp.dual_action, caps);
  } else {
    ideals = {Subspace::zero(pa.field(), sp.dim()), Subspace::full(pa.field(), sp.dim())};
    for (int t = 0; t < 6; ++t) {
      std::vector<Vec> g{random_vector(pa.field(), sp.dim(), rng)};
      add_unique(ideals, h_stable_ideal_closure(sp.dual_action, g));
    }
  }
  for (const auto& big : ideals) {
    Subspace small = psi_ideal(sp, big);
    if (!is_h_stable(pa, small)) return "Psi(I) is not H-stable for I = " + big.to_string();
    Subspace back = phi_ideal(sp, small);
    if (back != big) return mismatch("Phi(Psi(I))", big, back);
  }
  if (exhaustive && enumerable(pa.field(), pa.adim(), caps)) {
    auto small = enumerate_h_stable_ideals(pa, caps);
    if (small.size() != ideals.size())
      return "lattice sizes differ: " + std::to_string(small.size()) + " H-stable vs " + std::to_string(ideals.size()) +
             " H*-stable";
  }
  return std::nullopt;
}

std::optional<std::string> check_p420(const PartialAction& pa, const Caps& caps, std::mt19937_64&) {
  SmashProduct sp = build_partial_smash(pa);
  Subspace jh = h_jacobson_radical(pa, caps);
  Subspace rhs = psi_ideal(sp, jacobson_radical(sp.carrier, caps).radical);
  if (jh != rhs) return mismatch("J(A # H) n A", jh, rhs);
  return std::nullopt;
}

std::optional<std::string> check_p422(const PartialAction& pa, const Caps& caps, std::mt19937_64& rng) {
  Subspace j = jacobson_radical(pa.alg(), caps).radical;
  Subspace jh = h_jacobson_radical(pa, caps);
  if (!is_h_stable(pa, jh)) return "J_H(A) is not H-stable";
  if (!jh.is_subspace_of(j)) return "J_H(A) is not inside J(A)";
  for (const auto& k : stable_ideals(pa, caps, rng))
    if (k.is_subspace_of(j) && !k.is_subspace_of(jh)) return "H-stable ideal inside J(A) escapes J_H(A): " + k.to_string();
  if (!enumerable(pa.field(), pa.adim(), caps)) return std::nullopt;
  // Intersection of annihilators of irreducible extensions of the simple modules.
  Subspace meet = Subspace::full(pa.field(), pa.adim());
  try {
    for (const auto& v : simple_right_modules(pa.alg(), caps)) {
      IrreducibleExtension ie = irreducible_extension(pa, v, caps);
      Subspace ann = annihilator(ie.module);
      Subspace expected = colon_ideal(pa, module_annihilator(v));
      if (ann != expected) return mismatch("ann(M) vs (ann(V):H)", expected, ann);
      meet = intersect_spaces(meet, ann);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DimensionTooLarge) return std::nullopt;
    throw;
  }
  if (meet != jh) return mismatch("intersection of (P:H) over primitive P", jh, meet);
  return std::nullopt;
}

std::optional<std::string> check_c413(const PartialAction& pa, const Caps& caps, std::mt19937_64&) {
  Subspace p = prime_radical(pa.alg(), caps);
  Subspace ph = h_prime_radical(pa, caps);
  if (!is_h_stable(pa, ph) || !ph.is_subspace_of(p)) return "P_H(A) is not an H-stable ideal inside P(A)";
  QuotientAction q = quotient_action(pa, ph);
  Subspace again = h_prime_radical(q.action, caps);
  if (!again.is_zero()) return "A/P_H(A) is not H-semiprime";
  if (!enumerable(pa.field(), pa.adim(), caps)) return std::nullopt;
  Subspace meet = Subspace::full(pa.field(), pa.adim());
  for (const auto& i : enumerate_h_stable_ideals(pa, caps))
    if (!i.is_full() && is_h_prime(pa, i, caps)) meet = intersect_spaces(meet, i);
  if (meet != ph) return mismatch("intersection of H-prime ideals", ph, meet);
  return std::nullopt;
}

std::optional<std::string> check_t414(const PartialAction& pa, const Caps& caps, std::mt19937_64&) {
  SmashProduct sp = build_partial_smash(pa);
  Subspace lhs = h_prime_radical(sp.dual_action, caps);
  Subspace rhs = phi_ideal(sp, h_prime_radical(pa, caps));
  if (lhs != rhs) return mismatch("P_{H*}(A # H)", rhs, lhs);
  return std::nullopt;
}

std::optional<std::string> check_t426(const PartialAction& pa, const Caps& caps, std::mt19937_64&) {
  SmashProduct sp = build_partial_smash(pa);
  Subspace lhs = h_jacobson_radical(sp.dual_action, caps);
  Subspace rhs = phi_ideal(sp, h_jacobson_radical(pa, caps));
  if (lhs != rhs) return mismatch("J_{H*}(A # H)", rhs, lhs);
  return std::nullopt;
}

std::optional<std::string> check_t51(const PartialAction& pa, const Caps& caps, std::mt19937_64&) {
  require_semisimple(pa);
  if (!is_semiprimitive(pa.alg(), caps)) throw SkipCase{"A is not semiprimitive"};
  Subspace j = jacobson_radical(build_partial_smash(pa).carrier, caps).radical;
  if (!j.is_zero()) return "J(A # H) = " + j.to_string();
  return std::nullopt;
}

/// Theorem instance on A/R where R is the relevant H-radical, so that the
/// hypothesis holds by construction.
std::optional<std::string> check_on_radical_quotient(const PartialAction& pa, const Caps& caps, bool jacobson) {
  require_semisimple(pa);
  Subspace r = jacobson ? h_jacobson_radical(pa, caps) : h_prime_radical(pa, caps);
  PartialAction q = r.is_zero() ? pa : quotient_action(pa, r).action;
  bool hyp = jacobson ? is_h_semiprimitive(q, caps) : is_h_semiprime(q, caps);
  if (!hyp) return "A/R is not H-semi" + std::string(jacobson ? "primitive" : "prime");
  Algebra carrier = build_partial_smash(q).carrier;
  Subspace rad = jacobson ? jacobson_radical(carrier, caps).radical : prime_radical(carrier, caps);
  if (!rad.is_zero()) return "radical of A # H is " + rad.to_string();
  return std::nullopt;
}

std::optional<std::string> check_c57(const PartialAction& pa, const Caps& caps, std::mt19937_64&) {
  require_semisimple(pa);
  SmashProduct sp = build_partial_smash(pa);
  Subspace lhs = jacobson_radical(sp.carrier, caps).radical;
  Subspace rhs = phi_ideal(sp, h_jacobson_radical(pa, caps));
  if (lhs != rhs) return mismatch("J(A # H)", rhs, lhs);
  return std::nullopt;
}

std::optional<std::string> check_c59(const PartialAction& pa, const Caps& caps, std::mt19937_64&) {
  require_semisimple(pa);
  SmashProduct sp = build_partial_smash(pa);
  Subspace lhs = prime_radical(sp.carrier, caps);
  Subspace rhs = phi_ideal(sp, h_prime_radical(pa, caps));
  if (lhs != rhs) return mismatch("P(A # H)", rhs, lhs);
  return std::nullopt;
}

bool is_trivial_action(const PartialAction& pa) {
  for (std::size_t i = 0; i < pa.hdim(); ++i)
    for (std::size_t j = 0; j < pa.adim(); ++j)
      if (pa.act_basis(i, j) != scale(pa.hopf().counit()[i], pa.alg().basis_vector(j))) return false;
  return true;
}

std::optional<std::string> check_negss(const PartialAction& pa, const Caps& caps, std::mt19937_64&) {
  if (is_semisimple(pa.hopf())) throw SkipCase{"H is semisimple"};
  if (!is_trivial_action(pa)) throw SkipCase{"action is not trivial"};
  if (!is_semiprimitive(pa.alg(), caps)) throw SkipCase{"A is not semiprimitive"};
  SmashProduct sp = build_partial_smash(pa);
  Subspace j = jacobson_radical(sp.carrier, caps).radical;
  if (j.is_zero()) return "A # H is semiprimitive although H is not semisimple";
  // Expected radical A (x) J(H), in carrier coordinates.
  Subspace jh = jacobson_radical(pa.hopf().alg(), caps).radical;
  const std::size_t m = pa.hdim();
  std::vector<Vec> gens;
  for (std::size_t a = 0; a < pa.adim(); ++a)
    for (const auto& x : jh.basis_vectors()) {
      Vec v = zero_vec(pa.field(), sp.full_dim());
      for (std::size_t i = 0; i < m; ++i) v[a * m + i] = x[i];
      gens.push_back(sp.to_carrier(v));
    }
  Subspace expected = Subspace::span(pa.field(), sp.dim(), gens);
  if (j != expected) return mismatch("J(A # H) vs A (x) J(H)", expected, j);
  if (is_semiprime(sp.carrier, caps)) return "A # H is semiprime";
  return std::nullopt;
}

struct SuiteDef {
  SuiteInfo info;
  Check check;
  bool negative = false;
};

const std::vector<SuiteDef>& defs() {
  static const std::vector<SuiteDef> d{
      {{"T3.6", "Phi and Psi are inverse on H-stable ideals and Phi preserves inclusion, sums, products, intersections"},
       check_t36},
      {{"C3.7", "every H*-stable ideal of A # H is Phi of an H-stable ideal of A"}, check_c37},
      {{"P4.20", "J_H(A) = J(A # H) n A"}, check_p420},
      {{"P4.22", "J_H(A) = (J(A):H), the largest H-stable ideal in J(A), also the meet of (P:H) over primitive P"},
       check_p422},
      {{"C4.13", "P_H(A) = (P(A):H), the meet of the H-prime ideals"}, check_c413},
      {{"T4.14", "P_{H*}(A # H) = Phi(P_H(A))"}, check_t414},
      {{"T4.26", "J_{H*}(A # H) = Phi(J_H(A))"}, check_t426},
      {{"T5.1", "H semisimple and A semiprimitive imply A # H semiprimitive"}, check_t51},
      {{"T5.6", "H semisimple and A H-semiprimitive imply A # H semiprimitive"},
       [](const PartialAction& pa, const Caps& c, std::mt19937_64&) { return check_on_radical_quotient(pa, c, true); }},
      {{"C5.7", "H semisimple implies J(A # H) = Phi(J_H(A))"}, check_c57},
      {{"T5.8", "H semisimple and A H-semiprime imply A # H semiprime"},
       [](const PartialAction& pa, const Caps& c, std::mt19937_64&) { return check_on_radical_quotient(pa, c, false); }},
      {{"C5.9", "H semisimple implies P(A # H) = Phi(P_H(A))"}, check_c59},
      {{"NEG-SS", "a non-semisimple H acting trivially on a semiprimitive A gives J(A # H) = A (x) J(H) != 0"},
       check_negss, true},
  };
  return d;
}

std::vector<NamedAction> fixed_instances(bool negative) {
  if (negative) {
    Field q = Field::rationals(), f2 = Field::prime(2), f3 = Field::prime(3), f5 = Field::prime(5);
    return {{"trivial-f2c2", trivial_f2c2_on_f2()},
            {"H4 trivial on Q", sweedler_trivial(q)},
            {"H4 trivial on M2(Q)", trivial_action(sweedler_h4(q), matrix_algebra(q, 2))},
            {"F2C2 trivial on F2^3", trivial_action(group_algebra(f2, GroupTable::cyclic(2)), product_of_fields(f2, 3))},
            {"F3C3 trivial on F3^2", trivial_action(group_algebra(f3, GroupTable::cyclic(3)), product_of_fields(f3, 2))},
            {"H4 trivial on F3", sweedler_trivial(f3)},
            {"F5C5 trivial on F5", trivial_action(group_algebra(f5, GroupTable::cyclic(5)), base_field_algebra(f5))}};
  }
  auto out = fixtures();
  out.push_back({"c4-triple over F3", c4_triple(Field::prime(3))});
  out.push_back({"c4-triple over F11", c4_triple(Field::prime(11))});
  out.push_back({"H4 trivial on Q", sweedler_trivial(Field::rationals())});
  return out;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial, std::uint64_t salt) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(trial), salt};
  return std::mt19937_64(seq);
}

struct NamedAlgebra {
  std::string name;
  Algebra alg;
};

/// Trivial actions of non-semisimple Hopf algebras on small semisimple algebras.
NamedAction negative_instance(std::uint64_t seed, std::size_t trial) {
  auto rng = trial_rng(seed, trial, 7);
  static const std::uint32_t primes[] = {2, 3, 5};
  const std::uint32_t p = primes[std::uniform_int_distribution<int>(0, 2)(rng)];
  Field f = Field::prime(p);
  const bool sweedler = p != 2 && std::bernoulli_distribution(0.5)(rng);
  HopfAlgebra h = sweedler ? sweedler_h4(f) : group_algebra(f, GroupTable::cyclic(p));
  const std::size_t max_a = 6 / h.dim();
  std::vector<NamedAlgebra> algs;
  algs.push_back({"k", base_field_algebra(f)});
  for (std::size_t n = 2; n <= max_a; ++n) algs.push_back({"k^" + std::to_string(n), product_of_fields(f, n)});
  const auto& a = algs[std::uniform_int_distribution<std::size_t>(0, algs.size() - 1)(rng)];
  std::string hn = sweedler ? "H4" : "F" + std::to_string(p) + "C" + std::to_string(p);
  return {hn + " trivial on " + a.name, trivial_action(h, a.alg)};
}

}  // namespace

std::size_t SuiteResult::count(CaseResult::Status s) const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [&](const CaseResult& c) { return c.status == s; }));
}

bool SuiteResult::passed() const {
  return count(CaseResult::Status::Fail) == 0 && count(CaseResult::Status::Pass) > 0;
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> out = [] {
    std::vector<SuiteInfo> v;
    for (const auto& d : defs()) v.push_back(d.info);
    return v;
  }();
  return out;
}

std::optional<SuiteInfo> find_suite(std::string_view id) {
  for (const auto& s : suites())
    if (s.id == id) return s;
  return std::nullopt;
}

NamedAction suite_instance(std::uint64_t seed, std::size_t trial) {
  auto rng = trial_rng(seed, trial, 1);
  if (trial % 2 == 0) {
    static const std::uint32_t small[] = {2, 3, 5};
    Field f = Field::prime(small[std::uniform_int_distribution<int>(0, 2)(rng)]);
    return random_partial_action(f, rng, RandomOptions{3, 2, 0.3});
  }
  static const std::uint32_t large[] = {37, 41, 43};
  Field f = Field::prime(large[std::uniform_int_distribution<int>(0, 2)(rng)]);
  return random_partial_action(f, rng, RandomOptions{});
}

SuiteResult run_suite(std::string_view id, const std::vector<NamedAction>& extra, const SuiteOptions& opts) {
  auto it = std::find_if(defs().begin(), defs().end(), [&](const SuiteDef& d) { return d.info.id == id; });
  if (it == defs().end()) throw Error(ErrorKind::UnresolvedReference, "unknown theorem id \"" + std::string(id) + "\"");
  SuiteResult result{it->info.id, it->info.statement, {}};
  std::vector<NamedAction> instances = fixed_instances(it->negative);
  instances.insert(instances.end(), extra.begin(), extra.end());
  for (std::size_t t = 0; t < opts.trials; ++t) {
    NamedAction na = it->negative ? negative_instance(opts.seed, t) : suite_instance(opts.seed, t);
    na.name = "random #" + std::to_string(t) + " (" + na.name + ", " + na.action.field().name() + ")";
    instances.push_back(std::move(na));
  }
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const auto& [name, pa] = instances[k];
    CaseResult c{name, CaseResult::Status::Pass, {}};
    auto rng = trial_rng(opts.seed, k, 99);
    try {
      if (auto fail = it->check(pa, opts.caps, rng)) {
        c.status = CaseResult::Status::Fail;
        c.detail = *fail;
      }
    } catch (const SkipCase& s) {
      c.status = CaseResult::Status::Skip;
      c.detail = s.reason;
    } catch (const Error& e) {
      const bool out_of_reach = e.kind() == ErrorKind::UnsupportedCharacteristic ||
                                e.kind() == ErrorKind::DimensionTooLarge || e.kind() == ErrorKind::FieldNotFinite;
      c.status = out_of_reach ? CaseResult::Status::Skip : CaseResult::Status::Fail;
      c.detail = e.what();
    }
    result.cases.push_back(std::move(c));
  }
  return result;
}

}  // namespace psl::app
