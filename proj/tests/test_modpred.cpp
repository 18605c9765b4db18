#include <doctest.h>

#include "golomb/modpred.hpp"
#include "golomb/verify.hpp"
#include "oracles.hpp"

using namespace golomb;

namespace {

Submodule sub(const FiniteModule& m, std::initializer_list<Elem> xs) {
  return submodule_from_members(m, PointSet::of(m.order(), xs));
}

IntVector v(std::initializer_list<std::int64_t> xs) {
  IntVector out(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) out(i++) = x;
  return out;
}

// Definitions applied literally, on top of the lattice primitives.
bool brute_strongly_irreducible(const Submodule& n, const std::vector<Submodule>& all) {
  for (const auto& k : all)
    for (const auto& l : all)
      if (intersect(k, l).is_subset_of(n) && !k.is_subset_of(n) && !l.is_subset_of(n)) return false;
  return true;
}

bool brute_prime(const Submodule& n, const FiniteModule& m) {
  const IdealOfZ r = residual(n, m);
  for (std::int64_t a = 0; a < m.exponent(); ++a)
    for (Elem x = 0; x < m.order(); ++x)
      if (n.contains(m.scale(a, x)) && !r.contains(a) && !n.contains(x)) return false;
  return true;
}

bool brute_fcc(const std::vector<Submodule>& all) {
  for (const auto& n : all)
    for (const auto& k1 : all)
      for (const auto& k2 : all)
        if (sum(n, k1).is_whole() && sum(n, k2).is_whole() && !sum(n, intersect(k1, k2)).is_whole()) return false;
  return true;
}

bool brute_mu(const FiniteModule& m, const std::vector<Submodule>& all) {
  for (const auto& n : all)
    for (const auto& k : all)
      if (!(residual(sum(n, k), m) == residual(n, m) + residual(k, m))) return false;
  return true;
}

}  // namespace

TEST_CASE("maximality and simplicity") {
  const FiniteModule z8 = make_module({8});
  CHECK(is_maximal(sub(z8, {0, 2, 4, 6}), z8));
  CHECK_FALSE(is_maximal(sub(z8, {0, 4}), z8));
  CHECK(is_maximal(zero_submodule(make_module({2})), make_module({2})));
  CHECK(is_simple(make_module({2})));
  CHECK(is_simple(make_module({7})));
  CHECK_FALSE(is_simple(z8));
  CHECK(maximal_submodules(make_module({2, 2})).size() == 3);
}

TEST_CASE("prime submodules") {
  const FiniteModule z8 = make_module({8});
  CHECK(is_prime(sub(z8, {0, 2, 4, 6}), z8).holds());
  const auto w = is_prime(sub(z8, {0, 4}), z8);
  REQUIRE_FALSE(w.holds());
  CHECK(w.counterexample->scalar == 2);
  CHECK(w.counterexample->element == 2);
  CHECK(is_prime(zero_submodule(make_module({2})), make_module({2})).holds());
  CHECK_THROWS_WITH_AS(is_prime(whole_module(z8), z8), doctest::Contains("NotProper"), Error);
}

TEST_CASE("strong irreducibility and meet-irreducibility") {
  const FiniteModule z8 = make_module({8});
  CHECK(is_strongly_irreducible(zero_submodule(z8), z8).holds());
  for (const auto& p : maximal_submodules(z8)) CHECK(is_strongly_irreducible(p, z8).holds());
  const FiniteModule v = make_module({2, 2});
  const auto w = is_strongly_irreducible(zero_submodule(v), v);
  REQUIRE_FALSE(w.holds());
  CHECK(intersect(w.counterexample->first, w.counterexample->second).is_zero());
  CHECK_FALSE(w.counterexample->first.is_zero());
  CHECK_FALSE(w.counterexample->second.is_zero());
  CHECK(is_meet_irreducible(z8));
  CHECK_FALSE(is_meet_irreducible(v));
  CHECK(is_meet_irreducible(make_module({2})));
}

TEST_CASE("multiplication, mu and coprime conditions on the small examples") {
  const FiniteModule z8 = make_module({8});
  const FiniteModule v = make_module({2, 2});
  const FiniteModule z2 = make_module({2});
  CHECK(is_multiplication(z8).holds());
  CHECK(is_multiplication(z2).holds());
  const auto mw = is_multiplication(v);
  REQUIRE_FALSE(mw.holds());
  CHECK(mw.counterexample->order() == 2);

  CHECK(is_mu_module(z8).holds());
  CHECK(is_mu_module(z2).holds());
  const auto uw = is_mu_module(v);
  REQUIRE_FALSE(uw.holds());
  const auto& [n, k] = *uw.counterexample;
  CHECK(residual(sum(n, k), v).generator == 1);
  CHECK((residual(n, v) + residual(k, v)).generator == 2);

  CHECK(has_finite_coprime_condition(z8).holds());
  CHECK(has_finite_coprime_condition(z2).holds());
  const auto cw = has_finite_coprime_condition(v);
  REQUIRE_FALSE(cw.holds());
  CHECK(sum(cw.counterexample->n, cw.counterexample->k1).is_whole());
  CHECK(sum(cw.counterexample->n, cw.counterexample->k2).is_whole());
  CHECK_FALSE(sum(cw.counterexample->n, intersect(cw.counterexample->k1, cw.counterexample->k2)).is_whole());
}

TEST_CASE("jacobson radicals") {
  const FiniteModule z8 = make_module({8});
  CHECK(jacobson_radical(z8) == sub(z8, {0, 2, 4, 6}));
  CHECK(jacobson_radical(make_module({2, 2})).is_zero());
  CHECK(jacobson_radical(make_module({5})).is_zero());
  CHECK(jacobson(whole_module(z8), z8).is_whole());
  CHECK(jacobson_radical(make_module({12})) == cyclic(make_module({12}), 6));
}

TEST_CASE("predicates agree with their definitions on every group of order at most 16") {
  for (const auto& m : isomorphism_classes(16)) {
    CAPTURE(m.spec());
    const auto all = enumerate_submodules(m);
    for (const auto& n : all) {
      CHECK(is_strongly_irreducible(n, m).holds() == brute_strongly_irreducible(n, all));
      if (!n.is_whole()) CHECK(is_prime(n, m).holds() == brute_prime(n, m));
    }
    bool mult = true;
    for (const auto& n : all) mult = mult && ideal_times_module(residual(n, m), m) == n;
    CHECK(is_multiplication(m).holds() == mult);
    CHECK(is_mu_module(m).holds() == brute_mu(m, all));
    CHECK(has_finite_coprime_condition(m).holds() == brute_fcc(all));
    bool smax = true;
    for (const auto& p : maximal_submodules(m)) smax = smax && brute_strongly_irreducible(p, all);
    CHECK(all_maximal_strongly_irreducible(m).holds() == smax);
  }
}

TEST_CASE("meet-irreducible exactly on cyclic groups of prime-power order") {
  for (const auto& m : isomorphism_classes(64)) {
    const auto& d = m.invariant_factors();
    CHECK_MESSAGE(is_meet_irreducible(m) == (d.size() == 1 && oracle::is_prime_power(d[0])), m.spec());
  }
}

TEST_CASE("profile") {
  const auto p = predicate_profile(make_module({8}));
  CHECK(p.meet_irreducible);
  CHECK(p.multiplication.holds());
  CHECK(p.jacobson_radical.order() == 4);
  CHECK(p.maximal_submodules.size() == 1);
  CHECK_FALSE(p.ann_prime);
  CHECK(predicate_profile(make_module({3})).ann_prime);
  CHECK(predicate_profile(make_module({2})).simple);
}

TEST_CASE("lattice refutation certificates") {
  const IntegerLattice n = lat_from_generators(2, {v({2, 0}), v({0, 2})});
  const IntegerLattice k = lat_from_generators(2, {v({1, 0}), v({0, 2})});
  const IntegerLattice l = lat_from_generators(2, {v({2, 0}), v({0, 1})});
  const auto cert = check_strongly_irreducible_witness_lat(n, k, l);
  CHECK(cert.meet == n);
  CHECK_FALSE(n.contains(cert.k_outside));
  CHECK_FALSE(n.contains(cert.l_outside));
  CHECK(k.contains(cert.k_outside));
  CHECK(l.contains(cert.l_outside));
  CHECK(lat_is_prime(n));

  CHECK_THROWS_WITH_AS(check_strongly_irreducible_witness_lat(n, n, n), doctest::Contains("NotARefutation"), Error);
  const IntegerLattice z4 = lat_from_generators(1, {v({4})});
  const IntegerLattice z2 = lat_from_generators(1, {v({2})});
  const IntegerLattice z6 = lat_from_generators(1, {v({6})});
  CHECK_THROWS_WITH_AS(check_strongly_irreducible_witness_lat(z4, z2, z6), doctest::Contains("NotARefutation"), Error);
  CHECK_THROWS_WITH_AS(check_strongly_irreducible_witness_lat(n, z2, z6), doctest::Contains("RankMismatch"), Error);
}
