#include <doctest.h>

#include <random>

#include "golomb/zlattice.hpp"
#include "oracles.hpp"

using namespace golomb;

namespace {

IntVector v2(std::int64_t a, std::int64_t b) {
  IntVector v(2);
  v << a, b;
  return v;
}

IntegerLattice lat(std::initializer_list<IntVector> gens) { return lat_from_generators(2, gens); }

// Membership in a lattice spanned by `gens` in Z^2 via the explicit coset oracle.
oracle::Coset2 as_oracle(const IntVector& rep, const std::vector<IntVector>& gens) {
  oracle::Coset2 c{{rep(0), rep(1)}, {}};
  for (const auto& g : gens) c.gens.push_back({g(0), g(1)});
  return c;
}

}  // namespace

TEST_CASE("canonical bases") {
  CHECK(lat({v2(2, 0), v2(0, 2), v2(1, 1)}).format() == "[(1,1),(0,2)]");
  CHECK(lat({v2(1, 0), v2(0, 1)}) == IntegerLattice::whole(2));
  CHECK(lat({v2(2, 0), v2(0, 2)}) == lat({v2(2, 2), v2(0, 2)}));
  CHECK(IntegerLattice(2).is_zero());
  CHECK(lat({v2(0, 0)}).is_zero());
  CHECK_THROWS_AS(lat_from_generators(3, {v2(1, 0)}), Error);
}

TEST_CASE("membership and coordinates") {
  const IntegerLattice l = lat({v2(2, 0), v2(0, 3)});
  CHECK(l.contains(v2(4, -3)));
  CHECK_FALSE(l.contains(v2(1, 0)));
  const auto c = l.coordinates(v2(4, -3));
  REQUIRE(c.has_value());
  CHECK(l.basis() * *c == v2(4, -3));
  CHECK_FALSE(l.coordinates(v2(0, 1)).has_value());
}

TEST_CASE("sum, intersection and containment") {
  const IntegerLattice k = lat({v2(1, 0), v2(0, 2)});
  const IntegerLattice l = lat({v2(2, 0), v2(0, 1)});
  CHECK(lat_intersect(k, l) == lat({v2(2, 0), v2(0, 2)}));
  CHECK(lat_sum(k, l) == IntegerLattice::whole(2));
  CHECK(lat_contains(k, lat({v2(2, 0), v2(0, 2)})));
  CHECK_FALSE(lat_contains(lat({v2(2, 0), v2(0, 2)}), k));
  CHECK(lat_intersect(lat({v2(1, 0)}), lat({v2(0, 1)})).is_zero());

  // the intersection is exactly the common points, checked on a box
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<IntVector> ga{v2(d(rng), d(rng)), v2(d(rng), d(rng))};
    const std::vector<IntVector> gb{v2(d(rng), d(rng)), v2(d(rng), d(rng))};
    const IntegerLattice a = lat_from_generators(2, ga);
    const IntegerLattice b = lat_from_generators(2, gb);
    const IntegerLattice i = lat_intersect(a, b);
    const IntegerLattice s = lat_sum(a, b);
    for (int x = -12; x <= 12; ++x) {
      for (int y = -12; y <= 12; ++y) {
        const IntVector p = v2(x, y);
        CHECK(i.contains(p) == (a.contains(p) && b.contains(p)));
        if (a.contains(p) || b.contains(p)) CHECK(s.contains(p));
      }
    }
  }
}

TEST_CASE("quotients, residuals and primality") {
  const auto q = lat_quotient(lat({v2(2, 0), v2(0, 3)}));
  CHECK(q.torsion == std::vector<std::int64_t>{6});
  CHECK(q.free_rank == 0);
  CHECK(lat_quotient(lat({v2(1, 1)})).free_rank == 1);
  CHECK(lat_residual(lat({v2(2, 0), v2(0, 2)})).generator == 2);
  CHECK(lat_residual(lat({v2(1, 1)})).generator == 0);
  CHECK(lat_is_prime(lat({v2(2, 0), v2(0, 2)})));
  CHECK(lat_is_prime(lat({v2(1, 1)})));
  CHECK(lat_is_prime(IntegerLattice(2)));
  CHECK_FALSE(lat_is_prime(lat({v2(2, 0), v2(0, 3)})));
  CHECK_FALSE(lat_is_prime(lat({v2(4, 0), v2(0, 1)})));
  CHECK_FALSE(lat_is_prime(IntegerLattice::whole(2)));
}

TEST_CASE("coset intersection examples") {
  namespace ci = coset_intersection;
  const LatticeCoset a{v2(1, 1), lat({v2(1, 0)})};
  const LatticeCoset b{v2(1, 1), lat({v2(0, 1)})};
  const auto r = coset_intersect(a, b);
  const auto* p = std::get_if<ci::Points>(&r);
  REQUIRE(p != nullptr);
  REQUIRE(p->points.size() == 1);
  CHECK(p->points[0] == v2(1, 1));

  const LatticeCoset odd{v2(1, 0), lat({v2(2, 0), v2(0, 1)})};
  const LatticeCoset even{v2(0, 0), lat({v2(2, 0), v2(0, 1)})};
  CHECK(std::holds_alternative<ci::Disjoint>(coset_intersect(odd, even)));

  const LatticeCoset c{v2(1, 0), lat({v2(2, 0), v2(0, 2)})};
  const LatticeCoset e{v2(0, 1), lat({v2(3, 0), v2(0, 3)})};
  const auto w = coset_intersect(c, e);
  const auto* wit = std::get_if<ci::Witness>(&w);
  REQUIRE(wit != nullptr);
  CHECK(c.contains(wit->point));
  CHECK(e.contains(wit->point));
  CHECK(wit->common == lat({v2(6, 0), v2(0, 6)}));
  CHECK(a.format() == "(1,1)+[(1,0)]");
}

TEST_CASE("coset intersection agrees with a box scan") {
  namespace ci = coset_intersection;
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> g(-2, 2);
  std::uniform_int_distribution<int> r(-4, 4);
  std::uniform_int_distribution<int> rank(1, 2);
  for (int trial = 0; trial < 200; ++trial) {
    auto draw = [&](std::vector<IntVector>& gens) {
      gens.clear();
      const int k = rank(rng);
      while (static_cast<int>(gens.size()) < k) {
        IntVector v = v2(g(rng), g(rng));
        if (v.isZero()) continue;
        if (gens.size() == 1 && gens[0](0) * v(1) - gens[0](1) * v(0) == 0) continue;
        gens.push_back(v);
      }
    };
    std::vector<IntVector> ga, gb;
    draw(ga);
    draw(gb);
    const IntVector ra = v2(r(rng), r(rng));
    const IntVector rb = v2(r(rng), r(rng));
    const auto oa = as_oracle(ra, ga);
    const auto ob = as_oracle(rb, gb);
    std::size_t common = 0;
    for (int x = -60; x <= 60; ++x)
      for (int y = -60; y <= 60; ++y) common += oa.contains(x, y) && ob.contains(x, y);
    const auto res = coset_intersect({ra, lat_from_generators(2, ga)}, {rb, lat_from_generators(2, gb)});
    if (std::holds_alternative<ci::Disjoint>(res)) {
      CHECK(common == 0);
    } else if (const auto* w = std::get_if<ci::Witness>(&res)) {
      CHECK(common > 1);
      CHECK(oa.contains(w->point(0), w->point(1)));
      CHECK(ob.contains(w->point(0), w->point(1)));
    } else {
      const auto& pts = std::get<ci::Points>(res).points;
      CHECK(pts.size() == common);
      for (const auto& p : pts) CHECK((oa.contains(p(0), p(1)) && ob.contains(p(0), p(1))));
    }
  }
}

TEST_CASE("coprime cosets in Z^2") {
  CHECK(is_coprime_coset_lat(v2(1, 1), lat({v2(1, 0)})));
  CHECK_FALSE(is_coprime_coset_lat(v2(2, 0), lat({v2(0, 1)})));
  CHECK_THROWS_WITH_AS(is_coprime_coset_lat(v2(1, 1), IntegerLattice(2)), doctest::Contains("ZeroSubmodule"), Error);
}

TEST_CASE("strong irreducibility refutations") {
  const IntegerLattice n = lat({v2(2, 0), v2(0, 2)});
  const IntegerLattice k = lat({v2(1, 0), v2(0, 2)});
  const IntegerLattice l = lat({v2(2, 0), v2(0, 1)});
  CHECK(lat_contains(n, lat_intersect(k, l)));
  CHECK_THROWS_WITH_AS(lat_intersect(k, IntegerLattice(3)), doctest::Contains("RankMismatch"), Error);
}
