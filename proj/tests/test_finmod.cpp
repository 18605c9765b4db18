#include <doctest.h>

#include "golomb/finmod.hpp"
#include "oracles.hpp"

using namespace golomb;

namespace {

PointSet pts(const FiniteModule& m, std::initializer_list<Elem> xs) { return PointSet::of(m.order(), xs); }

Submodule sub(const FiniteModule& m, std::initializer_list<Elem> xs) { return submodule_from_members(m, pts(m, xs)); }

const std::vector<std::vector<std::int64_t>> kSmall = {{2}, {4}, {6}, {8}, {12}, {2, 2}, {2, 4}, {2, 6}, {3, 3},
                                                       {2, 8}, {4, 4}, {2, 2, 2}, {2, 2, 4}, {16}, {2, 2, 2, 2}};

}  // namespace

TEST_CASE("construction and validation") {
  CHECK_THROWS_WITH_AS(make_module({}), doctest::Contains("EmptyFactorList"), Error);
  CHECK_THROWS_WITH_AS(make_module({4, 2}), doctest::Contains("NonDividingChain"), Error);
  CHECK_THROWS_WITH_AS(make_module({1, 2}), doctest::Contains("NonDividingChain"), Error);
  CHECK_THROWS_WITH_AS(make_module({512}), doctest::Contains("SizeCap"), Error);
  CHECK(make_module({512}, 512).order() == 512);
  CHECK(normalize_factors(std::vector<std::int64_t>{4, 2}) == std::vector<std::int64_t>{2, 4});
  CHECK(normalize_factors(std::vector<std::int64_t>{6, 2}) == std::vector<std::int64_t>{2, 6});
  CHECK(normalize_factors(std::vector<std::int64_t>{2, 3}) == std::vector<std::int64_t>{6});
  CHECK(FiniteModule::trivial().order() == 1);
}

TEST_CASE("element arithmetic") {
  const FiniteModule m = make_module({2, 4});
  CHECK(m.order() == 8);
  CHECK(m.exponent() == 4);
  CHECK(m.annihilator().generator == 4);
  const std::vector<std::int64_t> c{1, 3};
  const Elem x = m.index_of(c);
  CHECK(m.format(x) == "(1,3)");
  CHECK(m.coords(m.add(x, x)) == Coords{0, 2});
  CHECK(m.add(x, m.neg(x)) == m.zero());
  CHECK(m.scale(-1, x) == m.neg(x));
  CHECK(m.scale(5, x) == x);
  CHECK(m.element_order(x) == 4);
  CHECK(m.spec() == "2x4");
  CHECK_THROWS_AS(m.index_of(std::vector<std::int64_t>{1}), Error);
}

TEST_CASE("submodule lattice matches a brute-force enumeration") {
  for (const auto& d : kSmall) {
    const FiniteModule m = make_module(d);
    const oracle::Explicit g{d};
    std::set<oracle::Group> expected = g.subgroups();
    std::set<oracle::Group> got;
    for (const auto& s : m.submodule_sets()) got.insert(oracle::to_group(m, s));
    CHECK_MESSAGE(got == expected, m.spec());
    CHECK(m.submodule_sets().size() == expected.size());
    CHECK(m.submodule_sets().front().count() == 1);
    CHECK(m.submodule_sets().back().count() == m.order());
  }
  // subgroup counts of elementary abelian 2-groups
  CHECK(make_module({2, 2, 2, 2}).submodule_sets().size() == 67);
  CHECK(make_module({2, 2, 2, 2, 2}).submodule_sets().size() == 374);
}

TEST_CASE("sum, intersection and the product formula") {
  for (const auto& d : kSmall) {
    const FiniteModule m = make_module(d);
    const auto all = enumerate_submodules(m);
    for (const auto& n : all) {
      for (const auto& k : all) {
        const Submodule s = sum(n, k);
        const Submodule i = intersect(n, k);
        CHECK(n.order() * k.order() == s.order() * i.order());
        CHECK(is_comaximal(n, k) == s.is_whole());
        CHECK(n.is_subset_of(s));
        CHECK(i.is_subset_of(k));
      }
    }
  }
}

TEST_CASE("generated, cyclic and submodule validation") {
  const FiniteModule z8 = make_module({8});
  CHECK(cyclic(z8, 2).members() == pts(z8, {0, 2, 4, 6}));
  const std::vector<Elem> gens{4, 6};
  CHECK(generated(z8, gens).members() == pts(z8, {0, 2, 4, 6}));
  CHECK(sub(z8, {0, 4}).format() == "{(0),(4)}");
  CHECK_THROWS_AS(sub(z8, {0, 3}), Error);
  CHECK(sub(z8, {0, 2, 4, 6}).generators() == std::vector<Elem>{2});
  CHECK_THROWS_AS(sum(zero_submodule(z8), zero_submodule(make_module({4}))), Error);
}

TEST_CASE("residuals") {
  const FiniteModule z8 = make_module({8});
  CHECK(residual(sub(z8, {0, 4}), z8).generator == 4);
  CHECK(residual(zero_submodule(z8), z8).generator == 8);
  CHECK(residual(whole_module(z8), z8).generator == 1);
  const FiniteModule v = make_module({2, 2});
  CHECK(residual(sub(v, {0, 1}), v).generator == 2);
  // (N:M)M ⊆ N always
  for (const auto& d : kSmall) {
    const FiniteModule m = make_module(d);
    for (const auto& n : enumerate_submodules(m)) {
      const IdealOfZ r = residual(n, m);
      CHECK(ideal_times_module(r, m).is_subset_of(n));
      CHECK(m.exponent() % r.generator == 0);
    }
  }
}

TEST_CASE("cosets") {
  const FiniteModule z8 = make_module({8});
  const Coset c = make_coset(5, sub(z8, {0, 4}));
  CHECK(c.rep == 1);
  CHECK(c.points() == pts(z8, {1, 5}));
  CHECK(c.format() == "(1)+{(0),(4)}");
}

TEST_CASE("quotients: examples and kernel exactness") {
  const FiniteModule z8 = make_module({8});
  const Quotient q = quotient(z8, sub(z8, {0, 4}));
  CHECK(q.module.invariant_factors() == std::vector<std::int64_t>{4});
  const Quotient full = quotient(z8, whole_module(z8));
  CHECK(full.module.is_trivial());
  CHECK(quotient(z8, zero_submodule(z8)).module.invariant_factors() == std::vector<std::int64_t>{8});

  for (const auto& d : kSmall) {
    const FiniteModule m = make_module(d);
    for (const auto& n : enumerate_submodules(m)) {
      const Quotient qn = quotient(m, n);
      CHECK(qn.module.order() * n.order() == m.order());
      PointSet kernel = m.empty_set();
      std::set<Elem> image;
      for (Elem x = 0; x < m.order(); ++x) {
        for (Elem y = 0; y < m.order(); ++y) CHECK(qn.project(m.add(x, y)) == qn.module.add(qn.project(x), qn.project(y)));
        if (qn.project(x) == qn.module.zero()) kernel.set(x);
        image.insert(qn.project(x));
      }
      CHECK(kernel == n.members());
      CHECK(image.size() == qn.module.order());
    }
  }
}

TEST_CASE("crt_solve") {
  const FiniteModule z6 = make_module({6});
  const Submodule n = cyclic(z6, 2);  // {0,2,4}
  const Submodule k = cyclic(z6, 3);  // {0,3}
  const auto s = crt_solve(1, 2, n, k);
  CHECK(s.z == 5);
  CHECK(s.path == CrtPath::Residual);

  const FiniteModule v = make_module({2, 2});
  const Submodule a = sub(v, {0, 1});
  const Submodule b = sub(v, {0, 2});
  const auto t = crt_solve(v.index_of(std::vector<std::int64_t>{1, 0}), v.index_of(std::vector<std::int64_t>{0, 0}), a, b);
  CHECK(v.format(t.z) == "(1,0)");
  CHECK(t.path == CrtPath::Exhaustive);

  CHECK_THROWS_WITH_AS(crt_solve(0, 0, n, n), doctest::Contains("NotCoprime"), Error);

  // every solution is correct and every comaximal system is solvable
  for (const auto& d : kSmall) {
    const FiniteModule m = make_module(d);
    const auto all = enumerate_submodules(m);
    for (const auto& p : all) {
      for (const auto& q : all) {
        if (!is_comaximal(p, q)) continue;
        for (Elem x = 0; x < m.order(); ++x) {
          for (Elem y = 0; y < m.order(); ++y) {
            const Elem z = crt_solve(x, y, p, q).z;
            CHECK(p.contains(m.sub(z, x)));
            CHECK(q.contains(m.sub(z, y)));
          }
        }
      }
    }
  }
}
