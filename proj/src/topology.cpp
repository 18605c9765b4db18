#include "golomb/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

namespace golomb {

std::size_t default_max_opens() {
  if (const char* v = std::getenv("GOLOMB_MAX_OPENS")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return 4096;
}

std::vector<PointSet> CoprimeBasis::sets() const {
  std::vector<PointSet> out;
  out.reserve(cosets.size());
  for (const auto& c : cosets) out.push_back(c.points());
  return out;
}

CoprimeBasis coprime_basis(const FiniteModule& m) {
  std::vector<PointSet> cyclics;
  cyclics.reserve(m.order());
  for (Elem x = 0; x < m.order(); ++x) cyclics.push_back(cyclic(m, x).members());

  CoprimeBasis basis{m, {}};
  for (const auto& n : m.submodule_sets()) {
    if (n.count() == 1) continue;
    PointSet covered = m.empty_set();
    for (Elem x = 0; x < m.order(); ++x) {
      if (covered.test(x)) continue;
      const PointSet coset = translate(m, n, x);
      covered |= coset;
      // Rm + N depends only on the coset m + N.
      if (is_comaximal(cyclics[x], n, m.order())) basis.cosets.push_back({x, Submodule(m, n)});
    }
  }
  return basis;
}

Outcome<BasisCounterexample> check_basis_axioms(const CoprimeBasis& basis) {
  const FiniteModule& m = basis.module;
  const auto sets = basis.sets();
  PointSet covered = m.empty_set();
  for (const auto& s : sets) covered |= s;
  if (covered != m.all()) return {BasisCounterexample{(m.all() - covered).first(), std::nullopt, std::nullopt}};

  std::vector<std::vector<std::size_t>> containing(m.order());
  for (std::size_t i = 0; i < sets.size(); ++i) sets[i].for_each([&](Elem p) { containing[p].push_back(i); });

  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const PointSet meet = sets[i] & sets[j];
      for (Elem p = meet.first(); p < m.order(); p = meet.next(p + 1)) {
        const auto& cands = containing[p];
        const bool refined =
            std::any_of(cands.begin(), cands.end(), [&](std::size_t k) { return sets[k].is_subset_of(meet); });
        if (!refined) return {BasisCounterexample{p, basis.cosets[i], basis.cosets[j]}};
      }
    }
  }
  return {};
}

namespace {

std::vector<std::size_t> identity_ground(std::size_t n) {
  std::vector<std::size_t> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = i;
  return g;
}

void sort_unique(std::vector<PointSet>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

[[noreturn]] void open_cap(std::size_t cap) {
  throw Error(ErrorCode::OpenSetCap, "topology has more than " + std::to_string(cap) + " open sets");
}

// Restriction of `s` to the members of `subset`, re-indexed to subset order.
PointSet restrict_to(const PointSet& s, const std::vector<std::size_t>& members) {
  PointSet out(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    if (s.test(members[i])) out.set(i);
  return out;
}

}  // namespace

BasisSpace as_basis_space(const FiniteTopology& t) { return {t.ground, t.opens}; }

BasisSpace golomb_space(const CoprimeBasis& basis) {
  return {identity_ground(basis.module.order()), basis.sets()};
}

BasisSpace punctured(const BasisSpace& full) {
  PointSet rest = PointSet::full(full.ground.size());
  rest.reset(0);
  return subspace(full, rest);
}

FiniteTopology generate_topology(const BasisSpace& space, std::size_t max_opens) {
  const std::size_t n = space.ground.size();
  std::unordered_set<PointSet, PointSetHash> seen;
  std::vector<PointSet> family;
  auto add = [&](std::vector<PointSet>& into, PointSet s) {
    if (seen.insert(s).second) {
      if (seen.size() > max_opens) open_cap(max_opens);
      into.push_back(std::move(s));
    }
  };

  // Finite intersections first, so the result is a topology even for a subbasis.
  add(family, PointSet::full(n));
  for (const auto& b : space.basis) add(family, b);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) add(family, family[i] & family[j]);
  }

  seen.clear();
  std::vector<PointSet> opens;
  add(opens, PointSet(n));
  for (const auto& b : family) {
    const std::size_t existing = opens.size();
    for (std::size_t k = 0; k < existing; ++k) add(opens, opens[k] | b);
  }
  sort_unique(opens);
  return {space.ground, std::move(opens)};
}

FiniteTopology generate_topology(const CoprimeBasis& basis, std::size_t max_opens) {
  if (auto check = check_basis_axioms(basis); !check) {
    const auto& w = *check.counterexample;
    std::string what = "basis axioms fail at " + basis.module.format(w.point);
    if (w.first) what += " between " + w.first->format() + " and " + w.second->format();
    throw Error(ErrorCode::NotABasis, what);
  }
  return generate_topology(golomb_space(basis), max_opens);
}

FiniteTopology discrete_topology(std::size_t points) {
  BasisSpace singletons{identity_ground(points), {}};
  for (std::size_t i = 0; i < points; ++i) singletons.basis.push_back(PointSet::of(points, {i}));
  return generate_topology(singletons, std::size_t{1} << std::min<std::size_t>(points + 1, 20));
}

FiniteTopology indiscrete_topology(std::size_t points) {
  std::vector<PointSet> opens{PointSet(points)};
  if (points > 0) opens.push_back(PointSet::full(points));
  return {identity_ground(points), std::move(opens)};
}

bool is_topology(const FiniteTopology& t) {
  const std::size_t n = t.ground.size();
  std::unordered_set<PointSet, PointSetHash> opens(t.opens.begin(), t.opens.end());
  if (!opens.count(PointSet(n)) || !opens.count(PointSet::full(n))) return false;
  for (const auto& a : t.opens) {
    if (a.universe() != n) return false;
    for (const auto& b : t.opens) {
      if (!opens.count(a | b) || !opens.count(a & b)) return false;
    }
  }
  return true;
}

FiniteTopology subspace(const FiniteTopology& t, const PointSet& subset) {
  const auto members = subset.members();
  FiniteTopology out;
  for (auto i : members) out.ground.push_back(t.ground[i]);
  for (const auto& o : t.opens) out.opens.push_back(restrict_to(o, members));
  sort_unique(out.opens);
  return out;
}

BasisSpace subspace(const BasisSpace& t, const PointSet& subset) {
  const auto members = subset.members();
  BasisSpace out;
  for (auto i : members) out.ground.push_back(t.ground[i]);
  for (const auto& b : t.basis) out.basis.push_back(restrict_to(b, members));
  return out;
}

std::vector<PointSet> minimal_neighborhoods(const BasisSpace& t) {
  const std::size_t n = t.ground.size();
  std::vector<PointSet> u(n, PointSet::full(n));
  for (const auto& b : t.basis) b.for_each([&](std::size_t x) { u[x] &= b; });
  return u;
}

PointSet closure(const BasisSpace& t, const PointSet& s) {
  const auto u = minimal_neighborhoods(t);
  PointSet out(t.ground.size());
  for (std::size_t x = 0; x < u.size(); ++x)
    if (u[x].intersects(s)) out.set(x);
  return out;
}

PointSet closure(const FiniteTopology& t, const PointSet& s) { return closure(as_basis_space(t), s); }

PointSet indiscrete_points(const BasisSpace& t) {
  const auto u = minimal_neighborhoods(t);
  PointSet out(t.ground.size());
  for (std::size_t x = 0; x < u.size(); ++x)
    if (u[x].count() == u.size()) out.set(x);
  return out;
}

PointSet indiscrete_points(const FiniteTopology& t) { return indiscrete_points(as_basis_space(t)); }

bool is_indiscrete(const BasisSpace& t) { return indiscrete_points(t).count() == t.ground.size(); }

SeparationReport separation(const BasisSpace& t) {
  const auto u = minimal_neighborhoods(t);
  SeparationReport r;
  for (std::size_t x = 0; x < u.size(); ++x) {
    for (std::size_t y = 0; y < u.size(); ++y) {
      if (x == y) continue;
      if (x < y && r.t0 && u[x].test(y) && u[y].test(x)) {
        r.t0 = false;
        r.t0_failure = PointPair{x, y};
      }
      // Some open contains x but not y iff y ∉ U(x).
      if (r.t1 && u[x].test(y)) {
        r.t1 = false;
        r.t1_failure = PointPair{x, y};
      }
      if (x < y && r.t2 && u[x].intersects(u[y])) {
        r.t2 = false;
        r.t2_failure = PointPair{x, y};
      }
    }
  }
  return r;
}

SeparationReport separation(const FiniteTopology& t) { return separation(as_basis_space(t)); }

std::optional<std::pair<PointSet, PointSet>> separating_opens(const BasisSpace& t, std::size_t x, std::size_t y) {
  const auto u = minimal_neighborhoods(t);
  if (u[x].intersects(u[y])) return std::nullopt;
  return std::pair{u[x], u[y]};
}

Outcome<ContinuityWitness> is_topological_group(const FiniteModule& m, const BasisSpace& t) {
  if (t.ground.size() != m.order()) {
    throw Error(ErrorCode::InvalidArgument, "topology ground is not the element set of " + m.spec());
  }
  const auto u = minimal_neighborhoods(t);
  const std::size_t n = m.order();
  // μ is continuous at (a, b) iff U(a) + U(b) ⊆ U(a + b).
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const PointSet& target = u[m.add(a, b)];
      bool inside = true;
      u[a].for_each([&](Elem x) {
        if (!inside) return;
        u[b].for_each([&](Elem y) {
          if (inside && !target.test(m.add(x, y))) inside = false;
        });
      });
      if (!inside) return {ContinuityWitness{ContinuityWitness::Map::Addition, target, a, b}};
    }
  }
  for (Elem a = 0; a < n; ++a) {
    const PointSet& target = u[m.neg(a)];
    bool inside = true;
    u[a].for_each([&](Elem x) {
      if (!target.test(m.neg(x))) inside = false;
    });
    if (!inside) return {ContinuityWitness{ContinuityWitness::Map::Negation, target, a, 0}};
  }
  return {};
}

Outcome<ContinuityWitness> is_topological_group(const FiniteModule& m, const FiniteTopology& t) {
  return is_topological_group(m, as_basis_space(t));
}

std::vector<std::pair<Elem, Elem>> addition_preimage(const FiniteModule& m, const PointSet& open) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < m.order(); ++a)
    for (Elem b = 0; b < m.order(); ++b)
      if (open.test(m.add(a, b))) out.emplace_back(a, b);
  return out;
}

std::optional<std::pair<Elem, Elem>> product_interior_failure(const BasisSpace& t,
                                                              const std::vector<std::pair<Elem, Elem>>& pairs) {
  const std::size_t n = t.ground.size();
  std::vector<PointSet> rows(n, PointSet(n));
  for (const auto& [a, b] : pairs) rows[a].set(b);
  const auto u = minimal_neighborhoods(t);
  for (const auto& [a, b] : pairs) {
    bool inside = true;
    u[a].for_each([&](std::size_t x) {
      if (!u[b].is_subset_of(rows[x])) inside = false;
    });
    if (!inside) return std::pair{a, b};
  }
  return std::nullopt;
}

T2Witness t2_witness_integers(std::int64_t m, std::int64_t n) {
  if (m == 0 || n == 0 || m == n) {
    throw Error(ErrorCode::InvalidArgument, "need distinct nonzero integers, got " + std::to_string(m) + ", " +
                                                std::to_string(n));
  }
  const std::int64_t diff = checked::sub(m, n);
  std::int64_t p = 2;
  while (!is_prime_number(p) || m % p == 0 || n % p == 0 || diff % p == 0) ++p;

  const IntegerLattice pz = IntegerLattice::from_columns(IntMatrix::Constant(1, 1, p));
  T2Witness w{p, {IntVector::Constant(1, m), pz}, {IntVector::Constant(1, n), pz}};
  if (!is_coprime_coset_lat(w.first.rep, pz) || !is_coprime_coset_lat(w.second.rep, pz) ||
      !std::holds_alternative<coset_intersection::Disjoint>(coset_intersect(w.first, w.second))) {
    throw std::logic_error("t2 witness failed its own certification");
  }
  return w;
}

}  // namespace golomb
