#include "golomb/modpred.hpp"

#include <unordered_map>

namespace golomb {

namespace {

void require_parent(const Submodule& n, const FiniteModule& m) {
  if (!(n.parent() == m)) throw Error(ErrorCode::ParentMismatch, "submodule is not in " + m.spec());
}

Submodule at(const FiniteModule& m, const PointSet& s) { return {m, s}; }

// Strong irreducibility of the member set `n` against the whole lattice.
std::optional<PairWitness> si_counterexample(const FiniteModule& m, const PointSet& n) {
  const auto& lattice = m.submodule_sets();
  std::vector<const PointSet*> outside;
  for (const auto& k : lattice)
    if (!k.is_subset_of(n)) outside.push_back(&k);
  for (std::size_t i = 0; i < outside.size(); ++i) {
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      if (PointSet::meet_within(*outside[i], *outside[j], n)) {
        return PairWitness{at(m, *outside[i]), at(m, *outside[j])};
      }
    }
  }
  return std::nullopt;
}

bool is_maximal_set(const FiniteModule& m, const PointSet& n) {
  if (n.count() == m.order()) return false;
  for (const auto& k : m.submodule_sets()) {
    if (k.count() > n.count() && k.count() < m.order() && n.is_subset_of(k)) return false;
  }
  return true;
}

}  // namespace

bool is_simple(const FiniteModule& m) { return !m.is_trivial() && m.submodule_sets().size() == 2; }

bool is_maximal(const Submodule& n, const FiniteModule& m) {
  require_parent(n, m);
  return is_maximal_set(m, n.members());
}

std::vector<Submodule> maximal_submodules(const FiniteModule& m) {
  std::vector<Submodule> out;
  for (const auto& s : m.submodule_sets())
    if (is_maximal_set(m, s)) out.emplace_back(m, s);
  return out;
}

Outcome<PrimeWitness> is_prime(const Submodule& n, const FiniteModule& m) {
  require_parent(n, m);
  if (n.is_whole()) throw Error(ErrorCode::NotProper, "prime submodules are proper");
  const IdealOfZ res = residual(n, m);
  for (std::int64_t a = 0; a < m.exponent(); ++a) {
    if (res.contains(a)) continue;
    for (Elem x = 0; x < m.order(); ++x) {
      if (!n.contains(x) && n.contains(m.scale(a, x))) return {PrimeWitness{a, x}};
    }
  }
  return {};
}

Outcome<PairWitness> is_strongly_irreducible(const Submodule& n, const FiniteModule& m) {
  require_parent(n, m);
  return {si_counterexample(m, n.members())};
}

bool is_meet_irreducible(const FiniteModule& m) { return is_strongly_irreducible(zero_submodule(m), m).holds(); }

Outcome<Submodule> is_multiplication(const FiniteModule& m) {
  for (const auto& s : m.submodule_sets()) {
    const Submodule n = at(m, s);
    if (!(ideal_times_module(residual(m, s), m) == n)) return {n};
  }
  return {};
}

Outcome<PairWitness> is_mu_module(const FiniteModule& m) {
  const auto& lattice = m.submodule_sets();
  std::vector<IdealOfZ> res;
  res.reserve(lattice.size());
  for (const auto& s : lattice) res.push_back(residual(m, s));
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = i + 1; j < lattice.size(); ++j) {
      const IdealOfZ expected = res[i] + res[j];
      if (expected.is_whole() && is_comaximal(lattice[i], lattice[j], m.order())) continue;
      const Submodule total = sum(at(m, lattice[i]), at(m, lattice[j]));
      if (!(residual(m, total.members()) == expected)) return {PairWitness{at(m, lattice[i]), at(m, lattice[j])}};
    }
  }
  return {};
}

Outcome<CoprimeWitness> has_finite_coprime_condition(const FiniteModule& m) {
  const auto& lattice = m.submodule_sets();
  const std::size_t order = m.order();
  std::vector<const PointSet*> partners;
  for (const auto& n : lattice) {
    if (n.count() == order) continue;
    partners.clear();
    for (const auto& k : lattice) {
      if (k.count() < order && is_comaximal(n, k, order)) partners.push_back(&k);
    }
    for (std::size_t i = 0; i < partners.size(); ++i) {
      for (std::size_t j = i + 1; j < partners.size(); ++j) {
        if (!is_comaximal(n, *partners[i] & *partners[j], order)) {
          return {CoprimeWitness{at(m, n), at(m, *partners[i]), at(m, *partners[j])}};
        }
      }
    }
  }
  return {};
}

Outcome<MaximalWitness> all_maximal_strongly_irreducible(const FiniteModule& m) {
  for (const auto& p : m.submodule_sets()) {
    if (!is_maximal_set(m, p)) continue;
    if (auto w = si_counterexample(m, p)) return {MaximalWitness{at(m, p), std::move(*w)}};
  }
  return {};
}

Submodule jacobson(const Submodule& n, const FiniteModule& m) {
  require_parent(n, m);
  PointSet acc = m.all();
  for (const auto& p : m.submodule_sets()) {
    if (n.members().is_subset_of(p) && is_maximal_set(m, p)) acc &= p;
  }
  return at(m, acc);
}

RefutationCertificate check_strongly_irreducible_witness_lat(const IntegerLattice& n, const IntegerLattice& k,
                                                            const IntegerLattice& l) {
  IntegerLattice meet = lat_intersect(k, l);
  if (!lat_contains(n, meet)) {
    throw Error(ErrorCode::NotARefutation, "K ∩ L = " + meet.format() + " is not contained in N = " + n.format());
  }
  auto outside = [&](const IntegerLattice& sub, const char* name) {
    for (Eigen::Index j = 0; j < sub.basis().cols(); ++j) {
      if (!n.contains(sub.basis().col(j))) return IntVector(sub.basis().col(j));
    }
    throw Error(ErrorCode::NotARefutation, std::string(name) + " = " + sub.format() + " is contained in N");
  };
  IntVector k_out = outside(k, "K");
  IntVector l_out = outside(l, "L");
  return {std::move(meet), std::move(k_out), std::move(l_out)};
}

PredicateProfile predicate_profile(const FiniteModule& m) {
  return PredicateProfile{
      .module = m,
      .simple = is_simple(m),
      .meet_irreducible = is_meet_irreducible(m),
      .multiplication = is_multiplication(m),
      .mu_module = is_mu_module(m),
      .finite_coprime_condition = has_finite_coprime_condition(m),
      .all_maximal_strongly_irreducible = all_maximal_strongly_irreducible(m),
      .ann_prime = m.annihilator().is_prime(),
      .jacobson_radical = jacobson_radical(m),
      .maximal_submodules = maximal_submodules(m),
  };
}

}  // namespace golomb
