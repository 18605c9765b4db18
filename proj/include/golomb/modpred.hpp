#pragma once

// Submodule predicates: exhaustive on finite modules, certificate checks on Z^n.
// Every exhaustive predicate returns its first counterexample (in lattice
// order) so that a negative answer can be re-validated independently.

#include <cstdint>
#include <optional>
#include <vector>

#include "golomb/finmod.hpp"
#include "golomb/zlattice.hpp"

namespace golomb {

/// A predicate result: holds iff no counterexample was found.
template <typename Witness>
struct Outcome {
  std::optional<Witness> counterexample;

  bool holds() const { return !counterexample.has_value(); }
  explicit operator bool() const { return holds(); }
};

/// a·m ∈ N with a ∉ (N:M) and m ∉ N.
struct PrimeWitness {
  std::int64_t scalar;
  Elem element;
};

/// Two submodules; meaning depends on the predicate (K ∩ L ⊆ N, or a μ-failure N, K).
struct PairWitness {
  Submodule first;
  Submodule second;
};

/// N + K1 = M = N + K2 but N + (K1 ∩ K2) ≠ M.
struct CoprimeWitness {
  Submodule n;
  Submodule k1;
  Submodule k2;
};

/// A maximal submodule that is not strongly irreducible, with the refuting pair.
struct MaximalWitness {
  Submodule maximal;
  PairWitness pair;
};

bool is_simple(const FiniteModule& m);
bool is_maximal(const Submodule& n, const FiniteModule& m);
std::vector<Submodule> maximal_submodules(const FiniteModule& m);

/// Errors: NotProper.
Outcome<PrimeWitness> is_prime(const Submodule& n, const FiniteModule& m);
Outcome<PairWitness> is_strongly_irreducible(const Submodule& n, const FiniteModule& m);
bool is_meet_irreducible(const FiniteModule& m);
Outcome<Submodule> is_multiplication(const FiniteModule& m);
Outcome<PairWitness> is_mu_module(const FiniteModule& m);
Outcome<CoprimeWitness> has_finite_coprime_condition(const FiniteModule& m);
Outcome<MaximalWitness> all_maximal_strongly_irreducible(const FiniteModule& m);

/// J(N): intersection of the maximal submodules containing N (M if there are none).
Submodule jacobson(const Submodule& n, const FiniteModule& m);
inline Submodule jacobson_radical(const FiniteModule& m) { return jacobson(zero_submodule(m), m); }

/// Certifies that N is not strongly irreducible in Z^n via K, L.
struct RefutationCertificate {
  IntegerLattice meet;     // K ∩ L, contained in N
  IntVector k_outside;     // basis vector of K not in N
  IntVector l_outside;     // basis vector of L not in N
};

/// Errors: NotARefutation, RankMismatch.
RefutationCertificate check_strongly_irreducible_witness_lat(const IntegerLattice& n, const IntegerLattice& k,
                                                            const IntegerLattice& l);

struct PredicateProfile {
  FiniteModule module;
  bool simple = false;
  bool meet_irreducible = false;
  Outcome<Submodule> multiplication;
  Outcome<PairWitness> mu_module;
  Outcome<CoprimeWitness> finite_coprime_condition;
  Outcome<MaximalWitness> all_maximal_strongly_irreducible;
  bool ann_prime = false;
  Submodule jacobson_radical;
  std::vector<Submodule> maximal_submodules;
};

PredicateProfile predicate_profile(const FiniteModule& m);

}  // namespace golomb
