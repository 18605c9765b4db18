#pragma once

// Coprime-coset bases and the finite topologies they generate.
//
// Points of a space are local indices 0..ground.size()-1; ground[i] is the
// label of point i (a module element index for Golomb spaces). In a finite
// space every point x has a minimal open neighborhood U(x), the intersection
// of the generating sets containing x; closure, indiscrete points, separation
// and continuity are all decided from U, so they work on a basis without
// materializing every open set.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "golomb/finmod.hpp"
#include "golomb/modpred.hpp"
#include "golomb/point_set.hpp"
#include "golomb/zlattice.hpp"

namespace golomb {

/// Open-set bound for materialization; GOLOMB_MAX_OPENS overrides the default of 4096.
std::size_t default_max_opens();

struct CoprimeBasis {
  FiniteModule module;
  /// Ordered by (submodule lattice position, representative).
  std::vector<Coset> cosets;

  std::vector<PointSet> sets() const;
};

/// All m + N with N ≠ 0 and Rm + N = M, one per point set.
CoprimeBasis coprime_basis(const FiniteModule& m);

struct BasisCounterexample {
  Elem point;
  /// Both empty when `point` is not covered.
  std::optional<Coset> first;
  std::optional<Coset> second;
};

Outcome<BasisCounterexample> check_basis_axioms(const CoprimeBasis& basis);

/// A ground set with an explicit family of opens (closed under unions and intersections).
struct FiniteTopology {
  std::vector<std::size_t> ground;
  std::vector<PointSet> opens;
};

/// A ground set with a generating family; the topology is the one it generates.
struct BasisSpace {
  std::vector<std::size_t> ground;
  std::vector<PointSet> basis;
};

BasisSpace as_basis_space(const FiniteTopology& t);
/// G̃(M) given by its coprime basis.
BasisSpace golomb_space(const CoprimeBasis& basis);
/// G(M): the subspace on M - {0}.
BasisSpace punctured(const BasisSpace& full);

/// Union closure of the family. Errors: OpenSetCap.
FiniteTopology generate_topology(const BasisSpace& space, std::size_t max_opens = default_max_opens());
/// Errors: NotABasis, OpenSetCap.
FiniteTopology generate_topology(const CoprimeBasis& basis, std::size_t max_opens = default_max_opens());

FiniteTopology discrete_topology(std::size_t points);
FiniteTopology indiscrete_topology(std::size_t points);
/// Checks the FiniteTopology invariants.
bool is_topology(const FiniteTopology& t);

/// `subset` is over local points of `t`; the result's ground keeps the labels.
FiniteTopology subspace(const FiniteTopology& t, const PointSet& subset);
BasisSpace subspace(const BasisSpace& t, const PointSet& subset);

/// U(x) for every point.
std::vector<PointSet> minimal_neighborhoods(const BasisSpace& t);

PointSet closure(const BasisSpace& t, const PointSet& s);
PointSet closure(const FiniteTopology& t, const PointSet& s);
PointSet indiscrete_points(const BasisSpace& t);
PointSet indiscrete_points(const FiniteTopology& t);
bool is_indiscrete(const BasisSpace& t);

using PointPair = std::pair<std::size_t, std::size_t>;

struct SeparationReport {
  bool t0 = true;
  bool t1 = true;
  bool t2 = true;
  /// First pair that cannot be separated under each axiom (local indices).
  std::optional<PointPair> t0_failure;
  std::optional<PointPair> t1_failure;
  std::optional<PointPair> t2_failure;
};

SeparationReport separation(const BasisSpace& t);
SeparationReport separation(const FiniteTopology& t);

/// Disjoint opens U ∋ x, V ∋ y, if any.
std::optional<std::pair<PointSet, PointSet>> separating_opens(const BasisSpace& t, std::size_t x, std::size_t y);

struct ContinuityWitness {
  enum class Map { Addition, Negation } map;
  /// An open set whose preimage is not open.
  PointSet open;
  /// A preimage point with no basic neighborhood inside the preimage (b unused for negation).
  Elem a;
  Elem b;
};

/// Continuity of (a, b) -> a + b and a -> -a. `t.ground` must list every element of `m` in order.
Outcome<ContinuityWitness> is_topological_group(const FiniteModule& m, const BasisSpace& t);
Outcome<ContinuityWitness> is_topological_group(const FiniteModule& m, const FiniteTopology& t);

/// {(a, b) : a + b ∈ open}, in lexicographic order.
std::vector<std::pair<Elem, Elem>> addition_preimage(const FiniteModule& m, const PointSet& open);

/// First pair of `pairs` with no product neighborhood U(a) × U(b) inside `pairs`; nullopt iff open.
std::optional<std::pair<Elem, Elem>> product_interior_failure(const BasisSpace& t,
                                                              const std::vector<std::pair<Elem, Elem>>& pairs);

struct T2Witness {
  std::int64_t prime;
  LatticeCoset first;
  LatticeCoset second;
};

/// Disjoint coprime cosets m + pZ, n + pZ with p the least prime dividing none of m, n, m - n.
/// Errors: InvalidArgument (m = n or a zero argument).
T2Witness t2_witness_integers(std::int64_t m, std::int64_t n);

}  // namespace golomb
