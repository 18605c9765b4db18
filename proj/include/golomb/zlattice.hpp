#pragma once

// Submodules of Z^n as integer lattices held in canonical Hermite form.
// Nothing here enumerates submodules; predicates are certificate checkers.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "golomb/zarith.hpp"

namespace golomb {

class IntegerLattice {
 public:
  /// The zero lattice in Z^n.
  explicit IntegerLattice(Eigen::Index ambient_rank);
  /// Canonicalizes the column span of `generators`.
  template <typename Derived>
  static IntegerLattice from_columns(const Eigen::MatrixBase<Derived>& generators) {
    IntegerLattice lat(generators.rows());
    lat.basis_ = hnf(generators.template cast<std::int64_t>().eval());
    return lat;
  }
  static IntegerLattice whole(Eigen::Index ambient_rank);

  Eigen::Index ambient_rank() const { return rank_; }
  /// Canonical HNF basis, one column per pivot.
  const IntMatrix& basis() const { return basis_; }
  Eigen::Index rank() const { return basis_.cols(); }
  bool is_zero() const { return basis_.cols() == 0; }

  bool contains(const IntVector& v) const;
  /// Integer coordinates of `v` in basis(), if v is in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;

  /// "[(2,0),(0,2)]"
  std::string format() const;

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.rank_ == b.rank_ && a.basis_.cols() == b.basis_.cols() && a.basis_ == b.basis_;
  }

 private:
  Eigen::Index rank_;
  IntMatrix basis_;
};

/// Errors: RankMismatch.
IntegerLattice lat_from_generators(Eigen::Index n, const std::vector<IntVector>& vectors);

IntegerLattice lat_sum(const IntegerLattice& a, const IntegerLattice& b);
IntegerLattice lat_intersect(const IntegerLattice& a, const IntegerLattice& b);
/// B ⊆ A
bool lat_contains(const IntegerLattice& a, const IntegerLattice& b);

/// (N : Z^n): the least d >= 0 with d·Z^n ⊆ N; 0 iff rank(N) < n.
IdealOfZ lat_residual(const IntegerLattice& n);

/// Invariant factors and free rank of Z^n / N.
struct LatticeQuotient {
  std::vector<std::int64_t> torsion;  // invariant factors > 1
  Eigen::Index free_rank = 0;
};
LatticeQuotient lat_quotient(const IntegerLattice& n);

/// Prime submodule test on Z^n: N proper and Z^n/N torsion-free, or
/// Z^n/N ≅ (Z_p)^r for a single prime p.
bool lat_is_prime(const IntegerLattice& n);

struct LatticeCoset {
  IntVector rep;
  IntegerLattice lat;

  bool contains(const IntVector& v) const { return lat.contains(v - rep); }
  /// "(1,1)+[(1,0)]"
  std::string format() const;
};

namespace coset_intersection {
struct Disjoint {};
/// A full coset of L1 ∩ L2 (nonzero), represented by one witness.
struct Witness {
  IntVector point;
  IntegerLattice common;
};
/// L1 ∩ L2 = 0: the intersection is the explicit point list.
struct Points {
  std::vector<IntVector> points;
};
}  // namespace coset_intersection

using CosetIntersection =
    std::variant<coset_intersection::Disjoint, coset_intersection::Witness, coset_intersection::Points>;

/// Solves rep1 + L1·u = rep2 + L2·v over Z. Errors: RankMismatch.
CosetIntersection coset_intersect(const LatticeCoset& c1, const LatticeCoset& c2);

/// N + Z·rep = Z^n. Errors: ZeroSubmodule, RankMismatch.
bool is_coprime_coset_lat(const IntVector& rep, const IntegerLattice& n);

std::string format_vector(const IntVector& v);

}  // namespace golomb
