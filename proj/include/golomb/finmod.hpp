#pragma once

// Finite abelian groups regarded as Z-modules.
//
// A module is given by its invariant factors d1 | d2 | ... | dk. Elements are
// coordinate tuples (a1, ..., ak), 0 <= ai < di, enumerated lexicographically;
// everything below works on enumeration indices (Elem) and PointSets over them.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "golomb/point_set.hpp"
#include "golomb/zarith.hpp"

namespace golomb {

using Elem = std::size_t;
using Coords = std::vector<std::int64_t>;

/// Enumeration bound on |M|; GOLOMB_MAX_ORDER overrides the default of 256.
std::size_t default_max_order();

class FiniteModule {
 public:
  /// The order-1 marker object; only produced by quotients.
  static FiniteModule trivial();

  const std::vector<std::int64_t>& invariant_factors() const;
  std::size_t rank() const { return invariant_factors().size(); }
  std::size_t order() const;
  std::int64_t exponent() const;
  bool is_trivial() const { return order() == 1; }
  IdealOfZ annihilator() const { return {exponent()}; }
  bool is_cyclic() const { return rank() <= 1; }

  Elem zero() const { return 0; }
  Coords coords(Elem x) const;
  /// Reduces each coordinate modulo its factor.
  Elem index_of(std::span<const std::int64_t> coords) const;

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem scale(std::int64_t k, Elem a) const;
  /// Additive order of an element.
  std::int64_t element_order(Elem a) const;
  /// The unit coordinate vectors, a generating set of M.
  std::vector<Elem> standard_generators() const;

  PointSet empty_set() const { return PointSet(order()); }
  PointSet all() const { return PointSet::full(order()); }

  /// Member sets of every submodule, ordered by (size, member list); cached.
  const std::vector<PointSet>& submodule_sets() const;

  /// "(a1,...,ak)"
  std::string format(Elem x) const;
  /// CLI literal, e.g. "2x4"; "1" for the trivial module.
  std::string spec() const;

  friend bool operator==(const FiniteModule& a, const FiniteModule& b) {
    return a.impl_ == b.impl_ || a.invariant_factors() == b.invariant_factors();
  }

 private:
  struct Impl;
  explicit FiniteModule(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  friend FiniteModule make_module(std::vector<std::int64_t>, std::size_t);
  std::shared_ptr<const Impl> impl_;
};

/// Errors: EmptyFactorList, NonDividingChain, SizeCap. Factors must be >= 2.
FiniteModule make_module(std::vector<std::int64_t> invariant_factors,
                         std::size_t max_order = default_max_order());

/// Normalizes an arbitrary factor list (e.g. {4, 2} or {6, 2}) to an invariant-factor chain.
std::vector<std::int64_t> normalize_factors(std::span<const std::int64_t> factors);

class Submodule {
 public:
  Submodule(FiniteModule parent, PointSet members)
      : parent_(std::move(parent)), members_(std::move(members)) {}

  const FiniteModule& parent() const { return parent_; }
  const PointSet& members() const { return members_; }
  std::size_t order() const { return members_.count(); }
  bool contains(Elem x) const { return members_.test(x); }
  bool is_zero() const { return order() == 1; }
  bool is_whole() const { return order() == parent_.order(); }
  bool is_subset_of(const Submodule& other) const { return members_.is_subset_of(other.members_); }
  /// A generating set, greedy in enumeration order.
  std::vector<Elem> generators() const;
  /// "{(0),(4)}"
  std::string format() const;

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  FiniteModule parent_;
  PointSet members_;
};

Submodule zero_submodule(const FiniteModule& m);
Submodule whole_module(const FiniteModule& m);
/// Smallest submodule containing the given elements.
Submodule generated(const FiniteModule& m, std::span<const Elem> gens);
/// Validates closure; throws InvalidArgument if `members` is not a subgroup.
Submodule submodule_from_members(const FiniteModule& m, const PointSet& members);

std::vector<Submodule> enumerate_submodules(const FiniteModule& m);

/// N + K. Errors: ParentMismatch.
Submodule sum(const Submodule& n, const Submodule& k);
/// N ∩ K. Errors: ParentMismatch.
Submodule intersect(const Submodule& n, const Submodule& k);
/// Rm, the cyclic submodule generated by `x`.
Submodule cyclic(const FiniteModule& m, Elem x);

/// N + K = M, decided by |N||K| = |M||N ∩ K| without forming the sum.
bool is_comaximal(const PointSet& n, const PointSet& k, std::size_t order);
bool is_comaximal(const Submodule& n, const Submodule& k);

/// (N:M) = {r : rM ⊆ N}; the generator is the least positive such r.
IdealOfZ residual(const Submodule& n, const FiniteModule& m);
IdealOfZ residual(const FiniteModule& m, const PointSet& n);

/// r·M as a submodule.
Submodule ideal_times_module(const IdealOfZ& ideal, const FiniteModule& m);

/// x + S as a point set.
PointSet translate(const FiniteModule& m, const PointSet& s, Elem x);

struct Coset {
  Elem rep;  // enumeration-least member
  Submodule sub;

  PointSet points() const { return translate(sub.parent(), sub.members(), rep); }
  std::string format() const;
  friend bool operator==(const Coset&, const Coset&) = default;
};

/// x + N with canonical representative.
Coset make_coset(Elem x, const Submodule& n);

struct Quotient {
  FiniteModule module;
  /// projection[x] is the image of x in `module`.
  std::vector<Elem> projection;

  Elem project(Elem x) const { return projection[x]; }
};

/// M/N via the Smith form of the relation matrix.
Quotient quotient(const FiniteModule& m, const Submodule& n);

enum class CrtPath { Residual, Exhaustive };

struct CrtSolution {
  Elem z;
  CrtPath path;
};

/// z with z ≡ x (mod N) and z ≡ y (mod K), given N + K = M.
/// The residual path writes 1 = a + b with a ∈ (K:M), b ∈ (N:M) and returns
/// a·x + b·y; if the residuals are not coprime it searches M exhaustively.
/// Errors: ParentMismatch, NotCoprime, NoSolution.
CrtSolution crt_solve(Elem x, Elem y, const Submodule& n, const Submodule& k);

}  // namespace golomb
