#include "golomb/zlattice.hpp"

#include <algorithm>

namespace golomb {

namespace {

void require_rank(Eigen::Index a, Eigen::Index b) {
  if (a != b) {
    throw Error(ErrorCode::RankMismatch, "ambient ranks " + std::to_string(a) + " and " + std::to_string(b));
  }
}

IntMatrix negated(const IntMatrix& a) {
  IntMatrix out = a;
  for (Eigen::Index j = 0; j < out.cols(); ++j) detail::negate_column(out, j);
  return out;
}

IntMatrix concat(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

}  // namespace

IntegerLattice::IntegerLattice(Eigen::Index ambient_rank) : rank_(ambient_rank), basis_(ambient_rank, 0) {
  if (ambient_rank <= 0) throw Error(ErrorCode::InvalidArgument, "ambient rank must be positive");
}

IntegerLattice IntegerLattice::whole(Eigen::Index ambient_rank) {
  return from_columns(IntMatrix::Identity(ambient_rank, ambient_rank));
}

std::optional<IntVector> IntegerLattice::coordinates(const IntVector& v) const {
  require_rank(rank_, v.size());
  IntVector rest = v;
  IntVector coeff(basis_.cols());
  // Forward substitution down the echelon: each pivot row fixes one coefficient.
  Eigen::Index col = 0;
  for (Eigen::Index r = 0; r < rank_; ++r) {
    if (col < basis_.cols() && basis_(r, col) != 0) {
      if (rest(r) % basis_(r, col) != 0) return std::nullopt;
      const std::int64_t q = rest(r) / basis_(r, col);
      coeff(col) = q;
      for (Eigen::Index i = r; i < rank_; ++i) rest(i) = checked::sub(rest(i), checked::mul(q, basis_(i, col)));
      ++col;
    } else if (rest(r) != 0) {
      return std::nullopt;
    }
  }
  return coeff;
}

bool IntegerLattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

std::string format_vector(const IntVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v(i));
  }
  return s + ")";
}

std::string IntegerLattice::format() const {
  std::string s = "[";
  for (Eigen::Index j = 0; j < basis_.cols(); ++j) {
    if (j) s += ',';
    s += format_vector(basis_.col(j));
  }
  return s + "]";
}

std::string LatticeCoset::format() const { return format_vector(rep) + "+" + lat.format(); }

IntegerLattice lat_from_generators(Eigen::Index n, const std::vector<IntVector>& vectors) {
  return IntegerLattice::from_columns(columns_matrix(n, vectors));
}

IntegerLattice lat_sum(const IntegerLattice& a, const IntegerLattice& b) {
  require_rank(a.ambient_rank(), b.ambient_rank());
  return IntegerLattice::from_columns(concat(a.basis(), b.basis()));
}

IntegerLattice lat_intersect(const IntegerLattice& a, const IntegerLattice& b) {
  require_rank(a.ambient_rank(), b.ambient_rank());
  if (a.is_zero() || b.is_zero()) return IntegerLattice(a.ambient_rank());
  // Kernel of [A | -B]: columns of the transform beyond the rank give (u, v)
  // with A·u = B·v, and A·u spans the intersection.
  const IntMatrix stacked = concat(a.basis(), negated(b.basis()));
  const auto dec = hermite_decomposition(stacked);
  const Eigen::Index rank = dec.basis.cols();
  const IntMatrix u = dec.transform.block(0, rank, a.rank(), stacked.cols() - rank);
  IntMatrix image = IntMatrix::Zero(a.ambient_rank(), u.cols());
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    for (Eigen::Index t = 0; t < a.rank(); ++t) {
      for (Eigen::Index i = 0; i < image.rows(); ++i) {
        image(i, j) = checked::add(image(i, j), checked::mul(a.basis()(i, t), u(t, j)));
      }
    }
  }
  return IntegerLattice::from_columns(image);
}

bool lat_contains(const IntegerLattice& a, const IntegerLattice& b) {
  require_rank(a.ambient_rank(), b.ambient_rank());
  for (Eigen::Index j = 0; j < b.basis().cols(); ++j) {
    if (!a.contains(b.basis().col(j))) return false;
  }
  return true;
}

LatticeQuotient lat_quotient(const IntegerLattice& n) {
  LatticeQuotient q;
  const auto inv = snf(n.basis());
  q.free_rank = n.ambient_rank() - static_cast<Eigen::Index>(inv.size());
  for (auto d : inv)
    if (d > 1) q.torsion.push_back(d);
  return q;
}

IdealOfZ lat_residual(const IntegerLattice& n) {
  const auto q = lat_quotient(n);
  if (q.free_rank > 0) return {0};
  return {q.torsion.empty() ? 1 : q.torsion.back()};
}

bool lat_is_prime(const IntegerLattice& n) {
  const auto q = lat_quotient(n);
  if (q.free_rank == 0 && q.torsion.empty()) return false;  // N = Z^n is not proper
  if (q.free_rank > 0) return q.torsion.empty();
  return is_prime_number(q.torsion.front()) && q.torsion.front() == q.torsion.back();
}

CosetIntersection coset_intersect(const LatticeCoset& c1, const LatticeCoset& c2) {
  namespace ci = coset_intersection;
  const Eigen::Index n = c1.lat.ambient_rank();
  require_rank(n, c2.lat.ambient_rank());
  require_rank(n, c1.rep.size());
  require_rank(n, c2.rep.size());

  // L1·u - L2·v = rep2 - rep1
  const IntMatrix system = concat(c1.lat.basis(), negated(c2.lat.basis()));
  const IntegerLattice span = IntegerLattice::from_columns(system);
  IntVector rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) rhs(i) = checked::sub(c2.rep(i), c1.rep(i));
  if (!span.contains(rhs)) return ci::Disjoint{};

  // Recover u from the transform: system·T = [H | 0], so system·(T·w) = H·w.
  const auto dec = hermite_decomposition(system);
  const IntegerLattice echelon = IntegerLattice::from_columns(dec.basis);
  const IntVector w = *echelon.coordinates(rhs);
  IntVector full = IntVector::Zero(system.cols());
  full.head(w.size()) = w;
  IntVector uv = IntVector::Zero(system.cols());
  for (Eigen::Index i = 0; i < system.cols(); ++i) {
    for (Eigen::Index j = 0; j < system.cols(); ++j) {
      uv(i) = checked::add(uv(i), checked::mul(dec.transform(i, j), full(j)));
    }
  }
  IntVector point = c1.rep;
  for (Eigen::Index t = 0; t < c1.lat.rank(); ++t) {
    for (Eigen::Index i = 0; i < n; ++i) {
      point(i) = checked::add(point(i), checked::mul(c1.lat.basis()(i, t), uv(t)));
    }
  }

  IntegerLattice common = lat_intersect(c1.lat, c2.lat);
  if (common.is_zero()) return ci::Points{{point}};
  return ci::Witness{std::move(point), std::move(common)};
}

bool is_coprime_coset_lat(const IntVector& rep, const IntegerLattice& n) {
  require_rank(n.ambient_rank(), rep.size());
  if (n.is_zero()) throw Error(ErrorCode::ZeroSubmodule, "coprime cosets need a nonzero submodule");
  IntMatrix gens(n.ambient_rank(), n.rank() + 1);
  gens << n.basis(), rep;
  return IntegerLattice::from_columns(gens) == IntegerLattice::whole(n.ambient_rank());
}

}  // namespace golomb
