#pragma once

// Exact integer kernels shared by the finite and lattice backends.
//
// Matrices are Eigen dense types templated on an integral scalar. Lattices
// are always column spans: the canonical Hermite form is lower echelon with
// positive pivots and every entry left of a pivot reduced into [0, pivot).
// All arithmetic is overflow-checked and raises Error(Overflow).

#include <Eigen/Core>

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "golomb/error.hpp"

namespace golomb {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<std::int64_t>;
using IntVector = VectorX<std::int64_t>;

namespace checked {

template <std::integral T>
constexpr T add(T a, T b) {
  T r{};
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition overflowed");
  return r;
}

template <std::integral T>
constexpr T sub(T a, T b) {
  T r{};
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer subtraction overflowed");
  return r;
}

template <std::integral T>
constexpr T mul(T a, T b) {
  T r{};
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication overflowed");
  return r;
}

template <std::integral T>
constexpr T neg(T a) {
  return sub(T{0}, a);
}

template <std::integral T>
constexpr T abs(T a) {
  return a < 0 ? neg(a) : a;
}

}  // namespace checked

/// Floor division for a nonzero divisor.
template <std::integral T>
constexpr T floor_div(T a, T b) {
  T q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q = checked::sub(q, T{1});
  return q;
}

/// Least nonnegative residue; `m` must be positive.
template <std::integral T>
constexpr T mod_floor(T a, T m) {
  T r = a % m;
  return r < 0 ? r + m : r;
}

template <std::integral T>
constexpr T gcd(T a, T b) {
  a = checked::abs(a);
  b = checked::abs(b);
  while (b != 0) {
    T t = a % b;
    a = b;
    b = t;
  }
  return a;
}

template <std::integral T>
constexpr T lcm(T a, T b) {
  if (a == 0 || b == 0) return 0;
  return checked::mul(checked::abs(a) / gcd(a, b), checked::abs(b));
}

/// Bezout coefficients: x*a + y*b = gcd >= 0.
template <std::integral T>
struct Bezout {
  T gcd;
  T x;
  T y;
};

template <std::integral T>
constexpr Bezout<T> extended_gcd(T a, T b) {
  T old_r = a, r = b;
  T old_s = 1, s = 0;
  T old_t = 0, t = 1;
  while (r != 0) {
    const T q = old_r / r;
    old_r = std::exchange(r, checked::sub(old_r, checked::mul(q, r)));
    old_s = std::exchange(s, checked::sub(old_s, checked::mul(q, s)));
    old_t = std::exchange(t, checked::sub(old_t, checked::mul(q, t)));
  }
  if (old_r < 0) return {checked::neg(old_r), checked::neg(old_s), checked::neg(old_t)};
  return {old_r, old_s, old_t};
}

/// An ideal of Z, identified by its nonnegative generator (0 is the zero ideal).
struct IdealOfZ {
  std::int64_t generator = 0;

  bool contains(std::int64_t x) const { return generator == 0 ? x == 0 : x % generator == 0; }
  bool is_whole() const { return generator == 1; }
  /// Prime ideals of Z: (0) and (p).
  bool is_prime() const;

  friend bool operator==(const IdealOfZ&, const IdealOfZ&) = default;
};

/// Sum of ideals is generated by the gcd.
inline IdealOfZ operator+(IdealOfZ a, IdealOfZ b) { return {gcd(a.generator, b.generator)}; }

IdealOfZ gcd_ideal(std::span<const std::int64_t> xs);
inline IdealOfZ gcd_ideal(std::initializer_list<std::int64_t> xs) {
  return gcd_ideal(std::span<const std::int64_t>(xs.begin(), xs.size()));
}

bool is_prime_number(std::int64_t n);

namespace detail {

template <typename Scalar>
void column_axpy(MatrixX<Scalar>& a, Eigen::Index dst, Scalar q, Eigen::Index src) {
  if (q == 0) return;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    a(i, dst) = checked::sub(a(i, dst), checked::mul(q, a(i, src)));
  }
}

template <typename Scalar>
void row_axpy(MatrixX<Scalar>& a, Eigen::Index dst, Scalar q, Eigen::Index src) {
  if (q == 0) return;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    a(dst, j) = checked::sub(a(dst, j), checked::mul(q, a(src, j)));
  }
}

template <typename Scalar>
void negate_column(MatrixX<Scalar>& a, Eigen::Index j) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, j) = checked::neg(a(i, j));
}

template <typename Scalar>
void negate_row(MatrixX<Scalar>& a, Eigen::Index i) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = checked::neg(a(i, j));
}

// Column echelon reduction in place. Returns the rank; `pivot_rows` receives
// the row of each pivot column. When `transform` is non-null it tracks the
// unimodular column operations.
template <typename Scalar>
Eigen::Index column_echelon(MatrixX<Scalar>& h, MatrixX<Scalar>* transform,
                            std::vector<Eigen::Index>& pivot_rows) {
  const Eigen::Index rows = h.rows();
  const Eigen::Index cols = h.cols();
  auto axpy = [&](Eigen::Index dst, Scalar q, Eigen::Index src) {
    column_axpy(h, dst, q, src);
    if (transform) column_axpy(*transform, dst, q, src);
  };
  auto swap = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    h.col(a).swap(h.col(b));
    if (transform) transform->col(a).swap(transform->col(b));
  };

  pivot_rows.clear();
  Eigen::Index pc = 0;
  for (Eigen::Index r = 0; r < rows && pc < cols; ++r) {
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index j = pc; j < cols; ++j) {
        if (h(r, j) != 0 && (best < 0 || checked::abs(h(r, j)) < checked::abs(h(r, best)))) best = j;
      }
      if (best < 0) break;
      swap(pc, best);
      bool cleared = true;
      for (Eigen::Index j = pc + 1; j < cols; ++j) {
        if (h(r, j) == 0) continue;
        axpy(j, h(r, j) / h(r, pc), pc);
        if (h(r, j) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(r, pc) == 0) continue;
    if (h(r, pc) < 0) {
      negate_column(h, pc);
      if (transform) negate_column(*transform, pc);
    }
    for (Eigen::Index j = 0; j < pc; ++j) axpy(j, floor_div(h(r, j), h(r, pc)), pc);
    pivot_rows.push_back(r);
    ++pc;
  }
  return pc;
}

}  // namespace detail

template <typename Scalar>
struct HermiteDecomposition {
  /// Canonical basis, one column per pivot.
  MatrixX<Scalar> basis;
  /// Unimodular: input * transform = [basis | 0].
  MatrixX<Scalar> transform;
  std::vector<Eigen::Index> pivot_rows;
};

template <typename Derived>
HermiteDecomposition<typename Derived::Scalar> hermite_decomposition(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> h = m;
  MatrixX<Scalar> u = MatrixX<Scalar>::Identity(m.cols(), m.cols());
  std::vector<Eigen::Index> pivots;
  const Eigen::Index rank = detail::column_echelon(h, &u, pivots);
  return {h.leftCols(rank), std::move(u), std::move(pivots)};
}

/// Canonical column-style Hermite normal form of the lattice spanned by the columns of `m`.
template <typename Derived>
MatrixX<typename Derived::Scalar> hnf(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> h = m;
  std::vector<Eigen::Index> pivots;
  const Eigen::Index rank = detail::column_echelon<Scalar>(h, nullptr, pivots);
  return h.leftCols(rank);
}

template <typename Scalar>
struct SmithDecomposition {
  MatrixX<Scalar> diagonal;
  /// left * input * right = diagonal, both unimodular.
  MatrixX<Scalar> left;
  MatrixX<Scalar> right;
  /// Nonzero diagonal entries d1 | d2 | ... | dr.
  std::vector<Scalar> invariants;
};

template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_decomposition(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Eigen::Index;
  MatrixX<Scalar> d = m;
  MatrixX<Scalar> u = MatrixX<Scalar>::Identity(m.rows(), m.rows());
  MatrixX<Scalar> v = MatrixX<Scalar>::Identity(m.cols(), m.cols());
  const Index rows = d.rows();
  const Index cols = d.cols();
  std::vector<Scalar> invariants;

  for (Index t = 0; t < std::min(rows, cols); ++t) {
    bool found = false;
    for (;;) {
      Index pr = -1, pc = -1;
      for (Index j = t; j < cols; ++j) {
        for (Index i = t; i < rows; ++i) {
          if (d(i, j) != 0 && (pr < 0 || checked::abs(d(i, j)) < checked::abs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) break;
      found = true;
      if (pr != t) {
        d.row(pr).swap(d.row(t));
        u.row(pr).swap(u.row(t));
      }
      if (pc != t) {
        d.col(pc).swap(d.col(t));
        v.col(pc).swap(v.col(t));
      }
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Scalar q = d(i, t) / d(t, t);
        detail::row_axpy(d, i, q, t);
        detail::row_axpy(u, i, q, t);
        if (d(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Scalar q = d(t, j) / d(t, t);
        detail::column_axpy(d, j, q, t);
        detail::column_axpy(v, j, q, t);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility chain: fold an offending row into the pivot row and retry.
      Index bad_row = -1;
      for (Index i = t + 1; i < rows && bad_row < 0; ++i) {
        for (Index j = t + 1; j < cols; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      detail::row_axpy(d, t, Scalar{-1}, bad_row);
      detail::row_axpy(u, t, Scalar{-1}, bad_row);
    }
    if (!found) break;
    if (d(t, t) < 0) {
      detail::negate_row(d, t);
      detail::negate_row(u, t);
    }
    invariants.push_back(d(t, t));
  }
  return {std::move(d), std::move(u), std::move(v), std::move(invariants)};
}

/// Smith normal form diagonal, nonzero entries only.
template <typename Derived>
std::vector<typename Derived::Scalar> snf(const Eigen::MatrixBase<Derived>& m) {
  return smith_decomposition(m).invariants;
}

/// Builds a matrix whose columns are the given vectors.
IntMatrix columns_matrix(Eigen::Index rows, const std::vector<IntVector>& columns);

}  // namespace golomb
