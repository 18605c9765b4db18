#include "golomb/zarith.hpp"

namespace golomb {

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

bool IdealOfZ::is_prime() const { return generator == 0 || is_prime_number(generator); }

IdealOfZ gcd_ideal(std::span<const std::int64_t> xs) {
  std::int64_t g = 0;
  for (std::int64_t x : xs) g = gcd(g, x);
  return {g};
}

IntMatrix columns_matrix(Eigen::Index rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) {
      throw Error(ErrorCode::RankMismatch, "column " + std::to_string(j) + " has length " +
                                               std::to_string(columns[j].size()) + ", expected " +
                                               std::to_string(rows));
    }
    m.col(static_cast<Eigen::Index>(j)) = columns[j];
  }
  return m;
}

}  // namespace golomb
