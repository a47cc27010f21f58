#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace qwalk {

/// Pascal triangle of exact binomials C(n, k), 0 <= k <= n <= n_max.
/// Immutable after construction; safe to share between threads.
class BinomialTable {
 public:
  explicit BinomialTable(std::int64_t n_max);

  std::int64_t n_max() const { return n_max_; }
  /// C(n, k); zero when k < 0, k > n, or n < 0. n must not exceed n_max.
  const mpz_class& operator()(std::int64_t n, std::int64_t k) const;

 private:
  std::int64_t n_max_;
  std::vector<std::vector<mpz_class>> rows_;
};

}  // namespace qwalk
