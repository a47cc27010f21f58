#include "qwalk/binomial.hpp"

#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {
const mpz_class kZero(0);
}

BinomialTable::BinomialTable(std::int64_t n_max) : n_max_(n_max) {
  if (n_max < 0) throw InvalidArgument("binomial table size must be nonnegative");
  rows_.resize(static_cast<std::size_t>(n_max + 1));
  rows_[0] = {mpz_class(1)};
  for (std::size_t n = 1; n < rows_.size(); ++n) {
    const auto& prev = rows_[n - 1];
    auto& row = rows_[n];
    row.resize(n + 1);
    row[0] = 1;
    row[n] = 1;
    for (std::size_t k = 1; k < n; ++k) row[k] = prev[k - 1] + prev[k];
  }
}

const mpz_class& BinomialTable::operator()(std::int64_t n, std::int64_t k) const {
  if (n > n_max_) {
    throw InvalidArgument("binomial row " + std::to_string(n) + " beyond table size " +
                          std::to_string(n_max_));
  }
  if (n < 0 || k < 0 || k > n) return kZero;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace qwalk
