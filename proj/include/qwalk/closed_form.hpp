#pragma once

// Closed-form probability tables for both walks, from the combinatorial sums
// over binomial coefficients, in double, double-double, or exact rational
// arithmetic (the last only at theta = pi/4).

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qwalk/core.hpp"
#include "qwalk/double_double.hpp"

namespace qwalk {

enum class Precision { Double, DoubleDouble, ExactQ2 };

std::string_view to_string(Precision precision);
Precision parse_precision(std::string_view text);

struct ExactParams {
  Precision precision = Precision::DoubleDouble;
};

/// Which half-line probability a closed-form table holds.
enum class HalfLineSelection { Inner0, Inner1, Total };

/// Positions with their closed-form probability, ascending x. Positions the
/// formulas do not list have probability exactly zero.
template <class Value>
struct ValueTable {
  WalkKind kind = WalkKind::Line;
  std::int64_t t = 0;
  std::vector<std::pair<std::int64_t, Value>> rows;
};

using DDTable = ValueTable<DD>;
using RationalTable = ValueTable<mpq_class>;

/// Negative closed-form values within this of zero are taken as zero; anything
/// more negative raises PrecisionError.
inline constexpr double kNegativeClampTol = 1e-13;

/// The float paths bound their own rounding error; a table whose bound exceeds
/// this absolute error raises PrecisionError instead of returning noise.
inline constexpr double kClosedFormErrorBudget = 1e-10;

// Line walk from the delocalized initial state: total probability only.
// Throws FormulaDomainError for degenerate coins and InvalidArgument for t < 1.
Distribution line_exact(const Coin& coin, std::int64_t t, ExactParams params = {});
DDTable line_exact_dd(const Coin& coin, std::int64_t t);
/// Requires theta = pi/4 exactly.
RationalTable line_exact_rational(const Coin& coin, std::int64_t t);

// Half line, per inner state (p0 or p1 column set) and in total (neither set).
Distribution half_line_exact_by_inner(const Coin& coin, std::int64_t t, int inner,
                                      ExactParams params = {});
Distribution half_line_exact_total(const Coin& coin, std::int64_t t, ExactParams params = {});
DDTable half_line_exact_dd(const Coin& coin, std::int64_t t, HalfLineSelection selection);
RationalTable half_line_exact_rational(const Coin& coin, std::int64_t t,
                                       HalfLineSelection selection);

// ---------------------------------------------------------------------------
// Exact unitary evolution at theta = pi/4 in Q(sqrt2) + iQ(sqrt2).

struct ExactRow {
  std::int64_t x = 0;
  mpq_class p0;
  mpq_class p1;
  mpq_class p;
};

struct ExactDistribution {
  WalkKind kind = WalkKind::HalfLine;
  std::int64_t t = 0;
  std::vector<ExactRow> rows;  // full support window, ascending x

  const ExactRow* find(std::int64_t x) const;
};

inline constexpr std::int64_t kOracleMaxSteps = 200;

/// Drops the half-line phase e^{-i pi/4}, which leaves probabilities unchanged.
/// Throws ResourceError above kOracleMaxSteps.
ExactDistribution q2_oracle_distribution(WalkKind kind, std::int64_t t);
/// Calls visit for every t = 0..t_max from a single evolution.
void q2_oracle_series(WalkKind kind, std::int64_t t_max,
                      const std::function<void(const ExactDistribution&)>& visit);

Distribution to_distribution(const ExactDistribution& exact);

}  // namespace qwalk
