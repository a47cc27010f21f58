#pragma once

// Verification suites: each compares two independent routes (or a state
// against an identity it must satisfy) and records the worst residual.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/core.hpp"

namespace qwalk {

enum class Suite {
  LineSymmetry,            // "lemma1": mirror identities of the line state
  HalfLineCorrespondence,  // "lemma2": half-line amplitudes from line amplitudes
  Reduction,               // "theorem1": half-line probabilities from the line walk
  ExactVsSim,
  InnerSplit,
  LimitNorm,
  KsConvergence,
  All,
};

/// CLI names: lemma1, lemma2, theorem1, exactVsSim, innerSplit, limitNorm,
/// ksConvergence, all.
std::string_view to_string(Suite suite);
Suite parse_suite(std::string_view text);

struct CheckResult {
  std::string name;
  double theta = 0.0;
  std::string theta_label;  // "pi/4" or shortest decimal
  std::int64_t t = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool skipped = false;  // no tolerance applies at this (theta, t); pass is true
  std::string note;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

inline constexpr double kIdentityTol = 1e-12;
inline constexpr double kRouteTolDouble = 1e-12;
inline constexpr double kRouteTolDD = 1e-9;
inline constexpr double kMassTol = 1e-8;
inline constexpr double kKsThreshold = 0.05;

// Residuals for a single time; states must share the same t.
double line_symmetry_residual(const LineState& line, const Coin& coin);
double correspondence_residual(const HalfLineState& half, const LineState& line);

struct ReductionResidual {
  double inner0 = 0.0;  // |P(X = x; 0) - P(Y = x)|
  double inner1 = 0.0;  // |P(X = x; 1) - P(Y = -x - 1)|
  double total = 0.0;   // |P(X = x) - P(Y = x) - P(Y = -x - 1)|
};
ReductionResidual reduction_residual(const Distribution& half, const Distribution& line);

/// Runs the suite for every coin and t. Formula-domain problems become failing
/// entries with an infinite residual rather than exceptions. LimitNorm and
/// KsConvergence do not depend on ts and report t = 0 / their own times.
VerificationReport run_checks(Suite suite, const std::vector<Coin>& coins,
                              const std::vector<std::int64_t>& ts);

}  // namespace qwalk
