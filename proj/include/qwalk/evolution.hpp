#pragma once

#include <cstdint>
#include <variant>

#include "qwalk/core.hpp"

namespace qwalk {

/// One step S~ C~ on the half line. The boundary sends the post-coin |0>
/// component at x = 0 to (0, |1>).
HalfLineState step_half_line(const HalfLineState& state, const Coin& coin);

/// One step on the line: |0> moves left, |1> moves right.
LineState step_line(const LineState& state, const Coin& coin);

using WalkState = std::variant<HalfLineState, LineState>;

/// Folds the step operation from the walk's initial state. steps < 0 throws.
WalkState evolve(WalkKind kind, const Coin& coin, std::int64_t steps);

HalfLineState evolve_half_line(const Coin& coin, std::int64_t steps);
LineState evolve_line(const Coin& coin, std::int64_t steps);

/// Probabilities below this are written as exact zeros.
inline constexpr double kProbabilityFloor = 1e-300;

Distribution distribution(const HalfLineState& state);
Distribution distribution(const LineState& state);
Distribution distribution(const WalkState& state);

}  // namespace qwalk
