#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/double_double.hpp"

namespace qwalk {

using Complex = std::complex<double>;

/// theta = num/den * pi, kept in lowest terms with den > 0.
struct PiFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const PiFraction&, const PiFraction&) = default;
};

/// A coin angle: radians, plus the exact rational multiple of pi when the
/// caller supplied one ("pi/4", "2pi/5").
struct Angle {
  double radians = 0.0;
  std::optional<PiFraction> pi_fraction;
};

/// Parses "0.5", "-1e-3", "pi", "pi/4", "2pi/5", "3*pi/4", "-pi/6".
/// Throws InvalidArgument on anything else or on a non-finite value.
Angle parse_angle(std::string_view text);

/// Canonical text for an angle: "pi/4" style when exact, else shortest
/// round-trip decimal radians.
std::string format_angle(const Angle& angle);

/// The real reflection coin [[c, s], [s, -c]].
struct Coin {
  double theta = 0.0;
  double c = 1.0;
  double s = 0.0;
  // Rounding residuals of c and s. The evolution applies c + c_lo: with the
  // rounded pair alone c^2 + s^2 misses 1 by ~1e-16, and that factor
  // compounds into a 1e-12 norm drift over 1e4 steps.
  double c_lo = 0.0;
  double s_lo = 0.0;
  // cos^2 and sin^2 to double-double accuracy (exact for multiples of pi/4
  // and pi/6 given as fractions). The closed-form sums only need these.
  DD cos_sq{1.0};
  DD sin_sq{0.0};
  std::optional<PiFraction> pi_fraction;

  Angle angle() const { return {theta, pi_fraction}; }
};

Coin make_coin(double theta);
Coin make_coin(const PiFraction& fraction);
Coin make_coin(const Angle& angle);

/// theta in {0, pi/2, pi, 3pi/2} (mod 2pi), up to |cos|, |sin| < 1e-12.
bool is_degenerate(const Coin& coin);
/// theta in {0, pi} (mod 2pi): the hypothesis of the copy identities fails.
bool is_reflection_only(const Coin& coin);
/// theta == pi/4 given exactly as a fraction (mod 2pi).
bool is_exact_quarter_pi(const Coin& coin);

struct AmplitudePair {
  Complex a0{};
  Complex a1{};

  double norm_sq() const { return std::norm(a0) + std::norm(a1); }
};

/// Walk on {0, 1, 2, ...}. amps[x] holds position x for x = 0..t.
class HalfLineState {
 public:
  HalfLineState(std::int64_t t, std::vector<AmplitudePair> amps);

  std::int64_t t() const { return t_; }
  const std::vector<AmplitudePair>& amps() const { return amps_; }
  /// Zero pair outside [0, t].
  AmplitudePair at(std::int64_t x) const;
  double norm_sq() const;

 private:
  std::int64_t t_;
  std::vector<AmplitudePair> amps_;
};

/// Walk on Z. amps[i] holds position offset() + i, window [-t-1, t].
class LineState {
 public:
  LineState(std::int64_t t, std::vector<AmplitudePair> amps);

  std::int64_t t() const { return t_; }
  std::int64_t offset() const { return -t_ - 1; }
  const std::vector<AmplitudePair>& amps() const { return amps_; }
  AmplitudePair at(std::int64_t x) const;
  double norm_sq() const;

 private:
  std::int64_t t_;
  std::vector<AmplitudePair> amps_;
};

HalfLineState initial_half_line(const Coin& coin);
/// Same state without the global phase e^{-i theta}; gives the same distribution.
HalfLineState initial_half_line_unphased(const Coin& coin);
LineState initial_line(const Coin& coin);

enum class WalkKind { HalfLine, Line };

std::string_view to_string(WalkKind kind);
WalkKind parse_walk_kind(std::string_view text);

struct DistributionRow {
  std::int64_t x = 0;
  std::optional<double> p0;  // unset where a route has no inner-state split
  std::optional<double> p1;
  double p = 0.0;
};

struct Distribution {
  WalkKind kind = WalkKind::HalfLine;
  std::int64_t t = 0;
  std::vector<DistributionRow> rows;  // ascending x

  /// Total probability at x; 0 for positions not listed.
  double prob_at(std::int64_t x) const;
  const DistributionRow* find(std::int64_t x) const;
  double total() const;
};

}  // namespace qwalk
