#include "qwalk/evolution.hpp"

#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

// Components below this are zeroed: their probabilities are under
// kProbabilityFloor anyway, and subnormal arithmetic in the decaying tails is
// about 20x slower than normal arithmetic.
constexpr double kAmplitudeFloor = 1e-150;

inline double flush(double v) { return std::abs(v) < kAmplitudeFloor ? 0.0 : v; }

// Post-coin pair: C = [[c, s], [s, -c]]. With the rounded pair alone,
// c^2 + s^2 misses 1 by ~1e-16, and rounding the two products separately adds
// a bias of similar size; both compound into a ~1e-12 norm drift over 1e4
// steps. Carrying the coefficients to double-double accuracy and fusing the
// multiply-adds rounds each amplitude about once.
inline double mix(double x, double y, double p, double p_lo, double q, double q_lo) {
  return flush(std::fma(p, x, std::fma(q, y, p_lo * x + q_lo * y)));
}

inline AmplitudePair apply_coin(const AmplitudePair& a, const Coin& k) {
  return {{mix(a.a0.real(), a.a1.real(), k.c, k.c_lo, k.s, k.s_lo),
           mix(a.a0.imag(), a.a1.imag(), k.c, k.c_lo, k.s, k.s_lo)},
          {mix(a.a0.real(), a.a1.real(), k.s, k.s_lo, -k.c, -k.c_lo),
           mix(a.a0.imag(), a.a1.imag(), k.s, k.s_lo, -k.c, -k.c_lo)}};
}

// fma is exactly specified, so the hardware and library versions agree bit for
// bit; the clone only picks the fast one at load time.
#if defined(__x86_64__) && defined(__GNUC__) && defined(__linux__)
#define QWALK_FMA_CLONES __attribute__((target_clones("fma", "default")))
#else
#define QWALK_FMA_CLONES
#endif

double floor_small(double p) { return p < kProbabilityFloor ? 0.0 : p; }

// One step of each walk from `in` into `out`; every entry of `out` is written,
// so buffers can be reused between steps.
QWALK_FMA_CLONES
void advance_half_line(const std::vector<AmplitudePair>& in, std::vector<AmplitudePair>& out,
                       const Coin& coin) {
  const std::size_t n = in.size();
  out.resize(n + 1);
  AmplitudePair b = apply_coin(in[0], coin);
  out[0].a1 = b.a0;  // the left-mover at 0 turns into a right-mover
  out[1].a1 = b.a1;
  for (std::size_t x = 1; x < n; ++x) {
    b = apply_coin(in[x], coin);
    out[x - 1].a0 = b.a0;
    out[x + 1].a1 = b.a1;
  }
  out[n - 1].a0 = {};
  out[n].a0 = {};
}

// New window starts one position further left, so old index i at position x
// lands at new index i for x - 1 and i + 2 for x + 1.
QWALK_FMA_CLONES
void advance_line(const std::vector<AmplitudePair>& in, std::vector<AmplitudePair>& out,
                  const Coin& coin) {
  const std::size_t n = in.size();
  out.resize(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    AmplitudePair b = apply_coin(in[i], coin);
    out[i].a0 = b.a0;
    out[i + 2].a1 = b.a1;
  }
  out[0].a1 = out[1].a1 = {};
  out[n].a0 = out[n + 1].a0 = {};
}

}  // namespace

HalfLineState step_half_line(const HalfLineState& state, const Coin& coin) {
  std::vector<AmplitudePair> out;
  advance_half_line(state.amps(), out, coin);
  return HalfLineState(state.t() + 1, std::move(out));
}

LineState step_line(const LineState& state, const Coin& coin) {
  std::vector<AmplitudePair> out;
  advance_line(state.amps(), out, coin);
  return LineState(state.t() + 1, std::move(out));
}

HalfLineState evolve_half_line(const Coin& coin, std::int64_t steps) {
  if (steps < 0) throw InvalidArgument("steps must be nonnegative");
  std::vector<AmplitudePair> cur = initial_half_line(coin).amps();
  std::vector<AmplitudePair> next;
  cur.reserve(static_cast<std::size_t>(steps) + 1);
  next.reserve(static_cast<std::size_t>(steps) + 1);
  for (std::int64_t k = 0; k < steps; ++k) {
    advance_half_line(cur, next, coin);
    cur.swap(next);
  }
  return HalfLineState(steps, std::move(cur));
}

LineState evolve_line(const Coin& coin, std::int64_t steps) {
  if (steps < 0) throw InvalidArgument("steps must be nonnegative");
  std::vector<AmplitudePair> cur = initial_line(coin).amps();
  std::vector<AmplitudePair> next;
  cur.reserve(2 * static_cast<std::size_t>(steps) + 2);
  next.reserve(2 * static_cast<std::size_t>(steps) + 2);
  for (std::int64_t k = 0; k < steps; ++k) {
    advance_line(cur, next, coin);
    cur.swap(next);
  }
  return LineState(steps, std::move(cur));
}

WalkState evolve(WalkKind kind, const Coin& coin, std::int64_t steps) {
  if (kind == WalkKind::HalfLine) return evolve_half_line(coin, steps);
  return evolve_line(coin, steps);
}

Distribution distribution(const HalfLineState& state) {
  Distribution d{WalkKind::HalfLine, state.t(), {}};
  d.rows.reserve(state.amps().size());
  std::int64_t x = 0;
  for (const auto& a : state.amps()) {
    double p0 = floor_small(std::norm(a.a0));
    double p1 = floor_small(std::norm(a.a1));
    d.rows.push_back({x++, p0, p1, p0 + p1});
  }
  return d;
}

Distribution distribution(const LineState& state) {
  Distribution d{WalkKind::Line, state.t(), {}};
  d.rows.reserve(state.amps().size());
  std::int64_t x = state.offset();
  for (const auto& a : state.amps()) {
    double p0 = floor_small(std::norm(a.a0));
    double p1 = floor_small(std::norm(a.a1));
    d.rows.push_back({x++, p0, p1, p0 + p1});
  }
  return d;
}

Distribution distribution(const WalkState& state) {
  return std::visit([](const auto& s) { return distribution(s); }, state);
}

}  // namespace qwalk
