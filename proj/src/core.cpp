#include "qwalk/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kDegenerateTol = 1e-12;

PiFraction reduce(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("angle fraction has zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

// num/den reduced modulo 2 (i.e. theta mod 2pi), result in [0, 2).
PiFraction reduce_mod_two(const PiFraction& f) {
  std::int64_t period = 2 * f.den;
  std::int64_t n = f.num % period;
  if (n < 0) n += period;
  return reduce(n, f.den);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// cos(2 theta) in double-double, exact where 2 theta is a multiple of pi/2 or pi/3.
DD cos_double_angle(const PiFraction& f) {
  PiFraction twice = reduce_mod_two(reduce(2 * f.num, f.den));
  if (twice.den == 1) return DD(twice.num == 0 ? 1.0 : -1.0);
  if (twice.den == 2) return DD(0.0);
  if (twice.den == 3) {
    // 1/3, 2/3, 4/3, 5/3 of pi
    return DD((twice.num == 1 || twice.num == 5) ? 0.5 : -0.5);
  }
  DD s, c;
  sincos(kDDPi * DD(static_cast<double>(twice.num)) / DD(static_cast<double>(twice.den)), s, c);
  return c;
}

Coin finish_coin(double theta, DD cos_dd, DD sin_dd, DD cos_sq, DD sin_sq,
                 std::optional<PiFraction> fraction) {
  Coin coin;
  coin.theta = theta;
  const DD c = dd_detail::two_sum(cos_dd.hi, cos_dd.lo);
  const DD s = dd_detail::two_sum(sin_dd.hi, sin_dd.lo);
  coin.c = c.hi;
  coin.s = s.hi;
  coin.c_lo = c.lo;
  coin.s_lo = s.lo;
  coin.cos_sq = cos_sq;
  coin.sin_sq = sin_sq;
  coin.pi_fraction = fraction;
  return coin;
}

}  // namespace

Angle parse_angle(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw InvalidArgument("empty angle");
  auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
      throw InvalidArgument("cannot parse angle '" + std::string(text) + "'");
    }
    return {value, std::nullopt};
  }
  std::string_view coef = s.substr(0, pi_pos);
  std::string_view rest = s.substr(pi_pos + 2);
  if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
  std::int64_t num = 1;
  if (coef.empty() || coef == "+") {
    num = 1;
  } else if (coef == "-") {
    num = -1;
  } else if (!parse_int(coef, num)) {
    throw InvalidArgument("cannot parse angle '" + std::string(text) + "'");
  }
  std::int64_t den = 1;
  if (!rest.empty()) {
    if (rest.front() != '/' || !parse_int(rest.substr(1), den) || den <= 0) {
      throw InvalidArgument("cannot parse angle '" + std::string(text) + "'");
    }
  }
  PiFraction f = reduce(num, den);
  DD radians = kDDPi * DD(static_cast<double>(f.num)) / DD(static_cast<double>(f.den));
  return {static_cast<double>(radians), f};
}

std::string format_angle(const Angle& angle) {
  if (angle.pi_fraction) {
    const auto& f = *angle.pi_fraction;
    std::string out;
    if (f.num == 0) return "0";
    if (f.num == -1) {
      out = "-pi";
    } else if (f.num == 1) {
      out = "pi";
    } else {
      out = std::to_string(f.num) + "pi";
    }
    if (f.den != 1) out += "/" + std::to_string(f.den);
    return out;
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, angle.radians);
  return std::string(buf, ptr);
}

Coin make_coin(double theta) {
  if (!std::isfinite(theta)) throw InvalidArgument("coin angle must be finite");
  DD s, c;
  sincos(DD(theta), s, c);
  DD s2, c2;
  sincos(DD(2.0 * theta), s2, c2);
  DD cos_sq = (DD(1.0) + c2) * DD(0.5);
  DD sin_sq = (DD(1.0) - c2) * DD(0.5);
  return finish_coin(theta, c, s, cos_sq, sin_sq, std::nullopt);
}

Coin make_coin(const PiFraction& fraction) {
  PiFraction f = reduce(fraction.num, fraction.den);
  PiFraction m = reduce_mod_two(f);
  DD theta = kDDPi * DD(static_cast<double>(f.num)) / DD(static_cast<double>(f.den));
  DD c2 = cos_double_angle(m);
  DD cos_sq = (DD(1.0) + c2) * DD(0.5);
  DD sin_sq = (DD(1.0) - c2) * DD(0.5);
  DD s, c;
  // Exact values at the common angles; Taylor series elsewhere.
  if (m.den == 4 || m.den == 2 || m.den == 1 || m.den == 3 || m.den == 6) {
    DD ac = sqrt(cos_sq);
    DD as = sqrt(sin_sq);
    // quadrant signs from the reduced angle in [0, 2pi)
    double frac = static_cast<double>(m.num) / static_cast<double>(m.den);
    bool cos_neg = frac > 0.5 && frac < 1.5;
    bool sin_neg = frac > 1.0 && frac < 2.0;
    c = cos_neg ? -ac : ac;
    s = sin_neg ? -as : as;
  } else {
    DD reduced = kDDPi * DD(static_cast<double>(m.num)) / DD(static_cast<double>(m.den));
    sincos(reduced, s, c);
  }
  return finish_coin(static_cast<double>(theta), c, s, cos_sq, sin_sq, f);
}

Coin make_coin(const Angle& angle) {
  if (angle.pi_fraction) return make_coin(*angle.pi_fraction);
  return make_coin(angle.radians);
}

bool is_degenerate(const Coin& coin) {
  if (coin.pi_fraction) {
    PiFraction m = reduce_mod_two(*coin.pi_fraction);
    return m.den <= 2;
  }
  return std::abs(coin.c) < kDegenerateTol || std::abs(coin.s) < kDegenerateTol;
}

bool is_reflection_only(const Coin& coin) {
  if (coin.pi_fraction) return reduce_mod_two(*coin.pi_fraction).den == 1;
  return std::abs(coin.s) < kDegenerateTol;
}

bool is_exact_quarter_pi(const Coin& coin) {
  if (!coin.pi_fraction) return false;
  PiFraction m = reduce_mod_two(*coin.pi_fraction);
  return m.num == 1 && m.den == 4;
}

// ---------------------------------------------------------------------------

HalfLineState::HalfLineState(std::int64_t t, std::vector<AmplitudePair> amps)
    : t_(t), amps_(std::move(amps)) {
  if (t_ < 0) throw InvalidArgument("state time must be nonnegative");
  if (amps_.size() != static_cast<std::size_t>(t_ + 1)) {
    throw InvalidArgument("half-line state window must hold t + 1 positions");
  }
}

AmplitudePair HalfLineState::at(std::int64_t x) const {
  if (x < 0 || x > t_) return {};
  return amps_[static_cast<std::size_t>(x)];
}

double HalfLineState::norm_sq() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += a.norm_sq();
  return sum;
}

LineState::LineState(std::int64_t t, std::vector<AmplitudePair> amps)
    : t_(t), amps_(std::move(amps)) {
  if (t_ < 0) throw InvalidArgument("state time must be nonnegative");
  if (amps_.size() != static_cast<std::size_t>(2 * t_ + 2)) {
    throw InvalidArgument("line state window must hold 2t + 2 positions");
  }
}

AmplitudePair LineState::at(std::int64_t x) const {
  std::int64_t i = x - offset();
  if (i < 0 || i >= static_cast<std::int64_t>(amps_.size())) return {};
  return amps_[static_cast<std::size_t>(i)];
}

double LineState::norm_sq() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += a.norm_sq();
  return sum;
}

HalfLineState initial_half_line(const Coin& coin) {
  const double r = 1.0 / std::sqrt(2.0);
  // e^{-i theta} from the coin's own cos/sin so exact angles stay exact
  const Complex phase(coin.c, -coin.s);
  return HalfLineState(0, {{phase * r, phase * Complex(0.0, r)}});
}

HalfLineState initial_half_line_unphased(const Coin&) {
  const double r = 1.0 / std::sqrt(2.0);
  return HalfLineState(0, {{Complex(r, 0.0), Complex(0.0, r)}});
}

LineState initial_line(const Coin& coin) {
  const double r = 1.0 / std::sqrt(2.0);
  AmplitudePair pair{Complex(coin.c * r, 0.0), Complex(coin.s * r, 0.0)};
  return LineState(0, {pair, pair});
}

std::string_view to_string(WalkKind kind) {
  return kind == WalkKind::HalfLine ? "halfline" : "line";
}

WalkKind parse_walk_kind(std::string_view text) {
  if (text == "halfline" || text == "half-line" || text == "half") return WalkKind::HalfLine;
  if (text == "line") return WalkKind::Line;
  throw InvalidArgument("unknown walk kind '" + std::string(text) + "'");
}

const DistributionRow* Distribution::find(std::int64_t x) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), x,
                             [](const DistributionRow& r, std::int64_t v) { return r.x < v; });
  if (it == rows.end() || it->x != x) return nullptr;
  return &*it;
}

double Distribution::prob_at(std::int64_t x) const {
  const DistributionRow* row = find(x);
  return row ? row->p : 0.0;
}

double Distribution::total() const {
  double sum = 0.0;
  double comp = 0.0;
  for (const auto& r : rows) {
    // Neumaier
    double t = sum + r.p;
    if (std::abs(sum) >= std::abs(r.p)) {
      comp += (sum - t) + r.p;
    } else {
      comp += (r.p - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

}  // namespace qwalk
