#include "qwalk/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "qwalk/binomial.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/qfield.hpp"

namespace qwalk {

std::string_view to_string(Precision precision) {
  switch (precision) {
    case Precision::Double: return "double";
    case Precision::DoubleDouble: return "dd";
    case Precision::ExactQ2: return "exact";
  }
  return "dd";
}

Precision parse_precision(std::string_view text) {
  if (text == "double") return Precision::Double;
  if (text == "dd" || text == "double-double") return Precision::DoubleDouble;
  if (text == "exact") return Precision::ExactQ2;
  throw InvalidArgument("unknown precision '" + std::string(text) + "'");
}

namespace {

// ---------------------------------------------------------------------------
// Scalar plumbing shared by the double and double-double paths.

inline double scalar_from(const DD& v, double*) { return static_cast<double>(v); }
inline DD scalar_from(const DD& v, DD*) { return v; }

inline double hi_part(double v) { return v; }
inline double hi_part(const DD& v) { return v.hi; }

inline double scale2(double v, long e) { return std::ldexp(v, static_cast<int>(e)); }
inline DD scale2(const DD& v, long e) { return ldexp(v, static_cast<int>(e)); }

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const DD& v) { return std::abs(v.hi); }

inline void from_integer(const mpz_class& z, double& mant, long& e) {
  if (z == 0) {
    mant = 0.0;
    e = 0;
    return;
  }
  mant = mpz_get_d_2exp(&e, z.get_mpz_t());
}
inline void from_integer(const mpz_class& z, DD& mant, long& e) { mant = mpz_to_dd_2exp(z, e); }

// mant * 2^exp with |hi(mant)| in [0.5, 1) (or mant == 0), so products of
// huge binomials and tiny powers of cos^2 stay representable.
template <class T>
struct Scaled {
  T mant{0.0};
  long exp = 0;

  void normalize() {
    double h = hi_part(mant);
    if (h == 0.0 || !std::isfinite(h)) return;
    int k = 0;
    std::frexp(h, &k);
    mant = scale2(mant, -k);
    exp += k;
  }
  T value() const {
    if (exp > 4000) return T(hi_part(mant) > 0 ? HUGE_VAL : -HUGE_VAL);
    if (exp < -4000) return T(0.0);
    return scale2(mant, exp);
  }
};

template <class T>
Scaled<T> make_scaled(const T& v) {
  Scaled<T> s{v, 0};
  s.normalize();
  return s;
}

template <class T>
Scaled<T> operator*(const Scaled<T>& a, const Scaled<T>& b) {
  Scaled<T> r{a.mant * b.mant, a.exp + b.exp};
  r.normalize();
  return r;
}

template <class T>
Scaled<T> operator+(const Scaled<T>& a, const Scaled<T>& b) {
  if (hi_part(a.mant) == 0.0) return b;
  if (hi_part(b.mant) == 0.0) return a;
  const Scaled<T>& big = a.exp >= b.exp ? a : b;
  const Scaled<T>& small = a.exp >= b.exp ? b : a;
  long shift = small.exp - big.exp;
  Scaled<T> r = big;
  if (shift > -2200) r.mant = big.mant + scale2(small.mant, shift);
  r.normalize();
  return r;
}

template <class T>
Scaled<T> operator-(const Scaled<T>& a) {
  return {-a.mant, a.exp};
}

template <class T>
Scaled<T> operator-(const Scaled<T>& a, const Scaled<T>& b) {
  return a + (-b);
}

template <class T>
Scaled<T> scaled_pow(Scaled<T> base, std::int64_t n) {
  Scaled<T> result = make_scaled(T(1.0));
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

// sum_{j=1}^{m} (-r)^j * coef(j), summed smallest magnitude first at a common
// binary scale.
template <class T>
struct SumResult {
  Scaled<T> value;
  Scaled<double> abs_sum;  // sum of |terms|, for the error bound
};

template <class T, class CoefFn>
SumResult<T> alternating_sum(std::int64_t m, const Scaled<T>& r, CoefFn coef) {
  std::vector<Scaled<T>> terms;
  terms.reserve(static_cast<std::size_t>(m));
  Scaled<T> rpow = make_scaled(T(1.0));
  for (std::int64_t j = 1; j <= m; ++j) {
    rpow = rpow * r;
    const mpz_class& n = coef(j);
    if (n == 0) continue;
    Scaled<T> term;
    from_integer(n, term.mant, term.exp);
    term = term * rpow;
    if (j % 2 == 1) term = -term;
    terms.push_back(term);
  }
  if (terms.empty()) return {};
  Scaled<double> abs_sum;
  for (const auto& t : terms) abs_sum = abs_sum + Scaled<double>{std::abs(hi_part(t.mant)), t.exp};
  long top = terms.front().exp;
  for (const auto& t : terms) top = std::max(top, t.exp);
  std::vector<T> aligned;
  aligned.reserve(terms.size());
  for (const auto& t : terms) {
    long shift = t.exp - top;
    aligned.push_back(shift < -2200 ? T(0.0) : scale2(t.mant, shift));
  }
  std::stable_sort(aligned.begin(), aligned.end(),
                   [](const T& a, const T& b) { return magnitude(a) < magnitude(b); });
  T sum(0.0);
  if constexpr (std::is_same_v<T, double>) {
    // Neumaier compensation for the plain double path.
    double comp = 0.0;
    for (double v : aligned) {
      double t = sum + v;
      comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
      sum = t;
    }
    sum += comp;
  } else {
    for (const auto& v : aligned) sum += v;  // double-double add is compensated
  }
  Scaled<T> out{sum, top};
  out.normalize();
  abs_sum.normalize();
  return {out, abs_sum};
}

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2g", v);
  return buf;
}

// Unit roundoff of the working type; double-double is taken a few bits short
// of 2^-106 since its operations are not correctly rounded.
template <class T>
constexpr double unit_roundoff() {
  return std::is_same_v<T, double> ? 0x1p-53 : 0x1p-101;
}

template <class T>
Scaled<double> mag(const Scaled<T>& v) {
  Scaled<double> out{std::abs(hi_part(v.mant)), v.exp};
  out.normalize();
  return out;
}

// Absolute error bound of x^2 - 2xb + k b^2 given |x| <= xa, |b| <= ba and
// errors ex, eb, plus rounding of the combination itself.
Scaled<double> quadratic_error(const Scaled<double>& xa, const Scaled<double>& ex,
                               const Scaled<double>& ba, const Scaled<double>& eb,
                               const Scaled<double>& k, double u) {
  const Scaled<double> two = make_scaled(2.0);
  Scaled<double> e = two * xa * ex + ex * ex + two * (xa * eb + ba * ex + ex * eb) +
                     k * (two * ba * eb + eb * eb);
  Scaled<double> size = xa * xa + two * xa * ba + k * ba * ba;
  return e + make_scaled(8.0 * u) * size;
}

// Per-m probabilities of the line walk at time T:
//   right[m] = P(Y = T-2m)        = P(Y = T-2m-1)
//   left[m]  = P(Y = -(T-2m)-1)   = P(Y = -(T-2m))
//   total[m] = right[m] + left[m], from the combined weight
//   edge     = P(Y = -T-1)        = P(Y = -T)
// Index 0 is unused.
template <class V>
struct BranchValues {
  std::vector<V> right, left, total;
  V edge{};
};

template <class T>
constexpr Precision precision_of() {
  return std::is_same_v<T, double> ? Precision::Double : Precision::DoubleDouble;
}

// The double sum over (j1, j2) of a(j1) a(j2) {(m - j1 - j2) m / (j1 j2) + 1/s^2},
// a(j) = (-r)^j C(m-1, j-1) C(n-1, j-1), separates into
//   (m A)^2 - 2 (m A) B + B^2 / s^2
// with B = sum a(j) and m A = sum a(j) m / j = sum (-r)^j C(m, j) C(n-1, j-1).
template <class T>
BranchValues<Scaled<T>> branch_values_float(const Coin& coin, std::int64_t T_time) {
  const BinomialTable binom(T_time);
  const T cos_sq = scalar_from(coin.cos_sq, static_cast<T*>(nullptr));
  const T sin_sq = scalar_from(coin.sin_sq, static_cast<T*>(nullptr));
  const Scaled<T> r = make_scaled(T(sin_sq / cos_sq));
  const Scaled<T> inv_sin_sq = make_scaled(T(T(1.0) / sin_sq));
  const Scaled<T> pref = scaled_pow(make_scaled(cos_sq), T_time - 1) * make_scaled(T(0.5));
  const Scaled<T> two = make_scaled(T(2.0));
  const double u = unit_roundoff<T>();
  const Scaled<double> inv_s2_mag = mag(inv_sin_sq);
  const Scaled<double> pref_mag = mag(pref) * make_scaled(1.0 + 2.0 * static_cast<double>(T_time) * u);

  const std::int64_t half = T_time / 2;
  BranchValues<Scaled<T>> out;
  out.right.resize(static_cast<std::size_t>(half + 1));
  out.left.resize(static_cast<std::size_t>(half + 1));
  out.total.resize(static_cast<std::size_t>(half + 1));
  out.edge = pref;
  double worst = 0.0;
  for (std::int64_t m = 1; m <= half; ++m) {
    const std::int64_t n = T_time - m;
    SumResult<T> sb = alternating_sum<T>(m, r, [&](std::int64_t j) {
      return mpz_class(binom(m - 1, j - 1) * binom(n - 1, j - 1));
    });
    SumResult<T> sam = alternating_sum<T>(m, r, [&](std::int64_t j) {
      return mpz_class(binom(m, j) * binom(n - 1, j - 1));
    });
    SumResult<T> san = alternating_sum<T>(m, r, [&](std::int64_t j) {
      return mpz_class(binom(m - 1, j - 1) * binom(n, j));
    });
    const Scaled<T>& b = sb.value;
    const Scaled<T>& am = sam.value;
    const Scaled<T>& an = san.value;

    // Each term carries about (3j + 4) roundings (binomial conversion, r^j,
    // the product), and summation adds at most m more.
    const Scaled<double> rel = make_scaled(static_cast<double>(4 * m + 8) * u);
    const Scaled<double> eb = rel * sb.abs_sum;
    const Scaled<double> eam = rel * sam.abs_sum;
    const Scaled<double> ean = rel * san.abs_sum;
    // the total is right + left, so the sum of the two bounds covers all three
    double bound = (pref_mag * (quadratic_error(mag(am), eam, mag(b), eb, inv_s2_mag, u) +
                                quadratic_error(mag(an), ean, mag(b), eb, inv_s2_mag, u)))
                       .value();
    if (!(bound <= worst)) worst = bound;  // NaN-sticky
    Scaled<T> bb = b * b * inv_sin_sq;
    Scaled<T> right = am * am - two * am * b + bb;
    Scaled<T> left = an * an - two * an * b + bb;
    Scaled<T> total = am * am + an * an - two * (am + an) * b + two * bb;
    auto idx = static_cast<std::size_t>(m);
    out.right[idx] = pref * right;
    out.left[idx] = pref * left;
    out.total[idx] = pref * total;
  }
  if (!(worst <= kClosedFormErrorBudget)) {
    throw PrecisionError("closed form at t = " + std::to_string(T_time) + ", theta = " +
                         format_angle(coin.angle()) + " loses too many digits to cancellation in " +
                         std::string(to_string(precision_of<T>())) + " arithmetic (error bound " +
                         format_sci(worst) + "); use the evolution route" +
                         (is_exact_quarter_pi(coin) ? " or exact precision" : ""));
  }
  return out;
}

// Same sums in exact arithmetic at theta = pi/4: r = 1, c^2 = s^2 = 1/2, so
// every sum is an integer and the prefactor is 2^{-T}.
BranchValues<mpq_class> branch_values_rational(std::int64_t T_time) {
  const BinomialTable binom(T_time);
  mpz_class pow2(1);
  pow2 <<= static_cast<mp_bitcnt_t>(T_time);
  const std::int64_t half = T_time / 2;
  BranchValues<mpq_class> out;
  out.right.resize(static_cast<std::size_t>(half + 1));
  out.left.resize(static_cast<std::size_t>(half + 1));
  out.total.resize(static_cast<std::size_t>(half + 1));
  out.edge = mpq_class(1, pow2);
  out.edge.canonicalize();
  for (std::int64_t m = 1; m <= half; ++m) {
    const std::int64_t n = T_time - m;
    mpz_class b = 0, am = 0, an = 0;
    for (std::int64_t j = 1; j <= m; ++j) {
      mpz_class tb = binom(m - 1, j - 1) * binom(n - 1, j - 1);
      mpz_class tam = binom(m, j) * binom(n - 1, j - 1);
      mpz_class tn = binom(m - 1, j - 1) * binom(n, j);
      if (j % 2 == 1) {
        b -= tb;
        am -= tam;
        an -= tn;
      } else {
        b += tb;
        am += tam;
        an += tn;
      }
    }
    auto idx = static_cast<std::size_t>(m);
    mpz_class right = am * am - 2 * am * b + 2 * b * b;
    mpz_class left = an * an - 2 * an * b + 2 * b * b;
    mpz_class total = am * am + an * an - 2 * (am + an) * b + 4 * b * b;
    out.right[idx] = mpq_class(right, pow2);
    out.left[idx] = mpq_class(left, pow2);
    out.total[idx] = mpq_class(total, pow2);
    out.right[idx].canonicalize();
    out.left[idx].canonicalize();
    out.total[idx].canonicalize();
  }
  return out;
}

void check_formula_domain(const Coin& coin, std::int64_t t) {
  if (t < 1) throw InvalidArgument("closed-form tables need t >= 1");
  if (is_degenerate(coin)) {
    throw FormulaDomainError("closed-form sums exclude theta in {0, pi/2, pi, 3pi/2}; got theta = " +
                             format_angle(coin.angle()));
  }
}

void check_exact_domain(const Coin& coin) {
  if (!is_exact_quarter_pi(coin)) {
    throw FormulaDomainError("exact rational closed form requires theta = pi/4 given exactly");
  }
}

template <class V>
ValueTable<V> line_rows(const BranchValues<V>& bv, std::int64_t T_time) {
  std::map<std::int64_t, V> rows;
  const std::int64_t half = T_time / 2;
  for (std::int64_t m = 1; m <= half; ++m) {
    auto idx = static_cast<std::size_t>(m);
    rows.emplace(T_time - 2 * m, bv.right[idx]);
    rows.emplace(T_time - 2 * m - 1, bv.right[idx]);
    // at even T and m = T/2 both branches name positions 0 and -1; keep one
    rows.emplace(-(T_time - 2 * m) - 1, bv.left[idx]);
    rows.emplace(-(T_time - 2 * m), bv.left[idx]);
  }
  rows.emplace(-T_time - 1, bv.edge);
  rows.emplace(-T_time, bv.edge);
  ValueTable<V> out{WalkKind::Line, T_time, {}};
  out.rows.assign(rows.begin(), rows.end());
  return out;
}

template <class V>
ValueTable<V> half_line_rows(const BranchValues<V>& bv, std::int64_t T_time,
                             HalfLineSelection selection) {
  std::map<std::int64_t, V> rows;
  const std::int64_t half = T_time / 2;
  for (std::int64_t m = 1; m <= half; ++m) {
    auto idx = static_cast<std::size_t>(m);
    const V& v = selection == HalfLineSelection::Inner0   ? bv.right[idx]
                 : selection == HalfLineSelection::Inner1 ? bv.left[idx]
                                                          : bv.total[idx];
    for (std::int64_t x : {T_time - 2 * m, T_time - 2 * m - 1}) {
      if (x >= 0) rows.emplace(x, v);
    }
  }
  if (selection != HalfLineSelection::Inner0) {
    rows.emplace(T_time, bv.edge);
    rows.emplace(T_time - 1, bv.edge);
  }
  ValueTable<V> out{WalkKind::HalfLine, T_time, {}};
  out.rows.assign(rows.begin(), rows.end());
  return out;
}

double checked_probability(double p, std::int64_t x) {
  if (!std::isfinite(p) || p < -kNegativeClampTol) {
    throw PrecisionError("closed-form value " + std::to_string(p) + " at x = " + std::to_string(x) +
                         " is not a probability; cancellation exceeded the working precision");
  }
  return p < 0.0 ? 0.0 : p;
}

template <class T>
ValueTable<T> finish_float(const ValueTable<Scaled<T>>& scaled) {
  ValueTable<T> out{scaled.kind, scaled.t, {}};
  out.rows.reserve(scaled.rows.size());
  for (const auto& [x, v] : scaled.rows) {
    T value = v.value();
    double p = checked_probability(hi_part(value), x);
    out.rows.emplace_back(x, p == 0.0 ? T(0.0) : value);
  }
  return out;
}

Distribution to_distribution_rows(WalkKind kind, std::int64_t t,
                                  const std::vector<std::pair<std::int64_t, double>>& values,
                                  std::optional<int> inner) {
  Distribution d{kind, t, {}};
  d.rows.reserve(values.size());
  for (const auto& [x, p] : values) {
    DistributionRow row{x, std::nullopt, std::nullopt, p};
    if (inner == 0) row.p0 = p;
    if (inner == 1) row.p1 = p;
    d.rows.push_back(row);
  }
  return d;
}

template <class V, class F>
std::vector<std::pair<std::int64_t, double>> as_doubles(const ValueTable<V>& table, F convert) {
  std::vector<std::pair<std::int64_t, double>> out;
  out.reserve(table.rows.size());
  for (const auto& [x, v] : table.rows) out.emplace_back(x, convert(v));
  return out;
}

std::vector<std::pair<std::int64_t, double>> line_values(const Coin& coin, std::int64_t t,
                                                         Precision precision) {
  switch (precision) {
    case Precision::Double: {
      auto table = finish_float<double>(line_rows(branch_values_float<double>(coin, t), t));
      return as_doubles(table, [](double v) { return v; });
    }
    case Precision::DoubleDouble:
      return as_doubles(line_exact_dd(coin, t), [](const DD& v) { return static_cast<double>(v); });
    case Precision::ExactQ2:
      return as_doubles(line_exact_rational(coin, t), [](const mpq_class& v) { return v.get_d(); });
  }
  return {};
}

std::vector<std::pair<std::int64_t, double>> half_line_values(const Coin& coin, std::int64_t t,
                                                              HalfLineSelection selection,
                                                              Precision precision) {
  switch (precision) {
    case Precision::Double: {
      auto table = finish_float<double>(
          half_line_rows(branch_values_float<double>(coin, t), t, selection));
      return as_doubles(table, [](double v) { return v; });
    }
    case Precision::DoubleDouble:
      return as_doubles(half_line_exact_dd(coin, t, selection),
                        [](const DD& v) { return static_cast<double>(v); });
    case Precision::ExactQ2:
      return as_doubles(half_line_exact_rational(coin, t, selection),
                        [](const mpq_class& v) { return v.get_d(); });
  }
  return {};
}

}  // namespace

DDTable line_exact_dd(const Coin& coin, std::int64_t t) {
  check_formula_domain(coin, t);
  return finish_float<DD>(line_rows(branch_values_float<DD>(coin, t), t));
}

RationalTable line_exact_rational(const Coin& coin, std::int64_t t) {
  check_formula_domain(coin, t);
  check_exact_domain(coin);
  return line_rows(branch_values_rational(t), t);
}

DDTable half_line_exact_dd(const Coin& coin, std::int64_t t, HalfLineSelection selection) {
  check_formula_domain(coin, t);
  return finish_float<DD>(half_line_rows(branch_values_float<DD>(coin, t), t, selection));
}

RationalTable half_line_exact_rational(const Coin& coin, std::int64_t t,
                                       HalfLineSelection selection) {
  check_formula_domain(coin, t);
  check_exact_domain(coin);
  return half_line_rows(branch_values_rational(t), t, selection);
}

Distribution line_exact(const Coin& coin, std::int64_t t, ExactParams params) {
  check_formula_domain(coin, t);
  return to_distribution_rows(WalkKind::Line, t, line_values(coin, t, params.precision),
                              std::nullopt);
}

Distribution half_line_exact_by_inner(const Coin& coin, std::int64_t t, int inner,
                                      ExactParams params) {
  if (inner != 0 && inner != 1) throw InvalidArgument("inner state must be 0 or 1");
  check_formula_domain(coin, t);
  auto selection = inner == 0 ? HalfLineSelection::Inner0 : HalfLineSelection::Inner1;
  return to_distribution_rows(WalkKind::HalfLine, t,
                              half_line_values(coin, t, selection, params.precision), inner);
}

Distribution half_line_exact_total(const Coin& coin, std::int64_t t, ExactParams params) {
  check_formula_domain(coin, t);
  return to_distribution_rows(
      WalkKind::HalfLine, t,
      half_line_values(coin, t, HalfLineSelection::Total, params.precision), std::nullopt);
}

// ---------------------------------------------------------------------------

const ExactRow* ExactDistribution::find(std::int64_t x) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), x,
                             [](const ExactRow& r, std::int64_t v) { return r.x < v; });
  if (it == rows.end() || it->x != x) return nullptr;
  return &*it;
}

namespace {

struct QPair {
  QFieldComplex a0;
  QFieldComplex a1;
};

// Coin at pi/4: (a0, a1) -> (sqrt2/2)(a0 + a1, a0 - a1).
QPair coin_quarter_pi(const QPair& in) {
  return {times_half_sqrt2(in.a0 + in.a1), times_half_sqrt2(in.a0 - in.a1)};
}

mpq_class rational_norm(const QFieldComplex& z) {
  QField n = z.norm_sq();
  if (!n.is_rational()) throw std::logic_error("|amplitude|^2 left Q; field arithmetic is broken");
  return n.a;
}

ExactDistribution exact_rows(WalkKind kind, std::int64_t t, std::int64_t offset,
                             const std::vector<QPair>& amps) {
  ExactDistribution out{kind, t, {}};
  out.rows.reserve(amps.size());
  std::int64_t x = offset;
  for (const auto& a : amps) {
    ExactRow row;
    row.x = x++;
    row.p0 = rational_norm(a.a0);
    row.p1 = rational_norm(a.a1);
    row.p = row.p0 + row.p1;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace

void q2_oracle_series(WalkKind kind, std::int64_t t_max,
                      const std::function<void(const ExactDistribution&)>& visit) {
  if (t_max < 0) throw InvalidArgument("steps must be nonnegative");
  if (t_max > kOracleMaxSteps) {
    throw ResourceError("exact oracle supports at most " + std::to_string(kOracleMaxSteps) +
                        " steps; requested " + std::to_string(t_max));
  }
  const QField half_sqrt2{mpq_class(0), mpq_class(1, 2)};
  const QField zero{};
  if (kind == WalkKind::HalfLine) {
    std::vector<QPair> amps{{{half_sqrt2, zero}, {zero, half_sqrt2}}};
    for (std::int64_t t = 0;; ++t) {
      visit(exact_rows(kind, t, 0, amps));
      if (t == t_max) return;
      std::vector<QPair> next(amps.size() + 1);
      for (std::size_t x = 0; x < amps.size(); ++x) {
        QPair b = coin_quarter_pi(amps[x]);
        if (x == 0) {
          next[0].a1 = next[0].a1 + b.a0;
        } else {
          next[x - 1].a0 = next[x - 1].a0 + b.a0;
        }
        next[x + 1].a1 = next[x + 1].a1 + b.a1;
      }
      amps = std::move(next);
    }
  }
  const QField quarter{mpq_class(1, 2), mpq_class(0)};
  QPair start{{quarter, zero}, {quarter, zero}};
  std::vector<QPair> amps{start, start};
  for (std::int64_t t = 0;; ++t) {
    visit(exact_rows(kind, t, -t - 1, amps));
    if (t == t_max) return;
    std::vector<QPair> next(amps.size() + 2);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      QPair b = coin_quarter_pi(amps[i]);
      next[i].a0 = b.a0;
      next[i + 2].a1 = b.a1;
    }
    amps = std::move(next);
  }
}

ExactDistribution q2_oracle_distribution(WalkKind kind, std::int64_t t) {
  ExactDistribution out;
  q2_oracle_series(kind, t, [&](const ExactDistribution& d) {
    if (d.t == t) out = d;
  });
  return out;
}

Distribution to_distribution(const ExactDistribution& exact) {
  Distribution d{exact.kind, exact.t, {}};
  d.rows.reserve(exact.rows.size());
  for (const auto& r : exact.rows) {
    d.rows.push_back({r.x, r.p0.get_d(), r.p1.get_d(), r.p.get_d()});
  }
  return d;
}

}  // namespace qwalk
