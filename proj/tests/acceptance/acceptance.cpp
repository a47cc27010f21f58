// Acceptance run: one PASS/FAIL line per criterion, exit status = number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qwalk/asymptotics.hpp"
#include "qwalk/closed_form.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/verify.hpp"

using namespace qwalk;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Coin> grid() {
  return {make_coin(PiFraction{1, 6}), make_coin(PiFraction{1, 4}), make_coin(PiFraction{1, 3}),
          make_coin(1.0)};
}

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t t = lo; t <= hi; ++t) out.push_back(t);
  return out;
}

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& measured) {
  std::printf("criterion %2d: %s  %s | %s\n", id, pass ? "PASS" : "FAIL", what.c_str(),
              measured.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double worst_residual(const VerificationReport& r, bool& all_pass) {
  double worst = 0.0;
  for (const auto& c : r.checks) {
    worst = std::max(worst, c.max_residual);
    all_pass = all_pass && c.pass;
  }
  return worst;
}

double value_or_zero(const std::optional<double>& v) { return v.value_or(0.0); }

// max |a - b| over the union of positions, per column
double max_diff(const Distribution& a, const Distribution& b,
                const std::function<double(const DistributionRow&)>& pick) {
  double worst = 0.0;
  for (const auto& row : a.rows) {
    const DistributionRow* other = b.find(row.x);
    worst = std::max(worst, std::abs(pick(row) - (other ? pick(*other) : 0.0)));
  }
  for (const auto& row : b.rows) {
    if (!a.find(row.x)) worst = std::max(worst, std::abs(pick(row)));
  }
  return worst;
}

// max |oracle(x) - table(x)| in exact arithmetic; positions missing from the
// table are zero.
double exact_gap(const ExactDistribution& oracle, const DDTable& table,
                 const std::function<const mpq_class&(const ExactRow&)>& pick) {
  double worst = 0.0;
  std::size_t matched = 0;
  for (const auto& row : oracle.rows) {
    mpq_class expect = 0;
    auto it = std::find_if(table.rows.begin(), table.rows.end(),
                           [&](const auto& r) { return r.first == row.x; });
    if (it != table.rows.end()) {
      expect = to_mpq(it->second);
      ++matched;
    }
    mpq_class diff = pick(row) - expect;
    worst = std::max(worst, std::abs(diff.get_d()));
  }
  if (matched != table.rows.size()) return kInf;  // table lists a site outside the window
  return worst;
}

void unitarity() {
  double worst_err = 0.0;
  double worst_time = 0.0;
  for (const Coin& coin : grid()) {
    for (WalkKind kind : {WalkKind::HalfLine, WalkKind::Line}) {
      auto start = std::chrono::steady_clock::now();
      Distribution d = distribution(evolve(kind, coin, 10'000));
      worst_time = std::max(worst_time, seconds_since(start));
      double sum = 0.0;
      for (const auto& row : d.rows) sum += row.p;
      worst_err = std::max(worst_err, std::abs(sum - 1.0));
    }
  }
  report(1, worst_err <= 1e-12 && worst_time <= 10.0,
         "unitarity at t = 10^4, both walks, theta grid: |sum p - 1| <= 1e-12, <= 10 s each",
         fmt("max |sum p - 1| = %.3g, slowest configuration %.2f s", worst_err, worst_time));
}

void reduction() {
  bool pass = true;
  double worst = worst_residual(run_checks(Suite::Reduction, grid(), range(0, 500)), pass);
  report(2, pass && worst <= 1e-12,
         "half-line inner-state probabilities equal line probabilities, t <= 500",
         fmt("max residual = %.3g", worst));
}

void identities() {
  bool pass = true;
  double w1 = worst_residual(run_checks(Suite::LineSymmetry, grid(), range(0, 300)), pass);
  double w2 = worst_residual(run_checks(Suite::HalfLineCorrespondence, grid(), range(0, 300)), pass);
  report(3, pass && std::max(w1, w2) <= 1e-12,
         "line symmetry and half-line correspondence residuals <= 1e-12, t <= 300",
         fmt("symmetry %.3g, correspondence %.3g", w1, w2));
}

void figure_pairs() {
  double worst = 0.0;
  for (const Coin& coin : {make_coin(PiFraction{1, 4}), make_coin(PiFraction{1, 3})}) {
    for (std::int64_t t : {14, 15}) {
      Distribution sim = distribution(evolve_half_line(coin, t));
      Distribution in0 = half_line_exact_by_inner(coin, t, 0);
      Distribution in1 = half_line_exact_by_inner(coin, t, 1);
      Distribution total = half_line_exact_total(coin, t);
      worst = std::max(worst, max_diff(in0, sim, [](const auto& r) { return value_or_zero(r.p0); }));
      worst = std::max(worst, max_diff(in1, sim, [](const auto& r) { return value_or_zero(r.p1); }));
      worst = std::max(worst, max_diff(total, sim, [](const auto& r) { return r.p; }));
    }
  }
  report(4, worst <= 1e-12, "closed form vs evolution at t in {14, 15}, theta in {pi/4, pi/3}",
         fmt("max |difference| = %.3g", worst));
}

void oracle_agreement() {
  const Coin coin = make_coin(PiFraction{1, 4});
  double vs_dd = 0.0;
  double vs_sim = 0.0;

  LineState line = initial_line(coin);
  q2_oracle_series(WalkKind::Line, 200, [&](const ExactDistribution& oracle) {
    if (oracle.t > 0) line = step_line(line, coin);
    if (oracle.t >= 1 && oracle.t <= 100) {
      vs_dd = std::max(vs_dd, exact_gap(oracle, line_exact_dd(coin, oracle.t),
                                        [](const ExactRow& r) -> const mpq_class& { return r.p; }));
    }
    vs_sim = std::max(vs_sim, max_diff(to_distribution(oracle), distribution(line),
                                       [](const auto& r) { return r.p; }));
  });

  HalfLineState half = initial_half_line(coin);
  q2_oracle_series(WalkKind::HalfLine, 200, [&](const ExactDistribution& oracle) {
    if (oracle.t > 0) half = step_half_line(half, coin);
    if (oracle.t >= 1 && oracle.t <= 100) {
      const std::int64_t t = oracle.t;
      vs_dd = std::max(vs_dd, exact_gap(oracle, half_line_exact_dd(coin, t, HalfLineSelection::Inner0),
                                        [](const ExactRow& r) -> const mpq_class& { return r.p0; }));
      vs_dd = std::max(vs_dd, exact_gap(oracle, half_line_exact_dd(coin, t, HalfLineSelection::Inner1),
                                        [](const ExactRow& r) -> const mpq_class& { return r.p1; }));
      vs_dd = std::max(vs_dd, exact_gap(oracle, half_line_exact_dd(coin, t, HalfLineSelection::Total),
                                        [](const ExactRow& r) -> const mpq_class& { return r.p; }));
    }
    Distribution exact = to_distribution(oracle);
    Distribution sim = distribution(half);
    vs_sim = std::max(vs_sim, max_diff(exact, sim, [](const auto& r) { return value_or_zero(r.p0); }));
    vs_sim = std::max(vs_sim, max_diff(exact, sim, [](const auto& r) { return value_or_zero(r.p1); }));
    vs_sim = std::max(vs_sim, max_diff(exact, sim, [](const auto& r) { return r.p; }));
  });

  report(5, vs_dd <= 1e-25 && vs_sim <= 1e-13,
         "exact oracle at pi/4 vs double-double closed form (t <= 100, 1e-25) and evolution (t <= 200, 1e-13)",
         fmt("vs closed form %.3g, vs evolution %.3g", vs_dd, vs_sim));
}

void edges() {
  double worst = 0.0;
  for (const Coin& coin : grid()) {
    const double c2 = coin.c * coin.c;
    LineState line = initial_line(coin);
    for (std::int64_t t = 1; t <= 100; ++t) {
      line = step_line(line, coin);
      const double expect = std::pow(c2, static_cast<double>(t - 1)) / 2.0;
      worst = std::max(worst, std::abs(line.at(-t - 1).norm_sq() - expect));
      worst = std::max(worst, std::abs(line.at(-t).norm_sq() - expect));
    }
    HalfLineState half = initial_half_line(coin);
    for (std::int64_t steps = 1; steps <= 201; ++steps) {
      half = step_half_line(half, coin);
      if (steps % 2 == 0) continue;
      const std::int64_t t = (steps - 1) / 2;
      const double expect = std::pow(c2, static_cast<double>(2 * t)) / 2.0;
      worst = std::max(worst, std::abs(std::norm(half.at(steps).a1) - expect));
    }
  }
  report(6, worst <= 1e-12, "edge probabilities c^{2(t-1)}/2 (line) and c^{4t}/2 (half line), t <= 100",
         fmt("max |difference| = %.3g", worst));
}

void limit_normalization() {
  double worst_mass = 0.0;
  for (int k = 1; k <= 20; ++k) {
    const Coin coin = make_coin(PiFraction{k, 21});
    // the two inner-state densities partition the half-line total
    const double masses[] = {
        LimitDensity(coin, DensityKind::LineTotal).total_mass(),
        LimitDensity(coin, DensityKind::HalfTotal).total_mass(),
        LimitDensity(coin, DensityKind::HalfInner0).total_mass() +
            LimitDensity(coin, DensityKind::HalfInner1).total_mass(),
    };
    for (double mass : masses) {
      worst_mass = std::isfinite(mass) ? std::max(worst_mass, std::abs(mass - 1.0)) : kInf;
    }
  }
  LimitDensity quarter(make_coin(PiFraction{1, 4}), DensityKind::HalfTotal);
  const double end = 0.95 / std::numbers::sqrt2;
  double worst_rel = 0.0;
  for (int i = 0; i < 10'000; ++i) {
    const double y = end * i / 10'000.0;
    const double known =
        2.0 / (std::numbers::pi * (1.0 - y * y) * std::sqrt(1.0 - 2.0 * y * y));
    worst_rel = std::max(worst_rel, std::abs(quarter.density_at(y) - known) / known);
  }
  report(7, worst_mass <= 1e-8 && worst_rel <= 1e-14,
         "limit densities integrate to 1, inner pair summed (20 angles, 1e-8); pi/4 density matches the closed form (1e-14 relative)",
         fmt("max |mass - 1| = %.3g, max relative density error = %.3g", worst_mass, worst_rel));
}

void convergence() {
  const Coin coin = make_coin(PiFraction{1, 4});
  const double ks = ks_distance(coin, 1000, DensityKind::HalfTotal).ks;
  const double m200 = ks_window_median(coin, 200, DensityKind::HalfTotal);
  const double m400 = ks_window_median(coin, 400, DensityKind::HalfTotal);
  const double m800 = ks_window_median(coin, 800, DensityKind::HalfTotal);
  report(8, ks <= 0.05 && m400 < m200 && m800 < m400,
         "KS(X_1000 / 1000, limit law) <= 0.05 at pi/4; median KS decreases over t = 200, 400, 800",
         fmt("KS = %.4f; medians %.4f, %.4f, ", ks, m200, m400) + fmt("%.4f", m800));
}

void approximation() {
  const std::int64_t t = 500;
  std::string detail;
  bool pass = true;
  for (const Coin& coin : {make_coin(PiFraction{1, 4}), make_coin(PiFraction{1, 3})}) {
    Distribution sim = distribution(evolve_half_line(coin, t));
    auto prob = [&](std::int64_t x) {
      const DistributionRow* r = sim.find(x);
      return r ? r->p : 0.0;
    };
    double worst = 0.0;
    std::int64_t at = -1;
    const auto lo = static_cast<std::int64_t>(std::ceil(0.05 * t));
    const auto hi = static_cast<std::int64_t>(std::floor(0.55 * t));
    for (std::int64_t x = lo; x <= hi; ++x) {
      // sites 2k-1 and 2k form a pair
      const std::int64_t first = (x % 2 == 0) ? x - 1 : x;
      const double averaged = 0.5 * (prob(first) + prob(first + 1));
      const double approx = approx_prob(coin, t, x, ApproxKind::Total);
      double rel;
      if (approx > 0.0) {
        rel = std::abs(averaged - approx) / approx;
      } else {
        rel = averaged > 0.0 ? kInf : 0.0;
      }
      if (rel > worst) {
        worst = rel;
        at = x;
      }
    }
    pass = pass && worst <= 0.10;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s max relative error %.3g at x = %lld; ",
                  format_angle(coin.angle()).c_str(), worst, static_cast<long long>(at));
    detail += buf;
  }
  detail.erase(detail.size() - 2);
  report(9, pass, "pair-averaged evolution vs large-t approximation within 10% on [0.05t, 0.55t], t = 500",
         detail);
}

void peak() {
  const Coin coin = make_coin(PiFraction{1, 4});
  Distribution d = distribution(evolve_half_line(coin, 500));
  auto best = std::max_element(d.rows.begin(), d.rows.end(),
                               [](const auto& a, const auto& b) { return a.p < b.p; });
  const double target = std::abs(coin.c) * 500.0;
  const double off = std::abs(static_cast<double>(best->x) - target) / target;
  report(10, off <= 0.05, "argmax of P(X_500 = x) at pi/4 within 5% of |c| 500",
         fmt("argmax x = %.0f, |c| 500 = %.1f, relative offset %.3g", static_cast<double>(best->x),
             target, off));
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  unitarity();
  reduction();
  identities();
  figure_pairs();
  oracle_agreement();
  edges();
  limit_normalization();
  convergence();
  approximation();
  peak();
  std::printf("%d of 10 criteria passed in %.1f s\n", 10 - failures, seconds_since(start));
  return failures;
}
