// qwalk: command-line front end for simulation, closed forms, limit laws,
// verification and figure data.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cctype>
#include <filesystem>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qwalk/asymptotics.hpp"
#include "qwalk/closed_form.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/figures.hpp"
#include "qwalk/output.hpp"
#include "qwalk/verify.hpp"

namespace fs = std::filesystem;
using namespace qwalk;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kBadArgs = 2, kIoFailed = 3 };

constexpr std::int64_t kExactWarnSteps = 300;

struct Common {
  std::string theta = "pi/4";
  std::int64_t steps = 10;
  std::string walk = "halfline";
  std::string format = "csv";
  std::string out = "-";
  std::string precision = "dd";
};

void add_theta(CLI::App* cmd, Common& o) {
  cmd->add_option("--theta", o.theta, "coin angle: radians or a pi fraction like pi/4, 2pi/5")
      ->capture_default_str();
}
void add_steps(CLI::App* cmd, Common& o) {
  cmd->add_option("--steps", o.steps, "number of steps t")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}
void add_walk(CLI::App* cmd, Common& o) {
  cmd->add_option("--walk", o.walk, "walk kind")
      ->check(CLI::IsMember({"line", "halfline"}))
      ->capture_default_str();
}
void add_format(CLI::App* cmd, Common& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}
void add_out(CLI::App* cmd, Common& o, const char* help) {
  cmd->add_option("--out", o.out, help)->capture_default_str();
}
void add_precision(CLI::App* cmd, Common& o) {
  cmd->add_option("--precision", o.precision, "closed-form arithmetic")
      ->check(CLI::IsMember({"double", "dd", "exact"}))
      ->capture_default_str();
}

Coin coin_of(const std::string& text) { return make_coin(parse_angle(text)); }

std::vector<Coin> coins_of(const std::vector<std::string>& texts) {
  std::vector<Coin> coins;
  for (const auto& t : texts) coins.push_back(coin_of(t));
  return coins;
}

std::vector<std::int64_t> range_to(std::int64_t steps) {
  std::vector<std::int64_t> ts;
  for (std::int64_t t = 0; t <= steps; ++t) ts.push_back(t);
  return ts;
}

void warn_if_long(std::int64_t steps) {
  if (steps > kExactWarnSteps) {
    std::cerr << "qwalk: warning: closed-form sums cancel heavily for t > " << kExactWarnSteps
              << "; results may be refused by the precision guard, use simulate instead\n";
  }
}

OutputTable simulate_table(const Common& o) {
  const Coin coin = coin_of(o.theta);
  return distribution_table(distribution(evolve(parse_walk_kind(o.walk), coin, o.steps)), coin,
                            "evolve");
}

OutputTable exact_route_table(const Common& o) {
  warn_if_long(o.steps);
  return exact_table(coin_of(o.theta), parse_walk_kind(o.walk), o.steps,
                     parse_precision(o.precision));
}

std::string file_stem(const std::string& text) {
  std::string out;
  for (char ch : text) out += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' || ch == '-') ? ch : '_';
  return out;
}

unsigned thread_count() {
  if (const char* env = std::getenv("QWALK_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 1) {
      throw InvalidArgument("QWALK_THREADS must be a positive integer, got '" + std::string(env) + "'");
    }
    return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs jobs[i]() for every i on `threads` workers; rethrows the first failure
// (by job index) after all workers finish.
void run_parallel(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& job) {
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < std::min<std::size_t>(threads, count); ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError(dir, "cannot create directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coined quantum walks on the half line and the line"};
  app.require_subcommand(1);
  Common o;

  auto* simulate = app.add_subcommand("simulate", "unitary evolution, probability table");
  add_theta(simulate, o);
  add_steps(simulate, o);
  add_walk(simulate, o);
  add_format(simulate, o);
  add_out(simulate, o, "output file, - for stdout");

  auto* exact = app.add_subcommand("exact", "closed-form probability table");
  add_theta(exact, o);
  add_steps(exact, o);
  add_walk(exact, o);
  add_format(exact, o);
  add_out(exact, o, "output file, - for stdout");
  add_precision(exact, o);

  auto* oracle = app.add_subcommand("oracle", "exact evolution at theta = pi/4 with rational cells");
  add_theta(oracle, o);
  add_steps(oracle, o);
  add_walk(oracle, o);
  add_format(oracle, o);
  add_out(oracle, o, "output file, - for stdout");

  std::string density_kind;
  bool want_cdf = false;
  int points = 201;
  std::optional<double> from, to;
  auto* limit = app.add_subcommand("limit", "limit density (or CDF) of X_t / t");
  add_theta(limit, o);
  add_walk(limit, o);
  add_format(limit, o);
  add_out(limit, o, "output file, - for stdout");
  limit->add_option("--kind", density_kind,
                    "lineTotal, halfInner0, halfInner1 or halfTotal (default from --walk)");
  limit->add_flag("--cdf", want_cdf, "emit x,cdf instead of y,density");
  limit->add_option("--points", points, "number of samples")->check(CLI::PositiveNumber)->capture_default_str();
  limit->add_option("--from", from, "first sample (default: lower end of the support)");
  limit->add_option("--to", to, "last sample (default: upper end of the support)");

  auto* approx = app.add_subcommand("approx", "large-t approximation of the half-line distribution");
  add_theta(approx, o);
  add_steps(approx, o);
  add_format(approx, o);
  add_out(approx, o, "output file, - for stdout");

  std::string suite = "all";
  std::vector<std::string> thetas;
  std::vector<std::int64_t> ts;
  std::optional<std::int64_t> max_steps;
  auto* verify = app.add_subcommand("verify", "run verification suites; exit 1 if any check fails");
  verify->add_option("--suite", suite,
                     "lemma1, lemma2, theorem1, exactVsSim, innerSplit, limitNorm, ksConvergence, all")
      ->capture_default_str();
  verify->add_option("--theta", thetas, "angles (repeat or comma-separate; default pi/6,pi/4,pi/3,1.0)")
      ->delimiter(',');
  auto* verify_steps =
      verify->add_option("--steps", max_steps, "check every t in 0..steps (default 200)")->check(CLI::NonNegativeNumber);
  verify->add_option("--ts", ts, "explicit list of times")->delimiter(',')->excludes(verify_steps);
  add_format(verify, o);
  add_out(verify, o, "report file, - for stdout");

  std::string figure_id;
  auto* figure = app.add_subcommand("figure", "numeric content of a figure, one file per table");
  figure->add_option("id", figure_id, "fig1 .. fig9, or all")->required();
  add_format(figure, o);
  std::string out_dir = ".";
  figure->add_option("--out", out_dir, "output directory")->capture_default_str();

  std::string route = "evolve";
  auto* sweep = app.add_subcommand("sweep", "tables over a theta grid and list of times, in parallel");
  sweep->add_option("--theta", thetas, "angles (repeat or comma-separate)")->delimiter(',')->required();
  sweep->add_option("--ts", ts, "times (repeat or comma-separate)")->delimiter(',')->required();
  sweep->add_option("--route", route, "evolve, exact or approx")
      ->check(CLI::IsMember({"evolve", "exact", "approx"}))
      ->capture_default_str();
  add_walk(sweep, o);
  add_format(sweep, o);
  add_precision(sweep, o);
  sweep->add_option("--out", out_dir, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArgs;
  }

  try {
    const Format format = parse_format(o.format);

    if (simulate->parsed()) {
      emit(simulate_table(o), format, o.out);
    } else if (exact->parsed()) {
      emit(exact_route_table(o), format, o.out);
    } else if (oracle->parsed()) {
      if (!is_exact_quarter_pi(coin_of(o.theta))) {
        throw FormulaDomainError("the exact oracle exists only for theta = pi/4");
      }
      emit(oracle_table(q2_oracle_distribution(parse_walk_kind(o.walk), o.steps)), format, o.out);
    } else if (limit->parsed()) {
      DensityKind kind;
      if (!density_kind.empty()) {
        kind = parse_density_kind(density_kind);
      } else {
        kind = parse_walk_kind(o.walk) == WalkKind::Line ? DensityKind::LineTotal
                                                         : DensityKind::HalfTotal;
      }
      LimitDensity density(coin_of(o.theta), kind);
      const double lo = from.value_or(density.lower());
      const double hi = to.value_or(density.upper());
      if (!(lo <= hi)) throw InvalidArgument("--from must not exceed --to");
      emit(want_cdf ? cdf_table(density, lo, hi, points) : density_table(density, lo, hi, points),
           format, o.out);
    } else if (approx->parsed()) {
      emit(approx_table(coin_of(o.theta), o.steps), format, o.out);
    } else if (verify->parsed()) {
      if (thetas.empty()) thetas = {"pi/6", "pi/4", "pi/3", "1.0"};
      if (ts.empty()) ts = range_to(max_steps.value_or(200));
      VerificationReport report = run_checks(parse_suite(suite), coins_of(thetas), ts);
      emit(report_table(report), format, o.out);
      const std::size_t failed = report.failures();
      std::cerr << "qwalk: " << report.checks.size() - failed << "/" << report.checks.size()
                << " checks passed\n";
      return failed == 0 ? kOk : kVerifyFailed;
    } else if (figure->parsed()) {
      std::vector<std::string> ids;
      if (figure_id == "all") {
        ids = figure_ids();
      } else {
        ids = {figure_id};
      }
      ensure_dir(out_dir);
      for (const auto& id : ids) {
        for (const auto& ft : figure_data(id)) {
          emit(ft.table, format, (fs::path(out_dir) / (ft.name + "." + o.format)).string());
        }
      }
    } else if (sweep->parsed()) {
      struct Config {
        Coin coin;
        std::string label;
        std::int64_t t;
        std::string file;
      };
      std::vector<Config> configs;
      for (const auto& text : thetas) {
        const Coin coin = coin_of(text);
        const std::string label = format_angle(coin.angle());
        for (std::int64_t t : ts) {
          if (t < 0) throw InvalidArgument("times must be non-negative");
          configs.push_back({coin, label, t,
                             o.walk + "_" + route + "_theta" + file_stem(label) + "_t" +
                                 std::to_string(t) + "." + o.format});
        }
      }
      std::stable_sort(configs.begin(), configs.end(), [](const Config& a, const Config& b) {
        return std::pair(a.coin.theta, a.t) < std::pair(b.coin.theta, b.t);
      });
      configs.erase(std::unique(configs.begin(), configs.end(),
                                [](const Config& a, const Config& b) { return a.file == b.file; }),
                    configs.end());
      if (route == "exact") warn_if_long(*std::max_element(ts.begin(), ts.end()));
      ensure_dir(out_dir);
      const WalkKind walk = parse_walk_kind(o.walk);
      const Precision precision = parse_precision(o.precision);
      if (route == "approx" && walk != WalkKind::HalfLine) {
        throw InvalidArgument("the approx route covers the half line only");
      }
      run_parallel(configs.size(), thread_count(), [&](std::size_t i) {
        const Config& c = configs[i];
        OutputTable table;
        if (route == "evolve") {
          table = distribution_table(distribution(evolve(walk, c.coin, c.t)), c.coin, "evolve");
        } else if (route == "exact") {
          table = exact_table(c.coin, walk, c.t, precision);
        } else {
          table = approx_table(c.coin, c.t);
        }
        emit(table, format, (fs::path(out_dir) / c.file).string());
      });
      OutputTable index;
      index.meta = {o.walk, std::nullopt, std::nullopt, route};
      index.columns = {"theta", "theta_label", "t", "file"};
      for (const auto& c : configs) index.rows.push_back({c.coin.theta, c.label, c.t, c.file});
      emit(index, format, (fs::path(out_dir) / ("index." + o.format)).string());
    }
    return kOk;
  } catch (const IoError& e) {
    std::cerr << "qwalk: I/O error: " << e.what() << "\n";
    return kIoFailed;
  } catch (const InvalidArgument& e) {
    std::cerr << "qwalk: invalid argument: " << e.what() << "\n";
    return kBadArgs;
  } catch (const FormulaDomainError& e) {
    std::cerr << "qwalk: outside the formula's domain: " << e.what() << "\n";
    return kBadArgs;
  } catch (const PrecisionError& e) {
    std::cerr << "qwalk: precision: " << e.what() << "\n";
    return kBadArgs;
  } catch (const ResourceError& e) {
    std::cerr << "qwalk: too large: " << e.what() << "\n";
    return kBadArgs;
  }
}
