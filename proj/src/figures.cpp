#include "qwalk/figures.hpp"

#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"

namespace qwalk {

namespace {

OutputTable evolve_table(const Coin& coin, std::int64_t t) {
  return distribution_table(distribution(evolve_half_line(coin, t)), coin, "evolve");
}

std::vector<FigureTable> evolve_vs_exact(std::string_view id, const Coin& coin, std::int64_t t) {
  return {{std::string(id) + "_evolve", evolve_table(coin, t)},
          {std::string(id) + "_exact", exact_table(coin, WalkKind::HalfLine, t, Precision::DoubleDouble)}};
}

std::vector<FigureTable> evolve_vs_approx(std::string_view id, const Coin& coin) {
  return {{std::string(id) + "_evolve", evolve_table(coin, 500)},
          {std::string(id) + "_approx", approx_table(coin, 500)}};
}

OutputTable time_series(const Coin& coin, std::int64_t t_max) {
  OutputTable table;
  table.meta = {"halfline", coin.theta, t_max, "evolve"};
  table.columns = {"t", "x", "p0", "p1", "p"};
  HalfLineState state = initial_half_line(coin);
  for (std::int64_t t = 0; t <= t_max; ++t) {
    if (t > 0) state = step_half_line(state, coin);
    for (const auto& r : distribution(state).rows) {
      table.rows.push_back({t, r.x, *r.p0, *r.p1, r.p});
    }
  }
  return table;
}

OutputTable theta_series(std::int64_t t) {
  OutputTable table;
  table.meta = {"halfline", std::nullopt, t, "evolve"};
  table.columns = {"theta", "x", "p0", "p1", "p"};
  for (int k = 1; k <= 11; ++k) {
    const Coin coin = make_coin(PiFraction{k, 12});
    for (const auto& r : distribution(evolve_half_line(coin, t)).rows) {
      table.rows.push_back({coin.theta, r.x, *r.p0, *r.p1, r.p});
    }
  }
  return table;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"fig1", "fig2", "fig3", "fig4", "fig5",
                                               "fig6", "fig7", "fig8", "fig9"};
  return ids;
}

std::vector<FigureTable> figure_data(std::string_view figure) {
  const Coin quarter = make_coin(PiFraction{1, 4});
  const Coin third = make_coin(PiFraction{1, 3});
  if (figure == "fig1") return {{"fig1", evolve_table(quarter, 500)}};
  if (figure == "fig2") return {{"fig2", time_series(quarter, 100)}};
  if (figure == "fig3") return {{"fig3", theta_series(150)}};
  if (figure == "fig4") return evolve_vs_exact(figure, quarter, 14);
  if (figure == "fig5") return evolve_vs_exact(figure, quarter, 15);
  if (figure == "fig6") return evolve_vs_exact(figure, third, 14);
  if (figure == "fig7") return evolve_vs_exact(figure, third, 15);
  if (figure == "fig8") return evolve_vs_approx(figure, quarter);
  if (figure == "fig9") return evolve_vs_approx(figure, third);
  throw InvalidArgument("unknown figure '" + std::string(figure) + "' (expected fig1..fig9)");
}

}  // namespace qwalk
