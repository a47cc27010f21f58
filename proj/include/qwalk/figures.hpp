#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qwalk/output.hpp"

namespace qwalk {

struct FigureTable {
  std::string name;  // file stem, e.g. "fig4_evolve"
  OutputTable table;
};

/// Numeric content behind each published figure:
///   fig1       half line, t = 500, theta = pi/4 (p0, p1, p panels in one table)
///   fig2       half line at pi/4, long format (t, x, p0, p1, p) for t = 0..100
///   fig3       half line at t = 150, long format (theta, x, p0, p1, p), theta = k pi/12
///   fig4, fig5 t = 14, 15 at pi/4: evolution and closed form
///   fig6, fig7 the same at pi/3
///   fig8, fig9 t = 500 at pi/4, pi/3: evolution and large-t approximation
std::vector<FigureTable> figure_data(std::string_view figure);

const std::vector<std::string>& figure_ids();

}  // namespace qwalk
