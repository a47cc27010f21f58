#pragma once

// Tabular output: one table per (walk, theta, t, route), serialized as CSV
// (header + rows, LF endings) or JSON ({"meta", "columns", "rows"}).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qwalk/asymptotics.hpp"
#include "qwalk/closed_form.hpp"
#include "qwalk/core.hpp"
#include "qwalk/verify.hpp"

namespace qwalk {

enum class Format { Csv, Json };

std::string_view to_string(Format format);
Format parse_format(std::string_view text);

/// Exact rational cell: CSV carries only the float image, JSON adds
/// "<column>_num" / "<column>_den" strings.
struct ExactValue {
  std::string num;
  std::string den;
  double approx = 0.0;
  bool operator==(const ExactValue&) const = default;
};

using Cell = std::variant<std::monostate, std::int64_t, double, std::string, ExactValue>;

struct TableMeta {
  std::string kind;  // halfline, line, a density kind, or report
  std::optional<double> theta;
  std::optional<std::int64_t> t;
  std::string route;  // evolve, exact, oracle, approx, limit, verify
  bool operator==(const TableMeta&) const = default;
};

struct OutputTable {
  TableMeta meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool operator==(const OutputTable&) const = default;
};

// Shortest decimal that parses back to the same double; inf/nan spelled out.
std::string format_number(double v);

std::string render_csv(const OutputTable& table);
std::string render_json(const OutputTable& table);
std::string render(const OutputTable& table, Format format);

/// Writes the rendered table to `path` ("-" is stdout). Throws IoError.
void emit(const OutputTable& table, Format format, const std::string& path);

/// Inverse of render_csv for the columns; meta is not stored in CSV and is
/// taken from the argument. t, and x in tables with a p column, parse as
/// integers; file, name, note, pass, skipped and theta_label as text;
/// everything else as reals.
OutputTable parse_csv(std::string_view text, TableMeta meta = {});
OutputTable parse_json(std::string_view text);

// ---------------------------------------------------------------------------
// Builders

/// x,p0,p1,p with empty p0/p1 where the distribution has no inner split.
OutputTable distribution_table(const Distribution& dist, const Coin& coin, std::string route);

/// Closed-form table: half line gets the inner split, the line total only.
OutputTable exact_table(const Coin& coin, WalkKind kind, std::int64_t t, Precision precision);

/// Exact oracle at theta = pi/4 with rational cells.
OutputTable oracle_table(const ExactDistribution& dist);

/// approx_prob for x = 0..t in all three columns.
OutputTable approx_table(const Coin& coin, std::int64_t t);

/// y,density or x,cdf on `points` evenly spaced samples of [from, to].
OutputTable density_table(const LimitDensity& density, double from, double to, int points);
OutputTable cdf_table(const LimitDensity& density, double from, double to, int points);

/// name,theta,theta_label,t,max_residual,tolerance,pass,skipped,note
OutputTable report_table(const VerificationReport& report);

}  // namespace qwalk
