#include "qwalk/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qwalk/errors.hpp"

namespace qwalk {

using Json = nlohmann::ordered_json;

namespace {

const std::set<std::string, std::less<>> kIntegerColumns = {"x", "t"};
const std::set<std::string, std::less<>> kTextColumns = {"file", "name", "note", "pass", "skipped",
                                                          "theta_label"};

// x is a lattice site in distribution tables and a real abscissa in x,cdf.
bool is_integer_column(std::string_view name, const std::vector<std::string>& columns) {
  if (name == "x") return std::find(columns.begin(), columns.end(), "p") != columns.end();
  return kIntegerColumns.count(name) > 0;
}
bool is_text_column(std::string_view name) { return kTextColumns.count(name) > 0; }

std::string csv_field(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(const ExactValue& v) const { return format_number(v.approx); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
      }
      return out + "\"";
    }
  };
  return std::visit(Visitor{}, cell);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::int64_t parse_int64(std::string_view text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

Cell typed_cell(std::string_view column, const std::vector<std::string>& columns,
                std::string field) {
  if (field.empty()) return std::monostate{};
  if (is_text_column(column)) return field;
  if (is_integer_column(column, columns)) return parse_int64(field);
  return parse_double(field);
}

// RFC 4180-style split of one CSV record starting at `pos`; advances pos past
// the line terminator.
std::vector<std::string> split_record(std::string_view text, std::size_t& pos) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  while (pos < text.size()) {
    char ch = text[pos];
    if (quoted) {
      if (ch == '"') {
        if (pos + 1 < text.size() && text[pos + 1] == '"') {
          field += '"';
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      ++pos;
      continue;
    }
    if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      ++pos;
      break;
    } else if (ch != '\r') {
      field += ch;
    }
    ++pos;
  }
  fields.push_back(std::move(field));
  return fields;
}

Json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);  // JSON has no inf/nan literals
}

}  // namespace

std::string_view to_string(Format format) { return format == Format::Csv ? "csv" : "json"; }

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw InvalidArgument("unknown format '" + std::string(text) + "'");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string render_csv(const OutputTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const OutputTable& table) {
  Json meta = Json::object();
  meta["kind"] = table.meta.kind;
  meta["theta"] = table.meta.theta ? json_number(*table.meta.theta) : Json(nullptr);
  meta["t"] = table.meta.t ? Json(*table.meta.t) : Json(nullptr);
  meta["route"] = table.meta.route;

  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      const std::string& col = table.columns[i];
      const Cell& cell = row[i];
      if (std::holds_alternative<std::monostate>(cell)) {
        obj[col] = nullptr;
      } else if (auto* n = std::get_if<std::int64_t>(&cell)) {
        obj[col] = *n;
      } else if (auto* d = std::get_if<double>(&cell)) {
        obj[col] = json_number(*d);
      } else if (auto* s = std::get_if<std::string>(&cell)) {
        obj[col] = *s;
      } else {
        const auto& e = std::get<ExactValue>(cell);
        obj[col] = json_number(e.approx);
        obj[col + "_num"] = e.num;
        obj[col + "_den"] = e.den;
      }
    }
    rows.push_back(std::move(obj));
  }
  Json doc = Json::object();
  doc["meta"] = std::move(meta);
  doc["columns"] = table.columns;
  doc["rows"] = std::move(rows);
  return doc.dump(1) + "\n";
}

std::string render(const OutputTable& table, Format format) {
  return format == Format::Csv ? render_csv(table) : render_json(table);
}

void emit(const OutputTable& table, Format format, const std::string& path) {
  const std::string text = render(table, format);
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    if (!std::cout) throw IoError("<stdout>", "write failed");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out << text;
  out.close();
  if (!out) throw IoError(path, "write failed");
}

OutputTable parse_csv(std::string_view text, TableMeta meta) {
  OutputTable table;
  table.meta = std::move(meta);
  std::size_t pos = 0;
  if (text.empty()) throw InvalidArgument("empty CSV input");
  table.columns = split_record(text, pos);
  while (pos < text.size()) {
    std::vector<std::string> fields = split_record(text, pos);
    if (fields.size() == 1 && fields[0].empty() && table.columns.size() != 1) continue;
    if (fields.size() != table.columns.size()) {
      throw InvalidArgument("CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(table.columns.size()));
    }
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      row.push_back(typed_cell(table.columns[i], table.columns, std::move(fields[i])));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

OutputTable parse_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  auto number_of = [](const Json& v) -> double {
    if (v.is_string()) return parse_double(v.get<std::string>());
    return v.get<double>();
  };
  OutputTable table;
  const Json& meta = doc.at("meta");
  table.meta.kind = meta.at("kind").get<std::string>();
  if (!meta.at("theta").is_null()) table.meta.theta = number_of(meta.at("theta"));
  if (!meta.at("t").is_null()) table.meta.t = meta.at("t").get<std::int64_t>();
  table.meta.route = meta.at("route").get<std::string>();
  table.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const Json& obj : doc.at("rows")) {
    std::vector<Cell> row;
    for (const std::string& col : table.columns) {
      const Json& v = obj.at(col);
      if (v.is_null()) {
        row.emplace_back(std::monostate{});
      } else if (obj.contains(col + "_num")) {
        row.emplace_back(ExactValue{obj.at(col + "_num").get<std::string>(),
                                    obj.at(col + "_den").get<std::string>(), number_of(v)});
      } else if (is_text_column(col)) {
        row.emplace_back(v.get<std::string>());
      } else if (v.is_number_integer()) {
        row.emplace_back(v.get<std::int64_t>());
      } else {
        row.emplace_back(number_of(v));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

// ---------------------------------------------------------------------------

namespace {

Cell optional_cell(const std::optional<double>& v) {
  if (!v) return std::monostate{};
  return *v;
}

const std::vector<std::string> kDistColumns = {"x", "p0", "p1", "p"};

}  // namespace

OutputTable distribution_table(const Distribution& dist, const Coin& coin, std::string route) {
  OutputTable table;
  table.meta = {std::string(to_string(dist.kind)), coin.theta, dist.t, std::move(route)};
  table.columns = kDistColumns;
  for (const auto& r : dist.rows) {
    table.rows.push_back({r.x, optional_cell(r.p0), optional_cell(r.p1), r.p});
  }
  return table;
}

OutputTable exact_table(const Coin& coin, WalkKind kind, std::int64_t t, Precision precision) {
  const ExactParams params{precision};
  if (kind == WalkKind::Line) return distribution_table(line_exact(coin, t, params), coin, "exact");
  Distribution total = half_line_exact_total(coin, t, params);
  Distribution in0 = half_line_exact_by_inner(coin, t, 0, params);
  Distribution in1 = half_line_exact_by_inner(coin, t, 1, params);
  for (auto& row : total.rows) {
    row.p0 = in0.prob_at(row.x);
    row.p1 = in1.prob_at(row.x);
  }
  return distribution_table(total, coin, "exact");
}

OutputTable oracle_table(const ExactDistribution& dist) {
  auto cell = [](const mpq_class& q) {
    return ExactValue{q.get_num().get_str(), q.get_den().get_str(), q.get_d()};
  };
  OutputTable table;
  table.meta = {std::string(to_string(dist.kind)), make_coin(PiFraction{1, 4}).theta, dist.t,
                "oracle"};
  table.columns = kDistColumns;
  for (const auto& r : dist.rows) table.rows.push_back({r.x, cell(r.p0), cell(r.p1), cell(r.p)});
  return table;
}

OutputTable approx_table(const Coin& coin, std::int64_t t) {
  OutputTable table;
  table.meta = {"halfline", coin.theta, t, "approx"};
  table.columns = kDistColumns;
  for (std::int64_t x = 0; x <= t; ++x) {
    table.rows.push_back({x, approx_prob(coin, t, x, ApproxKind::Inner0),
                          approx_prob(coin, t, x, ApproxKind::Inner1),
                          approx_prob(coin, t, x, ApproxKind::Total)});
  }
  return table;
}

namespace {

template <class F>
OutputTable sample_table(const LimitDensity& d, std::string axis, std::string value, double from,
                         double to, int points, F f) {
  if (points < 1) throw InvalidArgument("need at least one sample point");
  if (!(from <= to)) throw InvalidArgument("sample range must satisfy from <= to");
  OutputTable table;
  table.meta = {std::string(to_string(d.kind())), d.coin().theta, std::nullopt, "limit"};
  table.columns = {std::move(axis), std::move(value)};
  for (int i = 0; i < points; ++i) {
    double v = points == 1 ? from : from + (to - from) * i / (points - 1);
    table.rows.push_back({v, f(v)});
  }
  return table;
}

}  // namespace

OutputTable density_table(const LimitDensity& density, double from, double to, int points) {
  return sample_table(density, "y", "density", from, to, points,
                      [&](double y) { return density.density_at(y); });
}

OutputTable cdf_table(const LimitDensity& density, double from, double to, int points) {
  return sample_table(density, "x", "cdf", from, to, points,
                      [&](double x) { return density.cdf_at(x); });
}

OutputTable report_table(const VerificationReport& report) {
  OutputTable table;
  table.meta = {"report", std::nullopt, std::nullopt, "verify"};
  table.columns = {"name", "theta", "theta_label", "t",    "max_residual",
                   "tolerance", "pass", "skipped",  "note"};
  for (const auto& c : report.checks) {
    table.rows.push_back({c.name, c.theta, c.theta_label, c.t, c.max_residual, c.tolerance,
                          std::string(c.pass ? "true" : "false"),
                          std::string(c.skipped ? "true" : "false"),
                          c.note.empty() ? Cell{} : Cell{c.note}});
  }
  return table;
}

}  // namespace qwalk
