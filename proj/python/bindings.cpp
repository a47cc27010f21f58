#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>
#include <string>
#include <variant>

#include "qwalk/asymptotics.hpp"
#include "qwalk/closed_form.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/figures.hpp"
#include "qwalk/output.hpp"
#include "qwalk/verify.hpp"

namespace py = pybind11;
using namespace qwalk;

namespace {

using AngleArg = std::variant<double, std::string>;

Coin coin_of(const AngleArg& theta) {
  if (const auto* text = std::get_if<std::string>(&theta)) return make_coin(parse_angle(*text));
  return make_coin(std::get<double>(theta));
}

// Columns as numpy arrays; a missing inner-state split becomes NaN.
py::dict columns_of(const Distribution& d) {
  const auto n = static_cast<py::ssize_t>(d.rows.size());
  py::array_t<std::int64_t> x(n);
  py::array_t<double> p0(n), p1(n), p(n);
  auto xs = x.mutable_unchecked<1>();
  auto a0 = p0.mutable_unchecked<1>();
  auto a1 = p1.mutable_unchecked<1>();
  auto at = p.mutable_unchecked<1>();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (py::ssize_t i = 0; i < n; ++i) {
    const auto& row = d.rows[static_cast<std::size_t>(i)];
    xs(i) = row.x;
    a0(i) = row.p0.value_or(nan);
    a1(i) = row.p1.value_or(nan);
    at(i) = row.p;
  }
  py::dict out;
  out["x"] = x;
  out["p0"] = p0;
  out["p1"] = p1;
  out["p"] = p;
  return out;
}

py::object cell_value(const Cell& cell) {
  struct Visitor {
    py::object operator()(std::monostate) const { return py::none(); }
    py::object operator()(std::int64_t v) const { return py::int_(v); }
    py::object operator()(double v) const { return py::float_(v); }
    py::object operator()(const std::string& v) const { return py::str(v); }
    py::object operator()(const ExactValue& v) const {
      return py::module_::import("fractions").attr("Fraction")(py::int_(py::str(v.num)),
                                                               py::int_(py::str(v.den)));
    }
  };
  return std::visit(Visitor{}, cell);
}

py::dict table_dict(const OutputTable& t) {
  py::dict meta;
  meta["kind"] = t.meta.kind;
  meta["theta"] = t.meta.theta ? py::object(py::float_(*t.meta.theta)) : py::object(py::none());
  meta["t"] = t.meta.t ? py::object(py::int_(*t.meta.t)) : py::object(py::none());
  meta["route"] = t.meta.route;
  py::list rows;
  for (const auto& row : t.rows) {
    py::dict r;
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
      r[py::str(t.columns[i])] = cell_value(row[i]);
    }
    rows.append(r);
  }
  py::dict out;
  out["meta"] = meta;
  out["columns"] = t.columns;
  out["rows"] = rows;
  return out;
}

}  // namespace

PYBIND11_MODULE(_qwalk, m) {
  m.doc() = "Coined quantum walks on the half line and the line";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<FormulaDomainError>(m, "FormulaDomainError", PyExc_ValueError);
  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<Coin>(m, "Coin")
      .def_readonly("theta", &Coin::theta)
      .def_readonly("c", &Coin::c)
      .def_readonly("s", &Coin::s)
      .def("__repr__", [](const Coin& c) { return "Coin(theta=" + format_angle(c.angle()) + ")"; });

  m.def("make_coin", &coin_of, py::arg("theta"),
        "Coin for an angle in radians or a pi fraction such as 'pi/4'.");

  m.def(
      "simulate",
      [](const AngleArg& theta, std::int64_t steps, const std::string& walk) {
        return columns_of(distribution(evolve(parse_walk_kind(walk), coin_of(theta), steps)));
      },
      py::arg("theta"), py::arg("steps"), py::arg("walk") = "halfline",
      "Distribution after `steps` steps of unitary evolution: dict of x, p0, p1, p arrays.");

  m.def(
      "exact",
      [](const AngleArg& theta, std::int64_t steps, const std::string& walk,
         const std::string& precision) {
        const Coin coin = coin_of(theta);
        const ExactParams params{parse_precision(precision)};
        if (parse_walk_kind(walk) == WalkKind::Line) return columns_of(line_exact(coin, steps, params));
        Distribution total = half_line_exact_total(coin, steps, params);
        Distribution in0 = half_line_exact_by_inner(coin, steps, 0, params);
        Distribution in1 = half_line_exact_by_inner(coin, steps, 1, params);
        for (auto& row : total.rows) {
          const DistributionRow* a = in0.find(row.x);
          const DistributionRow* b = in1.find(row.x);
          row.p0 = a ? a->p0.value_or(0.0) : 0.0;
          row.p1 = b ? b->p1.value_or(0.0) : 0.0;
        }
        return columns_of(total);
      },
      py::arg("theta"), py::arg("steps"), py::arg("walk") = "halfline",
      py::arg("precision") = "dd", "Closed-form distribution; half line includes the inner split.");

  m.def(
      "oracle",
      [](std::int64_t steps, const std::string& walk) {
        return table_dict(oracle_table(q2_oracle_distribution(parse_walk_kind(walk), steps)));
      },
      py::arg("steps"), py::arg("walk") = "halfline",
      "Exact distribution at theta = pi/4 with fractions.Fraction cells.");

  m.def(
      "density",
      [](const AngleArg& theta, double y, const std::string& kind) {
        return LimitDensity(coin_of(theta), parse_density_kind(kind)).density_at(y);
      },
      py::arg("theta"), py::arg("y"), py::arg("kind") = "halfTotal");
  m.def(
      "cdf",
      [](const AngleArg& theta, double x, const std::string& kind) {
        return LimitDensity(coin_of(theta), parse_density_kind(kind)).cdf_at(x);
      },
      py::arg("theta"), py::arg("x"), py::arg("kind") = "halfTotal");
  m.def(
      "approx_prob",
      [](const AngleArg& theta, std::int64_t t, std::int64_t x, const std::string& kind) {
        return approx_prob(coin_of(theta), t, x, parse_approx_kind(kind));
      },
      py::arg("theta"), py::arg("t"), py::arg("x"), py::arg("kind") = "total");
  m.def(
      "ks_distance",
      [](const AngleArg& theta, std::int64_t t, const std::string& kind) {
        return ks_distance(coin_of(theta), t, parse_density_kind(kind)).ks;
      },
      py::arg("theta"), py::arg("t"), py::arg("kind") = "halfTotal");

  m.def(
      "verify",
      [](const std::string& suite, const std::vector<AngleArg>& thetas,
         const std::vector<std::int64_t>& ts) {
        std::vector<Coin> coins;
        for (const auto& th : thetas) coins.push_back(coin_of(th));
        return table_dict(report_table(run_checks(parse_suite(suite), coins, ts)));
      },
      py::arg("suite"), py::arg("thetas"), py::arg("ts"),
      "Runs a verification suite; returns the report table.");

  m.def(
      "figure",
      [](const std::string& id) {
        py::dict out;
        for (const auto& ft : figure_data(id)) out[py::str(ft.name)] = table_dict(ft.table);
        return out;
      },
      py::arg("id"), "Tables behind a figure, keyed by name.");
  m.def("figure_ids", &figure_ids);
}
