#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dcsit/checks.hpp"
#include "dcsit/config.hpp"
#include "dcsit/errors.hpp"

namespace py = pybind11;
using namespace dcsit;

namespace {

CsitQuality make_csit(const std::array<Matrix2, 2>& alpha) { return CsitQuality{alpha}; }

py::dict gdof_dict(const GdofValue& v) {
  py::dict d;
  d["value"] = v.value;
  d["d1"] = v.d1;
  d["d2"] = v.d2;
  d["branch"] = v.branch == Branch::D1 ? "D1" : "D2";
  return d;
}

py::dict layout_dict(const Matrix2& gamma, const std::array<Matrix2, 2>& alpha) {
  const auto c = canonicalize(Topology{gamma}, make_csit(alpha));
  const auto l = scheme_layout(c);
  py::dict layers;
  for (auto layer : kAllLayers) {
    py::dict e;
    e["power"] = l[layer].power;
    e["rate"] = l[layer].rate;
    layers[py::str(std::string(layer_name(layer)))] = e;
  }
  py::dict d;
  d["case"] = l.case_id == LayoutCase::Case1 ? "case1" : "case2";
  d["parallel"] = l.parallel;
  d["rho"] = l.rho;
  d["layers"] = layers;
  d["total_rate"] = l.total_rate();
  d["rx_swap"] = c.rx_swap;
  d["tx_swap"] = c.tx_swap;
  return d;
}

SchemeKind scheme_or_throw(const std::string& name) {
  const auto kind = parse_scheme(name);
  if (!kind) throw py::value_error("unknown scheme '" + name + "'");
  return *kind;
}

py::dict sweep_dict(const std::string& config_json, unsigned workers) {
  const auto cfg = parse_config_text(config_json);
  const auto curve = sweep(cfg, {workers});
  std::ostringstream csv;
  write_csv(curve, csv);
  py::dict curves;
  for (const auto& c : curve.curves) {
    py::list pts;
    for (const auto& p : c.points) pts.append(py::make_tuple(p.snr_db, p.mean, p.std_error));
    py::dict e;
    e["points"] = pts;
    e["slope"] = c.slope ? py::object(py::float_(*c.slope)) : py::object(py::none());
    curves[py::str(std::string(scheme_name(c.kind)))] = e;
  }
  py::dict d;
  d["curves"] = curves;
  d["csv"] = csv.str();
  d["summary"] = summary_json(cfg, curve).dump();
  return d;
}

}  // namespace

PYBIND11_MODULE(_dcsit, m) {
  m.doc() = "GDoF closed forms and AP-ZF Monte Carlo for the two-user MISO BC with distributed CSIT";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<InsufficientPoints>(m, "InsufficientPoints", PyExc_ValueError);
  py::register_exception<PowerInfeasible>(m, "PowerInfeasible", PyExc_RuntimeError);

  m.def(
      "distributed_gdof",
      [](const Matrix2& gamma, const std::array<Matrix2, 2>& alpha) {
        return gdof_dict(distributed_gdof(Topology{gamma}, make_csit(alpha)));
      },
      py::arg("gamma"), py::arg("alpha"), "Sum GDoF with per-TX CSIT exponents alpha[tx][rx][link].");
  m.def(
      "centralized_gdof",
      [](const Matrix2& gamma, const Matrix2& alpha) {
        return gdof_dict(centralized_gdof(Topology{gamma}, alpha));
      },
      py::arg("gamma"), py::arg("alpha"), "Sum GDoF with one shared CSIT exponent matrix.");
  m.def(
      "genie_outer_bound",
      [](const Matrix2& gamma, const std::array<Matrix2, 2>& alpha) {
        return gdof_dict(genie_outer_bound(Topology{gamma}, make_csit(alpha)));
      },
      py::arg("gamma"), py::arg("alpha"));
  m.def("scheme_layout", &layout_dict, py::arg("gamma"), py::arg("alpha"),
        "Layer power/rate exponents of the AP-ZF scheme, in canonical labels.");

  m.def(
      "simulate_point",
      [](const std::string& config_json, const std::string& scheme, double snr_db, unsigned workers) {
        const auto est = simulate_point(parse_config_text(config_json), scheme_or_throw(scheme),
                                        snr_db, {workers});
        return py::make_tuple(est.mean, est.std_error);
      },
      py::arg("config_json"), py::arg("scheme"), py::arg("snr_db"), py::arg("workers") = 1,
      "(mean, stderr) of the sum rate in bits per channel use.");
  m.def("sweep", &sweep_dict, py::arg("config_json"), py::arg("workers") = 1,
        "Runs the configured sweep; returns curves, CSV text and the JSON summary.");
  m.def(
      "validate",
      [](const std::string& config_json) {
        py::list out;
        for (const auto& r : run_validation_suite(parse_config_text(config_json)))
          out.append(py::make_tuple(r.name, r.passed, r.detail));
        return out;
      },
      py::arg("config_json"));
  m.def("estimate_slope",
        [](const std::vector<std::pair<double, double>>& points, double lo_db, double hi_db) {
          std::vector<CurvePoint> pts;
          for (const auto& [db, mean] : points) pts.push_back({db, mean, 0.0});
          return estimate_slope(pts, lo_db, hi_db);
        },
        py::arg("points"), py::arg("lo_db") = kDefaultWindowLoDb, py::arg("hi_db") = kDefaultWindowHiDb);
  m.def("fit_exponent", [](const std::vector<std::pair<double, double>>& s) { return fit_exponent(s); },
        py::arg("samples"));
}
