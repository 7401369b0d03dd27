// dcsit: closed-form GDoF and Monte Carlo sweeps for the two-user MISO BC
// with distributed CSIT.
//
// Exit status: 0 success, 1 a validation check failed, 2 bad command line,
// 3 config error, 4 file I/O error, 5 invalid topology or CSIT.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dcsit/checks.hpp"
#include "dcsit/config.hpp"
#include "dcsit/errors.hpp"

namespace {

using namespace dcsit;

enum Status { kOk = 0, kCheckFailed = 1, kUsage = 2, kConfig = 3, kIo = 4, kInvalid = 5 };

struct IoError : Error {
  using Error::Error;
};

struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string schemes;
  std::string window;
  unsigned workers = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_path, "JSON config file")->required();
  cmd->add_option("--seed", c.seed, "override the config seed");
  cmd->add_option("--scheme", c.schemes, "comma-separated schemes (apzf,centralized_zf,naive_zf,no_csit)");
  cmd->add_option("--window", c.window, "slope window in dB as lo:hi");
  cmd->add_option("--workers", c.workers, "worker threads per SNR point")->check(CLI::PositiveNumber);
}

double parse_db(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ConfigError("bad " + what + " '" + text + "'");
  return v;
}

SweepConfig resolve(const Common& c) {
  if (!std::ifstream(c.config_path)) throw IoError("cannot read config file '" + c.config_path + "'");
  auto cfg = load_config(c.config_path);
  if (c.seed) cfg.seed = *c.seed;
  if (!c.schemes.empty()) {
    cfg.schemes.clear();
    std::stringstream ss(c.schemes);
    std::string name;
    while (std::getline(ss, name, ',')) {
      const auto kind = parse_scheme(name);
      if (!kind) throw ConfigError("unknown scheme '" + name + "'");
      cfg.schemes.push_back(*kind);
    }
  }
  if (!c.window.empty()) {
    const auto colon = c.window.find(':');
    if (colon == std::string::npos) throw ConfigError("--window expects lo:hi");
    cfg.window_lo_db = parse_db(c.window.substr(0, colon), "window bound");
    cfg.window_hi_db = parse_db(c.window.substr(colon + 1), "window bound");
  }
  cfg.check();
  return cfg;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

const char* branch_name(Branch b) { return b == Branch::D1 ? "D1" : "D2"; }

int run_gdof(const Common& c) {
  const auto cfg = resolve(c);
  const auto dist = distributed_gdof(cfg.topology, cfg.csit);
  const auto cf = closed_form(cfg);
  std::cout << "distributed   " << format_number(dist.value) << "  (D1 " << format_number(dist.d1)
            << ", D2 " << format_number(dist.d2) << ", min at " << branch_name(dist.branch) << ")\n"
            << "centralized   " << format_number(cf.centralized) << '\n'
            << "no_csit       " << format_number(cf.no_csit) << '\n';

  const auto canonical = canonicalize(cfg.topology, cfg.csit);
  const auto layout = scheme_layout(canonical);
  std::cout << "layout        "
            << (layout.parallel ? "parallel" : layout.case_id == LayoutCase::Case1 ? "case1" : "case2")
            << ", rho " << format_number(layout.rho) << ", active TX "
            << (canonical.tx_swap ? other(canonical.active_tx) : canonical.active_tx)
            << (canonical.rx_swap ? ", RXs swapped" : "") << '\n';
  for (auto l : kAllLayers)
    std::cout << "  " << layer_name(l) << "  power " << format_number(layout[l].power) << "  rate "
              << format_number(layout[l].rate) << (layout.active(l) ? "" : "  (off)") << '\n';
  return kOk;
}

int run_simulate(const Common& c, double snr_db) {
  const auto cfg = resolve(c);
  std::cout << "scheme,snr_db,sum_rate_mean,sum_rate_stderr\n";
  for (auto kind : cfg.schemes) {
    const auto est = simulate_point(cfg, kind, snr_db, {c.workers});
    std::cout << scheme_name(kind) << ',' << format_number(snr_db) << ','
              << format_number(est.mean) << ',' << format_number(est.std_error) << '\n';
  }
  return kOk;
}

int run_sweep(const Common& c, const std::string& out_path, std::string summary_path) {
  const auto cfg = resolve(c);
  const auto curve = sweep(cfg, {c.workers});
  if (out_path.empty()) {
    write_csv(curve, std::cout);
  } else {
    auto out = open_output(out_path);
    write_csv(curve, out);
    finish(out, out_path);
    if (summary_path.empty()) summary_path = out_path + ".json";
  }
  const auto summary = summary_json(cfg, curve);
  if (summary_path.empty()) {
    std::cerr << summary.dump(2) << '\n';
  } else {
    auto out = open_output(summary_path);
    out << summary.dump(2) << '\n';
    finish(out, summary_path);
  }
  return kOk;
}

int run_validate(const Common& c) {
  const auto cfg = resolve(c);
  bool ok = true;
  for (const auto& r : run_validation_suite(cfg)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    ok = ok && r.passed;
  }
  if (!ok) std::cerr << "dcsit: validation failed\n";
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form GDoF and AP-ZF Monte Carlo for the 2-user MISO BC with distributed CSIT"};
  app.require_subcommand(1);

  Common common;
  auto* gdof = app.add_subcommand("gdof", "print closed-form GDoF values and the scheme layout");
  add_common(gdof, common);

  double snr_db = 0.0;
  auto* simulate = app.add_subcommand("simulate", "mean sum rate at one SNR");
  add_common(simulate, common);
  simulate->add_option("--snr-db", snr_db, "SNR in dB")->required();

  std::string out_path, summary_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "sum-rate curves to CSV plus a JSON summary");
  add_common(sweep_cmd, common);
  sweep_cmd->add_option("--out", out_path, "CSV output path (stdout if omitted)");
  sweep_cmd->add_option("--summary", summary_path, "JSON summary path (default <out>.json)");

  auto* validate = app.add_subcommand("validate", "identity and exponent-fit checks");
  add_common(validate, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*gdof) return run_gdof(common);
    if (*simulate) return run_simulate(common, snr_db);
    if (*sweep_cmd) return run_sweep(common, out_path, summary_path);
    return run_validate(common);
  } catch (const ConfigError& e) {
    std::cerr << "dcsit: config error: " << e.what() << '\n';
    return kConfig;
  } catch (const IoError& e) {
    std::cerr << "dcsit: I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const ValidationError& e) {
    std::cerr << "dcsit: invalid instance: " << e.what() << '\n';
    return kInvalid;
  }
}
