// biphoton: joint spectral amplitude and Schmidt-mode analysis of pulsed
// parametric down-conversion in a mirror + Bragg-grating microcavity.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "biphoton/config.hpp"
#include "biphoton/errors.hpp"
#include "biphoton/io.hpp"
#include "biphoton/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace biphoton;

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir = "out";
  int grid_points = 0;
  int workers = 0;
  std::vector<std::string> overrides;
  std::string arm = "signal";
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_arm) {
  cmd->add_option("--config", args.config_path, "JSON config file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", args.out_dir, "Output directory");
  cmd->add_option("--grid-points", args.grid_points,
                  "Override grid.points")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", args.workers, "Override numerics.workers")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--set", args.overrides,
                  "Override a config key, e.g. --set device.kappa=1000");
  if (with_arm)
    cmd->add_option("--arm", args.arm, "Which arm to scan")
        ->check(CLI::IsMember({"signal", "idler"}));
}

SimulationSetup setup_from(const CommonArgs& args) {
  json config =
      args.config_path.empty() ? default_config() : load_config(args.config_path);
  for (const std::string& ov : args.overrides) apply_override(config, ov);
  if (args.grid_points > 0) config["grid"]["points"] = args.grid_points;
  if (args.workers > 0) config["numerics"]["workers"] = args.workers;
  return resolve_setup(config);
}

std::string command_line(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

fs::path prepare_out_dir(const CommonArgs& args) {
  fs::path dir(args.out_dir);
  fs::create_directories(dir);
  return dir;
}

const CavityAssembly& pick_arm(const SimulationSetup& s,
                               const std::string& arm) {
  return arm == "idler" ? s.idler_cav : s.signal_cav;
}

int run_dbr_spectrum(const CommonArgs& args, const std::string& cmdline) {
  const SimulationSetup s = setup_from(args);
  const fs::path dir = prepare_out_dir(args);
  const auto rows = reflectivity_spectrum(pick_arm(s, args.arm), s.grid);

  std::vector<std::vector<double>> table;
  table.reserve(rows.size());
  for (const SpectrumPoint& p : rows)
    table.push_back({p.omega, p.k, p.dbr_r2, p.dbr_t2});
  const fs::path csv = dir / "dbr_spectrum.csv";
  write_csv(csv, {"omega", "k", "r2", "t2"}, table);
  write_manifest(dir, cmdline, s.resolved, {csv});
  return 0;
}

int run_cavity_spectrum(const CommonArgs& args, const std::string& cmdline) {
  const SimulationSetup s = setup_from(args);
  const fs::path dir = prepare_out_dir(args);
  const auto rows = reflectivity_spectrum(pick_arm(s, args.arm), s.grid);

  std::vector<std::vector<double>> table;
  table.reserve(rows.size());
  for (const SpectrumPoint& p : rows)
    table.push_back({p.omega, p.k, p.dbr_r2, p.dbr_t2, p.cavity_R2,
                     p.intracavity_a2});
  const fs::path csv = dir / "cavity_spectrum.csv";
  write_csv(csv,
            {"omega", "k", "dbr_r2", "dbr_t2", "cavity_R2", "intracavity_a2"},
            table);
  write_manifest(dir, cmdline, s.resolved, {csv});
  return 0;
}

void write_jsa_abs_csv(const JsaMatrix& jsa, const fs::path& csv,
                       int csv_max_dim) {
  const int rows = jsa.grid_signal.points;
  const int cols = jsa.grid_idler.points;
  const int stride_r = (rows + csv_max_dim - 1) / csv_max_dim;
  const int stride_c = (cols + csv_max_dim - 1) / csv_max_dim;
  std::vector<std::vector<double>> table;
  for (int m = 0; m < rows; m += stride_r)
    for (int n = 0; n < cols; n += stride_c)
      table.push_back({jsa.grid_signal.at(m), jsa.grid_idler.at(n),
                       std::abs(jsa.values(m, n))});
  write_csv(csv, {"omega_signal", "omega_idler", "abs_b"}, table);
}

int run_jsa(const CommonArgs& args, const std::string& cmdline) {
  const SimulationSetup s = setup_from(args);
  const fs::path dir = prepare_out_dir(args);
  const JsaMatrix jsa =
      build_jsa(s.signal_cav, s.idler_cav, s.pump, s.grid, s.grid, s.jsa);

  save_jsa(jsa, dir / "jsa");
  const fs::path abs_csv = dir / "jsa_abs.csv";
  write_jsa_abs_csv(jsa, abs_csv, s.csv_max_dim);
  write_manifest(dir, cmdline, s.resolved,
                 {dir / "jsa.bin", dir / "jsa.json", abs_csv});
  return 0;
}

int run_schmidt(const CommonArgs& args, const std::string& cmdline) {
  const SimulationSetup s = setup_from(args);
  const fs::path dir = prepare_out_dir(args);
  const JsaMatrix jsa =
      build_jsa(s.signal_cav, s.idler_cav, s.pump, s.grid, s.grid, s.jsa);
  const SchmidtSpectrum schmidt = schmidt_decompose(jsa, s.truncation);
  const EntanglementMetrics m = metrics(schmidt.lambdas);

  std::vector<fs::path> artifacts;

  std::vector<std::vector<double>> lrows;
  for (std::size_t j = 0; j < schmidt.lambdas.size(); ++j)
    lrows.push_back({static_cast<double>(j + 1), schmidt.lambdas[j]});
  const fs::path lcsv = dir / "schmidt_lambdas.csv";
  write_csv(lcsv, {"mode", "lambda"}, lrows);
  artifacts.push_back(lcsv);

  {
    const json mj{{"entropy_bits", m.entropy_bits},
                  {"purity", m.purity},
                  {"cooperativity", m.cooperativity},
                  {"modes_retained", schmidt.modes_retained},
                  {"lambda_1", schmidt.lambdas.empty() ? 0.0
                                                       : schmidt.lambdas[0]}};
    std::ofstream os(dir / "schmidt_metrics.json", std::ios::binary);
    os << mj.dump(2) << '\n';
    artifacts.push_back(dir / "schmidt_metrics.json");
  }

  const int n_out = std::min(s.output_modes, schmidt.modes_retained);
  const TimeGrid tgrid = conjugate_time_grid(s.grid);
  for (int j = 0; j < n_out; ++j) {
    std::vector<std::vector<double>> srows, irows, trows;
    for (int i = 0; i < s.grid.points; ++i) {
      const cplx ps = schmidt.psi(i, j);
      const cplx ph = schmidt.phi(i, j);
      srows.push_back(
          {s.grid.at(i), ps.real(), ps.imag(), std::norm(ps)});
      irows.push_back(
          {s.grid.at(i), ph.real(), ph.imag(), std::norm(ph)});
    }
    const std::vector<cplx> v = temporal_mode(schmidt, j, tgrid);
    for (int i = 0; i < tgrid.points; ++i)
      trows.push_back({tgrid.at(i), v[i].real(), v[i].imag(),
                       std::norm(v[i])});

    const std::string tag = std::to_string(j + 1);
    const fs::path scsv = dir / ("mode_signal_" + tag + ".csv");
    const fs::path icsv = dir / ("mode_idler_" + tag + ".csv");
    const fs::path tcsv = dir / ("mode_temporal_" + tag + ".csv");
    write_csv(scsv, {"omega", "re", "im", "abs2"}, srows);
    write_csv(icsv, {"omega", "re", "im", "abs2"}, irows);
    write_csv(tcsv, {"t", "re", "im", "abs2"}, trows);
    artifacts.push_back(scsv);
    artifacts.push_back(icsv);
    artifacts.push_back(tcsv);
  }

  write_manifest(dir, cmdline, s.resolved, artifacts);
  return 0;
}

int run_sweep(const CommonArgs& args, const std::string& param,
              const std::vector<std::string>& values,
              const std::string& cmdline) {
  const fs::path dir = prepare_out_dir(args);
  std::vector<std::vector<double>> table;
  json resolved;

  for (const std::string& v : values) {
    CommonArgs point = args;
    point.overrides.push_back(param + "=" + v);
    const SimulationSetup s = setup_from(point);
    resolved = s.resolved;
    const JsaMatrix jsa =
        build_jsa(s.signal_cav, s.idler_cav, s.pump, s.grid, s.grid, s.jsa);
    const SchmidtSpectrum schmidt = schmidt_decompose(jsa, s.truncation);
    const EntanglementMetrics m = metrics(schmidt.lambdas);
    table.push_back({parse_quantity(v), schmidt.lambdas[0], m.entropy_bits,
                     m.cooperativity});
  }
  if (values.empty()) resolved = setup_from(args).resolved;

  const fs::path csv = dir / "sweep.csv";
  write_csv(csv, {"value", "lambda1", "entropy_bits", "cooperativity"}, table);
  write_manifest(dir, cmdline, resolved, {csv});
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-photon spectral amplitude of cavity-assisted parametric "
               "down-conversion"};
  app.set_version_flag("--version", version_string);
  app.require_subcommand(1);

  CommonArgs dbr_args, cav_args, jsa_args, schmidt_args, sweep_args;
  std::string sweep_param;
  std::vector<std::string> sweep_values;

  CLI::App* dbr = app.add_subcommand(
      "dbr-spectrum", "Bare grating reflection/transmission spectrum");
  add_common(dbr, dbr_args, true);

  CLI::App* cav = app.add_subcommand(
      "cavity-spectrum", "Assembly reflection and intracavity buildup");
  add_common(cav, cav_args, true);

  CLI::App* jsa = app.add_subcommand(
      "jsa", "Joint spectral amplitude over the frequency grid");
  add_common(jsa, jsa_args, false);

  CLI::App* schmidt = app.add_subcommand(
      "schmidt", "JSA build plus Schmidt mode analysis");
  add_common(schmidt, schmidt_args, false);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Schmidt metrics against a swept config parameter");
  add_common(sweep, sweep_args, false);
  sweep->add_option("--param", sweep_param, "Dotted config key to sweep")
      ->required();
  sweep
      ->add_option("--values", sweep_values,
                   "Comma separated values for the swept key")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  const std::string cmdline = command_line(argc, argv);
  try {
    if (dbr->parsed()) return run_dbr_spectrum(dbr_args, cmdline);
    if (cav->parsed()) return run_cavity_spectrum(cav_args, cmdline);
    if (jsa->parsed()) return run_jsa(jsa_args, cmdline);
    if (schmidt->parsed()) return run_schmidt(schmidt_args, cmdline);
    if (sweep->parsed())
      return run_sweep(sweep_args, sweep_param, sweep_values, cmdline);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
