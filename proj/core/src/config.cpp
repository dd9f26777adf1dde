#include "biphoton/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>

#include "biphoton/constants.hpp"
#include "biphoton/errors.hpp"

namespace biphoton {

using nlohmann::json;

json default_config() {
  return json{
      {"dispersion",
       {{"preset", "ktp"},
        {"center_wavelength", 800e-9},
        {"signal", {{"n0", 1.6047}, {"kprime", 5.4212e-9}}},
        {"idler", {{"n0", 1.6605}, {"kprime", 5.6149e-9}}},
        {"pump", {{"n0", 1.6326}, {"kprime", 5.6949e-9}}}}},
      {"device",
       {{"kappa", 2000.0},
        {"length", 4e-3},
        {"gap", 0.1999e-3},
        {"rho_squared", 0.95},
        // 0 means "derive 2 k(omega0) for the arm".
        {"grating_k_signal", 0.0},
        {"grating_k_idler", 0.0}}},
      {"pump", {{"sigma", 0.3e12}, {"amplitude", 1.0}}},
      {"grid",
       {{"omega_min", 2.3552e15}, {"omega_max", 2.3572e15}, {"points", 1191}}},
      {"numerics",
       {{"integrator", "analytic"},
        {"points_per_period", 20.0},
        {"panel_degree", 10},
        {"check_convergence", false},
        {"convergence_tol", 1e-6},
        {"normalization", "free_field"},
        {"truncation", 1e-8},
        {"workers", 1}}},
      {"output", {{"modes", 4}, {"csv_max_dim", 512}}}};
}

namespace {

void merge_strict(json& base, const json& user, const std::string& path) {
  for (auto it = user.begin(); it != user.end(); ++it) {
    const std::string where = path.empty() ? it.key() : path + "." + it.key();
    if (!base.contains(it.key()))
      throw ConfigError("unknown config key: " + where);
    json& slot = base[it.key()];
    if (slot.is_object()) {
      if (!it.value().is_object())
        throw ConfigError("config key " + where + " must be an object");
      merge_strict(slot, it.value(), where);
    } else {
      if (slot.is_number() && !it.value().is_number())
        throw ConfigError("config key " + where + " must be a number");
      if (slot.is_string() && !it.value().is_string())
        throw ConfigError("config key " + where + " must be a string");
      if (slot.is_boolean() && !it.value().is_boolean())
        throw ConfigError("config key " + where + " must be a boolean");
      slot = it.value();
    }
  }
}

} // namespace

json load_config(const std::filesystem::path& file) {
  std::ifstream is(file);
  if (!is) throw ConfigError("cannot open config file: " + file.string());
  json user;
  try {
    is >> user;
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error in " + file.string() + ": " +
                      e.what());
  }
  if (!user.is_object())
    throw ConfigError("config root must be a JSON object: " + file.string());
  json merged = default_config();
  merge_strict(merged, user, "");
  return merged;
}

double parse_quantity(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin)
    throw ConfigError("not a number: '" + text + "'");
  const std::string suffix(end);
  if (suffix.empty()) return value;
  if (suffix == "m") return value;
  if (suffix == "mm") return value * 1e-3;
  if (suffix == "um") return value * 1e-6;
  if (suffix == "nm") return value * 1e-9;
  if (suffix == "pm") return value * 1e-12;
  throw ConfigError("unknown unit suffix '" + suffix + "' in '" + text + "'");
}

void apply_override(json& config, const std::string& assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("override must look like key.path=value: '" +
                      assignment + "'");
  const std::string path = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);

  json* node = &config;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = path.find('.', start);
    const std::string key = path.substr(
        start, dot == std::string::npos ? std::string::npos : dot - start);
    if (!node->is_object() || !node->contains(key))
      throw ConfigError("unknown config key: " + path);
    node = &(*node)[key];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }

  if (node->is_object())
    throw ConfigError("cannot assign to a config section: " + path);
  if (node->is_boolean()) {
    if (value == "true")
      *node = true;
    else if (value == "false")
      *node = false;
    else
      throw ConfigError("expected true/false for " + path);
    return;
  }
  if (node->is_string()) {
    *node = value;
    return;
  }
  if (node->is_number_integer())
    *node = static_cast<long long>(std::llround(parse_quantity(value)));
  else
    *node = parse_quantity(value);
}

SimulationSetup resolve_setup(const json& config) {
  try {
    SimulationSetup s;
    const json& dj = config.at("dispersion");
    const double lambda0 = dj.at("center_wavelength").get<double>();
    if (!(lambda0 > 0.0))
      throw ConfigError("dispersion.center_wavelength must be positive");
    const double omega0 = 2.0 * pi * c0 / lambda0;

    const std::string preset = dj.at("preset").get<std::string>();
    DispersionModel disp;
    if (preset == "ktp") {
      disp = ktp_dispersion();
    } else if (preset == "vacuum") {
      disp = vacuum_dispersion();
    } else if (preset == "custom") {
      disp = DispersionModel{};
    } else {
      throw ConfigError("dispersion.preset must be ktp, vacuum or custom");
    }
    disp.omega0 = omega0;
    if (preset == "custom") {
      disp.signal = {dj.at("signal").at("n0").get<double>(),
                     dj.at("signal").at("kprime").get<double>()};
      disp.idler = {dj.at("idler").at("n0").get<double>(),
                    dj.at("idler").at("kprime").get<double>()};
      disp.pump = {dj.at("pump").at("n0").get<double>(),
                   dj.at("pump").at("kprime").get<double>()};
    }
    disp.validate();

    const json& dev = config.at("device");
    DbrParams dbr_s, dbr_i;
    dbr_s.kappa = dbr_i.kappa = dev.at("kappa").get<double>();
    dbr_s.length = dbr_i.length = dev.at("length").get<double>();
    const double ks_conf = dev.at("grating_k_signal").get<double>();
    const double ki_conf = dev.at("grating_k_idler").get<double>();
    dbr_s.grating_k = ks_conf > 0.0
                          ? ks_conf
                          : 2.0 * disp.wavenumber(Polarization::signal, omega0);
    dbr_i.grating_k = ki_conf > 0.0
                          ? ki_conf
                          : 2.0 * disp.wavenumber(Polarization::idler, omega0);

    const MirrorParams mirror =
        MirrorParams::from_rho_squared(dev.at("rho_squared").get<double>());
    const double gap = dev.at("gap").get<double>();

    s.signal_cav = {dbr_s, mirror, gap, disp, Polarization::signal};
    s.idler_cav = {dbr_i, mirror, gap, disp, Polarization::idler};
    s.signal_cav.validate();
    s.idler_cav.validate();

    s.pump.sigma = config.at("pump").at("sigma").get<double>();
    s.pump.center = 2.0 * omega0;
    s.pump.amplitude = config.at("pump").at("amplitude").get<double>();
    s.pump.validate();

    s.grid.omega_min = config.at("grid").at("omega_min").get<double>();
    s.grid.omega_max = config.at("grid").at("omega_max").get<double>();
    s.grid.points = config.at("grid").at("points").get<int>();
    s.grid.validate();

    const json& num = config.at("numerics");
    const std::string integ = num.at("integrator").get<std::string>();
    if (integ == "analytic")
      s.jsa.integrator = IntegratorKind::analytic;
    else if (integ == "quadrature")
      s.jsa.integrator = IntegratorKind::quadrature;
    else
      throw ConfigError("numerics.integrator must be analytic or quadrature");

    s.jsa.quadrature.points_per_period =
        num.at("points_per_period").get<double>();
    s.jsa.quadrature.panel_degree = num.at("panel_degree").get<int>();
    s.jsa.quadrature.check_convergence =
        num.at("check_convergence").get<bool>();
    s.jsa.quadrature.convergence_tol = num.at("convergence_tol").get<double>();
    if (!(s.jsa.quadrature.points_per_period > 0.0) ||
        s.jsa.quadrature.panel_degree < 1)
      throw ConfigError("numerics: bad quadrature settings");

    const std::string norm = num.at("normalization").get<std::string>();
    if (norm == "free_field")
      s.jsa.normalization = ModeNormalization::free_field;
    else if (norm == "unit")
      s.jsa.normalization = ModeNormalization::unit;
    else
      throw ConfigError("numerics.normalization must be free_field or unit");

    s.truncation = num.at("truncation").get<double>();
    if (!(s.truncation >= 0.0))
      throw ConfigError("numerics.truncation must be >= 0");
    s.jsa.workers = num.at("workers").get<int>();
    if (s.jsa.workers < 1) throw ConfigError("numerics.workers must be >= 1");

    s.output_modes = config.at("output").at("modes").get<int>();
    s.csv_max_dim = config.at("output").at("csv_max_dim").get<int>();
    if (s.output_modes < 1 || s.csv_max_dim < 2)
      throw ConfigError("output: modes must be >= 1, csv_max_dim >= 2");

    s.resolved = config;
    s.resolved["device"]["grating_k_signal"] = dbr_s.grating_k;
    s.resolved["device"]["grating_k_idler"] = dbr_i.grating_k;
    if (preset != "custom") {
      s.resolved["dispersion"]["signal"] = {{"n0", disp.signal.n0},
                                            {"kprime", disp.signal.kprime}};
      s.resolved["dispersion"]["idler"] = {{"n0", disp.idler.n0},
                                           {"kprime", disp.idler.kprime}};
      s.resolved["dispersion"]["pump"] = {{"n0", disp.pump.n0},
                                          {"kprime", disp.pump.kprime}};
    }
    return s;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config structure error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid config value: ") + e.what());
  }
}

} // namespace biphoton
