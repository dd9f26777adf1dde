#include "biphoton/io.hpp"

#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "biphoton/errors.hpp"
#include "biphoton/version.hpp"

namespace biphoton {

using nlohmann::json;

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

void write_csv(const std::filesystem::path& file,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream os(file, std::ios::binary);
  if (!os) throw ConfigError("cannot open for writing: " + file.string());
  for (std::size_t i = 0; i < header.size(); ++i)
    os << (i ? "," : "") << header[i];
  os << '\n';
  for (const std::vector<double>& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << format_full(row[i]);
    os << '\n';
  }
  if (!os) throw ConfigError("write failed: " + file.string());
}

namespace {

json grid_to_json(const FrequencyGrid& g) {
  return json{{"omega_min", g.omega_min},
              {"omega_max", g.omega_max},
              {"points", g.points}};
}

FrequencyGrid grid_from_json(const json& j) {
  FrequencyGrid g;
  g.omega_min = j.at("omega_min").get<double>();
  g.omega_max = j.at("omega_max").get<double>();
  g.points = j.at("points").get<int>();
  return g;
}

} // namespace

void save_jsa(const JsaMatrix& jsa, const std::filesystem::path& stem) {
  const auto bin = std::filesystem::path(stem).concat(".bin");
  const auto meta = std::filesystem::path(stem).concat(".json");

  std::ofstream os(bin, std::ios::binary);
  if (!os) throw ConfigError("cannot open for writing: " + bin.string());
  const int rows = static_cast<int>(jsa.values.rows());
  const int cols = static_cast<int>(jsa.values.cols());
  std::vector<double> line(2 * cols);
  for (int m = 0; m < rows; ++m) {
    for (int n = 0; n < cols; ++n) {
      line[2 * n] = jsa.values(m, n).real();
      line[2 * n + 1] = jsa.values(m, n).imag();
    }
    os.write(reinterpret_cast<const char*>(line.data()),
             static_cast<std::streamsize>(line.size() * sizeof(double)));
  }
  if (!os) throw ConfigError("write failed: " + bin.string());
  os.close();

  json j{{"format", "complex128 interleaved, row-major, little-endian"},
         {"rows", rows},
         {"cols", cols},
         {"row_axis", "omega_signal"},
         {"col_axis", "omega_idler"},
         {"units", {{"omega", "rad/s"}, {"amplitude", "unnormalized"}}},
         {"signal_grid", grid_to_json(jsa.grid_signal)},
         {"idler_grid", grid_to_json(jsa.grid_idler)}};
  std::ofstream ms(meta, std::ios::binary);
  if (!ms) throw ConfigError("cannot open for writing: " + meta.string());
  ms << j.dump(2) << '\n';
}

JsaMatrix load_jsa(const std::filesystem::path& stem) {
  const auto bin = std::filesystem::path(stem).concat(".bin");
  const auto meta = std::filesystem::path(stem).concat(".json");

  std::ifstream ms(meta, std::ios::binary);
  if (!ms) throw ConfigError("cannot open: " + meta.string());
  json j;
  try {
    ms >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("bad matrix sidecar " + meta.string() + ": " + e.what());
  }

  JsaMatrix out;
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  out.grid_signal = grid_from_json(j.at("signal_grid"));
  out.grid_idler = grid_from_json(j.at("idler_grid"));
  if (rows != out.grid_signal.points || cols != out.grid_idler.points)
    throw ConfigError("matrix sidecar shape disagrees with grids: " +
                      meta.string());

  std::ifstream is(bin, std::ios::binary);
  if (!is) throw ConfigError("cannot open: " + bin.string());
  out.values.resize(rows, cols);
  std::vector<double> line(2 * cols);
  for (int m = 0; m < rows; ++m) {
    is.read(reinterpret_cast<char*>(line.data()),
            static_cast<std::streamsize>(line.size() * sizeof(double)));
    if (!is) throw ConfigError("matrix file truncated: " + bin.string());
    for (int n = 0; n < cols; ++n)
      out.values(m, n) = cplx(line[2 * n], line[2 * n + 1]);
  }
  return out;
}

std::string sha256_hex(const std::filesystem::path& file) {
  std::ifstream is(file, std::ios::binary);
  if (!is) throw ConfigError("cannot open: " + file.string());

  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx) throw NumericalError("sha256: context allocation failed");
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[65536];
  while (is) {
    is.read(buf, sizeof(buf));
    if (is.gcount() > 0)
      EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(is.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);

  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

void write_manifest(const std::filesystem::path& out_dir,
                    const std::string& command,
                    const nlohmann::json& resolved_config,
                    const std::vector<std::filesystem::path>& artifacts) {
  json outputs = json::object();
  for (const std::filesystem::path& p : artifacts) {
    outputs[p.filename().string()] = {
        {"sha256", sha256_hex(p)},
        {"bytes", static_cast<std::uint64_t>(std::filesystem::file_size(p))}};
  }

  char stamp[32] = {0};
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);

  const json manifest{{"tool", "biphoton"},
                      {"version", version_string},
                      {"command", command},
                      {"generated_utc", stamp},
                      {"config", resolved_config},
                      {"outputs", outputs}};
  std::ofstream os(out_dir / "manifest.json", std::ios::binary);
  if (!os)
    throw ConfigError("cannot open for writing: " +
                      (out_dir / "manifest.json").string());
  os << manifest.dump(2) << '\n';
}

} // namespace biphoton
