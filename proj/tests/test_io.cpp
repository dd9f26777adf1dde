#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "biphoton/errors.hpp"
#include "biphoton/io.hpp"

using namespace biphoton;
namespace fs = std::filesystem;

namespace {

// Scratch directory removed on scope exit.
struct TempDir {
  fs::path path;

  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("biphoton_io_" + std::to_string(::getpid()) + "_" +
            std::to_string(++counter));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("full-precision formatting round-trips every double") {
  const double cases[] = {0.0,           -0.0,       1.0,
                          -1.0 / 3.0,    2.3572e15,  6.626e-34,
                          0.1,           -12345.678, 9.9999999999999995e-7};
  for (double v : cases) {
    const std::string text = format_full(v);
    CHECK(std::strtod(text.c_str(), nullptr) == v);
  }
  CHECK(format_full(1.0) == "1.0000000000000000e+00");
  CHECK(format_full(-0.5) == "-5.0000000000000000e-01");
}

TEST_CASE("csv writer emits exact bytes") {
  const TempDir dir;
  const fs::path file = dir.path / "table.csv";
  write_csv(file, {"a", "b"}, {{1.0, 2.0}, {0.25, -3.0}});
  const std::string expect =
      "a,b\n"
      "1.0000000000000000e+00,2.0000000000000000e+00\n"
      "2.5000000000000000e-01,-3.0000000000000000e+00\n";
  CHECK(slurp(file) == expect);
  CHECK_THROWS_AS(write_csv(dir.path / "missing" / "t.csv", {"a"}, {}),
                  ConfigError);
}

TEST_CASE("matrix persistence round-trips bitwise") {
  const TempDir dir;
  JsaMatrix jsa;
  jsa.grid_signal = {2.3552e15, 2.3572e15, 3};
  jsa.grid_idler = {2.3550e15, 2.3570e15, 4};
  jsa.values.resize(3, 4);
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 4; ++n)
      jsa.values(m, n) = cplx(std::sin(1.0 + m + 2 * n), std::cos(2.0 + m * n));

  const fs::path stem = dir.path / "jsa";
  save_jsa(jsa, stem);
  const JsaMatrix back = load_jsa(stem);
  CHECK(back.grid_signal.omega_min == jsa.grid_signal.omega_min);
  CHECK(back.grid_signal.points == 3);
  CHECK(back.grid_idler.points == 4);
  bool identical = true;
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 4; ++n)
      if (back.values(m, n) != jsa.values(m, n)) identical = false;
  CHECK(identical);

  // Same data saved twice gives identical bytes.
  const fs::path stem2 = dir.path / "jsa_again";
  save_jsa(jsa, stem2);
  CHECK(sha256_hex(dir.path / "jsa.bin") == sha256_hex(dir.path / "jsa_again.bin"));
  CHECK(sha256_hex(dir.path / "jsa.json") ==
        sha256_hex(dir.path / "jsa_again.json"));
}

TEST_CASE("loading rejects inconsistent or truncated artifacts") {
  const TempDir dir;
  JsaMatrix jsa;
  jsa.grid_signal = {1.0e15, 1.1e15, 2};
  jsa.grid_idler = {1.0e15, 1.1e15, 2};
  jsa.values = Eigen::MatrixXcd::Identity(2, 2);
  const fs::path stem = dir.path / "m";
  save_jsa(jsa, stem);

  CHECK_THROWS_AS(load_jsa(dir.path / "absent"), ConfigError);

  // Truncate the payload behind the sidecar's back.
  std::ofstream(dir.path / "m.bin", std::ios::binary).write("xx", 2);
  CHECK_THROWS_AS(load_jsa(stem), ConfigError);

  // Sidecar shape disagreeing with its grids.
  save_jsa(jsa, stem);
  nlohmann::json meta;
  std::ifstream(dir.path / "m.json") >> meta;
  meta["rows"] = 5;
  std::ofstream(dir.path / "m.json") << meta.dump(2);
  CHECK_THROWS_AS(load_jsa(stem), ConfigError);
}

TEST_CASE("sha256 matches the published test vector") {
  const TempDir dir;
  const fs::path f = dir.path / "abc.txt";
  std::ofstream(f, std::ios::binary) << "abc";
  CHECK(sha256_hex(f) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const fs::path empty = dir.path / "empty.txt";
  std::ofstream(empty, std::ios::binary).flush();
  CHECK(sha256_hex(empty) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK_THROWS_AS(sha256_hex(dir.path / "missing.txt"), ConfigError);
}

TEST_CASE("manifest records digests for every artifact") {
  const TempDir dir;
  const fs::path data = dir.path / "data.csv";
  write_csv(data, {"x"}, {{1.0}});

  nlohmann::json cfg{{"device", {{"kappa", 2000.0}}}};
  write_manifest(dir.path, "biphoton test --flag", cfg, {data});

  nlohmann::json manifest;
  std::ifstream(dir.path / "manifest.json") >> manifest;
  CHECK(manifest["tool"] == "biphoton");
  CHECK(manifest["command"] == "biphoton test --flag");
  CHECK(manifest["config"]["device"]["kappa"].get<double>() == 2000.0);
  CHECK(manifest["outputs"]["data.csv"]["sha256"] == sha256_hex(data));
  CHECK(manifest["outputs"]["data.csv"]["bytes"].get<std::uint64_t>() ==
        fs::file_size(data));
  const std::string stamp = manifest["generated_utc"].get<std::string>();
  CHECK(stamp.size() == 20);
  CHECK(stamp.back() == 'Z');
  CHECK(stamp[4] == '-');
  CHECK(stamp[10] == 'T');
}

} // TEST_SUITE
