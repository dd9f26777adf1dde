#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "biphoton/jsa.hpp"

namespace biphoton {

// All text output is locale-free with LF line endings and doubles printed
// as %.16e, so identical data always produces identical bytes.
std::string format_full(double v);

void write_csv(const std::filesystem::path& file,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// Matrix persistence: <stem>.bin holds interleaved re/im float64 pairs in
// row-major order, <stem>.json the shape and grid metadata.
void save_jsa(const JsaMatrix& jsa, const std::filesystem::path& stem);
JsaMatrix load_jsa(const std::filesystem::path& stem);

std::string sha256_hex(const std::filesystem::path& file);

// manifest.json next to the outputs: resolved config, tool version, command
// line, and a content digest per artifact. The manifest itself carries a
// timestamp and is not part of the byte-reproducibility contract; the data
// files are.
void write_manifest(const std::filesystem::path& out_dir,
                    const std::string& command,
                    const nlohmann::json& resolved_config,
                    const std::vector<std::filesystem::path>& artifacts);

} // namespace biphoton
