#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ssodr/types.hpp"

namespace ssodr {

// ordered_json keeps field order as written in code, so serialized records
// are deterministic and human-readable.
using Json = nlohmann::ordered_json;

// Binary f32 sidecar: magic "SSOR", then u32 little-endian version=1,
// n_rows, dim, then n_rows*dim IEEE-754 f32 little-endian, row-major.
void write_sidecar(const std::filesystem::path& path, const MatF& rows);
MatF read_sidecar(const std::filesystem::path& path);

// Line-delimited JSON (one record per line, UTF-8).
std::vector<Json> read_jsonl(const std::filesystem::path& path);
void write_jsonl(const std::filesystem::path& path,
                 const std::vector<Json>& records);

Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& value);

// Sibling binary sidecar for a metadata file: same stem, ".bin" extension.
std::filesystem::path sidecar_path(const std::filesystem::path& meta_path);

}  // namespace ssodr
