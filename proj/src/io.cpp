#include "ssodr/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

static_assert(std::endian::native == std::endian::little,
              "file formats assume a little-endian host");

namespace ssodr {

namespace {

constexpr char kMagic[4] = {'S', 'S', 'O', 'R'};
constexpr std::uint32_t kSidecarVersion = 1;

void put_u32(std::ofstream& out, std::uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

std::uint32_t get_u32(std::ifstream& in, const std::filesystem::path& path) {
  std::uint32_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!in) throw FormatError("truncated sidecar: " + path.string());
  return v;
}

}  // namespace

void write_sidecar(const std::filesystem::path& path, const MatF& rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open for writing: " + path.string(), 3);
  out.write(kMagic, 4);
  put_u32(out, kSidecarVersion);
  put_u32(out, static_cast<std::uint32_t>(rows.rows()));
  put_u32(out, static_cast<std::uint32_t>(rows.cols()));
  out.write(reinterpret_cast<const char*>(rows.data()),
            static_cast<std::streamsize>(sizeof(float) * rows.size()));
  if (!out) throw Error("write failed: " + path.string(), 3);
}

MatF read_sidecar(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open: " + path.string(), 3);
  char magic[4] = {};
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw FormatError("bad magic in sidecar: " + path.string());
  }
  const std::uint32_t version = get_u32(in, path);
  if (version != kSidecarVersion) {
    throw FormatError("unsupported sidecar version " + std::to_string(version) +
                      ": " + path.string());
  }
  const std::uint32_t n_rows = get_u32(in, path);
  const std::uint32_t dim = get_u32(in, path);
  MatF rows(n_rows, dim);
  in.read(reinterpret_cast<char*>(rows.data()),
          static_cast<std::streamsize>(sizeof(float) * rows.size()));
  if (!in) throw FormatError("sidecar payload shorter than header promises: " +
                             path.string());
  char extra = 0;
  if (in.read(&extra, 1)) {
    throw FormatError("sidecar payload longer than header promises: " +
                      path.string());
  }
  return rows;
}

std::vector<Json> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open: " + path.string(), 3);
  std::vector<Json> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      records.push_back(Json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
  return records;
}

void write_jsonl(const std::filesystem::path& path,
                 const std::vector<Json>& records) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot open for writing: " + path.string(), 3);
  for (const Json& r : records) out << r.dump() << '\n';
  if (!out) throw Error("write failed: " + path.string(), 3);
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open: " + path.string(), 3);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& value) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot open for writing: " + path.string(), 3);
  out << value.dump(2) << '\n';
  if (!out) throw Error("write failed: " + path.string(), 3);
}

std::filesystem::path sidecar_path(const std::filesystem::path& meta_path) {
  std::filesystem::path p = meta_path;
  p.replace_extension(".bin");
  return p;
}

}  // namespace ssodr
