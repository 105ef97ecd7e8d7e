#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "ssodr/geometry.hpp"
#include "ssodr/types.hpp"

namespace ssodr {

struct FrameRecord {
  std::uint64_t frame_id = 0;
  std::uint64_t video_id = 0;
  int frame_label = 0;  // 1 = noisy positive (key frame), 0 = contrastive negative
};

struct RegionRecord {
  std::uint64_t region_id = 0;
  std::uint64_t frame_id = 0;
  Box box;
  int weak_label = 0;        // inherited from the owning frame
  std::size_t emb_row = 0;   // row in the embedding sidecar
};

// Immutable after finalize(); all lookups are read-only and safe to share
// across workers.
struct Dataset {
  std::string object_name;
  int dim = 0;
  int regions_per_frame_hint = 0;  // typical proposal count, informational
  std::vector<FrameRecord> frames;
  std::vector<RegionRecord> regions;
  MatF embeddings;  // n_regions x dim

  // Builds lookup indices and validates every invariant; throws ValidationError.
  void finalize();

  const FrameRecord& frame(std::uint64_t frame_id) const;
  bool has_frame(std::uint64_t frame_id) const;
  // Indices into `regions` for one frame, in file order.
  const std::vector<std::size_t>& frame_regions(std::uint64_t frame_id) const;
  // weak label of the region stored at each embedding row.
  std::vector<int> labels_by_row() const;
  std::vector<std::uint64_t> video_by_row() const;

 private:
  std::unordered_map<std::uint64_t, std::size_t> frame_index_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> regions_by_frame_;
};

// Object annotations for evaluation only; ordered map so writes are
// deterministic. Empty box lists mark frames without the object.
struct GroundTruth {
  std::map<std::uint64_t, std::vector<Box>> by_frame;

  std::size_t total_boxes() const;
};

// Dataset file pair: <stem>.jsonl metadata + <stem>.bin f32 sidecar.
Dataset read_dataset(const std::filesystem::path& meta_path);
void write_dataset(const Dataset& ds, const std::filesystem::path& meta_path);

GroundTruth read_groundtruth(const std::filesystem::path& path);
void write_groundtruth(const GroundTruth& gt, const std::filesystem::path& path);

// Evaluation-time bind: every annotated frame must exist in the dataset.
void bind_groundtruth(const GroundTruth& gt, const Dataset& ds);

}  // namespace ssodr
