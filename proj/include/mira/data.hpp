#pragma once

#include <array>
#include <map>
#include <optional>

#include "mira/core.hpp"

namespace mira {

/// Arithmetic mean of each feature over the gesture window [start, end).
FeatureVector average_frames(const GestureRecording& rec);

// Samples CSV schema (exact header, comma-separated, '.' decimal):
//   user,location,label,range,doppler,azimuth,elevation,peak
// When no alphabet is declared, classes are taken in order of first
// appearance. Sample ids are assigned sequentially in file order.
Dataset load_samples_csv(const std::string& path,
                         const std::optional<std::vector<std::string>>& alphabet = std::nullopt);
Dataset parse_samples_csv(const std::string& text,
                          const std::optional<std::vector<std::string>>& alphabet = std::nullopt,
                          const std::string& origin = "<string>");
std::string samples_to_csv(const Dataset& ds);
void write_samples_csv(const Dataset& ds, const std::string& path);

// Recordings CSV adds per-frame bookkeeping and the gesture window:
//   user,location,label,recording_id,frame_idx,range,doppler,azimuth,elevation,peak,gesture_start,gesture_end
// Rows of one recording are consecutive with frame_idx 0,1,2,...; the window
// columns are read from the frame 0 row and may be left empty elsewhere.
struct RecordingRow {
  GestureRecording recording;
  std::string label;
  std::string user;
  std::string location;
};
std::vector<RecordingRow> load_recordings_csv(const std::string& path,
                                              std::optional<int> expected_window_len = std::nullopt);
std::vector<RecordingRow> parse_recordings_csv(const std::string& text,
                                               std::optional<int> expected_window_len = std::nullopt,
                                               const std::string& origin = "<string>");

/// Window-averages each recording into one labeled sample.
Dataset distill(const std::vector<RecordingRow>& rows,
                const std::optional<std::vector<std::string>>& alphabet = std::nullopt);

struct SplitFractions {
  double train = 0.0;
  double val = 0.0;
  double test = 0.0;
};

struct ThreeWaySplit {
  Dataset train;
  Dataset val;
  Dataset test;
};

/// Class-stratified split; per-class proportions hold within one sample.
/// Deterministic for a given seed.
ThreeWaySplit split_stratified(const Dataset& ds, SplitFractions f, std::uint64_t seed);

struct UserSplit {
  std::vector<std::string> train_users;
  std::vector<std::string> val_users;
  std::vector<std::string> test_users;
};

/// Whole-user assignment; every user in the dataset must appear in exactly
/// one list.
ThreeWaySplit split_by_users(const Dataset& ds, const UserSplit& spec);

Dataset filter_users(const Dataset& ds, const std::vector<std::string>& users);

/// Synthetic gesture-feature generator: independent per-feature normal draws
/// around per-class means, shifted by user and location offsets.
struct SynthSpec {
  std::vector<std::string> classes;
  std::map<std::string, std::array<double, kNumFeatures>> class_means;
  std::array<double, kNumFeatures> spread{0.1, 0.1, 0.1, 0.1, 0.1};
  std::map<std::string, std::array<double, kNumFeatures>> class_spreads;  // overrides
  std::vector<std::string> users{"u0"};
  std::map<std::string, std::array<double, kNumFeatures>> user_offsets;
  std::map<std::string, std::map<std::string, std::array<double, kNumFeatures>>>
      user_class_offsets;
  std::vector<std::string> locations{"loc0"};
  double location_jitter = 0.0;
  int samples_per_class_user = 50;

  void validate() const;  // throws std::invalid_argument
};

// Spec file: `key = value` lines. Keys: classes, users, locations, spread,
// spread.<class>, mean.<class>, offset.<user>, offset.<user>.<class>,
// location_jitter, samples_per_class_user. Unknown keys are rejected.
SynthSpec parse_synth_spec(const std::string& text);
SynthSpec load_synth_spec(const std::string& path);

Dataset synthesize(const SynthSpec& spec, std::uint64_t seed);

}  // namespace mira
