#include "mira/data.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "mira/text.hpp"

namespace mira {

FeatureVector average_frames(const GestureRecording& rec) {
  rec.validate();
  FeatureVector mean;
  const int n = rec.window_end - rec.window_start;
  for (int i = rec.window_start; i < rec.window_end; ++i)
    for (int f = 0; f < kNumFeatures; ++f)
      mean[f] += rec.frames[static_cast<std::size_t>(i)][f];
  for (int f = 0; f < kNumFeatures; ++f) mean[f] /= static_cast<double>(n);
  return mean;
}

namespace {

const std::vector<std::string>& samples_header() {
  static const std::vector<std::string> h = {"user",    "location",  "label", "range",
                                             "doppler", "azimuth",   "elevation", "peak"};
  return h;
}

const std::vector<std::string>& recordings_header() {
  static const std::vector<std::string> h = {
      "user",    "location", "label",     "recording_id", "frame_idx",    "range",
      "doppler", "azimuth",  "elevation", "peak",         "gesture_start", "gesture_end"};
  return h;
}

std::vector<std::string> csv_lines(const std::string& text) {
  std::vector<std::string> lines = split(text, '\n');
  for (std::string& l : lines)
    if (!l.empty() && l.back() == '\r') l.pop_back();
  return lines;
}

void check_header(const std::vector<std::string>& fields,
                  const std::vector<std::string>& expected, const std::string& origin) {
  for (const std::string& col : expected) {
    if (std::find(fields.begin(), fields.end(), col) == fields.end())
      throw std::runtime_error(origin + ": missing column '" + col + "' in header");
  }
  if (fields != expected)
    throw std::runtime_error(origin + ": header must be exactly '" +
                             [&] {
                               std::string s;
                               for (std::size_t i = 0; i < expected.size(); ++i) {
                                 if (i > 0) s += ',';
                                 s += expected[i];
                               }
                               return s;
                             }() +
                             "'");
}

double parse_feature(const std::string& tok, const std::string& column, int line_no,
                     const std::string& origin) {
  double v;
  try {
    v = parse_double(trim(tok));
  } catch (const std::exception&) {
    throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": column '" + column +
                             "' is not a number: '" + tok + "'");
  }
  if (!std::isfinite(v))
    throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": column '" + column +
                             "' is not finite");
  return v;
}

}  // namespace

Dataset parse_samples_csv(const std::string& text,
                          const std::optional<std::vector<std::string>>& alphabet,
                          const std::string& origin) {
  std::vector<std::string> lines = csv_lines(text);
  std::size_t li = 0;
  while (li < lines.size() && trim(lines[li]).empty()) ++li;
  if (li == lines.size()) throw std::runtime_error(origin + ": empty file, header expected");
  check_header(split(lines[li], ','), samples_header(), origin);

  std::vector<std::string> classes = alphabet.value_or(std::vector<std::string>{});
  std::unordered_map<std::string, ClassId> class_ids;
  for (std::size_t c = 0; c < classes.size(); ++c)
    class_ids[classes[c]] = static_cast<ClassId>(c);

  std::vector<LabeledSample> samples;
  int next_id = 0;
  for (std::size_t i = li + 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    if (trim(lines[i]).empty()) continue;
    std::vector<std::string> f = split(lines[i], ',');
    if (f.size() != samples_header().size())
      throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": expected " +
                               std::to_string(samples_header().size()) + " fields, got " +
                               std::to_string(f.size()));
    LabeledSample s;
    s.user_id = std::string(trim(f[0]));
    s.location_id = std::string(trim(f[1]));
    std::string label = std::string(trim(f[2]));
    auto it = class_ids.find(label);
    if (it == class_ids.end()) {
      if (alphabet.has_value())
        throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": unknown label '" +
                                 label + "'");
      ClassId id = static_cast<ClassId>(classes.size());
      classes.push_back(label);
      it = class_ids.emplace(label, id).first;
    }
    s.label = it->second;
    for (int k = 0; k < kNumFeatures; ++k)
      s.features[k] = parse_feature(f[static_cast<std::size_t>(k) + 3],
                                    samples_header()[static_cast<std::size_t>(k) + 3], line_no,
                                    origin);
    s.sample_id = next_id++;
    samples.push_back(std::move(s));
  }

  if (classes.empty()) return Dataset{};  // header-only file with no declared alphabet
  return Dataset(std::move(classes), std::move(samples));
}

Dataset load_samples_csv(const std::string& path,
                         const std::optional<std::vector<std::string>>& alphabet) {
  return parse_samples_csv(read_file(path), alphabet, path);
}

std::string samples_to_csv(const Dataset& ds) {
  std::string out = "user,location,label,range,doppler,azimuth,elevation,peak\n";
  for (const LabeledSample& s : ds.samples()) {
    out += s.user_id;
    out += ',';
    out += s.location_id;
    out += ',';
    out += ds.class_name(s.label);
    for (int f = 0; f < kNumFeatures; ++f) {
      out += ',';
      out += format_double(s.features[f]);
    }
    out += '\n';
  }
  return out;
}

void write_samples_csv(const Dataset& ds, const std::string& path) {
  write_file(path, samples_to_csv(ds));
}

std::vector<RecordingRow> parse_recordings_csv(const std::string& text,
                                               std::optional<int> expected_window_len,
                                               const std::string& origin) {
  std::vector<std::string> lines = csv_lines(text);
  std::size_t li = 0;
  while (li < lines.size() && trim(lines[li]).empty()) ++li;
  if (li == lines.size()) throw std::runtime_error(origin + ": empty file, header expected");
  check_header(split(lines[li], ','), recordings_header(), origin);

  std::vector<RecordingRow> out;
  std::unordered_set<std::string> finished_ids;
  std::string current_id;
  RecordingRow current;
  int expected_frame = 0;
  int first_line_of_current = 0;

  auto finalize = [&](const std::string& id, int line_no) {
    current.recording.validate();
    if (expected_window_len &&
        current.recording.window_end - current.recording.window_start != *expected_window_len)
      throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": recording '" + id +
                               "' window length != " + std::to_string(*expected_window_len));
    out.push_back(std::move(current));
    current = RecordingRow{};
  };

  for (std::size_t i = li + 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    if (trim(lines[i]).empty()) continue;
    std::vector<std::string> f = split(lines[i], ',');
    if (f.size() != recordings_header().size())
      throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": expected " +
                               std::to_string(recordings_header().size()) + " fields, got " +
                               std::to_string(f.size()));

    std::string rec_id = std::string(trim(f[3]));
    long frame_idx;
    try {
      frame_idx = parse_long(trim(f[4]));
    } catch (const std::exception&) {
      throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                               ": column 'frame_idx' is not an integer");
    }

    if (rec_id != current_id) {
      if (!current_id.empty()) finalize(current_id, first_line_of_current);
      if (!finished_ids.insert(rec_id).second)
        throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": recording '" +
                                 rec_id + "' is not contiguous");
      current_id = rec_id;
      expected_frame = 0;
      first_line_of_current = line_no;
    }
    if (frame_idx != expected_frame)
      throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": frame_idx " +
                               std::to_string(frame_idx) + ", expected " +
                               std::to_string(expected_frame));

    if (frame_idx == 0) {
      current.user = std::string(trim(f[0]));
      current.location = std::string(trim(f[1]));
      current.label = std::string(trim(f[2]));
      current.recording.window_start = static_cast<int>(
          parse_feature(f[10], "gesture_start", line_no, origin));
      current.recording.window_end = static_cast<int>(
          parse_feature(f[11], "gesture_end", line_no, origin));
    }

    FeatureVector frame;
    for (int k = 0; k < kNumFeatures; ++k)
      frame[k] = parse_feature(f[static_cast<std::size_t>(k) + 5],
                               recordings_header()[static_cast<std::size_t>(k) + 5], line_no,
                               origin);
    current.recording.frames.push_back(frame);
    ++expected_frame;
  }
  if (!current_id.empty()) finalize(current_id, first_line_of_current);
  return out;
}

std::vector<RecordingRow> load_recordings_csv(const std::string& path,
                                              std::optional<int> expected_window_len) {
  return parse_recordings_csv(read_file(path), expected_window_len, path);
}

Dataset distill(const std::vector<RecordingRow>& rows,
                const std::optional<std::vector<std::string>>& alphabet) {
  std::vector<std::string> classes = alphabet.value_or(std::vector<std::string>{});
  std::unordered_map<std::string, ClassId> class_ids;
  for (std::size_t c = 0; c < classes.size(); ++c)
    class_ids[classes[c]] = static_cast<ClassId>(c);

  std::vector<LabeledSample> samples;
  int next_id = 0;
  for (const RecordingRow& row : rows) {
    auto it = class_ids.find(row.label);
    if (it == class_ids.end()) {
      if (alphabet.has_value())
        throw std::runtime_error("unknown label '" + row.label + "' in recordings");
      ClassId id = static_cast<ClassId>(classes.size());
      classes.push_back(row.label);
      it = class_ids.emplace(row.label, id).first;
    }
    LabeledSample s;
    s.features = average_frames(row.recording);
    s.label = it->second;
    s.user_id = row.user;
    s.location_id = row.location;
    s.sample_id = next_id++;
    samples.push_back(std::move(s));
  }
  if (classes.empty()) return Dataset{};
  return Dataset(std::move(classes), std::move(samples));
}

ThreeWaySplit split_stratified(const Dataset& ds, SplitFractions f, std::uint64_t seed) {
  if (f.train < 0.0 || f.val < 0.0 || f.test < 0.0)
    throw std::invalid_argument("split fractions must be non-negative");
  if (std::abs(f.train + f.val + f.test - 1.0) > 1e-9)
    throw std::invalid_argument("split fractions must sum to 1");

  std::mt19937_64 rng(seed);
  std::vector<int> train_pos, val_pos, test_pos;
  for (ClassId c = 0; c < ds.num_classes(); ++c) {
    std::vector<int> members = ds.members_of(c);
    std::shuffle(members.begin(), members.end(), rng);
    const double n = static_cast<double>(members.size());
    std::size_t c1 = static_cast<std::size_t>(std::llround(f.train * n));
    std::size_t c2 = static_cast<std::size_t>(std::llround((f.train + f.val) * n));
    c1 = std::min(c1, members.size());
    c2 = std::min(std::max(c2, c1), members.size());
    train_pos.insert(train_pos.end(), members.begin(), members.begin() + static_cast<long>(c1));
    val_pos.insert(val_pos.end(), members.begin() + static_cast<long>(c1),
                   members.begin() + static_cast<long>(c2));
    test_pos.insert(test_pos.end(), members.begin() + static_cast<long>(c2), members.end());
  }
  std::sort(train_pos.begin(), train_pos.end());
  std::sort(val_pos.begin(), val_pos.end());
  std::sort(test_pos.begin(), test_pos.end());

  if (f.train > 0.0 && train_pos.empty())
    throw std::invalid_argument("train fraction rounds to an empty partition");
  if (f.val > 0.0 && val_pos.empty())
    throw std::invalid_argument("val fraction rounds to an empty partition");
  if (f.test > 0.0 && test_pos.empty())
    throw std::invalid_argument("test fraction rounds to an empty partition");

  return {ds.subset(train_pos), ds.subset(val_pos), ds.subset(test_pos)};
}

ThreeWaySplit split_by_users(const Dataset& ds, const UserSplit& spec) {
  std::unordered_map<std::string, int> assignment;  // 0 train, 1 val, 2 test
  auto assign = [&](const std::vector<std::string>& users, int part) {
    for (const std::string& u : users)
      if (!assignment.emplace(u, part).second)
        throw std::invalid_argument("user '" + u + "' assigned to more than one partition");
  };
  assign(spec.train_users, 0);
  assign(spec.val_users, 1);
  assign(spec.test_users, 2);

  std::vector<int> pos[3];
  for (int i = 0; i < ds.size(); ++i) {
    auto it = assignment.find(ds[i].user_id);
    if (it == assignment.end())
      throw std::invalid_argument("user '" + ds[i].user_id + "' not assigned to any partition");
    pos[it->second].push_back(i);
  }
  return {ds.subset(pos[0]), ds.subset(pos[1]), ds.subset(pos[2])};
}

Dataset filter_users(const Dataset& ds, const std::vector<std::string>& users) {
  std::unordered_set<std::string> wanted(users.begin(), users.end());
  std::vector<int> pos;
  for (int i = 0; i < ds.size(); ++i)
    if (wanted.count(ds[i].user_id)) pos.push_back(i);
  return ds.subset(pos);
}

void SynthSpec::validate() const {
  if (classes.empty()) throw std::invalid_argument("synth spec: classes must be non-empty");
  if (users.empty()) throw std::invalid_argument("synth spec: users must be non-empty");
  if (locations.empty()) throw std::invalid_argument("synth spec: locations must be non-empty");
  if (samples_per_class_user < 1)
    throw std::invalid_argument("synth spec: samples_per_class_user must be >= 1");
  if (location_jitter < 0.0)
    throw std::invalid_argument("synth spec: location_jitter must be >= 0");
  for (double s : spread)
    if (!(s > 0.0)) throw std::invalid_argument("synth spec: spread must be positive");
  for (const auto& [cls, s] : class_spreads) {
    if (std::find(classes.begin(), classes.end(), cls) == classes.end())
      throw std::invalid_argument("synth spec: spread for unknown class '" + cls + "'");
    for (double v : s)
      if (!(v > 0.0))
        throw std::invalid_argument("synth spec: spread for class '" + cls + "' must be positive");
  }
  for (const std::string& cls : classes)
    if (!class_means.count(cls))
      throw std::invalid_argument("synth spec: missing mean for class '" + cls + "'");
  for (const auto& [user, _] : user_offsets)
    if (std::find(users.begin(), users.end(), user) == users.end())
      throw std::invalid_argument("synth spec: offset for unknown user '" + user + "'");
  for (const auto& [user, per_class] : user_class_offsets) {
    if (std::find(users.begin(), users.end(), user) == users.end())
      throw std::invalid_argument("synth spec: offset for unknown user '" + user + "'");
    for (const auto& [cls, _] : per_class)
      if (std::find(classes.begin(), classes.end(), cls) == classes.end())
        throw std::invalid_argument("synth spec: offset for unknown class '" + cls + "'");
  }
}

namespace {

std::array<double, kNumFeatures> parse_vector(const std::string& value, int line_no) {
  std::vector<std::string> parts = split(value, ',');
  std::array<double, kNumFeatures> out{};
  if (parts.size() == 1) {
    double v = parse_double(trim(parts[0]));
    out.fill(v);
    return out;
  }
  if (parts.size() != kNumFeatures)
    throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 1 or " +
                                std::to_string(kNumFeatures) + " values");
  for (int i = 0; i < kNumFeatures; ++i)
    out[static_cast<std::size_t>(i)] = parse_double(trim(parts[static_cast<std::size_t>(i)]));
  return out;
}

std::vector<std::string> parse_names(const std::string& value) {
  std::vector<std::string> out;
  for (const std::string& p : split(value, ',')) {
    std::string name = std::string(trim(p));
    if (name.empty()) throw std::invalid_argument("empty name in list '" + value + "'");
    out.push_back(std::move(name));
  }
  return out;
}

}  // namespace

SynthSpec parse_synth_spec(const std::string& text) {
  SynthSpec spec;
  spec.users.clear();
  spec.locations.clear();
  for (const KvLine& kv : parse_kv_lines(text)) {
    if (kv.key == "classes") {
      spec.classes = parse_names(kv.value);
    } else if (kv.key == "users") {
      spec.users = parse_names(kv.value);
    } else if (kv.key == "locations") {
      spec.locations = parse_names(kv.value);
    } else if (kv.key == "spread") {
      spec.spread = parse_vector(kv.value, kv.line_no);
    } else if (kv.key == "location_jitter") {
      spec.location_jitter = parse_double(kv.value);
    } else if (kv.key == "samples_per_class_user") {
      spec.samples_per_class_user = static_cast<int>(parse_long(kv.value));
    } else if (kv.key.rfind("mean.", 0) == 0) {
      spec.class_means[kv.key.substr(5)] = parse_vector(kv.value, kv.line_no);
    } else if (kv.key.rfind("spread.", 0) == 0) {
      spec.class_spreads[kv.key.substr(7)] = parse_vector(kv.value, kv.line_no);
    } else if (kv.key.rfind("offset.", 0) == 0) {
      std::string rest = kv.key.substr(7);
      std::size_t dot = rest.find('.');
      if (dot == std::string::npos)
        spec.user_offsets[rest] = parse_vector(kv.value, kv.line_no);
      else
        spec.user_class_offsets[rest.substr(0, dot)][rest.substr(dot + 1)] =
            parse_vector(kv.value, kv.line_no);
    } else {
      throw std::invalid_argument("line " + std::to_string(kv.line_no) + ": unknown key '" +
                                  kv.key + "'");
    }
  }
  if (spec.users.empty()) spec.users.push_back("u0");
  if (spec.locations.empty()) spec.locations.push_back("loc0");
  spec.validate();
  return spec;
}

SynthSpec load_synth_spec(const std::string& path) {
  return parse_synth_spec(read_file(path));
}

Dataset synthesize(const SynthSpec& spec, std::uint64_t seed) {
  spec.validate();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> unit_normal(0.0, 1.0);

  std::map<std::string, std::array<double, kNumFeatures>> loc_offsets;
  for (const std::string& loc : spec.locations) {
    std::array<double, kNumFeatures> off{};
    if (spec.location_jitter > 0.0)
      for (double& v : off) v = unit_normal(rng) * spec.location_jitter;
    loc_offsets[loc] = off;
  }

  const std::array<double, kNumFeatures> zeros{};
  std::vector<LabeledSample> samples;
  samples.reserve(spec.classes.size() * spec.users.size() *
                  static_cast<std::size_t>(spec.samples_per_class_user));
  int next_id = 0;
  for (std::size_t c = 0; c < spec.classes.size(); ++c) {
    const std::string& cls = spec.classes[c];
    const auto& mean = spec.class_means.at(cls);
    const auto& spread =
        spec.class_spreads.count(cls) ? spec.class_spreads.at(cls) : spec.spread;
    for (const std::string& user : spec.users) {
      const auto& user_off =
          spec.user_offsets.count(user) ? spec.user_offsets.at(user) : zeros;
      const auto* per_class = spec.user_class_offsets.count(user)
                                  ? &spec.user_class_offsets.at(user)
                                  : nullptr;
      const auto& class_off =
          (per_class != nullptr && per_class->count(cls)) ? per_class->at(cls) : zeros;
      for (int k = 0; k < spec.samples_per_class_user; ++k) {
        const std::string& loc =
            spec.locations[static_cast<std::size_t>(k) % spec.locations.size()];
        const auto& loc_off = loc_offsets.at(loc);
        LabeledSample s;
        for (int f = 0; f < kNumFeatures; ++f) {
          std::size_t fi = static_cast<std::size_t>(f);
          s.features[f] =
              mean[fi] + user_off[fi] + class_off[fi] + loc_off[fi] + unit_normal(rng) * spread[fi];
        }
        s.label = static_cast<ClassId>(c);
        s.user_id = user;
        s.location_id = loc;
        s.sample_id = next_id++;
        samples.push_back(std::move(s));
      }
    }
  }
  return Dataset(spec.classes, std::move(samples));
}

}  // namespace mira
