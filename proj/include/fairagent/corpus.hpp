#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fairagent/types.hpp"

namespace fairagent {

// Insertion-ordered bidirectional mapping between external labels and
// dense indices.
class Vocab {
 public:
  std::uint32_t intern(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(labels_.size());
    labels_.push_back(label);
    index_.emplace(label, id);
    return id;
  }

  std::optional<std::uint32_t> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& label(std::uint32_t id) const { return labels_.at(id); }
  std::size_t size() const { return labels_.size(); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Interactions plus the vocabularies that resolve their ids.
struct Dataset {
  Vocab users;
  Vocab items;
  std::vector<Interaction> interactions;
};

// Column mapping for delimiter-separated interaction logs. The file must
// have a header row naming at least the user, item and timestamp columns.
// A release-timestamp column, when mapped, overrides first-interaction
// entry-stage inference.
struct LoadFormat {
  char delimiter = '\t';
  std::string user_col = "user_id";
  std::string item_col = "item_id";
  std::string ts_col = "timestamp";
  std::string label_col = "label";        // optional in the file
  std::string release_col = "release_ts"; // optional in the file
};

// Parses, de-duplicates on (user,item,timestamp) and sorts by timestamp.
// Release timestamps, when present, are returned per item id.
Dataset load_interactions(const std::string& path, const LoadFormat& format,
                          std::vector<std::int64_t>* release_ts = nullptr);

// Drops all events of users with fewer than min_count interactions.
std::vector<Interaction> filter_users(const std::vector<Interaction>& events,
                                      int min_count = 10);

// Entry-time bookkeeping for the whole item universe. Cohort indices
// 0..num_train_cohorts-1 partition the pre-T0 items by first appearance;
// test-stage entrants get cohort num_train_cohorts + stage - 1.
struct StagePlan {
  int num_train_cohorts = 5;
  int num_test_stages = 5;
  std::vector<std::int64_t> stage_boundaries;  // start ts of each test stage
  std::vector<int> entry_stage;                // per item; 0 = available at T_0
  std::vector<int> cohort;                     // per item
  std::vector<std::int64_t> first_seen;        // per item; entry-order key

  bool available(ItemId v, int stage) const { return entry_stage[v] <= stage; }

  std::vector<ItemId> items_available_at(int stage) const {
    std::vector<ItemId> out;
    for (ItemId v = 0; v < entry_stage.size(); ++v) {
      if (entry_stage[v] <= stage) out.push_back(v);
    }
    return out;
  }

  std::vector<ItemId> items_entering_at(int stage) const {
    std::vector<ItemId> out;
    for (ItemId v = 0; v < entry_stage.size(); ++v) {
      if (entry_stage[v] == stage) out.push_back(v);
    }
    return out;
  }
};

// The split corpus: training set, per-stage test sets, the agent warm-up
// slice (tail of train, also contained in `train`) and per-user training
// histories.
struct DatasetBundle {
  Vocab users;
  Vocab items;
  std::vector<Interaction> train;
  std::vector<std::vector<Interaction>> stages;  // index m-1 holds stage m
  std::vector<Interaction> warmup;
  std::vector<std::vector<HistoryItem>> base_history;  // per user, from train
};

struct SplitOptions {
  int num_test_stages = 5;
  double train_ratio = 0.5;
  int num_train_cohorts = 5;
  double warmup_ratio = 0.2;  // chronological tail share of train
};

// Chronological split into train + M contiguous near-equal test stages.
// Entry stages are inferred from first interactions unless release
// timestamps are supplied.
std::pair<StagePlan, DatasetBundle> build_stage_plan(
    const Dataset& data, const SplitOptions& options,
    const std::vector<std::int64_t>* release_ts = nullptr);

// Artifact io. `dir` is created if missing.
void save_bundle(const std::string& dir, const StagePlan& plan,
                 const DatasetBundle& bundle);
std::pair<StagePlan, DatasetBundle> load_bundle(const std::string& dir);

}  // namespace fairagent
