#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fairagent {

// Dense indices assigned by the vocabularies at ingestion time.
using UserId = std::uint32_t;
using ItemId = std::uint32_t;

// One logged user-item event. `label` is 1 for a positive interaction.
struct Interaction {
  UserId user = 0;
  ItemId item = 0;
  std::int64_t ts = 0;
  std::uint8_t label = 1;

  friend bool operator==(const Interaction&, const Interaction&) = default;
};

// An ordered top-K list; rank of items[i] is i+1.
struct RankedList {
  UserId user = 0;
  int stage = 0;
  std::vector<ItemId> items;
};

// One past interaction of a user, with the test stage it happened in
// (0 = during training).
struct HistoryItem {
  ItemId item = 0;
  int stage = 0;
};

// A user's interaction history up to (excluding) `as_of_stage`, oldest
// first. Pseudo-rank of position i is size()-i: the most recent item
// gets rank 1.
struct HistoryView {
  UserId user = 0;
  int as_of_stage = 0;
  std::vector<HistoryItem> items;

  int pseudo_rank(std::size_t index) const {
    return static_cast<int>(items.size() - index);
  }
};

// Outcome of exposing one ranked entry to a simulated user.
struct FeedbackEvent {
  UserId user = 0;
  ItemId item = 0;
  int rank = 0;
  std::uint8_t observed = 0;
  std::uint8_t clicked = 0;
  int stage = 0;
};

// Error taxonomy mirrored by the CLI exit codes.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fairagent
