#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xword/grid.hpp"

namespace xword {

/// Raw ranked model output per slot id, rank 1 first.
struct PredictionSet {
  std::map<std::string, std::vector<std::string>> by_slot;

  friend bool operator==(const PredictionSet&, const PredictionSet&) = default;
};

struct PredictionOptions {
  std::size_t k = 20;               // keep at most the first k predictions
  const Puzzle* puzzle = nullptr;   // when set, slot ids are checked against it
};

/// Parses `[{"slot": "17-Across", "predictions": [...]}, ...]`.
/// Throws ParseError on malformed input, duplicate or unknown slot ids.
PredictionSet load_predictions(std::string_view document,
                               const PredictionOptions& options = {});

std::string serialize_predictions(const PredictionSet& predictions);

struct Candidate {
  std::string text;
  std::size_t rank = 0;    // 1-based rank of the source prediction
  std::size_t offset = 0;  // character offset within the normalized prediction

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Length-filtered, deduplicated candidates for one slot, in preference order.
struct CandidateSet {
  std::string slot_id;
  std::size_t length = 0;
  std::vector<Candidate> candidates;

  bool empty() const { return candidates.empty(); }
  std::size_t size() const { return candidates.size(); }
  bool contains(std::string_view text) const;
  std::vector<std::string> strings() const;
};

using CandidateMap = std::map<std::string, CandidateSet>;

/// Every length-`slot.length()` substring of each normalized prediction, in
/// (rank, offset) order, keeping the first occurrence of duplicates.
CandidateSet derive_candidates(const Slot& slot,
                               std::span<const std::string> predictions);

/// Candidates for every slot of `puzzle`; slots absent from `predictions`
/// get an empty set.
CandidateMap derive_all(const Puzzle& puzzle, const PredictionSet& predictions);

/// Wraps already-normalized words as a candidate set (rank = position).
/// Throws std::invalid_argument on wrong lengths or symbols.
CandidateSet make_candidate_set(std::string slot_id, std::size_t length,
                                std::span<const std::string> words);

}  // namespace xword
