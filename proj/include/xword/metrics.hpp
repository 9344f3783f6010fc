#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xword/relaxation.hpp"
#include "xword/solver.hpp"

namespace xword {

// Clue-answer metrics. `truth` is expected in normalized form; predictions
// are normalized first only when `normalized` is set.

/// Any of the first k predictions equals the truth.
bool em_at_k(std::string_view truth, std::span<const std::string> predictions,
             std::size_t k, bool normalized);

/// Any of the first k predictions contains the truth as a contiguous substring.
bool in_at_k(std::string_view truth, std::span<const std::string> predictions,
             std::size_t k, bool normalized);

struct ClueFlags {
  bool em = false;
  bool em_norm = false;
  bool in = false;
  bool in_norm = false;

  friend bool operator==(const ClueFlags&, const ClueFlags&) = default;
};

struct QAResult {
  std::string clue_id;
  std::string truth;
  std::vector<std::string> predictions;
  std::vector<ClueFlags> flags;  // flags[k - 1]

  /// Flags at top-k; k past the end repeats the last entry.
  ClueFlags at(std::size_t k) const;
};

QAResult score_clue(std::string clue_id, std::string truth,
                    std::vector<std::string> predictions, std::size_t k_max = 20);

inline constexpr std::array<std::size_t, 3> kReportedK = {1, 10, 20};

struct QAReport {
  std::size_t clues = 0;
  std::map<std::size_t, double> em, em_norm, in, in_norm;  // keyed by k
};

struct PuzzleScore {
  double acc_char = 0.0;
  double acc_word = 0.0;
  double rem_word = 0.0;
  double rem_char = 0.0;
};

enum class Denominator { Original, Retained };

class ScoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Character/word accuracy of `predicted` against `truth` plus the removal
/// fractions of `relaxed`. With Denominator::Original, removed content counts
/// as wrong; with Retained, accuracy is over retained slots and cells only.
/// Throws ScoreError if `predicted` does not cover exactly the retained cells.
PuzzleScore score_puzzle(const Solution& truth, const Solution& predicted,
                         const RelaxedPuzzle& relaxed,
                         Denominator denominator = Denominator::Original);

struct MetricsReport {
  std::optional<QAReport> qa;
  std::optional<PuzzleScore> puzzle;
  std::size_t puzzles = 0;
};

/// Micro average over clues at k in {1, 10, 20}. Throws on empty input.
QAReport aggregate_qa(std::span<const QAResult> results);
/// Macro (per-puzzle) average. Throws on empty input.
PuzzleScore aggregate_puzzles(std::span<const PuzzleScore> scores);
/// Either part may be empty, not both.
MetricsReport aggregate(std::span<const QAResult> clues, std::span<const PuzzleScore> puzzles);

/// Rounds to 4 decimal places, as reported.
double report_value(double x);

/// `{"qa": {"em": {"1":..,"10":..,"20":..}, ...}, "puzzle": {...}}`; absent
/// parts are omitted.
std::string to_json(const MetricsReport& report, int indent = 2);

}  // namespace xword
