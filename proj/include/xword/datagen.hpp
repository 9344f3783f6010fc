#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>

#include "xword/candidates.hpp"
#include "xword/grid.hpp"
#include "xword/text_norm.hpp"

namespace xword {

enum class Symmetry { None, Rotational180 };

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenSpec {
  int rows = 15;
  int cols = 15;
  double block_fraction = 0.18;
  Symmetry symmetry = Symmetry::Rotational180;
  std::shared_ptr<const Lexicon> lexicon;
  double truth_inclusion_p = 1.0;
  std::size_t distractors_per_slot = 5;
  std::uint64_t seed = 0;
  std::size_t min_slot_length = 3;
  // Every white cell must sit in an Across and a Down slot (NYT style).
  bool full_checking = true;
  int max_attempts = 200;
  // Search nodes for the first fill attempt; doubled on each restart.
  std::uint64_t fill_node_budget = 300;
  int fill_restarts = 3;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

/// Random block layout with the requested symmetry, connected white cells and
/// no run shorter than min_slot_length. Deterministic per seed.
GridGeometry generate_geometry(const GenSpec& spec);

struct FillOptions {
  std::size_t min_slot_length = 3;
  std::uint64_t node_budget = 300;
  int restarts = 3;
};

/// Fills every slot with a lexicon word by running the solver with each slot's
/// candidates set to the whole same-length lexicon, shuffled by `seed`.
/// Throws GenerationError if the grid cannot be filled.
Puzzle fill_grid(const GridGeometry& geometry, const Lexicon& lexicon,
                 std::uint64_t seed, const FillOptions& options = {});

struct EmittedCandidates {
  PredictionSet predictions;
  CandidateMap candidates;
  std::set<std::string> truth_excluded;
};

/// Per slot: distractors sampled from same-length lexicon words other than the
/// answer, plus the answer at a uniform rank with probability
/// truth_inclusion_p. Throws GenerationError when distractors run short.
EmittedCandidates emit_candidates(const Puzzle& puzzle, const GenSpec& spec);

struct GeneratedInstance {
  Puzzle puzzle;
  EmittedCandidates emitted;
};

/// generate_geometry + fill_grid + emit_candidates. A geometry that cannot be
/// filled is replaced by a fresh one, up to max_attempts.
GeneratedInstance generate_instance(const GenSpec& spec);

}  // namespace xword
