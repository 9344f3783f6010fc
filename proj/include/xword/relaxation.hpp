#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include "xword/candidates.hpp"
#include "xword/grid.hpp"
#include "xword/solver.hpp"

namespace xword {

/// A puzzle with some slots taken out of the constraint problem. Cells are
/// removed only when no retained slot uses them.
struct RelaxedPuzzle {
  Puzzle base;
  std::set<std::string> removed_slots;
  std::set<std::string> retained_slots;
  std::set<Coord> removed_cells;

  std::set<Coord> retained_cells() const;
};

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relaxation that keeps every slot.
RelaxedPuzzle keep_all(const Puzzle& puzzle);

/// Removes `slots` and every cell that only removed slots cover. Throws
/// std::invalid_argument for an id that is not a slot of `puzzle`.
RelaxedPuzzle remove_slots(const Puzzle& puzzle, const std::set<std::string>& slots);

/// Retains a slot iff its ground-truth answer is among its candidates.
/// Throws OracleError when the puzzle lacks a complete answer key.
RelaxedPuzzle oracle_filter(const Puzzle& puzzle, const CandidateMap& candidates);

/// Solves the constraint problem restricted to the retained slots. Nosat is
/// reported as-is.
SolveResult solve_relaxed(const RelaxedPuzzle& relaxed, const CandidateMap& candidates,
                          const SolveOptions& options = {});

/// Ground-truth fill of the whole puzzle as a Solution.
/// Throws OracleError without a complete answer key.
Solution truth_solution(const Puzzle& puzzle);

}  // namespace xword
