#include "xword/relaxation.hpp"

namespace xword {

std::set<Coord> RelaxedPuzzle::retained_cells() const {
  std::set<Coord> out;
  for (const std::string& id : retained_slots) {
    const Slot& s = base.slot(id);
    out.insert(s.cells.begin(), s.cells.end());
  }
  return out;
}

RelaxedPuzzle remove_slots(const Puzzle& puzzle, const std::set<std::string>& slots) {
  for (const std::string& id : slots) {
    if (!puzzle.slot_index(id)) throw std::invalid_argument("unknown slot " + id);
  }
  RelaxedPuzzle out{puzzle, {}, {}, {}};
  for (const Slot& s : puzzle.slots()) {
    if (slots.contains(s.id)) {
      out.removed_slots.insert(s.id);
    } else {
      out.retained_slots.insert(s.id);
    }
  }
  std::set<Coord> kept = out.retained_cells();
  for (const Slot& s : puzzle.slots()) {
    if (!out.removed_slots.contains(s.id)) continue;
    for (const Coord& c : s.cells) {
      if (!kept.contains(c)) out.removed_cells.insert(c);
    }
  }
  return out;
}

RelaxedPuzzle keep_all(const Puzzle& puzzle) { return remove_slots(puzzle, {}); }

RelaxedPuzzle oracle_filter(const Puzzle& puzzle, const CandidateMap& candidates) {
  if (!puzzle.has_answer_key()) {
    throw OracleError("oracle filtering needs a complete answer key");
  }
  std::set<std::string> drop;
  for (const Slot& s : puzzle.slots()) {
    const std::string& truth = *puzzle.clue(s.id).answer;
    auto it = candidates.find(s.id);
    if (it == candidates.end() || !it->second.contains(truth)) drop.insert(s.id);
  }
  return remove_slots(puzzle, drop);
}

SolveResult solve_relaxed(const RelaxedPuzzle& relaxed, const CandidateMap& candidates,
                          const SolveOptions& options) {
  return solve(build_model(relaxed.base, candidates, relaxed.retained_slots), options);
}

Solution truth_solution(const Puzzle& puzzle) {
  auto grid = puzzle.answer_grid();
  if (!grid) throw OracleError("puzzle has no complete answer key");
  Solution sol;
  sol.assignment = std::move(*grid);
  for (const auto& [id, clue] : puzzle.clues()) sol.chosen.emplace(id, *clue.answer);
  return sol;
}

}  // namespace xword
