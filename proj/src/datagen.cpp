#include "xword/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "xword/solver.hpp"

namespace xword {

namespace {

// Independent deterministic streams per generation stage.
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

class Layout {
 public:
  Layout(int rows, int cols) : rows_(rows), cols_(cols), blocked_(cell_count(), 0) {}

  std::size_t cell_count() const { return static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_); }
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  bool blocked(int r, int c) const { return blocked_[index(r, c)] != 0; }
  void set(std::size_t i, bool b) { blocked_[i] = b ? 1 : 0; }

  bool valid(std::size_t min_len, bool full_checking) const {
    std::vector<char> covered(cell_count(), 0);
    bool ok = scan(min_len, full_checking, covered, true) &&
              scan(min_len, full_checking, covered, false);
    if (!ok) return false;
    std::size_t whites = 0;
    std::size_t first = cell_count();
    for (std::size_t i = 0; i < cell_count(); ++i) {
      if (blocked_[i]) continue;
      if (!covered[i]) return false;
      ++whites;
      if (first == cell_count()) first = i;
    }
    if (whites == 0) return false;
    return connected(first) == whites;
  }

  GridGeometry geometry() const {
    std::set<Coord> b;
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) {
        if (blocked(r, c)) b.insert({r, c});
      }
    }
    return GridGeometry(rows_, cols_, b);
  }

 private:
  bool scan(std::size_t min_len, bool full_checking, std::vector<char>& covered,
            bool across) const {
    const int outer = across ? rows_ : cols_;
    const int inner = across ? cols_ : rows_;
    for (int o = 0; o < outer; ++o) {
      int i = 0;
      while (i < inner) {
        auto at = [&](int k) { return across ? index(o, k) : index(k, o); };
        if (blocked_[at(i)]) {
          ++i;
          continue;
        }
        int j = i;
        while (j < inner && !blocked_[at(j)]) ++j;
        const auto len = static_cast<std::size_t>(j - i);
        if (len >= min_len) {
          for (int k = i; k < j; ++k) covered[at(k)] = 1;
        } else if (full_checking || len >= 2) {
          return false;
        }
        i = j;
      }
    }
    return true;
  }

  std::size_t connected(std::size_t start) const {
    std::vector<char> seen(cell_count(), 0);
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      ++count;
      const int r = static_cast<int>(i / static_cast<std::size_t>(cols_));
      const int c = static_cast<int>(i % static_cast<std::size_t>(cols_));
      const int dr[] = {-1, 1, 0, 0};
      const int dc[] = {0, 0, -1, 1};
      for (int d = 0; d < 4; ++d) {
        const int nr = r + dr[d];
        const int nc = c + dc[d];
        if (nr < 0 || nr >= rows_ || nc < 0 || nc >= cols_) continue;
        const std::size_t n = index(nr, nc);
        if (!blocked_[n] && !seen[n]) {
          seen[n] = 1;
          stack.push_back(n);
        }
      }
    }
    return count;
  }

  int rows_;
  int cols_;
  std::vector<char> blocked_;
};

}  // namespace

void GenSpec::validate() const {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("grid dimensions must be positive");
  if (!(block_fraction >= 0.0 && block_fraction < 1.0)) {
    throw std::invalid_argument("block_fraction must lie in [0, 1)");
  }
  if (!(truth_inclusion_p >= 0.0 && truth_inclusion_p <= 1.0)) {
    throw std::invalid_argument("truth_inclusion_p must lie in [0, 1]");
  }
  if (min_slot_length < 1) throw std::invalid_argument("min_slot_length must be at least 1");
  if (max_attempts < 1) throw std::invalid_argument("max_attempts must be at least 1");
}

GridGeometry generate_geometry(const GenSpec& spec) {
  spec.validate();
  auto rng = make_rng(spec.seed, 1);
  const std::size_t cells = static_cast<std::size_t>(spec.rows) * static_cast<std::size_t>(spec.cols);
  const auto target = static_cast<std::size_t>(std::lround(spec.block_fraction * static_cast<double>(cells)));

  // Cells paired with their mirror image; the representative is the smaller index.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < cells; ++i) {
    const std::size_t mirror = spec.symmetry == Symmetry::Rotational180 ? cells - 1 - i : i;
    if (i <= mirror) groups.emplace_back(i, mirror);
  }

  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    Layout layout(spec.rows, spec.cols);
    std::shuffle(groups.begin(), groups.end(), rng);
    std::size_t placed = 0;
    for (const auto& [a, b] : groups) {
      if (placed >= target) break;
      const std::size_t add = a == b ? 1 : 2;
      if (placed + add > target) continue;
      layout.set(a, true);
      layout.set(b, true);
      if (layout.valid(spec.min_slot_length, spec.full_checking)) {
        placed += add;
      } else {
        layout.set(a, false);
        layout.set(b, false);
      }
    }
    // An odd target is unreachable with pairs alone when the centre is taken.
    const bool close_enough = placed == target || (target > 0 && placed + 1 == target);
    if (close_enough && layout.valid(spec.min_slot_length, spec.full_checking)) {
      return layout.geometry();
    }
  }
  throw GenerationError("no valid " + std::to_string(spec.rows) + "x" + std::to_string(spec.cols) +
                        " layout with " + std::to_string(target) + " blocks after " +
                        std::to_string(spec.max_attempts) + " attempts");
}

Puzzle fill_grid(const GridGeometry& geometry, const Lexicon& lexicon, std::uint64_t seed,
                 const FillOptions& options) {
  PuzzleOptions popts;
  popts.min_slot_length = options.min_slot_length;
  const Puzzle shell(geometry, {}, popts);

  std::map<std::size_t, std::vector<std::string>> by_length;
  for (const Slot& s : shell.slots()) by_length.try_emplace(s.length());
  for (auto& [len, words] : by_length) {
    words = lexicon.words_of_length(len);
    if (words.empty()) {
      throw GenerationError("lexicon has no words of length " + std::to_string(len));
    }
  }

  auto rng = make_rng(seed, 2);
  std::uint64_t budget = options.node_budget;
  for (int attempt = 0; attempt <= options.restarts; ++attempt) {
    std::map<std::size_t, CandidateSet> pools;
    for (auto& [len, words] : by_length) {
      std::shuffle(words.begin(), words.end(), rng);
      CandidateSet set{"", len, {}};
      set.candidates.reserve(words.size());
      for (std::size_t i = 0; i < words.size(); ++i) set.candidates.push_back({words[i], i + 1, 0});
      pools.emplace(len, std::move(set));
    }
    CandidateMap candidates;
    for (const Slot& s : shell.slots()) {
      CandidateSet set = pools.at(s.length());
      set.slot_id = s.id;
      candidates.emplace(s.id, std::move(set));
    }

    SolveOptions sopts;
    sopts.node_budget = budget;
    SolveResult result = solve(build_model(shell, candidates), sopts);
    if (result.status == SolveStatus::Nosat) {
      throw GenerationError("grid cannot be filled from the lexicon");
    }
    if (result.status == SolveStatus::Sat) {
      std::vector<ClueEntry> clues;
      for (const Slot& s : shell.slots()) {
        clues.push_back(ClueEntry{s.id, "Clue for " + s.id, result.solutions.front().chosen.at(s.id), {}});
      }
      return Puzzle(geometry, std::move(clues), popts);
    }
    budget *= 2;
  }
  throw GenerationError("fill search exceeded its node budget after " +
                        std::to_string(options.restarts + 1) + " attempts");
}

EmittedCandidates emit_candidates(const Puzzle& puzzle, const GenSpec& spec) {
  spec.validate();
  if (!spec.lexicon) throw std::invalid_argument("GenSpec has no lexicon");
  if (!puzzle.has_answer_key()) throw GenerationError("puzzle has no answer key");
  auto rng = make_rng(spec.seed, 3);
  std::bernoulli_distribution include(spec.truth_inclusion_p);

  std::map<std::size_t, std::vector<std::string>> by_length;
  EmittedCandidates out;
  for (const Slot& s : puzzle.slots()) {
    const std::string& truth = *puzzle.clue(s.id).answer;
    auto [it, fresh] = by_length.try_emplace(s.length());
    if (fresh) it->second = spec.lexicon->words_of_length(s.length());
    std::vector<std::string> pool;
    pool.reserve(it->second.size());
    std::copy_if(it->second.begin(), it->second.end(), std::back_inserter(pool),
                 [&](const std::string& w) { return w != truth; });
    if (pool.size() < spec.distractors_per_slot) {
      throw GenerationError("only " + std::to_string(pool.size()) + " distractors of length " +
                            std::to_string(s.length()) + " available for " + s.id + ", need " +
                            std::to_string(spec.distractors_per_slot));
    }
    std::vector<std::string> list;
    std::sample(pool.begin(), pool.end(), std::back_inserter(list),
                static_cast<std::ptrdiff_t>(spec.distractors_per_slot), rng);
    std::shuffle(list.begin(), list.end(), rng);
    if (include(rng)) {
      std::uniform_int_distribution<std::size_t> rank(0, list.size());
      list.insert(list.begin() + static_cast<std::ptrdiff_t>(rank(rng)), truth);
    } else {
      out.truth_excluded.insert(s.id);
    }
    out.predictions.by_slot.emplace(s.id, std::move(list));
  }
  out.candidates = derive_all(puzzle, out.predictions);
  return out;
}

GeneratedInstance generate_instance(const GenSpec& spec) {
  spec.validate();
  if (!spec.lexicon) throw std::invalid_argument("GenSpec has no lexicon");
  FillOptions fopts;
  fopts.min_slot_length = spec.min_slot_length;
  fopts.node_budget = spec.fill_node_budget;
  fopts.restarts = spec.fill_restarts;

  std::string last_error;
  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    GenSpec layout_spec = spec;
    layout_spec.seed = spec.seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL;
    std::optional<Puzzle> puzzle;
    try {
      puzzle.emplace(fill_grid(generate_geometry(layout_spec), *spec.lexicon,
                               layout_spec.seed, fopts));
    } catch (const GenerationError& e) {
      last_error = e.what();
      continue;
    }
    EmittedCandidates emitted = emit_candidates(*puzzle, spec);
    return {std::move(*puzzle), std::move(emitted)};
  }
  throw GenerationError("could not generate a fillable puzzle: " + last_error);
}

}  // namespace xword
