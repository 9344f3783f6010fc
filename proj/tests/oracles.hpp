#pragma once

// Brute-force reference implementations and random fixture builders shared by
// the unit tests and the acceptance runner. Everything here is deliberately
// naive and independent of the library internals it checks.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "xword/candidates.hpp"
#include "xword/grid.hpp"
#include "xword/solver.hpp"
#include "xword/text_norm.hpp"

namespace oracle {

using xword::Coord;
using xword::Direction;

// (direction, cells) for every maximal run of at least min_len white cells.
inline std::set<std::pair<Direction, std::vector<Coord>>> scan_runs(const xword::GridGeometry& g,
                                                                    std::size_t min_len) {
  std::set<std::pair<Direction, std::vector<Coord>>> out;
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      for (Direction d : {Direction::Across, Direction::Down}) {
        const int dr = d == Direction::Down ? 1 : 0;
        const int dc = d == Direction::Across ? 1 : 0;
        if (g.is_blocked({r, c}) || g.is_white({r - dr, c - dc})) continue;
        std::vector<Coord> cells;
        for (Coord p{r, c}; g.is_white(p); p = {p.row + dr, p.col + dc}) cells.push_back(p);
        if (cells.size() >= min_len) out.emplace(d, cells);
      }
    }
  }
  return out;
}

inline std::set<xword::Crossing> pairwise_crossings(const std::vector<xword::Slot>& slots) {
  std::set<xword::Crossing> out;
  for (std::size_t a = 0; a < slots.size(); ++a) {
    for (std::size_t b = a + 1; b < slots.size(); ++b) {
      for (std::size_t i = 0; i < slots[a].cells.size(); ++i) {
        for (std::size_t j = 0; j < slots[b].cells.size(); ++j) {
          if (slots[a].cells[i] == slots[b].cells[j]) out.insert({a, i, b, j});
        }
      }
    }
  }
  return out;
}

inline bool naive_contains(std::string_view hay, std::string_view needle) {
  if (needle.size() > hay.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool same = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      if (hay[i + j] != needle[j]) {
        same = false;
        break;
      }
    }
    if (same) return true;
  }
  return false;
}

// Every way to cut `s` into lexicon words.
inline void all_segmentations(std::string_view s, const xword::Lexicon& lex,
                              std::vector<std::string>& prefix,
                              std::vector<std::vector<std::string>>& out) {
  if (s.empty()) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t n = 1; n <= s.size(); ++n) {
    std::string head(s.substr(0, n));
    if (!lex.contains(head)) continue;
    prefix.push_back(head);
    all_segmentations(s.substr(n), lex, prefix, out);
    prefix.pop_back();
  }
}

// Fewest words, then highest mean frequency, then lexicographic order.
inline std::vector<std::string> best_segmentation(std::string_view s, const xword::Lexicon& lex) {
  if (s.empty()) return {};
  std::vector<std::vector<std::string>> all;
  std::vector<std::string> prefix;
  all_segmentations(s, lex, prefix, all);
  if (all.empty()) return {std::string(s)};
  auto mean = [&](const std::vector<std::string>& seg) {
    double sum = 0;
    for (const auto& w : seg) sum += *lex.frequency(w);
    return sum / static_cast<double>(seg.size());
  };
  return *std::min_element(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const double ma = mean(a), mb = mean(b);
    if (ma != mb) return ma > mb;
    return a < b;
  });
}

// Reference flag: do any of the first k predictions match?
inline bool naive_flag(std::string_view truth, const std::vector<std::string>& preds, std::size_t k,
                       bool normalized, bool contains) {
  for (std::size_t i = 0; i < preds.size() && i < k; ++i) {
    std::string p = normalized ? xword::normalize(preds[i]) : preds[i];
    if (contains ? naive_contains(p, truth) : p == truth) return true;
  }
  return false;
}

// All fills choosing one candidate per listed slot, by plain cross-product
// enumeration in slot order with a crossing check against earlier choices.
inline std::set<xword::Solution> enumerate_solutions(const xword::Puzzle& puzzle,
                                                     const xword::CandidateMap& candidates,
                                                     const std::set<std::string>& scope) {
  std::vector<const xword::Slot*> slots;
  for (const auto& s : puzzle.slots()) {
    if (scope.contains(s.id)) slots.push_back(&s);
  }
  std::set<xword::Solution> out;
  std::map<Coord, char> cells;
  std::map<Coord, int> uses;
  std::map<std::string, std::string> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == slots.size()) {
      out.insert({cells, chosen});
      return;
    }
    const xword::Slot& s = *slots[i];
    auto it = candidates.find(s.id);
    if (it == candidates.end()) return;
    for (const std::string& w : it->second.strings()) {
      bool ok = w.size() == s.length();
      for (std::size_t k = 0; ok && k < s.length(); ++k) {
        auto c = cells.find(s.cells[k]);
        if (c != cells.end() && c->second != w[k]) ok = false;
      }
      if (!ok) continue;
      for (std::size_t k = 0; k < s.length(); ++k) {
        cells[s.cells[k]] = w[k];
        ++uses[s.cells[k]];
      }
      chosen[s.id] = w;
      rec(i + 1);
      chosen.erase(s.id);
      for (std::size_t k = 0; k < s.length(); ++k) {
        if (--uses[s.cells[k]] == 0) {
          uses.erase(s.cells[k]);
          cells.erase(s.cells[k]);
        }
      }
    }
  };
  rec(0);
  return out;
}

inline std::set<xword::Solution> enumerate_solutions(const xword::Puzzle& puzzle,
                                                     const xword::CandidateMap& candidates) {
  std::set<std::string> scope;
  for (const auto& s : puzzle.slots()) scope.insert(s.id);
  return enumerate_solutions(puzzle, candidates, scope);
}

// Solver conditions checked directly: membership, length, crossing agreement.
inline bool satisfies(const xword::Puzzle& puzzle, const xword::CandidateMap& candidates,
                      const std::set<std::string>& scope, const xword::Solution& sol) {
  for (const auto& s : puzzle.slots()) {
    if (!scope.contains(s.id)) continue;
    auto ch = sol.chosen.find(s.id);
    if (ch == sol.chosen.end() || ch->second.size() != s.length()) return false;
    if (!candidates.at(s.id).contains(ch->second)) return false;
    for (std::size_t k = 0; k < s.length(); ++k) {
      auto cell = sol.assignment.find(s.cells[k]);
      if (cell == sol.assignment.end() || cell->second != ch->second[k]) return false;
    }
  }
  return sol.chosen.size() == scope.size();
}

// Random geometry whose white cells all lie in a run of at least 2. Needs a
// grid with room for one such run.
inline xword::GridGeometry random_geometry(std::mt19937_64& rng, int rows, int cols,
                                           double block_p) {
  std::bernoulli_distribution block(block_p);
  for (;;) {
    std::set<Coord> blocked;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        if (block(rng)) blocked.insert({r, c});
      }
    }
    for (;;) {
      xword::GridGeometry g(rows, cols, blocked);
      std::set<Coord> covered;
      for (const auto& [d, cells] : scan_runs(g, 2)) covered.insert(cells.begin(), cells.end());
      bool changed = false;
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          if (g.is_white({r, c}) && !covered.contains({r, c})) {
            blocked.insert({r, c});
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    xword::GridGeometry g(rows, cols, blocked);
    if (g.white_count() > 0) return g;
  }
}

struct Fixture {
  xword::Puzzle puzzle;
  xword::CandidateMap candidates;
};

// Random puzzle with a random answer key over `alphabet`. Each slot's list
// holds the truth with probability truth_p plus random same-length words,
// at most max_candidates entries and at least one.
inline Fixture random_fixture(std::mt19937_64& rng, int max_rows, int max_cols,
                              std::size_t max_candidates, double truth_p,
                              std::string_view alphabet = "ABC") {
  std::uniform_int_distribution<int> rdim(1, max_rows), cdim(2, max_cols);
  std::uniform_real_distribution<double> bp(0.0, 0.35);
  const int rows = rdim(rng), cols = cdim(rng);  // a 1x1 grid has no slot
  auto g = random_geometry(rng, rows, cols, bp(rng));
  std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
  std::map<Coord, char> key;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (g.is_white({r, c})) key[{r, c}] = alphabet[letter(rng)];
    }
  }
  std::vector<xword::ClueEntry> clues;
  for (const auto& s : xword::extract_slots(g)) {
    std::string ans;
    for (Coord c : s.cells) ans += key[c];
    clues.push_back({s.id, "clue " + s.id, ans, {}});
  }
  xword::Puzzle puzzle(g, clues);

  std::bernoulli_distribution with_truth(truth_p);
  std::uniform_int_distribution<std::size_t> count(1, max_candidates);
  xword::CandidateMap cands;
  for (const auto& s : puzzle.slots()) {
    std::vector<std::string> words;
    const std::size_t n = count(rng);
    if (with_truth(rng)) words.push_back(*puzzle.clue(s.id).answer);
    for (int tries = 0; words.size() < n && tries < 50; ++tries) {
      std::string w;
      for (std::size_t k = 0; k < s.length(); ++k) w += alphabet[letter(rng)];
      if (w != *puzzle.clue(s.id).answer &&
          std::find(words.begin(), words.end(), w) == words.end()) {
        words.push_back(w);
      }
    }
    if (words.empty()) words.push_back(*puzzle.clue(s.id).answer);
    std::shuffle(words.begin(), words.end(), rng);
    cands.emplace(s.id, xword::make_candidate_set(s.id, s.length(), words));
  }
  return {std::move(puzzle), std::move(cands)};
}

// 50 short words over A-D with small integer frequencies, so that many
// strings have several segmentations and exact ties in count and mean.
inline xword::Lexicon fixture_lexicon() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> len(1, 4), letter(0, 3), freq(1, 5);
  std::set<std::string> words;
  while (words.size() < 50) {
    std::string w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w += static_cast<char>('A' + letter(rng));
    words.insert(w);
  }
  xword::Lexicon lex;
  for (const auto& w : words) lex.add(w, freq(rng));
  return lex;
}

}  // namespace oracle
