#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "xword/relaxation.hpp"

using namespace xword;

namespace {

// Cells no retained slot touches, by direct scan.
std::set<Coord> uncovered(const Puzzle& p, const std::set<std::string>& retained) {
  std::set<Coord> covered, out;
  for (const auto& s : p.slots()) {
    if (retained.contains(s.id)) covered.insert(s.cells.begin(), s.cells.end());
  }
  for (const auto& s : p.slots()) {
    for (auto c : s.cells) {
      if (!covered.contains(c)) out.insert(c);
    }
  }
  return out;
}

Puzzle keyed_2x2() {
  return Puzzle(GridGeometry(2, 2), {{"1-Across", "", "AB", {}},
                                     {"3-Across", "", "CD", {}},
                                     {"1-Down", "", "AC", {}},
                                     {"2-Down", "", "BD", {}}});
}

CandidateMap lists(const Puzzle& p, const std::map<std::string, std::vector<std::string>>& words) {
  CandidateMap out;
  for (const auto& [id, w] : words) out.emplace(id, make_candidate_set(id, p.slot(id).length(), w));
  return out;
}

}  // namespace

TEST_CASE("all truths present") {
  Puzzle p = keyed_2x2();
  auto r = oracle_filter(p, lists(p, {{"1-Across", {"XY", "AB"}}, {"3-Across", {"CD"}},
                                      {"1-Down", {"AC"}}, {"2-Down", {"BD", "QQ"}}}));
  CHECK(r.removed_slots.empty());
  CHECK(r.removed_cells.empty());
  CHECK(r.retained_slots.size() == 4);
  CHECK(r.retained_cells().size() == 4);
}

TEST_CASE("no truths present") {
  Puzzle p = keyed_2x2();
  auto r = oracle_filter(p, lists(p, {{"1-Across", {"XY"}}, {"3-Across", {}}, {"1-Down", {"QQ"}}}));
  CHECK(r.removed_slots.size() == 4);
  CHECK(r.removed_cells.size() == 4);
  CHECK(r.retained_cells().empty());
  SolveResult s = solve_relaxed(r, {});
  CHECK(s.status == SolveStatus::Sat);
  CHECK(s.solutions.at(0).assignment.empty());
}

TEST_CASE("removed slot keeps its shared cells") {
  Puzzle p = keyed_2x2();
  auto r = oracle_filter(p, lists(p, {{"1-Across", {"XY"}}, {"3-Across", {"CD"}},
                                      {"1-Down", {"AC"}}, {"2-Down", {"BD"}}}));
  CHECK(r.removed_slots == std::set<std::string>{"1-Across"});
  CHECK(r.removed_cells.empty());
  CHECK(r.removed_cells == uncovered(p, r.retained_slots));
}

TEST_CASE("exclusive cells go with their slot") {
  // ###
  // ...   2-letter downs cross only the middle of the across
  // #.#
  Puzzle p(GridGeometry(3, 3, {{0, 0}, {0, 1}, {0, 2}, {2, 0}, {2, 2}}),
           {{"1-Across", "", "CAT", {}}, {"2-Down", "", "AX", {}}});
  auto r = oracle_filter(p, lists(p, {{"1-Across", {"DOG"}}, {"2-Down", {"AX"}}}));
  CHECK(r.removed_slots == std::set<std::string>{"1-Across"});
  CHECK(r.removed_cells == std::set<Coord>{{1, 0}, {1, 2}});
}

TEST_CASE("oracle needs an answer key") {
  Puzzle p(GridGeometry(2, 2), {{"1-Across", "", "AB", {}}});
  CHECK_THROWS_AS(oracle_filter(p, {}), OracleError);
  CHECK_THROWS_AS(truth_solution(p), OracleError);
}

TEST_CASE("truth-only lists solve to the answer key") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    auto fx = oracle::random_fixture(rng, 5, 5, 1, 1.0);
    CandidateMap only;
    for (const auto& s : fx.puzzle.slots()) {
      std::vector<std::string> w = {*fx.puzzle.clue(s.id).answer};
      only.emplace(s.id, make_candidate_set(s.id, s.length(), w));
    }
    auto r = oracle_filter(fx.puzzle, only);
    CHECK(r.removed_slots.empty());
    SolveResult s = solve_relaxed(r, only);
    REQUIRE(s.status == SolveStatus::Sat);
    CHECK(s.solutions[0] == truth_solution(fx.puzzle));
  }
}

TEST_CASE("relaxation invariants on random fixtures") {
  std::mt19937_64 rng(22);
  SolveOptions all;
  all.limit = kNoLimit;
  for (int t = 0; t < 200; ++t) {
    auto fx = oracle::random_fixture(rng, 5, 5, 6, 0.6);
    auto r = oracle_filter(fx.puzzle, fx.candidates);

    for (const auto& s : fx.puzzle.slots()) {
      const bool has_truth = fx.candidates.at(s.id).contains(*fx.puzzle.clue(s.id).answer);
      CHECK(r.retained_slots.contains(s.id) == has_truth);
      CHECK(r.removed_slots.contains(s.id) != has_truth);
      if (has_truth) {
        for (auto c : s.cells) CHECK(!r.removed_cells.contains(c));
      }
    }
    CHECK(r.removed_cells == uncovered(fx.puzzle, r.retained_slots));

    SolveResult s = solve_relaxed(r, fx.candidates, all);
    CHECK(s.status == SolveStatus::Sat);
    std::set<Solution> got(s.solutions.begin(), s.solutions.end());
    CHECK(got == oracle::enumerate_solutions(fx.puzzle, fx.candidates, r.retained_slots));
    for (const auto& sol : s.solutions) {
      for (auto c : r.removed_cells) CHECK(!sol.assignment.contains(c));
      CHECK(sol.assignment.size() == r.retained_cells().size());
    }
  }
}

TEST_CASE("adding a truth never removes more") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    auto fx = oracle::random_fixture(rng, 5, 5, 4, 0.5);
    auto before = oracle_filter(fx.puzzle, fx.candidates);
    if (before.removed_slots.empty()) continue;
    const std::string id = *before.removed_slots.begin();
    auto words = fx.candidates.at(id).strings();
    words.push_back(*fx.puzzle.clue(id).answer);
    fx.candidates[id] = make_candidate_set(id, fx.puzzle.slot(id).length(), words);
    auto after = oracle_filter(fx.puzzle, fx.candidates);
    CHECK(std::includes(before.removed_slots.begin(), before.removed_slots.end(),
                        after.removed_slots.begin(), after.removed_slots.end()));
    CHECK(std::includes(before.removed_cells.begin(), before.removed_cells.end(),
                        after.removed_cells.begin(), after.removed_cells.end()));
    CHECK(after.removed_slots.size() + 1 == before.removed_slots.size());
  }
}

TEST_CASE("remove_slots and keep_all") {
  Puzzle p = keyed_2x2();
  auto all = keep_all(p);
  CHECK(all.removed_slots.empty());
  CHECK(all.retained_slots.size() == 4);
  auto two = remove_slots(p, {"1-Across", "3-Across"});
  CHECK(two.removed_cells.empty());
  auto three = remove_slots(p, {"1-Across", "3-Across", "1-Down"});
  CHECK(three.removed_cells == std::set<Coord>{{0, 0}, {1, 0}});
  CHECK_THROWS(remove_slots(p, {"9-Down"}));
}
