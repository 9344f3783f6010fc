#include "xword/grid.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "xword/text_norm.hpp"

namespace xword {

using nlohmann::json;

std::string to_string(Coord c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string_view to_string(Direction d) {
  return d == Direction::Across ? "Across" : "Down";
}

std::string make_slot_id(int number, Direction d) {
  return std::to_string(number) + "-" + std::string(to_string(d));
}

GridGeometry::GridGeometry(int rows, int cols, const std::set<Coord>& blocked)
    : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) {
    throw std::invalid_argument("grid dimensions must be positive, got " +
                                std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
  blocked_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
  for (const Coord& c : blocked) {
    if (!in_bounds(c)) {
      throw std::invalid_argument("blocked cell " + to_string(c) +
                                  " lies outside the grid");
    }
    blocked_[index(c)] = 1;
  }
}

std::size_t GridGeometry::white_count() const {
  return static_cast<std::size_t>(
      std::count(blocked_.begin(), blocked_.end(), 0));
}

std::set<Coord> GridGeometry::blocked() const {
  std::set<Coord> out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (blocked_[index({r, c})]) out.insert({r, c});
    }
  }
  return out;
}

namespace {

bool starts_run(const GridGeometry& g, Coord c, Direction d) {
  if (g.is_blocked(c)) return false;
  Coord prev = d == Direction::Across ? Coord{c.row, c.col - 1}
                                      : Coord{c.row - 1, c.col};
  return g.is_blocked(prev);
}

std::vector<Coord> run_from(const GridGeometry& g, Coord c, Direction d) {
  std::vector<Coord> cells;
  while (g.is_white(c)) {
    cells.push_back(c);
    if (d == Direction::Across) {
      ++c.col;
    } else {
      ++c.row;
    }
  }
  return cells;
}

}  // namespace

std::vector<Slot> extract_slots(const GridGeometry& geometry,
                                std::size_t min_slot_length) {
  std::vector<Slot> slots;
  int number = 0;
  for (int r = 0; r < geometry.rows(); ++r) {
    for (int c = 0; c < geometry.cols(); ++c) {
      bool numbered = false;
      for (Direction d : {Direction::Across, Direction::Down}) {
        if (!starts_run(geometry, {r, c}, d)) continue;
        std::vector<Coord> cells = run_from(geometry, {r, c}, d);
        if (cells.size() < min_slot_length) continue;
        if (!numbered) {
          ++number;
          numbered = true;
        }
        slots.push_back(Slot{make_slot_id(number, d), number, d, {r, c},
                             std::move(cells)});
      }
    }
  }
  return slots;
}

std::vector<Crossing> compute_crossings(std::span<const Slot> slots) {
  std::map<Coord, std::vector<std::pair<std::size_t, std::size_t>>> users;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    for (std::size_t i = 0; i < slots[s].cells.size(); ++i) {
      users[slots[s].cells[i]].emplace_back(s, i);
    }
  }
  std::vector<Crossing> out;
  for (const auto& [cell, list] : users) {
    for (std::size_t x = 0; x < list.size(); ++x) {
      for (std::size_t y = x + 1; y < list.size(); ++y) {
        auto a = list[x];
        auto b = list[y];
        if (a.first == b.first) continue;
        if (a.first > b.first) std::swap(a, b);
        out.push_back({a.first, a.second, b.first, b.second});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Puzzle::Puzzle(GridGeometry geometry, std::vector<ClueEntry> clues,
               PuzzleOptions options)
    : geometry_(std::move(geometry)), options_(options) {
  if (geometry_.white_count() == 0) {
    throw ParseError("puzzle grid has no white cells");
  }
  slots_ = extract_slots(geometry_, options_.min_slot_length);

  std::map<Coord, int> coverage;
  for (const Slot& s : slots_) {
    for (const Coord& c : s.cells) ++coverage[c];
  }
  for (int r = 0; r < geometry_.rows(); ++r) {
    for (int c = 0; c < geometry_.cols(); ++c) {
      if (geometry_.is_blocked({r, c})) continue;
      int n = coverage.contains({r, c}) ? coverage.at({r, c}) : 0;
      if (n == 0) {
        throw ParseError("white cell " + to_string({r, c}) +
                         " is not covered by any slot of length >= " +
                         std::to_string(options_.min_slot_length));
      }
      if (options_.require_full_checking && n < 2) {
        throw ParseError("white cell " + to_string({r, c}) +
                         " is not shared by an Across and a Down slot");
      }
    }
  }
  crossings_ = compute_crossings(slots_);

  for (std::size_t i = 0; i < slots_.size(); ++i) index_.emplace(slots_[i].id, i);

  for (ClueEntry& clue : clues) {
    auto it = index_.find(clue.slot_id);
    if (it == index_.end()) {
      throw ParseError("clue " + clue.slot_id + " does not match any slot");
    }
    if (clues_.contains(clue.slot_id)) {
      throw ParseError("duplicate clue for " + clue.slot_id);
    }
    if (clue.answer) {
      std::string norm = normalize(*clue.answer);
      const Slot& s = slots_[it->second];
      if (norm.size() != s.length()) {
        throw ParseError("answer \"" + *clue.answer + "\" for " + clue.slot_id +
                         " has length " + std::to_string(norm.size()) +
                         ", slot length is " + std::to_string(s.length()));
      }
      clue.answer = std::move(norm);
    }
    std::string id = clue.slot_id;
    clues_.emplace(std::move(id), std::move(clue));
  }
  for (const Slot& s : slots_) {
    if (!clues_.contains(s.id)) clues_.emplace(s.id, ClueEntry{s.id, "", {}, {}});
  }

  for (const Crossing& x : crossings_) {
    const auto& a = clues_.at(slots_[x.slot_a].id).answer;
    const auto& b = clues_.at(slots_[x.slot_b].id).answer;
    if (a && b && (*a)[x.offset_a] != (*b)[x.offset_b]) {
      throw ParseError("answers for " + slots_[x.slot_a].id + " and " +
                       slots_[x.slot_b].id + " disagree at cell " +
                       to_string(slots_[x.slot_a].cells[x.offset_a]));
    }
  }
}

std::optional<std::size_t> Puzzle::slot_index(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Slot& Puzzle::slot(std::string_view id) const {
  auto idx = slot_index(id);
  if (!idx) throw std::out_of_range("unknown slot " + std::string(id));
  return slots_[*idx];
}

const ClueEntry& Puzzle::clue(std::string_view id) const {
  auto it = clues_.find(std::string(id));
  if (it == clues_.end()) throw std::out_of_range("unknown slot " + std::string(id));
  return it->second;
}

bool Puzzle::has_answer_key() const {
  return std::all_of(clues_.begin(), clues_.end(),
                     [](const auto& kv) { return kv.second.answer.has_value(); });
}

std::optional<std::map<Coord, char>> Puzzle::answer_grid() const {
  if (!has_answer_key()) return std::nullopt;
  std::map<Coord, char> out;
  for (const Slot& s : slots_) {
    const std::string& ans = *clues_.at(s.id).answer;
    for (std::size_t i = 0; i < s.cells.size(); ++i) out[s.cells[i]] = ans[i];
  }
  return out;
}

namespace {

bool is_cell_symbol(char ch) {
  return (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9');
}

std::vector<std::string> read_grid_row(const json& row, int r, int cols) {
  std::vector<std::string> cells;
  if (row.is_string()) {
    for (char ch : row.get<std::string>()) cells.emplace_back(1, ch);
  } else if (row.is_array()) {
    for (const json& cell : row) {
      if (!cell.is_string()) {
        throw ParseError("grid row " + std::to_string(r) +
                         " contains a non-string cell");
      }
      cells.push_back(cell.get<std::string>());
    }
  } else {
    throw ParseError("grid row " + std::to_string(r) +
                     " must be a string or an array of cells");
  }
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].size() > 1) {
      throw RebusError("cell " + to_string({r, static_cast<int>(c)}) +
                       " holds multiple characters \"" + cells[c] +
                       "\"; rebus puzzles are not supported");
    }
  }
  if (cells.size() != static_cast<std::size_t>(cols)) {
    throw ParseError("grid row " + std::to_string(r) + " has " +
                     std::to_string(cells.size()) + " cells, expected " +
                     std::to_string(cols));
  }
  return cells;
}

int positive_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() ||
      doc[key].get<long long>() <= 0) {
    throw ParseError(std::string("field \"") + key +
                     "\" must be a positive integer");
  }
  return doc[key].get<int>();
}

std::optional<std::string> optional_string(const json& obj, const char* key,
                                           const std::string& where) {
  if (!obj.contains(key) || obj[key].is_null()) return std::nullopt;
  if (!obj[key].is_string()) {
    throw ParseError(where + ": field \"" + key + "\" must be a string");
  }
  return obj[key].get<std::string>();
}

}  // namespace

Puzzle parse_puzzle(std::string_view document, PuzzleOptions options) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed puzzle document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("puzzle document must be a JSON object");
  if (doc.contains("rebus") && !doc["rebus"].is_null() && !doc["rebus"].empty()) {
    throw RebusError("puzzle declares rebus cells; rebus puzzles are not supported");
  }
  const int rows = positive_int(doc, "rows");
  const int cols = positive_int(doc, "cols");
  if (!doc.contains("grid") || !doc["grid"].is_array()) {
    throw ParseError("field \"grid\" must be an array of rows");
  }
  const json& grid = doc["grid"];
  if (grid.size() != static_cast<std::size_t>(rows)) {
    throw ParseError("grid has " + std::to_string(grid.size()) +
                     " rows, expected " + std::to_string(rows));
  }

  std::set<Coord> blocked;
  std::map<Coord, char> prefilled;
  for (int r = 0; r < rows; ++r) {
    std::vector<std::string> cells = read_grid_row(grid[r], r, cols);
    for (int c = 0; c < cols; ++c) {
      char ch = cells[c].empty() ? '\0' : cells[c][0];
      if (ch == '#') {
        blocked.insert({r, c});
      } else if (ch == '.') {
        continue;
      } else if (is_cell_symbol(ch)) {
        prefilled[{r, c}] = ch;
      } else {
        throw ParseError("cell " + to_string({r, c}) + " has invalid character '" +
                         cells[c] + "'");
      }
    }
  }

  std::vector<ClueEntry> clues;
  if (doc.contains("clues")) {
    if (!doc["clues"].is_array()) throw ParseError("field \"clues\" must be an array");
    for (std::size_t i = 0; i < doc["clues"].size(); ++i) {
      const json& item = doc["clues"][i];
      std::string where = "clue #" + std::to_string(i);
      if (!item.is_object()) throw ParseError(where + " must be an object");
      if (!item.contains("number") || !item["number"].is_number_integer()) {
        throw ParseError(where + ": field \"number\" must be an integer");
      }
      auto dir = optional_string(item, "direction", where);
      if (!dir) throw ParseError(where + ": missing field \"direction\"");
      std::string lower = *dir;
      std::transform(lower.begin(), lower.end(), lower.begin(),
                     [](unsigned char ch) { return std::tolower(ch); });
      Direction d;
      if (lower == "across") {
        d = Direction::Across;
      } else if (lower == "down") {
        d = Direction::Down;
      } else {
        throw ParseError(where + ": direction must be \"across\" or \"down\"");
      }
      ClueEntry entry;
      entry.slot_id = make_slot_id(item["number"].get<int>(), d);
      entry.text = optional_string(item, "text", where).value_or("");
      entry.answer = optional_string(item, "answer", where);
      entry.category = optional_string(item, "category", where);
      clues.push_back(std::move(entry));
    }
  }

  GridGeometry geometry(rows, cols, blocked);
  if (!prefilled.empty()) {
    // Fold grid letters into the clue answers before validation.
    std::vector<Slot> slots = extract_slots(geometry, options.min_slot_length);
    std::map<std::string, std::size_t> by_id;
    for (std::size_t i = 0; i < clues.size(); ++i) by_id.emplace(clues[i].slot_id, i);
    for (const Slot& s : slots) {
      std::string letters;
      bool complete = true;
      for (const Coord& c : s.cells) {
        auto it = prefilled.find(c);
        if (it == prefilled.end()) {
          complete = false;
          letters.push_back('.');
        } else {
          letters.push_back(it->second);
        }
      }
      auto it = by_id.find(s.id);
      ClueEntry* clue = it == by_id.end() ? nullptr : &clues[it->second];
      if (clue && clue->answer) {
        std::string ans = normalize(*clue->answer);
        if (ans.size() != s.length()) continue;  // reported by Puzzle
        for (std::size_t i = 0; i < letters.size(); ++i) {
          if (letters[i] != '.' && letters[i] != ans[i]) {
            throw ParseError("grid letter at " + to_string(s.cells[i]) +
                             " contradicts answer \"" + ans + "\" for " + s.id);
          }
        }
      } else if (complete) {
        if (clue) {
          clue->answer = letters;
        } else {
          by_id.emplace(s.id, clues.size());
          clues.push_back(ClueEntry{s.id, "", letters, {}});
        }
      }
    }
  }
  return Puzzle(std::move(geometry), std::move(clues), options);
}

std::string serialize_puzzle(const Puzzle& puzzle) {
  const GridGeometry& g = puzzle.geometry();
  std::vector<std::string> rows(static_cast<std::size_t>(g.rows()),
                                std::string(static_cast<std::size_t>(g.cols()), '.'));
  for (const Coord& c : g.blocked()) rows[c.row][c.col] = '#';
  for (const Slot& s : puzzle.slots()) {
    const auto& ans = puzzle.clue(s.id).answer;
    if (!ans) continue;
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
      rows[s.cells[i].row][s.cells[i].col] = (*ans)[i];
    }
  }

  nlohmann::ordered_json clues = nlohmann::ordered_json::array();
  for (const Slot& s : puzzle.slots()) {
    const ClueEntry& e = puzzle.clue(s.id);
    nlohmann::ordered_json item = {{"number", s.number},
                 {"direction", s.direction == Direction::Across ? "across" : "down"},
                 {"text", e.text}};
    if (e.answer) item["answer"] = *e.answer;
    if (e.category) item["category"] = *e.category;
    clues.push_back(std::move(item));
  }
  nlohmann::ordered_json doc = {{"rows", g.rows()}, {"cols", g.cols()}, {"grid", rows}, {"clues", clues}};
  return doc.dump(2) + "\n";
}

}  // namespace xword
