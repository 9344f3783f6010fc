#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xword {

struct Coord {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Coord&, const Coord&) = default;
};

std::string to_string(Coord c);

enum class Direction { Across, Down };

std::string_view to_string(Direction d);

/// Raised for any malformed puzzle document or inconsistent puzzle content.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a puzzle uses multi-character (rebus) cells.
class RebusError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Rectangular grid with a set of black cells.
///
/// An all-black geometry is representable (slot extraction on it is simply
/// empty); a Puzzle additionally requires at least one white cell.
class GridGeometry {
 public:
  GridGeometry(int rows, int cols, const std::set<Coord>& blocked = {});

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool in_bounds(Coord c) const {
    return c.row >= 0 && c.row < rows_ && c.col >= 0 && c.col < cols_;
  }
  // Off-grid coordinates count as blocked.
  bool is_blocked(Coord c) const {
    return !in_bounds(c) || blocked_[index(c)] != 0;
  }
  bool is_white(Coord c) const { return !is_blocked(c); }
  std::size_t white_count() const;
  std::set<Coord> blocked() const;

  friend bool operator==(const GridGeometry&, const GridGeometry&) = default;

 private:
  std::size_t index(Coord c) const {
    return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c.col);
  }

  int rows_;
  int cols_;
  std::vector<unsigned char> blocked_;
};

struct Slot {
  std::string id;  // "17-Across"
  int number = 0;
  Direction direction = Direction::Across;
  Coord start;
  std::vector<Coord> cells;

  std::size_t length() const { return cells.size(); }

  friend bool operator==(const Slot&, const Slot&) = default;
};

std::string make_slot_id(int number, Direction d);

/// Maximal white runs of at least `min_slot_length` cells, ordered by
/// (row, col, direction) and numbered in standard crossword order.
std::vector<Slot> extract_slots(const GridGeometry& geometry,
                                std::size_t min_slot_length = 2);

/// Shared cell between two distinct slots; indices refer to the slot list the
/// crossing was computed from, with slot_a < slot_b.
struct Crossing {
  std::size_t slot_a = 0;
  std::size_t offset_a = 0;
  std::size_t slot_b = 0;
  std::size_t offset_b = 0;

  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

std::vector<Crossing> compute_crossings(std::span<const Slot> slots);

struct ClueEntry {
  std::string slot_id;
  std::string text;
  std::optional<std::string> answer;  // normalized
  std::optional<std::string> category;

  friend bool operator==(const ClueEntry&, const ClueEntry&) = default;
};

struct PuzzleOptions {
  std::size_t min_slot_length = 2;
  // Every white cell must be covered by both an Across and a Down slot.
  bool require_full_checking = false;
};

/// Validated, immutable puzzle: geometry plus derived slots and crossings.
class Puzzle {
 public:
  /// Derives slots and crossings from `geometry`. Clue answers are normalized
  /// and checked against slot lengths and against each other at crossings.
  /// Slots without a clue entry receive one with empty text. Throws ParseError.
  Puzzle(GridGeometry geometry, std::vector<ClueEntry> clues,
         PuzzleOptions options = {});

  const GridGeometry& geometry() const { return geometry_; }
  const std::vector<Slot>& slots() const { return slots_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::map<std::string, ClueEntry>& clues() const { return clues_; }
  std::size_t min_slot_length() const { return options_.min_slot_length; }
  const PuzzleOptions& options() const { return options_; }

  std::optional<std::size_t> slot_index(std::string_view id) const;
  const Slot& slot(std::string_view id) const;  // throws std::out_of_range
  const ClueEntry& clue(std::string_view id) const;

  /// True when every slot carries a ground-truth answer.
  bool has_answer_key() const;

  /// Symbols of the answer key by cell; empty optional without a full key.
  std::optional<std::map<Coord, char>> answer_grid() const;

  friend bool operator==(const Puzzle& a, const Puzzle& b) {
    return a.geometry_ == b.geometry_ && a.slots_ == b.slots_ &&
           a.clues_ == b.clues_;
  }

 private:
  GridGeometry geometry_;
  PuzzleOptions options_;
  std::vector<Slot> slots_;
  std::vector<Crossing> crossings_;
  std::map<std::string, ClueEntry> clues_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Parses the JSON puzzle format. Clue numbering is recomputed from the grid;
/// pre-filled grid letters supply answers for slots whose cells they cover.
Puzzle parse_puzzle(std::string_view document, PuzzleOptions options = {});

/// Writes the JSON puzzle format (grid letters filled from the answer key).
std::string serialize_puzzle(const Puzzle& puzzle);

}  // namespace xword
