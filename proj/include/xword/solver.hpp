#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "xword/candidates.hpp"
#include "xword/grid.hpp"

namespace xword {

/// Cell alphabet: A-Z then 0-9.
inline constexpr std::size_t kAlphabetSize = 36;

/// Index of `ch` in the cell alphabet, or -1.
constexpr int symbol_index(char ch) {
  if (ch >= 'A' && ch <= 'Z') return ch - 'A';
  if (ch >= '0' && ch <= '9') return 26 + (ch - '0');
  return -1;
}

constexpr char symbol_char(int index) {
  return index < 26 ? static_cast<char>('A' + index)
                    : static_cast<char>('0' + (index - 26));
}

/// Subset of the cell alphabet.
class SymbolSet {
 public:
  constexpr SymbolSet() = default;
  static constexpr SymbolSet all() { return SymbolSet((std::uint64_t{1} << kAlphabetSize) - 1); }
  static constexpr SymbolSet single(int index) { return SymbolSet(std::uint64_t{1} << index); }
  static SymbolSet of(std::string_view symbols);

  constexpr bool contains(int index) const { return (bits_ >> index) & 1U; }
  bool contains(char ch) const {
    int i = symbol_index(ch);
    return i >= 0 && contains(i);
  }
  constexpr void insert(int index) { bits_ |= std::uint64_t{1} << index; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }
  /// Symbols in alphabet order.
  std::string to_string() const;

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  friend constexpr SymbolSet operator&(SymbolSet a, SymbolSet b) { return SymbolSet(a.bits_ & b.bits_); }
  friend constexpr SymbolSet operator|(SymbolSet a, SymbolSet b) { return SymbolSet(a.bits_ | b.bits_); }
  // Set difference.
  friend constexpr SymbolSet operator-(SymbolSet a, SymbolSet b) { return SymbolSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(SymbolSet, SymbolSet) = default;

 private:
  constexpr explicit SymbolSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Raised when a model cannot be built, e.g. a slot has no candidates.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
struct ModelStructure;
}

/// Finite-domain model of a puzzle fill: one variable per white cell of the
/// in-scope slots, and per slot a disjunction over its candidate words.
/// Crossing slots share variables. Copies share the immutable structure and
/// own their search state.
class ConstraintModel {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  std::size_t variable_count() const;
  Coord variable_cell(std::size_t var) const;
  SymbolSet domain(std::size_t var) const { return domains_[var]; }
  /// Domain of the variable at `cell`; throws std::out_of_range if not in scope.
  SymbolSet domain_at(Coord cell) const;

  std::size_t slot_count() const;
  const std::string& slot_id(std::size_t slot) const;
  std::span<const std::size_t> slot_variables(std::size_t slot) const;
  std::size_t candidate_count(std::size_t slot) const;
  std::size_t surviving_count(std::size_t slot) const { return alive_count_[slot]; }
  std::vector<std::string> surviving(std::size_t slot) const;
  std::vector<std::size_t> surviving_indices(std::size_t slot) const;
  const std::string& candidate(std::size_t slot, std::size_t index) const;
  bool is_assigned(std::size_t slot) const { return assigned_[slot] != 0; }
  bool is_inconsistent() const { return inconsistent_; }

  /// Commits `slot` to its candidate `index`; takes effect on the next
  /// propagate().
  void assign(std::size_t slot, std::size_t index);

 private:
  friend ConstraintModel build_model(const Puzzle&, const CandidateMap&,
                                     const std::set<std::string>&);
  friend bool propagate(ConstraintModel&);

  SymbolSet& support(std::size_t slot, std::size_t offset);

  std::shared_ptr<const detail::ModelStructure> structure_;
  std::vector<Bits> alive_;
  std::vector<std::size_t> alive_count_;
  std::vector<SymbolSet> domains_;
  std::vector<SymbolSet> support_;  // letters still offered, per (slot, offset)
  std::vector<char> assigned_;
  std::vector<char> dirty_;
  bool inconsistent_ = false;
};

/// Model over the slots named in `scope` (all slots by default).
/// Throws ModelError when an in-scope slot has no candidates or a candidate
/// does not fit its slot.
ConstraintModel build_model(const Puzzle& puzzle, const CandidateMap& candidates,
                            const std::set<std::string>& scope);
ConstraintModel build_model(const Puzzle& puzzle, const CandidateMap& candidates);

/// Runs word-level arc consistency to a fixpoint: candidates using a symbol
/// outside a cell's domain are dropped, and each cell's domain shrinks to the
/// symbols still offered by every slot through it. Never removes a value that
/// belongs to a solution. Returns false when a domain or candidate list empties.
bool propagate(ConstraintModel& model);

struct Solution {
  std::map<Coord, char> assignment;
  std::map<std::string, std::string> chosen;  // slot id -> candidate

  friend auto operator<=>(const Solution&, const Solution&) = default;
};

enum class SolveStatus { Sat, Nosat, Aborted };

std::string_view to_string(SolveStatus status);

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

struct SolveOptions {
  std::size_t limit = 1;           // stop after this many solutions; must be >= 1
  std::uint64_t node_budget = 0;   // 0 = unbounded
};

struct SolveResult {
  SolveStatus status = SolveStatus::Nosat;
  std::vector<Solution> solutions;
  std::uint64_t nodes = 0;
  bool exhausted = false;  // the whole search space was explored
};

/// Depth-first search over whole-slot assignments. Branches on the unassigned
/// slot with the fewest surviving candidates (lowest index on ties), tries
/// candidates in stored order and propagates after each choice.
/// Aborted is reported only when the node budget ran out before any solution.
SolveResult solve(const ConstraintModel& model, const SolveOptions& options = {});

}  // namespace xword
