#include "xword/solver.hpp"

#include <algorithm>
#include <deque>

namespace xword {

SymbolSet SymbolSet::of(std::string_view symbols) {
  SymbolSet out;
  for (char ch : symbols) {
    int i = symbol_index(ch);
    if (i < 0) throw std::invalid_argument(std::string("not a cell symbol: ") + ch);
    out.insert(i);
  }
  return out;
}

std::string SymbolSet::to_string() const {
  std::string out;
  for_each([&](int i) { out.push_back(symbol_char(i)); });
  return out;
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Sat:
      return "sat";
    case SolveStatus::Nosat:
      return "nosat";
    case SolveStatus::Aborted:
      return "aborted";
  }
  return "unknown";
}

namespace detail {

using Bits = ConstraintModel::Bits;

struct CandidatePool {
  std::size_t length = 0;
  std::vector<std::string> words;
  std::vector<Bits> with_symbol;    // [offset * kAlphabetSize + symbol]
  std::vector<SymbolSet> support;   // per offset, over all words

  const Bits& bits(std::size_t offset, int symbol) const {
    return with_symbol[offset * kAlphabetSize + static_cast<std::size_t>(symbol)];
  }
};

struct ModelSlot {
  std::string id;
  std::size_t pool = 0;
  std::size_t support_base = 0;
  std::vector<std::size_t> vars;
};

struct ModelStructure {
  std::vector<Coord> cells;
  std::map<Coord, std::size_t> var_of;
  std::vector<CandidatePool> pools;
  std::vector<ModelSlot> slots;
  std::vector<std::vector<std::size_t>> slots_of_var;
};

namespace {

CandidatePool make_pool(std::vector<std::string> words, std::size_t length) {
  CandidatePool pool;
  pool.length = length;
  pool.words = std::move(words);
  pool.with_symbol.assign(length * kAlphabetSize, Bits(pool.words.size()));
  pool.support.assign(length, SymbolSet{});
  for (std::size_t j = 0; j < pool.words.size(); ++j) {
    for (std::size_t i = 0; i < length; ++i) {
      int sym = symbol_index(pool.words[j][i]);
      pool.with_symbol[i * kAlphabetSize + static_cast<std::size_t>(sym)].set(j);
      pool.support[i].insert(sym);
    }
  }
  return pool;
}

}  // namespace
}  // namespace detail

std::size_t ConstraintModel::variable_count() const { return structure_->cells.size(); }

Coord ConstraintModel::variable_cell(std::size_t var) const { return structure_->cells.at(var); }

SymbolSet ConstraintModel::domain_at(Coord cell) const {
  return domains_[structure_->var_of.at(cell)];
}

std::size_t ConstraintModel::slot_count() const { return structure_->slots.size(); }

const std::string& ConstraintModel::slot_id(std::size_t slot) const {
  return structure_->slots.at(slot).id;
}

std::span<const std::size_t> ConstraintModel::slot_variables(std::size_t slot) const {
  return structure_->slots.at(slot).vars;
}

std::size_t ConstraintModel::candidate_count(std::size_t slot) const {
  return structure_->pools[structure_->slots.at(slot).pool].words.size();
}

const std::string& ConstraintModel::candidate(std::size_t slot, std::size_t index) const {
  return structure_->pools[structure_->slots.at(slot).pool].words.at(index);
}

std::vector<std::size_t> ConstraintModel::surviving_indices(std::size_t slot) const {
  std::vector<std::size_t> out;
  out.reserve(alive_count_[slot]);
  const Bits& alive = alive_[slot];
  for (auto i = alive.find_first(); i != Bits::npos; i = alive.find_next(i)) out.push_back(i);
  return out;
}

std::vector<std::string> ConstraintModel::surviving(std::size_t slot) const {
  std::vector<std::string> out;
  for (std::size_t i : surviving_indices(slot)) out.push_back(candidate(slot, i));
  return out;
}

SymbolSet& ConstraintModel::support(std::size_t slot, std::size_t offset) {
  return support_[structure_->slots[slot].support_base + offset];
}

void ConstraintModel::assign(std::size_t slot, std::size_t index) {
  const auto& info = structure_->slots.at(slot);
  const std::string& word = structure_->pools[info.pool].words.at(index);
  Bits& alive = alive_[slot];
  if (!alive.test(index)) {
    inconsistent_ = true;
    return;
  }
  alive.reset();
  alive.set(index);
  alive_count_[slot] = 1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    support(slot, i) = SymbolSet::single(symbol_index(word[i]));
  }
  assigned_[slot] = 1;
  dirty_[slot] = 1;
}

ConstraintModel build_model(const Puzzle& puzzle, const CandidateMap& candidates,
                            const std::set<std::string>& scope) {
  auto structure = std::make_shared<detail::ModelStructure>();
  std::map<std::vector<std::string>, std::size_t> pool_of;

  std::vector<const Slot*> in_scope;
  for (const Slot& s : puzzle.slots()) {
    if (scope.contains(s.id)) in_scope.push_back(&s);
  }
  for (const std::string& id : scope) {
    if (!puzzle.slot_index(id)) throw ModelError("scope names unknown slot " + id);
  }

  for (const Slot* s : in_scope) {
    for (const Coord& c : s->cells) structure->var_of.emplace(c, 0);
  }
  for (auto& [cell, var] : structure->var_of) {
    var = structure->cells.size();
    structure->cells.push_back(cell);
  }
  structure->slots_of_var.resize(structure->cells.size());

  std::size_t support_total = 0;
  for (const Slot* s : in_scope) {
    auto it = candidates.find(s->id);
    if (it == candidates.end() || it->second.empty()) {
      throw ModelError("slot " + s->id +
                       " has no candidates; remove it with the oracle filter "
                       "(relaxation) before building a model");
    }
    std::vector<std::string> words;
    std::set<std::string_view> seen;
    for (const Candidate& c : it->second.candidates) {
      bool ok = c.text.size() == s->length() &&
                std::all_of(c.text.begin(), c.text.end(),
                            [](char ch) { return symbol_index(ch) >= 0; });
      if (!ok) {
        throw ModelError("candidate \"" + c.text + "\" does not fit slot " + s->id +
                         " of length " + std::to_string(s->length()));
      }
      if (seen.insert(c.text).second) words.push_back(c.text);
    }
    auto [pit, inserted] = pool_of.try_emplace(words, structure->pools.size());
    if (inserted) structure->pools.push_back(detail::make_pool(std::move(words), s->length()));

    detail::ModelSlot ms;
    ms.id = s->id;
    ms.pool = pit->second;
    ms.support_base = support_total;
    support_total += s->length();
    for (const Coord& c : s->cells) {
      std::size_t v = structure->var_of.at(c);
      ms.vars.push_back(v);
      structure->slots_of_var[v].push_back(structure->slots.size());
    }
    structure->slots.push_back(std::move(ms));
  }

  ConstraintModel model;
  const std::size_t n = structure->slots.size();
  model.alive_.reserve(n);
  model.support_.reserve(support_total);
  for (const auto& ms : structure->slots) {
    const auto& pool = structure->pools[ms.pool];
    model.alive_.emplace_back(pool.words.size());
    model.alive_.back().set();
    model.alive_count_.push_back(pool.words.size());
    model.support_.insert(model.support_.end(), pool.support.begin(), pool.support.end());
  }
  model.domains_.assign(structure->cells.size(), SymbolSet::all());
  model.assigned_.assign(n, 0);
  model.dirty_.assign(n, 1);
  model.structure_ = std::move(structure);
  return model;
}

ConstraintModel build_model(const Puzzle& puzzle, const CandidateMap& candidates) {
  std::set<std::string> scope;
  for (const Slot& s : puzzle.slots()) scope.insert(s.id);
  return build_model(puzzle, candidates, scope);
}

bool propagate(ConstraintModel& model) {
  if (model.inconsistent_) return false;
  const detail::ModelStructure& st = *model.structure_;
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < model.dirty_.size(); ++s) {
    if (model.dirty_[s]) queue.push_back(s);
  }

  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    model.dirty_[s] = 0;
    const detail::ModelSlot& ms = st.slots[s];
    const detail::CandidatePool& pool = st.pools[ms.pool];
    ConstraintModel::Bits& alive = model.alive_[s];

    bool pruned = false;
    for (std::size_t i = 0; i < ms.vars.size(); ++i) {
      SymbolSet gone = model.support(s, i) - model.domains_[ms.vars[i]];
      gone.for_each([&](int sym) { alive -= pool.bits(i, sym); });
      pruned = pruned || !gone.empty();
    }
    if (pruned) {
      model.alive_count_[s] = alive.count();
      if (model.alive_count_[s] == 0) {
        model.inconsistent_ = true;
        return false;
      }
      for (std::size_t i = 0; i < ms.vars.size(); ++i) {
        SymbolSet kept;
        model.support(s, i).for_each([&](int sym) {
          if (alive.intersects(pool.bits(i, sym))) kept.insert(sym);
        });
        model.support(s, i) = kept;
      }
    }

    for (std::size_t i = 0; i < ms.vars.size(); ++i) {
      const std::size_t v = ms.vars[i];
      SymbolSet narrowed = model.domains_[v] & model.support(s, i);
      if (narrowed == model.domains_[v]) continue;
      if (narrowed.empty()) {
        model.inconsistent_ = true;
        return false;
      }
      model.domains_[v] = narrowed;
      for (std::size_t t : st.slots_of_var[v]) {
        if (t != s && !model.dirty_[t]) {
          model.dirty_[t] = 1;
          queue.push_back(t);
        }
      }
    }
  }
  return true;
}

namespace {

class Search {
 public:
  explicit Search(const SolveOptions& options) : options_(options) {}

  void run(const ConstraintModel& root) {
    ConstraintModel start = root;
    ++result_.nodes;
    if (!propagate(start)) {
      result_.exhausted = true;
      return;
    }
    descend(start);
    result_.exhausted = !stopped_;
  }

  SolveResult take() {
    if (!result_.solutions.empty()) {
      result_.status = SolveStatus::Sat;
    } else {
      result_.status = result_.exhausted ? SolveStatus::Nosat : SolveStatus::Aborted;
    }
    return std::move(result_);
  }

 private:
  void descend(const ConstraintModel& node) {
    std::size_t pick = kNoLimit;
    for (std::size_t s = 0; s < node.slot_count(); ++s) {
      if (node.is_assigned(s)) continue;
      if (pick == kNoLimit || node.surviving_count(s) < node.surviving_count(pick)) pick = s;
    }
    if (pick == kNoLimit) {
      record(node);
      return;
    }
    for (std::size_t idx : node.surviving_indices(pick)) {
      if (stopped_) return;
      if (options_.node_budget != 0 && result_.nodes >= options_.node_budget) {
        stopped_ = true;
        return;
      }
      ++result_.nodes;
      ConstraintModel child = node;
      child.assign(pick, idx);
      if (propagate(child)) descend(child);
    }
  }

  void record(const ConstraintModel& node) {
    Solution sol;
    for (std::size_t v = 0; v < node.variable_count(); ++v) {
      sol.assignment.emplace(node.variable_cell(v), symbol_char(node.domain(v).first()));
    }
    for (std::size_t s = 0; s < node.slot_count(); ++s) {
      sol.chosen.emplace(node.slot_id(s), node.candidate(s, node.surviving_indices(s).front()));
    }
    result_.solutions.push_back(std::move(sol));
    if (result_.solutions.size() >= options_.limit) stopped_ = true;
  }

  SolveOptions options_;
  SolveResult result_;
  bool stopped_ = false;
};

}  // namespace

SolveResult solve(const ConstraintModel& model, const SolveOptions& options) {
  if (options.limit == 0) throw std::invalid_argument("solve limit must be at least 1");
  Search search(options);
  search.run(model);
  return search.take();
}

}  // namespace xword
