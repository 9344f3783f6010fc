#include "xword/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parallel.hpp"
#include "xword/candidates.hpp"
#include "xword/datagen.hpp"
#include "xword/grid.hpp"
#include "xword/metrics.hpp"
#include "xword/relaxation.hpp"
#include "xword/solver.hpp"
#include "xword/text_norm.hpp"

namespace xword {

namespace {

using ordered_json = nlohmann::ordered_json;

// Bad input files or arguments; reported with exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

Puzzle load_puzzle_file(const std::string& path, const PuzzleOptions& options) {
  try {
    return parse_puzzle(read_file(path), options);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

PredictionSet load_predictions_file(const std::string& path, const PredictionOptions& options) {
  try {
    return load_predictions(read_file(path), options);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Denominator parse_denominator(const std::string& s) {
  return s == "retained" ? Denominator::Retained : Denominator::Original;
}

std::string fixed4(double x) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(4) << x;
  return ss.str();
}

// '#' for blocks, the assigned symbol, or '_' for cells outside the solution.
std::vector<std::string> render_grid(const Puzzle& puzzle, const std::map<Coord, char>& assignment) {
  const GridGeometry& g = puzzle.geometry();
  std::vector<std::string> rows;
  for (int r = 0; r < g.rows(); ++r) {
    std::string row;
    for (int c = 0; c < g.cols(); ++c) {
      if (g.is_blocked({r, c})) {
        row.push_back('#');
      } else {
        auto it = assignment.find({r, c});
        row.push_back(it == assignment.end() ? '_' : it->second);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json score_json(const PuzzleScore& s) {
  return {{"acc_word", report_value(s.acc_word)},
          {"acc_char", report_value(s.acc_char)},
          {"rem_word", report_value(s.rem_word)},
          {"rem_char", report_value(s.rem_char)}};
}

ordered_json solution_json(const Puzzle& puzzle, const Solution& sol) {
  ordered_json answers = ordered_json::object();
  for (const Slot& s : puzzle.slots()) {
    auto it = sol.chosen.find(s.id);
    if (it != sol.chosen.end()) answers[s.id] = it->second;
  }
  return {{"grid", render_grid(puzzle, sol.assignment)}, {"answers", answers}};
}

void print_score_text(std::ostream& out, const PuzzleScore& s) {
  out << "acc_word " << fixed4(s.acc_word) << "  acc_char " << fixed4(s.acc_char)
      << "  rem_word " << fixed4(s.rem_word) << "  rem_char " << fixed4(s.rem_char) << "\n";
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string puzzle;
  std::string predictions;
  std::size_t k = 20;
  bool oracle = false;
  std::string denominator = "original";
  std::size_t min_slot_length = 2;
  std::size_t limit = 1;
  bool json = false;
  std::string out_path;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  PuzzleOptions popts;
  popts.min_slot_length = args.min_slot_length;
  const Puzzle puzzle = load_puzzle_file(args.puzzle, popts);
  PredictionOptions pred_opts;
  pred_opts.k = args.k;
  pred_opts.puzzle = &puzzle;
  const PredictionSet predictions = load_predictions_file(args.predictions, pred_opts);
  if (args.oracle && !puzzle.has_answer_key()) {
    throw InputError(args.puzzle + ": --oracle needs an answer for every slot");
  }

  const CandidateMap candidates = derive_all(puzzle, predictions);
  const RelaxedPuzzle relaxed = args.oracle ? oracle_filter(puzzle, candidates) : keep_all(puzzle);

  SolveOptions sopts;
  sopts.limit = args.limit == 0 ? kNoLimit : args.limit;
  SolveResult result;
  std::string nosat_reason;
  try {
    result = solve_relaxed(relaxed, candidates, sopts);
  } catch (const ModelError& e) {
    result.status = SolveStatus::Nosat;
    nosat_reason = e.what();
  }

  ordered_json doc;
  doc["status"] = std::string(to_string(result.status));
  if (!nosat_reason.empty()) doc["reason"] = nosat_reason;
  std::optional<PuzzleScore> score;
  if (result.status == SolveStatus::Sat) {
    const Solution& best = result.solutions.front();
    ordered_json first = solution_json(puzzle, best);
    doc["grid"] = first["grid"];
    doc["answers"] = first["answers"];
    if (puzzle.has_answer_key()) {
      score = score_puzzle(truth_solution(puzzle), best, relaxed, parse_denominator(args.denominator));
    }
  }
  doc["removed_slots"] = relaxed.removed_slots;
  doc["solution_count"] = result.solutions.size();
  if (args.limit != 1 && !result.solutions.empty()) {
    ordered_json all = ordered_json::array();
    for (const Solution& s : result.solutions) all.push_back(solution_json(puzzle, s));
    doc["solutions"] = all;
  }
  if (score) doc["scores"] = score_json(*score);

  const std::string text = doc.dump(2) + "\n";
  if (!args.out_path.empty()) write_file(args.out_path, text);
  if (args.json) {
    out << text;
  } else {
    if (result.status == SolveStatus::Sat) {
      for (const std::string& row : render_grid(puzzle, result.solutions.front().assignment)) {
        out << row << "\n";
      }
    }
    out << "status: " << to_string(result.status) << " (" << result.solutions.size()
        << (result.solutions.size() == 1 ? " solution" : " solutions") << ")\n";
    out << "removed slots: " << relaxed.removed_slots.size() << " of " << puzzle.slots().size() << "\n";
    if (score) print_score_text(out, *score);
  }
  if (!nosat_reason.empty()) err << "nosat: " << nosat_reason << "\n";
  return result.status == SolveStatus::Sat ? kExitOk : kExitNosat;
}

// ---------------------------------------------------------------------------

struct EvalQaArgs {
  std::string truth;
  std::string predictions;
  std::size_t k = 20;
  std::size_t jobs = 1;
  bool json = false;
};

std::vector<std::pair<std::string, std::string>> load_truth_file(const std::string& path) {
  const std::string text = read_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
  std::vector<std::pair<std::string, std::string>> out;
  if (doc.is_object() && doc.contains("grid")) {
    Puzzle puzzle = load_puzzle_file(path, {});
    for (const Slot& s : puzzle.slots()) {
      const auto& answer = puzzle.clue(s.id).answer;
      if (answer) out.emplace_back(s.id, *answer);
    }
    return out;
  }
  if (!doc.is_array()) {
    throw InputError(path + ": truth file must be a puzzle or an array of {\"id\", \"answer\"}");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    const char* key = item.contains("id") ? "id" : "slot";
    if (!item.is_object() || !item.contains(key) || !item[key].is_string() ||
        !item.contains("answer") || !item["answer"].is_string()) {
      throw InputError(path + ": entry #" + std::to_string(i) + " needs string fields \"id\" and \"answer\"");
    }
    std::string id = item[key].get<std::string>();
    if (!seen.insert(id).second) throw InputError(path + ": duplicate clue id " + id);
    out.emplace_back(std::move(id), normalize(item["answer"].get<std::string>()));
  }
  return out;
}

int cmd_eval_qa(const EvalQaArgs& args, std::ostream& out, std::ostream& err) {
  const auto truth = load_truth_file(args.truth);
  PredictionOptions pred_opts;
  pred_opts.k = args.k;
  const PredictionSet predictions = load_predictions_file(args.predictions, pred_opts);
  if (truth.empty()) throw InputError(args.truth + ": no clues with answers");

  std::size_t missing = 0;
  for (const auto& [id, answer] : truth) {
    if (!predictions.by_slot.contains(id)) {
      if (missing < 10) err << "warning: no predictions for " << id << "; scored as a miss\n";
      ++missing;
    }
  }
  if (missing > 10) err << "warning: " << missing << " clues have no predictions\n";

  const auto results = detail::parallel_map<QAResult>(truth.size(), args.jobs, [&](std::size_t i) {
    const auto& [id, answer] = truth[i];
    auto it = predictions.by_slot.find(id);
    std::vector<std::string> preds = it == predictions.by_slot.end() ? std::vector<std::string>{} : it->second;
    return score_clue(id, answer, std::move(preds), std::max<std::size_t>(args.k, kReportedK.back()));
  });
  MetricsReport report = aggregate(results, {});

  if (args.json) {
    out << to_json(report) << "\n";
  } else {
    out << "clues: " << report.qa->clues << "\n";
    out << std::left << std::setw(9) << "metric" << std::setw(9) << "top-1" << std::setw(9)
        << "top-10" << "top-20\n";
    auto row = [&](const char* name, const std::map<std::size_t, double>& m) {
      out << std::left << std::setw(9) << name;
      for (std::size_t k : kReportedK) out << std::setw(9) << fixed4(m.at(k));
      out << "\n";
    };
    row("EM", report.qa->em);
    row("EM_norm", report.qa->em_norm);
    row("In", report.qa->in);
    row("In_norm", report.qa->in_norm);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct EvalPuzzleArgs {
  std::vector<std::string> puzzles;
  std::vector<std::string> solutions;
  std::string denominator = "original";
  std::size_t min_slot_length = 2;
  std::size_t jobs = 1;
  bool json = false;
};

struct PuzzleEvalInput {
  Puzzle puzzle;
  RelaxedPuzzle relaxed;
  std::optional<Solution> predicted;  // empty for a nosat run
};

PuzzleEvalInput load_eval_pair(const std::string& puzzle_path, const std::string& solution_path,
                               const PuzzleOptions& popts) {
  Puzzle puzzle = load_puzzle_file(puzzle_path, popts);
  if (!puzzle.has_answer_key()) throw InputError(puzzle_path + ": puzzle has no answer key");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(solution_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(solution_path + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("status") || !doc["status"].is_string()) {
    throw InputError(solution_path + ": missing \"status\"");
  }
  std::set<std::string> removed;
  if (doc.contains("removed_slots")) {
    for (const auto& id : doc["removed_slots"]) {
      if (!id.is_string() || !puzzle.slot_index(id.get<std::string>())) {
        throw InputError(solution_path + ": unknown removed slot " + id.dump());
      }
      removed.insert(id.get<std::string>());
    }
  }
  RelaxedPuzzle relaxed = remove_slots(puzzle, removed);
  if (doc["status"] != "sat") return {std::move(puzzle), std::move(relaxed), std::nullopt};

  if (!doc.contains("grid") || !doc["grid"].is_array() ||
      doc["grid"].size() != static_cast<std::size_t>(puzzle.geometry().rows())) {
    throw InputError(solution_path + ": \"grid\" must have one string per puzzle row");
  }
  Solution predicted;
  const GridGeometry& g = puzzle.geometry();
  for (int r = 0; r < g.rows(); ++r) {
    const auto& row = doc["grid"][static_cast<std::size_t>(r)];
    if (!row.is_string() || row.get<std::string>().size() != static_cast<std::size_t>(g.cols())) {
      throw InputError(solution_path + ": grid row " + std::to_string(r) + " has the wrong width");
    }
    const std::string cells = row.get<std::string>();
    for (int c = 0; c < g.cols(); ++c) {
      const char ch = cells[static_cast<std::size_t>(c)];
      if (g.is_blocked({r, c}) != (ch == '#')) {
        throw InputError(solution_path + ": cell " + to_string(Coord{r, c}) + " disagrees with the puzzle's blocks");
      }
      if (ch == '#' || ch == '_') continue;
      if (symbol_index(ch) < 0) {
        throw InputError(solution_path + ": cell " + to_string(Coord{r, c}) + " has invalid symbol '" + ch + "'");
      }
      predicted.assignment.emplace(Coord{r, c}, ch);
    }
  }
  return {std::move(puzzle), std::move(relaxed), std::move(predicted)};
}

int cmd_eval_puzzle(const EvalPuzzleArgs& args, std::ostream& out, std::ostream&) {
  if (args.puzzles.size() != args.solutions.size()) {
    throw InputError("give one --solution per --puzzle");
  }
  PuzzleOptions popts;
  popts.min_slot_length = args.min_slot_length;
  std::vector<PuzzleEvalInput> inputs;
  for (std::size_t i = 0; i < args.puzzles.size(); ++i) {
    inputs.push_back(load_eval_pair(args.puzzles[i], args.solutions[i], popts));
  }
  const Denominator denom = parse_denominator(args.denominator);

  std::vector<PuzzleScore> scores;
  try {
    scores = detail::parallel_map<PuzzleScore>(inputs.size(), args.jobs, [&](std::size_t i) {
      const PuzzleEvalInput& in = inputs[i];
      const Solution truth = truth_solution(in.puzzle);
      if (in.predicted) return score_puzzle(truth, *in.predicted, in.relaxed, denom);
      // A nosat run fills nothing: removal as reported, zero accuracy.
      Solution placeholder;
      for (const Coord& c : in.relaxed.retained_cells()) placeholder.assignment.emplace(c, truth.assignment.at(c));
      PuzzleScore s = score_puzzle(truth, placeholder, in.relaxed, denom);
      s.acc_char = 0.0;
      s.acc_word = 0.0;
      return s;
    });
  } catch (const ScoreError& e) {
    throw InputError(e.what());
  }
  MetricsReport report = aggregate({}, scores);

  if (args.json) {
    ordered_json doc = ordered_json::parse(to_json(report));
    ordered_json per = ordered_json::array();
    for (std::size_t i = 0; i < scores.size(); ++i) {
      ordered_json item = {{"puzzle", args.puzzles[i]}};
      item.update(score_json(scores[i]));
      per.push_back(item);
    }
    doc["per_puzzle"] = per;
    out << doc.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < scores.size(); ++i) {
      out << args.puzzles[i] << ": ";
      print_score_text(out, scores[i]);
    }
    out << "macro average over " << scores.size() << " puzzle(s): ";
    print_score_text(out, *report.puzzle);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  int rows = 15;
  int cols = 15;
  double block_fraction = 0.18;
  std::string symmetry = "rot180";
  std::string lexicon;
  double truth_p = 1.0;
  std::size_t distractors = 5;
  std::uint64_t seed = 0;
  std::size_t min_slot_length = 3;
  bool allow_unchecked = false;
  std::string out_puzzle;
  std::string out_predictions;
  bool json = false;
};

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream&) {
  GenSpec spec;
  spec.rows = args.rows;
  spec.cols = args.cols;
  spec.block_fraction = args.block_fraction;
  spec.symmetry = args.symmetry == "none" ? Symmetry::None : Symmetry::Rotational180;
  spec.truth_inclusion_p = args.truth_p;
  spec.distractors_per_slot = args.distractors;
  spec.seed = args.seed;
  spec.min_slot_length = args.min_slot_length;
  spec.full_checking = !args.allow_unchecked;
  try {
    spec.validate();
    spec.lexicon = std::make_shared<const Lexicon>(load_lexicon(args.lexicon));
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }

  GeneratedInstance inst = generate_instance(spec);
  const std::string puzzle_text = serialize_puzzle(inst.puzzle);
  const std::string predictions_text = serialize_predictions(inst.emitted.predictions);
  if (!args.out_puzzle.empty()) write_file(args.out_puzzle, puzzle_text);
  if (!args.out_predictions.empty()) write_file(args.out_predictions, predictions_text);

  const std::size_t slots = inst.puzzle.slots().size();
  if (args.out_puzzle.empty() && args.out_predictions.empty()) {
    ordered_json doc = {{"puzzle", ordered_json::parse(puzzle_text)},
                        {"predictions", ordered_json::parse(predictions_text)}};
    out << doc.dump(2) << "\n";
  } else if (args.json) {
    ordered_json doc = {{"rows", args.rows},
                        {"cols", args.cols},
                        {"white_cells", inst.puzzle.geometry().white_count()},
                        {"slots", slots},
                        {"truth_excluded", inst.emitted.truth_excluded.size()}};
    out << doc.dump(2) << "\n";
  } else {
    out << "generated " << args.rows << "x" << args.cols << " puzzle: " << slots << " slots, "
        << inst.puzzle.geometry().white_count() << " white cells, "
        << inst.emitted.truth_excluded.size() << " slots without their answer\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SplitArgs {
  std::string text;
  std::string lexicon;
  bool json = false;
};

int cmd_split(const SplitArgs& args, std::ostream& out, std::ostream&) {
  Lexicon lexicon;
  try {
    lexicon = load_lexicon(args.lexicon);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  const std::string merged = normalize(args.text);
  Segmentation seg = split_answer(merged, lexicon);
  if (args.json) {
    ordered_json doc = {{"input", merged}, {"words", seg.words}, {"segmented", seg.segmented}};
    out << doc.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < seg.words.size(); ++i) out << (i ? " " : "") << seg.words[i];
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crossword constraint solver and evaluation harness", "xword"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "xword 1.0");

  const std::vector<std::string> denominators = {"original", "retained"};

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Fill a puzzle from ranked predictions and score it");
  solve_cmd->add_option("--puzzle", solve_args.puzzle, "Puzzle JSON")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--predictions", solve_args.predictions, "Predictions JSON")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--k", solve_args.k, "Use the top-k predictions per slot")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--oracle", solve_args.oracle, "Drop slots whose candidates miss the true answer");
  solve_cmd->add_option("--denominator", solve_args.denominator, "Accuracy denominator")->check(CLI::IsMember(denominators));
  solve_cmd->add_option("--min-slot-length", solve_args.min_slot_length, "Shortest run that forms a slot")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--limit", solve_args.limit, "Solutions to enumerate (0 = all)");
  solve_cmd->add_option("--out", solve_args.out_path, "Also write the JSON result here");
  solve_cmd->add_flag("--json", solve_args.json, "JSON output on stdout");
  std::size_t ignored_jobs = 1;
  solve_cmd->add_option("--jobs", ignored_jobs, "Worker threads (a single puzzle is solved on one thread)");

  EvalQaArgs qa_args;
  auto* qa_cmd = app.add_subcommand("eval-qa", "Score ranked clue predictions (EM / In at top-1, 10, 20)");
  qa_cmd->add_option("--truth", qa_args.truth, "Puzzle JSON or [{\"id\", \"answer\"}]")->required()->check(CLI::ExistingFile);
  qa_cmd->add_option("--predictions", qa_args.predictions, "Predictions JSON")->required()->check(CLI::ExistingFile);
  qa_cmd->add_option("--k", qa_args.k, "Predictions kept per clue")->check(CLI::PositiveNumber);
  qa_cmd->add_option("--jobs", qa_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  qa_cmd->add_flag("--json", qa_args.json, "JSON output");

  EvalPuzzleArgs ep_args;
  auto* ep_cmd = app.add_subcommand("eval-puzzle", "Score solve output against answer keys (macro average)");
  ep_cmd->add_option("--puzzle", ep_args.puzzles, "Puzzle JSON with answers (repeatable)")->required()->check(CLI::ExistingFile);
  ep_cmd->add_option("--solution", ep_args.solutions, "Output of `solve --json` (repeatable)")->required()->check(CLI::ExistingFile);
  ep_cmd->add_option("--denominator", ep_args.denominator, "Accuracy denominator")->check(CLI::IsMember(denominators));
  ep_cmd->add_option("--min-slot-length", ep_args.min_slot_length, "Shortest run that forms a slot")->check(CLI::PositiveNumber);
  ep_cmd->add_option("--jobs", ep_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  ep_cmd->add_flag("--json", ep_args.json, "JSON output");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic puzzle and noisy predictions");
  gen_cmd->add_option("--lexicon", gen_args.lexicon, "WORD<TAB>frequency file")->required()->check(CLI::ExistingFile);
  gen_cmd->add_option("--rows", gen_args.rows)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--cols", gen_args.cols)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--block-fraction", gen_args.block_fraction, "Target fraction of black cells");
  gen_cmd->add_option("--symmetry", gen_args.symmetry)->check(CLI::IsMember({"none", "rot180"}));
  gen_cmd->add_option("--truth-p", gen_args.truth_p, "Probability a slot's list contains its answer");
  gen_cmd->add_option("--distractors", gen_args.distractors, "Wrong predictions per slot");
  gen_cmd->add_option("--seed", gen_args.seed, "Seed for every random choice");
  gen_cmd->add_option("--min-slot-length", gen_args.min_slot_length)->check(CLI::PositiveNumber);
  gen_cmd->add_flag("--allow-unchecked", gen_args.allow_unchecked, "Permit cells in only one slot");
  gen_cmd->add_option("--out-puzzle", gen_args.out_puzzle, "Write the puzzle JSON here");
  gen_cmd->add_option("--out-predictions", gen_args.out_predictions, "Write the predictions JSON here");
  gen_cmd->add_flag("--json", gen_args.json, "JSON summary");
  std::size_t gen_jobs = 1;
  gen_cmd->add_option("--jobs", gen_jobs, "Worker threads (generation is sequential)");

  SplitArgs split_args;
  auto* split_cmd = app.add_subcommand("split", "Split a merged answer into dictionary words");
  split_cmd->add_option("text", split_args.text, "Merged answer, e.g. VERYFAST")->required();
  split_cmd->add_option("--lexicon", split_args.lexicon, "WORD<TAB>frequency file")->required()->check(CLI::ExistingFile);
  split_cmd->add_flag("--json", split_args.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args, out, err);
    if (*qa_cmd) return cmd_eval_qa(qa_args, out, err);
    if (*ep_cmd) return cmd_eval_puzzle(ep_args, out, err);
    if (*gen_cmd) return cmd_gen(gen_args, out, err);
    if (*split_cmd) return cmd_split(split_args, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace xword
