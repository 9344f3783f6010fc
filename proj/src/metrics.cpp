#include "xword/metrics.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "xword/text_norm.hpp"

namespace xword {

namespace {

template <typename Match>
bool any_of_top_k(std::span<const std::string> predictions, std::size_t k,
                  bool normalized, Match match) {
  const std::size_t n = std::min(k, predictions.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (normalized ? match(normalize(predictions[i])) : match(predictions[i])) return true;
  }
  return false;
}

}  // namespace

bool em_at_k(std::string_view truth, std::span<const std::string> predictions,
             std::size_t k, bool normalized) {
  return any_of_top_k(predictions, k, normalized,
                      [&](const std::string& p) { return p == truth; });
}

bool in_at_k(std::string_view truth, std::span<const std::string> predictions,
             std::size_t k, bool normalized) {
  return any_of_top_k(predictions, k, normalized, [&](const std::string& p) {
    return p.find(truth) != std::string::npos;
  });
}

ClueFlags QAResult::at(std::size_t k) const {
  if (flags.empty() || k == 0) return {};
  return flags[std::min(k, flags.size()) - 1];
}

QAResult score_clue(std::string clue_id, std::string truth,
                    std::vector<std::string> predictions, std::size_t k_max) {
  QAResult out{std::move(clue_id), std::move(truth), std::move(predictions), {}};
  out.flags.reserve(k_max);
  ClueFlags running;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (k <= out.predictions.size()) {
      const std::string& raw = out.predictions[k - 1];
      const std::string norm = normalize(raw);
      running.em = running.em || raw == out.truth;
      running.em_norm = running.em_norm || norm == out.truth;
      running.in = running.in || raw.find(out.truth) != std::string::npos;
      running.in_norm = running.in_norm || norm.find(out.truth) != std::string::npos;
    }
    out.flags.push_back(running);
  }
  return out;
}

PuzzleScore score_puzzle(const Solution& truth, const Solution& predicted,
                         const RelaxedPuzzle& relaxed, Denominator denominator) {
  const Puzzle& puzzle = relaxed.base;
  const std::set<Coord> retained = relaxed.retained_cells();

  if (predicted.assignment.size() != retained.size() ||
      !std::all_of(predicted.assignment.begin(), predicted.assignment.end(),
                   [&](const auto& kv) { return retained.contains(kv.first); })) {
    throw ScoreError("predicted solution covers " +
                     std::to_string(predicted.assignment.size()) +
                     " cells but the relaxed puzzle retains " +
                     std::to_string(retained.size()));
  }
  for (const Coord& c : retained) {
    if (!truth.assignment.contains(c)) {
      throw ScoreError("ground truth lacks cell " + to_string(c));
    }
  }

  std::size_t right_cells = 0;
  for (const auto& [cell, symbol] : predicted.assignment) {
    if (truth.assignment.at(cell) == symbol) ++right_cells;
  }
  std::size_t right_words = 0;
  for (const std::string& id : relaxed.retained_slots) {
    const Slot& s = puzzle.slot(id);
    bool same = std::all_of(s.cells.begin(), s.cells.end(), [&](const Coord& c) {
      return predicted.assignment.at(c) == truth.assignment.at(c);
    });
    if (same) ++right_words;
  }

  const double white = static_cast<double>(puzzle.geometry().white_count());
  const double slots = static_cast<double>(puzzle.slots().size());
  const auto ratio = [](double num, double den) { return den > 0.0 ? num / den : 0.0; };

  PuzzleScore out;
  out.rem_word = ratio(static_cast<double>(relaxed.removed_slots.size()), slots);
  out.rem_char = ratio(static_cast<double>(relaxed.removed_cells.size()), white);
  if (denominator == Denominator::Original) {
    out.acc_char = ratio(static_cast<double>(right_cells), white);
    out.acc_word = ratio(static_cast<double>(right_words), slots);
  } else {
    out.acc_char = ratio(static_cast<double>(right_cells), static_cast<double>(retained.size()));
    out.acc_word = ratio(static_cast<double>(right_words),
                         static_cast<double>(relaxed.retained_slots.size()));
  }
  return out;
}

QAReport aggregate_qa(std::span<const QAResult> results) {
  if (results.empty()) throw std::invalid_argument("no clue results to aggregate");
  QAReport report;
  report.clues = results.size();
  const double n = static_cast<double>(results.size());
  for (std::size_t k : kReportedK) {
    std::size_t em = 0, em_norm = 0, in = 0, in_norm = 0;
    for (const QAResult& r : results) {
      ClueFlags f = r.at(k);
      em += f.em;
      em_norm += f.em_norm;
      in += f.in;
      in_norm += f.in_norm;
    }
    report.em[k] = static_cast<double>(em) / n;
    report.em_norm[k] = static_cast<double>(em_norm) / n;
    report.in[k] = static_cast<double>(in) / n;
    report.in_norm[k] = static_cast<double>(in_norm) / n;
  }
  return report;
}

PuzzleScore aggregate_puzzles(std::span<const PuzzleScore> scores) {
  if (scores.empty()) throw std::invalid_argument("no puzzle scores to aggregate");
  PuzzleScore mean;
  for (const PuzzleScore& s : scores) {
    mean.acc_char += s.acc_char;
    mean.acc_word += s.acc_word;
    mean.rem_word += s.rem_word;
    mean.rem_char += s.rem_char;
  }
  const double n = static_cast<double>(scores.size());
  mean.acc_char /= n;
  mean.acc_word /= n;
  mean.rem_word /= n;
  mean.rem_char /= n;
  return mean;
}

MetricsReport aggregate(std::span<const QAResult> clues, std::span<const PuzzleScore> puzzles) {
  if (clues.empty() && puzzles.empty()) {
    throw std::invalid_argument("nothing to aggregate");
  }
  MetricsReport report;
  if (!clues.empty()) report.qa = aggregate_qa(clues);
  if (!puzzles.empty()) {
    report.puzzle = aggregate_puzzles(puzzles);
    report.puzzles = puzzles.size();
  }
  return report;
}

double report_value(double x) { return std::round(x * 1e4) / 1e4; }

std::string to_json(const MetricsReport& report, int indent) {
  using nlohmann::ordered_json;
  ordered_json doc = ordered_json::object();
  if (report.qa) {
    auto by_k = [](const std::map<std::size_t, double>& m) {
      ordered_json j = ordered_json::object();
      for (const auto& [k, v] : m) j[std::to_string(k)] = report_value(v);
      return j;
    };
    doc["qa"] = {{"em", by_k(report.qa->em)},
                 {"em_norm", by_k(report.qa->em_norm)},
                 {"in", by_k(report.qa->in)},
                 {"in_norm", by_k(report.qa->in_norm)}};
  }
  if (report.puzzle) {
    doc["puzzle"] = {{"acc_word", report_value(report.puzzle->acc_word)},
                     {"acc_char", report_value(report.puzzle->acc_char)},
                     {"rem_word", report_value(report.puzzle->rem_word)},
                     {"rem_char", report_value(report.puzzle->rem_char)}};
  }
  return doc.dump(indent);
}

}  // namespace xword
