#include "xword/candidates.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "xword/text_norm.hpp"

namespace xword {

using nlohmann::json;

PredictionSet load_predictions(std::string_view document,
                               const PredictionOptions& options) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed predictions document: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("predictions document must be a JSON array");

  PredictionSet out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    const std::string where = "predictions entry #" + std::to_string(i);
    if (!item.is_object() || !item.contains("slot") || !item["slot"].is_string()) {
      throw ParseError(where + " needs a string field \"slot\"");
    }
    std::string slot = item["slot"].get<std::string>();
    if (!item.contains("predictions") || !item["predictions"].is_array()) {
      throw ParseError(where + " (" + slot + ") needs an array field \"predictions\"");
    }
    if (options.puzzle && !options.puzzle->slot_index(slot)) {
      throw ParseError(where + ": unknown slot " + slot);
    }
    if (out.by_slot.contains(slot)) {
      throw ParseError(where + ": duplicate slot " + slot);
    }
    std::vector<std::string> list;
    for (const json& p : item["predictions"]) {
      if (!p.is_string()) throw ParseError(where + " (" + slot + ") has a non-string prediction");
      if (list.size() < options.k) list.push_back(p.get<std::string>());
    }
    out.by_slot.emplace(std::move(slot), std::move(list));
  }
  return out;
}

std::string serialize_predictions(const PredictionSet& predictions) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& [slot, list] : predictions.by_slot) {
    doc.push_back({{"slot", slot}, {"predictions", list}});
  }
  return doc.dump(2) + "\n";
}

bool CandidateSet::contains(std::string_view text) const {
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](const Candidate& c) { return c.text == text; });
}

std::vector<std::string> CandidateSet::strings() const {
  std::vector<std::string> out;
  out.reserve(candidates.size());
  for (const Candidate& c : candidates) out.push_back(c.text);
  return out;
}

CandidateSet derive_candidates(const Slot& slot,
                               std::span<const std::string> predictions) {
  CandidateSet out{slot.id, slot.length(), {}};
  const std::size_t len = slot.length();
  std::unordered_set<std::string> seen;
  for (std::size_t rank = 0; rank < predictions.size(); ++rank) {
    const std::string norm = normalize(predictions[rank]);
    if (len == 0 || norm.size() < len) continue;
    for (std::size_t off = 0; off + len <= norm.size(); ++off) {
      std::string sub = norm.substr(off, len);
      if (seen.insert(sub).second) {
        out.candidates.push_back({std::move(sub), rank + 1, off});
      }
    }
  }
  return out;
}

CandidateMap derive_all(const Puzzle& puzzle, const PredictionSet& predictions) {
  CandidateMap out;
  for (const Slot& s : puzzle.slots()) {
    auto it = predictions.by_slot.find(s.id);
    if (it == predictions.by_slot.end()) {
      out.emplace(s.id, CandidateSet{s.id, s.length(), {}});
    } else {
      out.emplace(s.id, derive_candidates(s, it->second));
    }
  }
  return out;
}

CandidateSet make_candidate_set(std::string slot_id, std::size_t length,
                                std::span<const std::string> words) {
  CandidateSet out{std::move(slot_id), length, {}};
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = words[i];
    if (w.size() != length || normalize(w) != w) {
      throw std::invalid_argument("candidate \"" + w + "\" for " + out.slot_id +
                                  " is not a normalized word of length " +
                                  std::to_string(length));
    }
    if (seen.insert(w).second) out.candidates.push_back({w, i + 1, 0});
  }
  return out;
}

}  // namespace xword
