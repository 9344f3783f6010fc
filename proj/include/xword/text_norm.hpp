#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xword {

/// Reduces text to the answer alphabet: Unicode canonical decomposition,
/// combining marks dropped, uppercased, then everything outside [A-Z0-9]
/// removed. Input is UTF-8.
std::string normalize(std::string_view text);

/// Word -> relative corpus frequency. Keys are always normalized.
class Lexicon {
 public:
  Lexicon() = default;

  /// Normalizes `word` first; words that normalize to "" are ignored and
  /// repeated words accumulate their frequency.
  void add(std::string_view word, double frequency);

  std::optional<double> frequency(std::string_view word) const;
  bool contains(std::string_view word) const { return entries_.contains(word); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t max_word_length() const { return max_length_; }

  const std::map<std::string, double, std::less<>>& entries() const { return entries_; }
  std::vector<std::string> words_of_length(std::size_t length) const;

 private:
  std::map<std::string, double, std::less<>> entries_;
  std::size_t max_length_ = 0;
};

/// Reads `WORD<TAB>frequency` lines; blank lines and lines starting with '#'
/// are skipped. Throws std::runtime_error naming the offending line.
Lexicon read_lexicon(std::istream& in);
Lexicon load_lexicon(const std::filesystem::path& path);

struct Segmentation {
  std::vector<std::string> words;
  // False when no full segmentation exists and `words` holds the input as-is.
  bool segmented = true;
};

/// Splits a merged answer into lexicon words: fewest words first, then the
/// highest mean word frequency, then the lexicographically smallest sequence.
Segmentation split_answer(std::string_view merged, const Lexicon& lexicon);

}  // namespace xword
