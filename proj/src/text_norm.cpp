#include "xword/text_norm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

namespace xword {

namespace {

bool keep_ascii(char ch) {
  return (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9');
}

char ascii_upper(char ch) {
  return (ch >= 'a' && ch <= 'z') ? static_cast<char>(ch - 'a' + 'A') : ch;
}

bool is_combining_mark(UChar32 cp) {
  switch (u_charType(cp)) {
    case U_NON_SPACING_MARK:
    case U_ENCLOSING_MARK:
    case U_COMBINING_SPACING_MARK:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  if (std::all_of(text.begin(), text.end(),
                  [](char ch) { return static_cast<unsigned char>(ch) < 0x80; })) {
    for (char ch : text) {
      ch = ascii_upper(ch);
      if (keep_ascii(ch)) out.push_back(ch);
    }
    return out;
  }

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfd = icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFD normalizer unavailable");
  icu::UnicodeString decomposed = nfd->normalize(
      icu::UnicodeString::fromUTF8(
          icu::StringPiece(text.data(), static_cast<int32_t>(text.size()))),
      status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFD normalization failed");

  icu::UnicodeString stripped;
  for (int32_t i = 0; i < decomposed.length();) {
    UChar32 cp = decomposed.char32At(i);
    if (!is_combining_mark(cp)) stripped.append(cp);
    i += U16_LENGTH(cp);
  }
  stripped.toUpper(icu::Locale::getRoot());

  for (int32_t i = 0; i < stripped.length(); ++i) {
    char16_t unit = stripped.charAt(i);
    if (unit < 0x80 && keep_ascii(static_cast<char>(unit))) {
      out.push_back(static_cast<char>(unit));
    }
  }
  return out;
}

void Lexicon::add(std::string_view word, double frequency) {
  if (!(frequency >= 0.0) || !std::isfinite(frequency)) {
    throw std::invalid_argument("lexicon frequency must be a non-negative number");
  }
  std::string key = normalize(word);
  if (key.empty()) return;
  max_length_ = std::max(max_length_, key.size());
  auto [it, inserted] = entries_.try_emplace(std::move(key), frequency);
  if (!inserted) it->second += frequency;
}

std::optional<double> Lexicon::frequency(std::string_view word) const {
  auto it = entries_.find(word);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Lexicon::words_of_length(std::size_t length) const {
  std::vector<std::string> out;
  for (const auto& [word, freq] : entries_) {
    if (word.size() == length) out.push_back(word);
  }
  return out;
}

Lexicon read_lexicon(std::istream& in) {
  Lexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error("lexicon line " + std::to_string(line_no) +
                               ": expected WORD<TAB>frequency");
    }
    std::string freq_text = line.substr(tab + 1);
    double freq = 0.0;
    std::size_t used = 0;
    try {
      freq = std::stod(freq_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != freq_text.size() || !(freq >= 0.0) || !std::isfinite(freq)) {
      throw std::runtime_error("lexicon line " + std::to_string(line_no) +
                               ": invalid frequency \"" + freq_text + "\"");
    }
    lex.add(std::string_view(line).substr(0, tab), freq);
  }
  return lex;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon " + path.string());
  return read_lexicon(in);
}

namespace {

// Best segmentation of a suffix. Mean frequency only matters between
// segmentations of equal word count, where it orders the same as the sum.
struct SuffixBest {
  bool reachable = false;
  std::size_t count = 0;
  double sum = 0.0;
  std::vector<std::string> words;
};

bool better(std::size_t count, double sum, const std::vector<std::string>& words,
            const SuffixBest& incumbent) {
  if (!incumbent.reachable) return true;
  if (count != incumbent.count) return count < incumbent.count;
  if (sum != incumbent.sum) return sum > incumbent.sum;
  return words < incumbent.words;
}

}  // namespace

Segmentation split_answer(std::string_view merged, const Lexicon& lexicon) {
  const std::size_t n = merged.size();
  if (n == 0) return {};

  std::vector<SuffixBest> best(n + 1);
  best[n].reachable = true;
  const std::size_t max_len = lexicon.max_word_length();
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j <= n && j - i <= max_len; ++j) {
      if (!best[j].reachable) continue;
      auto freq = lexicon.frequency(merged.substr(i, j - i));
      if (!freq) continue;
      std::vector<std::string> words;
      words.reserve(best[j].words.size() + 1);
      words.emplace_back(merged.substr(i, j - i));
      words.insert(words.end(), best[j].words.begin(), best[j].words.end());
      const std::size_t count = best[j].count + 1;
      const double sum = *freq + best[j].sum;
      if (better(count, sum, words, best[i])) {
        best[i] = SuffixBest{true, count, sum, std::move(words)};
      }
    }
  }
  if (!best[0].reachable) return {{std::string(merged)}, false};
  return {std::move(best[0].words), true};
}

}  // namespace xword
