#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "xword/text_norm.hpp"

using namespace xword;

TEST_CASE("normalize reference values") {
  // Expected outputs computed independently with Python's unicodedata
  // (NFD, drop combining marks, str.upper, keep A-Z0-9).
  const std::vector<std::pair<std::string, std::string>> table = {
      {"on time", "ONTIME"},
      {"", ""},
      {"Córdoba-1!", "CORDOBA1"},
      {"Straße", "STRASSE"},
      {"Ångström", "ANGSTROM"},
      {"ﬁne", "FINE"},
      {"naïve café", "NAIVECAFE"},
      {"Ærø", "R"},
      {"ıi", "II"},
      {"Œuvre", "UVRE"},
      {"Ⅻ", ""},
      {"²", ""},
      {"Ｆ", ""},
      {"Đ", ""},
      {"Łódź", "ODZ"},
      {"ñandú 42", "NANDU42"},
      {"LAUDE", "LAUDE"},
      {"  magna-cum laude ", "MAGNACUMLAUDE"},
  };
  for (const auto& [in, want] : table) {
    CAPTURE(in);
    CHECK(normalize(in) == want);
  }
}

TEST_CASE("normalize is idempotent, shrinking and in alphabet") {
  const std::vector<std::string> pieces = {"a", "Z", "7", " ", "-", "é", "ß", "ﬁ", "ﬃ", "Ω", "ı",
                                           "İ", "ŉ", "ǰ", "Ⅻ", "Ｆ", "ç", "\xCC\x81", "日", "!"};
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1), len(0, 12);
  for (int t = 0; t < 2000; ++t) {
    std::string s;
    for (std::size_t n = len(rng); n > 0; --n) s += pieces[pick(rng)];
    const std::string once = normalize(s);
    CAPTURE(s);
    CHECK(normalize(once) == once);
    CHECK(once.size() <= s.size());
    for (char ch : once) CHECK(((ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9')));
  }
}

TEST_CASE("lexicon normalizes and accumulates") {
  Lexicon lex;
  lex.add("very", 3);
  lex.add("VERY", 2);
  lex.add("on time", 1);
  lex.add("--", 9);
  CHECK(lex.size() == 2);
  CHECK(lex.frequency("VERY") == 5.0);
  CHECK(lex.contains("ONTIME"));
  CHECK(!lex.frequency("very"));
  CHECK(lex.max_word_length() == 6);
  CHECK(lex.words_of_length(4) == std::vector<std::string>{"VERY"});
}

TEST_CASE("lexicon file") {
  std::istringstream in("# comment\nFAST\t2.5\n\nvery\t1e3\nSLOW\t0\n");
  Lexicon lex = read_lexicon(in);
  CHECK(lex.size() == 3);
  CHECK(lex.frequency("VERY") == 1000.0);
  CHECK(lex.frequency("SLOW") == 0.0);

  for (const char* bad : {"FAST\n", "FAST\tquick\n", "FAST\t-1\n", "FAST\t1\textra\n"}) {
    std::istringstream b(bad);
    CAPTURE(bad);
    CHECK_THROWS_AS(read_lexicon(b), std::runtime_error);
  }
  CHECK_THROWS_AS(load_lexicon("/nonexistent/lexicon.tsv"), std::runtime_error);
}

TEST_CASE("split examples") {
  Lexicon lex;
  for (const auto& [w, f] : std::vector<std::pair<std::string, double>>{
           {"VERY", 50}, {"FAST", 40}, {"VER", 5}, {"Y", 1}, {"FA", 2}, {"ST", 3}, {"FOES", 4}, {"FOE", 9}, {"S", 1}}) {
    lex.add(w, f);
  }
  auto seg = split_answer("VERYFAST", lex);
  CHECK(seg.words == std::vector<std::string>{"VERY", "FAST"});
  CHECK(seg.segmented);
  CHECK(split_answer("FOES", lex).words == std::vector<std::string>{"FOES"});

  auto none = split_answer("QQQ", lex);
  CHECK(none.words == std::vector<std::string>{"QQQ"});
  CHECK(!none.segmented);
  CHECK(split_answer("", lex).words.empty());
}

TEST_CASE("split tie-breaks") {
  Lexicon lex;
  // AB|CD and A|BCD both have two words; mean decides.
  lex.add("AB", 1);
  lex.add("CD", 1);
  lex.add("A", 4);
  lex.add("BCD", 4);
  CHECK(split_answer("ABCD", lex).words == std::vector<std::string>{"A", "BCD"});
  // Equal means fall back to the lexicographically smaller sequence.
  Lexicon tie;
  tie.add("AB", 2);
  tie.add("CD", 2);
  tie.add("A", 2);
  tie.add("BCD", 2);
  CHECK(split_answer("ABCD", tie).words == std::vector<std::string>{"A", "BCD"});
  tie.add("ABCD", 0);
  CHECK(split_answer("ABCD", tie).words == std::vector<std::string>{"ABCD"});
}

TEST_CASE("split matches exhaustive segmentation") {
  const Lexicon lex = oracle::fixture_lexicon();
  REQUIRE(lex.size() == 50);
  const auto words = [&] {
    std::vector<std::string> w;
    for (const auto& [k, f] : lex.entries()) w.push_back(k);
    return w;
  }();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1), count(1, 4);
  std::uniform_int_distribution<int> letter(0, 4);  // E never appears in the lexicon
  for (int t = 0; t < 1500; ++t) {
    std::string s;
    if (t % 3 == 2) {
      std::uniform_int_distribution<int> len(1, 16);
      for (int n = len(rng); n > 0; --n) s += static_cast<char>('A' + letter(rng));
    } else {
      for (std::size_t n = count(rng); n > 0; --n) s += words[pick(rng)];
    }
    if (s.size() > 16) s.resize(16);
    auto seg = split_answer(s, lex);
    CAPTURE(s);
    CHECK(seg.words == oracle::best_segmentation(s, lex));
    std::string joined;
    for (const auto& w : seg.words) joined += w;
    CHECK(joined == s);
  }
}
