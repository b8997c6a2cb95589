#include <gtest/gtest.h>

#include "omegatrans/words.hpp"
#include "support.hpp"

using namespace omt;

namespace {

// Letter i of u.v^w computed without the library.
char naive_at(const std::string& u, const std::string& v, std::size_t i) {
  std::string s = u;
  while (s.size() < i) s += v;
  return s[i - 1];
}

}  // namespace

TEST(Words, LetterAt) {
  EXPECT_EQ(letter_at(UPWord::parse("ab(a)^w"), 3), 'a');
  EXPECT_EQ(letter_at(UPWord::parse("(ab)^w"), 4), 'b');
  EXPECT_EQ(letter_at(UPWord::parse("abbb#ba#(ab)^w"), 5), '#');
}

TEST(Words, Suffix) {
  EXPECT_EQ(suffix(UPWord::parse("ab(c)^w"), 1), UPWord::parse("ab(c)^w"));
  EXPECT_EQ(suffix(UPWord::parse("ab(c)^w"), 3), UPWord::parse("(c)^w"));
  EXPECT_EQ(suffix(UPWord::parse("(ab)^w"), 2), UPWord::parse("(ba)^w"));
}

TEST(Words, FirstDivergence) {
  EXPECT_EQ(first_divergence(UPWord::parse("(b)^w"), UPWord::parse("bb(c)^w"), 10), 3u);
  EXPECT_EQ(first_divergence(UPWord::parse("(ab)^w"), UPWord::parse("(ab)^w"), 100), std::nullopt);
  EXPECT_EQ(first_divergence(UPWord::parse("a(b)^w"), UPWord::parse("(b)^w"), 10), 1u);
  EXPECT_EQ(first_divergence(UPWord::parse("aaaa(b)^w"), UPWord::parse("(a)^w"), 4), std::nullopt);
}

TEST(Words, FiniteDivergence) {
  EXPECT_EQ(first_divergence(std::string_view("abc"), std::string_view("abd")), 3u);
  EXPECT_EQ(first_divergence(std::string_view("abc"), std::string_view("abc")), std::nullopt);
}

TEST(Words, CanonicalForm) {
  EXPECT_EQ(UPWord::parse("ab(ab)^w"), UPWord::parse("(ab)^w"));
  EXPECT_EQ(UPWord::parse("(abab)^w"), UPWord::parse("(ab)^w"));
  EXPECT_EQ(UPWord::parse("a(ba)^w"), UPWord::parse("(ab)^w"));
  EXPECT_NE(UPWord::parse("(ab)^w"), UPWord::parse("(ba)^w"));
  EXPECT_EQ(UPWord::parse("x(ab)^w").str(), "x(ab)^w");
}

TEST(Words, ParseEscapesAndErrors) {
  UPWord w = UPWord::parse("\\((\\))^w");
  EXPECT_EQ(w.prefix(), "(");
  EXPECT_EQ(w.period(), ")");
  EXPECT_EQ(UPWord::parse(w.str()), w);
  EXPECT_THROW(UPWord::parse("ab"), Error);
  EXPECT_THROW(UPWord::parse("a()^w"), Error);
  EXPECT_THROW(UPWord::parse("(a)^w)"), Error);
}

TEST(Words, AlphabetChecks) {
  EXPECT_THROW(Alphabet("aa"), Error);
  EXPECT_THROW(Alphabet(""), Error);
  Alphabet a("ab#");
  EXPECT_EQ(a.index_of('#'), 2);
  EXPECT_NO_THROW(a.check_word("ab#", "w"));
  EXPECT_THROW(a.check_word("abc", "w"), Error);
}

TEST(Words, RandomProperties) {
  std::mt19937 rng(1);
  for (int n = 0; n < 200; ++n) {
    std::string u = testsupport::random_string(rng, "abc", 0, 5);
    std::string v = testsupport::random_string(rng, "abc", 1, 4);
    UPWord w(u, v);
    for (std::size_t i = 1; i <= 20; ++i) {
      EXPECT_EQ(w.at(i), naive_at(u, v, i));
      if (i > w.prefix().size()) {
        EXPECT_EQ(w.at(i), w.at(i + w.period().size()));
      }
      for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(suffix(w, i).at(k), w.at(i + k - 1));
    }
    UPWord x = testsupport::random_word(rng, "abc");
    EXPECT_EQ(first_divergence(w, x, 30), first_divergence(x, w, 30));
    EXPECT_EQ(UPWord::parse(w.str()), w);
  }
}

TEST(Words, Corpus) {
  auto c = testsupport::f1_corpus();
  ASSERT_EQ(c.size(), 50u);
  EXPECT_EQ(c[0], UPWord::parse("abbb#ba#(ab)^w"));
}

TEST(Words, RenderOutput) {
  std::string s = "ab";
  s += kBottom;
  EXPECT_EQ(render_output(s), "ab⊥");
}
