#include <gtest/gtest.h>

#include "omegatrans/muller.hpp"
#include "support.hpp"

using namespace omt;

namespace {

Dma ex1() { return testsupport::load<Dma>("muller_ex1.dma"); }

Dma random_dma(std::mt19937& rng) {
  Dma a;
  a.alphabet = Alphabet("ab");
  int n = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int q = 0; q < n; ++q) a.states.push_back("s" + std::to_string(q));
  std::uniform_int_distribution<int> st(0, n - 1);
  a.delta.assign(n, std::vector<int>(2));
  for (auto& row : a.delta)
    for (auto& t : row) t = st(rng);
  for (int mask = 1; mask < (1 << n); ++mask)
    if (st(rng) == 0 || mask == 1) {
      std::vector<int> s;
      for (int q = 0; q < n; ++q)
        if (mask >> q & 1) s.push_back(q);
      a.muller.push_back(s);
    }
  a.validate();
  return a;
}

// States visited infinitely often, found by unrolling the word far enough.
std::set<int> naive_omega(const Dma& a, const UPWord& w) {
  int q = a.initial;
  std::size_t n = w.prefix().size() + w.period().size() * 64;
  std::vector<int> run;
  for (std::size_t i = 1; i <= n; ++i) run.push_back(q = a.step(q, w.at(i)));
  return std::set<int>(run.end() - static_cast<long>(w.period().size() * 16), run.end());
}

}  // namespace

TEST(Muller, RunState) {
  Dma a = ex1();
  int q = a.state_index("q"), r = a.state_index("r"), t = a.state_index("t");
  EXPECT_EQ(a.run_state("ab", t), q);
  for (int s : {q, r, t}) EXPECT_EQ(a.run_state("", s), s);
  EXPECT_EQ(a.run_state("bb", r), r);
}

TEST(Muller, Accepts) {
  Dma a = ex1();
  EXPECT_TRUE(a.accepts(UPWord::parse("a(b)^w")));
  EXPECT_FALSE(a.accepts(UPWord::parse("(a)^w")));
  EXPECT_TRUE(a.accepts(UPWord::parse("b(a)^w")));
  Dma one;
  one.alphabet = Alphabet("ab");
  one.states = {"q0"};
  one.delta = {{0, 0}};
  one.muller = {{0}};
  one.validate();
  EXPECT_TRUE(one.accepts(UPWord::parse("ab(ba)^w")));
}

TEST(Muller, EntryProduct) {
  MullerFamily f(2, {{0, 1}});
  auto part = [&](int s) { return f.tuple_of({s}); };
  auto one = f.tuple_of({0, 1});
  Tuple zero{Comp{CompKind::Zero, 0}};
  EXPECT_EQ(f.mul(zero, one), zero);
  EXPECT_EQ(f.mul(part(0), part(1)), one);
  EXPECT_EQ(f.mul(part(0), part(0)), part(0));
  EXPECT_EQ(f.mul(one, part(1)), one);
  EXPECT_EQ(f.mul(f.neutral(), part(1)), part(1));
  EXPECT_EQ(one[0].kind, CompKind::One);
  EXPECT_EQ(part(0)[0].kind, CompKind::Part);
}

TEST(Muller, PaperMatrices) {
  Dma a = ex1();
  TransMatrix ab = matrix_of_word(a, "ab"), bb = matrix_of_word(a, "bb");
  int q = a.state_index("q"), r = a.state_index("r"), t = a.state_index("t");
  EXPECT_EQ(ab.target[q], r);
  EXPECT_EQ(ab.target[r], t);
  EXPECT_EQ(ab.target[t], q);
  EXPECT_EQ(bb.target[q], q);
  EXPECT_EQ(bb.tuple[q][0].kind, CompKind::One);
  EXPECT_EQ(bb.tuple[q][1].kind, CompKind::Zero);
  EXPECT_EQ(bb.tuple[r][0].kind, CompKind::Zero);
  EXPECT_TRUE(matrix_of_word(a, "") == TransMatrix::identity(3, a.family()));
}

TEST(Muller, MonoidLaws) {
  std::mt19937 rng(3);
  for (int n = 0; n < 50; ++n) {
    Dma a = random_dma(rng);
    auto f = a.family();
    auto id = TransMatrix::identity(a.states.size(), f);
    for (int k = 0; k < 10; ++k) {
      std::string w1 = testsupport::random_string(rng, "ab", 0, 5), w2 = testsupport::random_string(rng, "ab", 0, 5);
      auto m1 = matrix_of_word(a, w1);
      EXPECT_TRUE(matrix_of_word(a, w1 + w2) == matrix_mul(m1, matrix_of_word(a, w2), f));
      EXPECT_TRUE(matrix_mul(m1, id, f) == m1);
      EXPECT_TRUE(matrix_mul(id, m1, f) == m1);
      // one non-bottom entry per row, at the state the run reaches
      for (std::size_t p = 0; p < a.states.size(); ++p)
        EXPECT_EQ(m1.target[p], a.run_state(w1, static_cast<int>(p)));
    }
  }
}

TEST(Muller, AcceptanceMatchesUnrolling) {
  std::mt19937 rng(4);
  for (int n = 0; n < 100; ++n) {
    Dma a = random_dma(rng);
    UPWord w = testsupport::random_word(rng, "ab");
    std::set<int> om = naive_omega(a, w);
    bool want = false;
    for (auto& s : a.muller) want |= std::set<int>(s.begin(), s.end()) == om;
    EXPECT_EQ(a.accepts(w), want);
    EXPECT_EQ(a.accepts(UPWord(w.prefix() + w.period(), w.period())), want);
    EXPECT_EQ(a.accepts(UPWord(w.prefix(), w.period() + w.period())), want);
  }
}

TEST(Muller, OneMeansMullerLoop) {
  std::mt19937 rng(5);
  for (int n = 0; n < 100; ++n) {
    Dma a = random_dma(rng);
    std::string v = testsupport::random_string(rng, "ab", 1, 4);
    auto m = matrix_of_word(a, v);
    for (std::size_t p = 0; p < a.states.size(); ++p) {
      if (m.target[p] != static_cast<int>(p)) continue;
      for (std::size_t i = 0; i < a.muller.size(); ++i)
        if (m.tuple[p][i].kind == CompKind::One) {
          EXPECT_EQ(a.omega(UPWord("", v), static_cast<int>(p)),
                    std::set<int>(a.muller[i].begin(), a.muller[i].end()));
        }
    }
  }
}

TEST(Muller, Aperiodicity) {
  auto r = is_aperiodic(ex1());
  EXPECT_FALSE(r.aperiodic);
  EXPECT_EQ(r.period, 2u);
  Dma one;
  one.alphabet = Alphabet("a");
  one.states = {"q"};
  one.delta = {{0}};
  one.muller = {{0}};
  EXPECT_TRUE(is_aperiodic(one).aperiodic);
  // u and v exchanged by every letter would be periodic; this counter-free
  // automaton remembers the last letter only.
  Dma last;
  last.alphabet = Alphabet("ab");
  last.states = {"u", "v"};
  last.delta = {{0, 1}, {0, 1}};
  last.muller = {{0}, {1}, {0, 1}};
  EXPECT_TRUE(is_aperiodic(last).aperiodic);
}

TEST(Muller, MonoidCap) { EXPECT_THROW(generate_monoid(ex1(), 3), Error); }
