#include <gtest/gtest.h>

#include "omegatrans/twowst.hpp"
#include "support.hpp"

using namespace omt;

namespace {

const UPWord kRunning = UPWord::parse("abbb#ba#(ab)^w");

std::set<std::pair<std::string, std::string>> named(const TwoWst& t, const TransMatrix& m) {
  std::set<std::pair<std::string, std::string>> s;
  for (auto [p, q] : behavior_pairs(m)) s.insert({t.states[p], t.states[q]});
  return s;
}

}  // namespace

TEST(TwoWst, RunF1) {
  auto t = testsupport::load<TwoWst>("f1.2wst");
  auto r = run_2wst(t, kRunning, 14);
  ASSERT_TRUE(r.accepted()) << r.note;
  EXPECT_EQ(r.out, "bbbaabbb#abba#");
  r = run_2wst(t, UPWord::parse("ab#(a)^w"), 6);
  ASSERT_TRUE(r.accepted());
  EXPECT_EQ(r.out, "baab#a");
  EXPECT_FALSE(run_2wst(t, UPWord::parse("(a#)^w"), 4).accepted());
}

TEST(TwoWst, RunParity) {
  auto t = testsupport::load<TwoWst>("parity.2wst");
  auto r = run_2wst(t, UPWord::parse("(a)^w"), 5);
  ASSERT_TRUE(r.accepted());
  EXPECT_EQ(r.out, "aaaaa");
}

TEST(TwoWst, Stuck) {
  auto m = parse_machine("kind: 2wst\ninput: ab\noutput: a\nstates: s\ninitial: s\nmuller: {s}\n"
                         "trans: s, |- -> s, \"\", +1\ntrans: s, a -> s, \"a\", +1\n");
  auto& t = std::get<TwoWst>(m);
  auto r = run_2wst(t, UPWord::parse("ab(a)^w"), 3);
  EXPECT_EQ(r.verdict, Outcome::Stuck);
  EXPECT_TRUE(run_2wst(t, UPWord::parse("(a)^w"), 3).accepted());
}

TEST(TwoWst, Reaches) {
  auto t = testsupport::load<TwoWst>("f1.2wst");
  int tt = t.state_index("t"), p = t.state_index("p"), q = t.state_index("q");
  EXPECT_TRUE(reaches(t, kRunning, tt, 1, p, 4));
  EXPECT_TRUE(reaches(t, kRunning, p, 4, q, 1));
  EXPECT_FALSE(reaches(t, kRunning, p, 4, tt, 1));
}

TEST(TwoWst, AnchoredBehaviors) {
  auto t = testsupport::load<TwoWst>("f1.2wst");
  auto ctx = start_context(t, UPWord::parse("(a)^w"));
  auto b = behavior(t, "ab#", ctx, true);
  using P = std::set<std::pair<std::string, std::string>>;
  EXPECT_EQ(named(t, b.lr), (P{{"t", "t"}, {"p", "t"}, {"q", "t"}}));
  EXPECT_EQ(named(t, b.rr), (P{{"t", "t"}, {"p", "q"}, {"q", "t"}}));
  EXPECT_TRUE(named(t, b.ll).empty());
  EXPECT_TRUE(named(t, b.rl).empty());
  auto twice = behavior(t, "ab#ab#", ctx, true);
  EXPECT_TRUE(twice.lr == b.lr);
}

TEST(TwoWst, OneWayNeverReturns) {
  auto t = testsupport::load<TwoWst>("parity.2wst");
  auto ctx = guard_space(t).contexts.at(0);
  for (std::string w : {"a", "aa", "aaa"}) {
    auto b = behavior(t, w, ctx, false);
    EXPECT_TRUE(behavior_pairs(b.ll).empty());
    EXPECT_TRUE(behavior_pairs(b.rl).empty());
    EXPECT_EQ(behavior_pairs(b.lr).size(), 2u);
  }
}

TEST(TwoWst, EmptyFactorIsNeutral) {
  std::mt19937 rng(31);
  for (int n = 0; n < 30; ++n) {
    auto t = testsupport::random_2wst(rng);
    auto f = t.family();
    auto ctx = guard_space(t).contexts.at(0);
    std::string w = testsupport::random_string(rng, "ab", 1, 4);
    auto b = behavior(t, w, ctx, false);
    auto id = identity_quads(t.states.size(), f);
    EXPECT_TRUE(behavior(t, "", ctx, false) == id);
    EXPECT_TRUE(compose_quads(b, id, f) == b);
    EXPECT_TRUE(compose_quads(id, b, f) == b);
  }
}

TEST(TwoWst, CompositionMatchesSimulation) {
  std::mt19937 rng(32);
  for (int n = 0; n < 60; ++n) {
    auto t = testsupport::random_2wst(rng);
    auto f = t.family();
    auto ctx = guard_space(t).contexts.at(0);
    std::string w1 = testsupport::random_string(rng, "ab", 0, 4), w2 = testsupport::random_string(rng, "ab", 0, 4);
    bool anchored = n % 2;
    auto lhs = compose_quads(behavior(t, w1, ctx, anchored), behavior(t, w2, ctx, false), f);
    EXPECT_TRUE(lhs == behavior(t, w1 + w2, ctx, anchored)) << w1 << "|" << w2;
  }
}

TEST(TwoWst, MonoidMatchesWords) {
  auto t = testsupport::load<TwoWst>("f1.2wst");
  TwMonoid m(t);
  for (std::string a : {"a", "#", "ab"})
    for (std::string b : {"", "b#", "a"})
      EXPECT_EQ(m.mul(m.of_word(a), m.of_word(b)).key(), m.of_word(a + b).key());
  EXPECT_EQ(m.mul(m.identity(), m.of_word("a#")).key(), m.of_word("a#").key());
}

TEST(TwoWst, Aperiodicity) {
  EXPECT_FALSE(is_aperiodic_2wst(testsupport::load<TwoWst>("parity.2wst")).aperiodic);
  EXPECT_TRUE(is_aperiodic_2wst(testsupport::load<TwoWst>("f1.2wst")).aperiodic);
}

TEST(TwoWst, GuardContexts) {
  auto t = testsupport::load<TwoWst>("f1.2wst");
  auto la = *t.lookahead;
  auto s = lookahead_set(la, UPWord::parse("a#(a)^w"));
  EXPECT_TRUE(s[la.state_index("first")]);
  EXPECT_FALSE(s[la.state_index("first'")]);
  s = lookahead_set(la, UPWord::parse("(a)^w"));
  EXPECT_FALSE(s[la.state_index("first")]);
  EXPECT_TRUE(s[la.state_index("first'")]);
  auto g = guard_space(t);
  EXPECT_GE(g.rsets.size(), 2u);
  EXPECT_GE(g.find(start_context(t, UPWord::parse("(a)^w"))), 0);
}
