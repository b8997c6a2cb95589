#include <gtest/gtest.h>

#include "omegatrans/fot.hpp"
#include "support.hpp"

using namespace omt;

namespace {

const UPWord kRunning = UPWord::parse("abbb#ba#(ab)^w");

}  // namespace

TEST(Fot, Domain) {
  Fot t = testsupport::load<Fot>("f1.fot");
  EXPECT_TRUE(fot_domain(t, kRunning));
  EXPECT_TRUE(fot_domain(t, UPWord::parse("(a)^w")));
  EXPECT_FALSE(fot_domain(t, UPWord::parse("(a#)^w")));
  EXPECT_FALSE(fot_domain(t, UPWord::parse("ab(#)^w")));
}

TEST(Fot, NodeLabels) {
  Fot t = testsupport::load<Fot>("f1.fot");
  EXPECT_EQ(node_label(t, kRunning, 1, 1), std::optional<char>('a'));
  EXPECT_EQ(node_label(t, kRunning, 2, 2), std::optional<char>('b'));
  EXPECT_EQ(node_label(t, kRunning, 3, 5), std::optional<char>('#'));
  EXPECT_EQ(node_label(t, kRunning, 3, 1), std::nullopt);
  EXPECT_EQ(node_label(t, kRunning, 1, 5), std::nullopt);
  EXPECT_EQ(node_label(t, kRunning, 3, 9), std::optional<char>('a'));
}

TEST(Fot, RunF1) {
  Fot t = testsupport::load<Fot>("f1.fot");
  auto r = run_fot(t, kRunning, 14);
  ASSERT_TRUE(r.accepted()) << r.note;
  EXPECT_EQ(r.out, "bbbaabbb#abba#");
  EXPECT_EQ(run_fot(t, kRunning, 0).out, "");
  EXPECT_FALSE(run_fot(t, UPWord::parse("(ab#)^w"), 4).accepted());
}

TEST(Fot, MatchesBuiltIn) {
  Fot file = testsupport::load<Fot>("f1.fot"), built = f1_fot();
  EXPECT_EQ(file.copies, built.copies);
  EXPECT_TRUE(fo::structurally_equal(file.dom, built.dom));
  ASSERT_EQ(file.pos.size(), built.pos.size());
  for (auto& [k, f] : file.pos) EXPECT_TRUE(fo::structurally_equal(f, built.pos.at(k)));
  ASSERT_EQ(file.ord.size(), built.ord.size());
  for (auto& [k, f] : file.ord) EXPECT_TRUE(fo::structurally_equal(f, built.ord.at(k)));
}

TEST(Fot, Identity) {
  auto m = parse_machine("kind: fot\ninput: ab\noutput: ab\ncopies: 1\ndom: true\n"
                         "pos: 1, a: La(x)\npos: 1, b: Lb(x)\nord: 1,1: x < y\n");
  auto& t = std::get<Fot>(m);
  std::mt19937 rng(41);
  for (int n = 0; n < 20; ++n) {
    UPWord w = testsupport::random_word(rng, "ab");
    auto r = run_fot(t, w, 9);
    ASSERT_TRUE(r.accepted());
    EXPECT_EQ(r.out, w.take(9));
  }
}

TEST(Fot, PrefixMonotone) {
  Fot t = f1_fot();
  auto c = testsupport::f1_corpus();
  for (std::size_t i = 0; i < 10; ++i) {
    auto full = run_fot(t, c[i], 24);
    ASSERT_TRUE(full.accepted());
    for (std::size_t k : {1u, 7u, 15u}) EXPECT_EQ(run_fot(t, c[i], k).out, full.out.substr(0, k));
    EXPECT_EQ(full.out, *testsupport::f1_oracle(c[i], 24));
  }
}

TEST(Fot, OrderIsStrict) {
  Fot t = f1_fot();
  FotEvaluator ev(t);
  for (std::size_t u = 1; u <= 9; ++u)
    for (int c = 1; c <= 3; ++c) {
      auto l = ev.label(kRunning, c, u);
      if (!l) continue;
      FotNode n{c, u, *l};
      EXPECT_FALSE(ev.before(kRunning, n, n));
      for (std::size_t v = 1; v <= 9; ++v)
        for (int d = 1; d <= 3; ++d) {
          auto l2 = ev.label(kRunning, d, v);
          if (!l2 || (c == d && u == v)) continue;
          FotNode m{d, v, *l2};
          EXPECT_NE(ev.before(kRunning, n, m), ev.before(kRunning, m, n));
        }
    }
}

TEST(Fot, FullOrderCheckAgrees) {
  Fot t = f1_fot();
  FotRunOptions opt;
  opt.full_order_check = true;
  auto r = run_fot(t, kRunning, 14, opt);
  ASSERT_TRUE(r.accepted());
  EXPECT_EQ(r.out, "bbbaabbb#abba#");
}
