#include <gtest/gtest.h>

#include <map>
#include <queue>

#include "omegatrans/sst.hpp"
#include "support.hpp"

using namespace omt;

namespace {

const UPWord kRunning = UPWord::parse("abbb#ba#(ab)^w");

Substitution subst(const std::vector<std::string>& vars, const std::vector<std::string>& rhs,
                   const Alphabet& out) {
  Substitution s;
  for (auto& r : rhs) s.push_back(parse_rhs(r, vars, out));
  return s;
}

// Letters along the unique edge chain from one node to another.
std::optional<std::string> spell(const OutputGraph& g, GraphNode from, GraphNode to) {
  std::map<GraphNode, std::vector<const GraphEdge*>> succ;
  for (auto& e : g.edges) succ[e.from].push_back(&e);
  std::string s;
  for (std::size_t steps = 0; steps <= g.edges.size(); ++steps) {
    if (from == to) return s;
    auto it = succ.find(from);
    if (it == succ.end() || it->second.size() != 1) return std::nullopt;
    s += it->second[0]->label;
    from = it->second[0]->to;
  }
  return std::nullopt;
}

bool connected(const OutputGraph& g, GraphNode from, GraphNode to) {
  std::set<GraphNode> seen{from};
  std::queue<GraphNode> q;
  q.push(from);
  while (!q.empty()) {
    auto n = q.front();
    q.pop();
    if (n == to) return true;
    for (auto& e : g.edges)
      if (e.from == n && seen.insert(e.to).second) q.push(e.to);
  }
  return false;
}

}  // namespace

TEST(Sst, ComposeSubst) {
  std::vector<std::string> vars{"X"};
  Alphabet out("abc");
  auto s = compose_subst(subst(vars, {"aXb"}, out), subst(vars, {"Xc"}, out));
  EXPECT_EQ(rhs_str(s[0], vars), "aXbc");
  auto id = identity_subst(1);
  EXPECT_EQ(rhs_str(compose_subst(id, s)[0], vars), "aXbc");
  EXPECT_EQ(rhs_str(compose_subst(s, id)[0], vars), "aXbc");
}

TEST(Sst, Copyless) {
  std::vector<std::string> vars{"X", "Y"};
  Alphabet out("ab");
  EXPECT_TRUE(is_copyless(subst(vars, {"XaY", "b"}, out)));
  EXPECT_FALSE(is_copyless(subst(vars, {"XX", "Y"}, out)));
  EXPECT_FALSE(is_copyless(subst(vars, {"X", "X"}, out)));
  try {
    parse_machine("kind: sst\ninput: a\noutput: a\nstates: q\ninitial: q\nvars: X\n"
                  "delta: q,a -> q\nupdate: q,a: X := XX\nout: {q} -> X\n");
    FAIL() << "copying update accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "copyless violation");
  }
}

TEST(Sst, CopylessClosedUnderComposition) {
  std::mt19937 rng(21);
  for (int n = 0; n < 50; ++n) {
    Sst t = testsupport::random_copyless_sst(rng);
    std::string w = testsupport::random_string(rng, "ab", 1, 6);
    Substitution s = identity_subst(t.vars.size());
    int q = t.initial;
    for (char c : w) {
      s = compose_subst(s, t.update(q, c));
      q = t.step(q, c);
      EXPECT_TRUE(is_copyless(s));
    }
  }
}

TEST(Sst, ApplyMatchesLetterwise) {
  std::mt19937 rng(22);
  for (int n = 0; n < 50; ++n) {
    Sst t = testsupport::random_copyless_sst(rng);
    UPWord w = testsupport::random_word(rng, "ab");
    std::vector<std::string> vals(t.vars.size());
    int q = t.initial;
    Substitution s = identity_subst(t.vars.size());
    for (std::size_t i = 1; i <= 8; ++i) {
      s = compose_subst(s, t.update(q, w.at(i)));
      q = t.step(q, w.at(i));
      EXPECT_EQ(apply_subst(s, vals), testsupport::values_after(t, w, i));
    }
  }
}

TEST(Sst, RunF1) {
  Sst t = testsupport::load<Sst>("f1.sst");
  auto r = run_output(t, UPWord::parse("ab#(a)^w"), 6);
  ASSERT_TRUE(r.accepted());
  EXPECT_EQ(r.out, "baab#a");
  r = run_output(t, kRunning, 14);
  ASSERT_TRUE(r.accepted());
  EXPECT_EQ(r.out, "bbbaabbb#abba#");
  EXPECT_FALSE(run_output(t, UPWord::parse("(ab#)^w"), 5).accepted());
  EXPECT_EQ(run_output(t, kRunning, 0).out, "");
}

TEST(Sst, F1Valuations) {
  Sst t = testsupport::load<Sst>("f1.sst");
  auto v = testsupport::values_after(t, UPWord::parse("a(b)^w"), 1);
  EXPECT_EQ(v[t.var_index("y")], "aa");
  v = testsupport::values_after(t, UPWord::parse("ab(b)^w"), 2);
  EXPECT_EQ(v[t.var_index("y")], "baab");
}

TEST(Sst, FinitePaddedWithBottom) {
  // The accumulator stops growing, so the output is finite.
  auto m = parse_machine("kind: sst\ninput: a\noutput: a\nstates: p q\ninitial: p\nvars: X\n"
                         "delta: p,a -> q\ndelta: q,a -> q\nupdate: p,a: X := a\nupdate: q,a: X := X\n"
                         "out: {q} -> X\n");
  auto r = run_output(std::get<Sst>(m), UPWord::parse("(a)^w"), 3);
  ASSERT_TRUE(r.accepted());
  EXPECT_EQ(r.out, std::string("a") + kBottom + kBottom);
}

TEST(Sst, AgreesWithValuations) {
  std::mt19937 rng(23);
  int checked = 0;
  for (int n = 0; n < 60; ++n) {
    Sst t = testsupport::random_copyless_sst(rng);
    UPWord w = testsupport::random_word(rng, "ab");
    auto r = run_output(t, w, 6);
    if (!r.accepted()) continue;
    // The output is the limit of the output variables' concatenation;
    // its stable prefix must agree with late valuations.
    auto lasso = sst_lasso(t, w);
    ASSERT_TRUE(lasso);
    auto F = t.output_for(lasso->P);
    ASSERT_TRUE(F);
    std::size_t late = lasso->j0 + lasso->L * 40;
    auto vals = testsupport::values_after(t, w, late);
    std::string cat;
    for (int x : *F) cat += vals[x];
    std::string shown = r.out.substr(0, r.out.find(kBottom));
    EXPECT_EQ(cat.substr(0, shown.size()), shown);
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(Sst, FlowMorphism) {
  std::mt19937 rng(24);
  for (int n = 0; n < 40; ++n) {
    Sst t = testsupport::random_copyless_sst(rng);
    auto f = t.family();
    for (int k = 0; k < 5; ++k) {
      std::string a = testsupport::random_string(rng, "ab", 0, 4), b = testsupport::random_string(rng, "ab", 0, 4);
      EXPECT_TRUE(flow_matrix(t, a + b) == flow_mul(flow_matrix(t, a), flow_matrix(t, b), f));
    }
  }
}

TEST(Sst, FlowCounts) {
  Sst t = testsupport::load<Sst>("f1.sst");
  int s1 = t.state_index("1"), s2 = t.state_index("2");
  int x = t.var_index("x"), y = t.var_index("y");
  auto m = flow_matrix(t, "a#");
  EXPECT_EQ(m.at(s1, y, s1, x).count, 1);  // y flows into x when # closes the block
  EXPECT_EQ(m.at(s1, x, s1, x).count, 1);
  EXPECT_TRUE(m.at(s1, x, s2, x).bot);
  EXPECT_TRUE(is_1_bounded(t).bounded);
}

TEST(Sst, NotOneBounded) {
  // X := XY keeps Y; Y flows into X twice across two steps.
  auto m = parse_machine("kind: sst\ninput: a\noutput: a\nstates: q\ninitial: q\nvars: X Y\n"
                         "delta: q,a -> q\nupdate: q,a: X := XY; Y := Ya\nout: {q} -> X\n"
                         "copyless: no\n");
  auto r = is_1_bounded(std::get<Sst>(m));
  EXPECT_FALSE(r.bounded);
  EXPECT_EQ(r.witness, "aa");
}

TEST(Sst, OutputGraphExample) {
  Sst t = testsupport::load<Sst>("outgraph.sst");
  UPWord w = UPWord::parse("(a)^w");
  SstRun run(t, w);
  int X = t.var_index("X"), Y = t.var_index("Y"), Z = t.var_index("Z");
  EXPECT_FALSE(run.useful(X, 1));
  EXPECT_TRUE(run.useful(Z, 1));
  auto g = build_output_graph(run, 6);
  bool found = false;
  for (auto& e : g.edges)
    if (e.from == GraphNode{Z, 0, false} && e.to == GraphNode{Z, 0, true}) {
      found = true;
      EXPECT_EQ(e.label, "");
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(spell(g, {X, 5, false}, {X, 5, true}), std::optional<std::string>("c"));
  EXPECT_EQ(run.valuation(5)[X], "c");
  EXPECT_TRUE(connected(g, {Y, 5, false}, {Z, 2, false}));
  EXPECT_TRUE(run.path_conditions(Y, 5, SstRun::In, Z, 2, SstRun::In));
  EXPECT_FALSE(run.path_conditions(Z, 2, SstRun::In, Y, 5, SstRun::In));
}

TEST(Sst, GraphPathsSpellValuations) {
  std::mt19937 rng(25);
  for (int n = 0; n < 30; ++n) {
    Sst t = testsupport::random_copyless_sst(rng);
    UPWord w = testsupport::random_word(rng, "ab");
    if (!sst_lasso(t, w) || !t.output_for(sst_lasso(t, w)->P)) continue;
    SstRun run(t, w);
    auto g = build_output_graph(run, 6);
    for (std::size_t i = 0; i <= 6; ++i) {
      auto vals = run.valuation(i);
      EXPECT_EQ(vals, testsupport::values_after(t, w, i));
      for (std::size_t x = 0; x < t.vars.size(); ++x) {
        GraphNode in{static_cast<int>(x), i, false}, out{static_cast<int>(x), i, true};
        if (std::binary_search(g.nodes.begin(), g.nodes.end(), in)) {
          EXPECT_EQ(spell(g, in, out), std::optional<std::string>(vals[x]));
        }
      }
    }
  }
}

TEST(Sst, DotIsWellFormed) {
  auto g = build_output_graph(testsupport::load<Sst>("outgraph.sst"), UPWord::parse("(a)^w"), 3);
  std::string dot = to_dot(g);
  EXPECT_EQ(dot.rfind("digraph output {", 0), 0u);
  EXPECT_NE(dot.find("Zin_0 -> Zout_0 [label=\"ε\"];"), std::string::npos);
  EXPECT_EQ(dot.back(), '\n');
}
