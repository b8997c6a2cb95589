#include <gtest/gtest.h>

#include "omegatrans/io.hpp"
#include "support.hpp"

using namespace omt;

namespace {

const char* kFixtures[] = {"f1.2wst",  "f1.fot",         "f1.sst",          "muller_ex1.dma",
                           "outgraph.sst", "parity.2wst", "tm_ex1_left.sst", "tm_ex1_right.sst"};

}  // namespace

TEST(Io, FixturesParseAndRoundTrip) {
  for (const char* name : kFixtures) {
    SCOPED_TRACE(name);
    Machine m = load_machine(testsupport::data(name));
    std::string once = print_machine(m);
    Machine again = parse_machine(once);
    EXPECT_EQ(m.index(), again.index());
    EXPECT_EQ(print_machine(again), once);
  }
}

TEST(Io, KindNames) {
  EXPECT_STREQ(kind_name(load_machine(testsupport::data("f1.2wst"))), "2wst");
  EXPECT_STREQ(kind_name(load_machine(testsupport::data("muller_ex1.dma"))), "dma");
  EXPECT_STREQ(kind_name(load_machine(testsupport::data("f1.fot"))), "fot");
}

TEST(Io, RoundTripPreservesBehaviour) {
  auto sst = std::get<Sst>(parse_machine(print_machine(testsupport::load<Sst>("f1.sst"))));
  auto r = run_output(sst, UPWord::parse("abbb#ba#(ab)^w"), 14);
  EXPECT_EQ(r.out, "bbbaabbb#abba#");
  auto sf = twowst_to_sst_sf(testsupport::load<TwoWst>("f1.2wst"));
  auto sf2 = std::get<SstSf>(parse_machine(print_machine(sf)));
  for (auto& w : testsupport::f1_corpus()) EXPECT_EQ(run_sst_sf(sf2, w, 20).out, run_sst_sf(sf, w, 20).out);
}

TEST(Io, ErrorsCarryLineNumbers) {
  try {
    parse_machine("kind: dma\nalphabet: ab\nstates: q\ninitial: q\ndelta: q,a -> nowhere\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_machine("kind: nonsense\n"), Error);
  EXPECT_THROW(parse_machine("alphabet: ab\n"), Error);
  EXPECT_THROW(load_machine(testsupport::data("does-not-exist.sst")), Error);
}

TEST(Io, Rhs) {
  std::vector<std::string> vars{"X", "XY"};
  Alphabet out("aXY");
  auto r = parse_rhs("XYa\\X ε X", vars, out);
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r[0].var, 1);
  EXPECT_EQ(r[1].letter, 'a');
  EXPECT_EQ(r[2].letter, 'X');
  EXPECT_EQ(r[3].var, 0);
  EXPECT_EQ(parse_rhs(print_rhs(r, vars), vars, out), r);
  EXPECT_EQ(print_rhs({}, vars), "ε");
}

TEST(Io, RunnerRejectsAutomata) {
  EXPECT_THROW(runner_for(load_machine(testsupport::data("muller_ex1.dma"))), Error);
  auto run = runner_for(load_machine(testsupport::data("f1.sst")));
  EXPECT_EQ(run(UPWord::parse("ab#(a)^w"), 6).out, "baab#a");
}

TEST(Io, DotSnapshot) {
  auto g = build_output_graph(testsupport::load<Sst>("f1.sst"), UPWord::parse("ab#(a)^w"), 4);
  EXPECT_EQ(to_dot(g), read_file(testsupport::data("f1_graph.dot")));
}

TEST(Io, DotOfEmptyGraph) {
  std::string dot = to_dot(OutputGraph{});
  EXPECT_EQ(dot.rfind("digraph output {", 0), 0u);
  EXPECT_EQ(dot.find("->"), std::string::npos);
}
