#include <gtest/gtest.h>

#include "omegatrans/fo.hpp"
#include "support.hpp"

using namespace omt;
using namespace omt::fo;

namespace {

const UPWord kRunning = UPWord::parse("abbb#ba#(ab)^w");

// Straightforward recursive evaluation where quantifiers range over 1..n.
bool naive(const FormulaPtr& f, const UPWord& w, std::map<std::string, std::size_t> a, std::size_t n) {
  switch (f->kind) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Eq: return a.at(f->x) == a.at(f->y);
    case Kind::Leq: return a.at(f->x) <= a.at(f->y);
    case Kind::Lt: return a.at(f->x) < a.at(f->y);
    case Kind::Label: return w.at(a.at(f->x)) == f->label;
    case Kind::Not: return !naive(f->a, w, a, n);
    case Kind::And: return naive(f->a, w, a, n) && naive(f->b, w, a, n);
    case Kind::Or: return naive(f->a, w, a, n) || naive(f->b, w, a, n);
    case Kind::Implies: return !naive(f->a, w, a, n) || naive(f->b, w, a, n);
    case Kind::Exists:
    case Kind::Forall: {
      bool ex = f->kind == Kind::Exists;
      for (std::size_t z = 1; z <= n; ++z) {
        a[f->x] = z;
        if (naive(f->a, w, a, n) == ex) return ex;
      }
      return !ex;
    }
  }
  return false;
}

// Random formula whose quantifiers are all relativized below the free
// variable n, so only positions 1..n matter.
FormulaPtr random_local(std::mt19937& rng, std::vector<std::string> vars, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  auto var = [&] { return vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)]; };
  int k = depth <= 0 ? pick(rng) % 4 : pick(rng);
  switch (k) {
    case 0: return lt(var(), var());
    case 1: return leq(var(), var());
    case 2: return label("ab"[pick(rng) % 2], var());
    case 3: return eq(var(), var());
    case 4: return neg(random_local(rng, vars, depth - 1));
    case 5: return conj(random_local(rng, vars, depth - 1), random_local(rng, vars, depth - 1));
    case 6: return disj(random_local(rng, vars, depth - 1), random_local(rng, vars, depth - 1));
    case 7: return impl(random_local(rng, vars, depth - 1), random_local(rng, vars, depth - 1));
    default: {
      std::string z = "v" + std::to_string(vars.size());
      auto inner = vars;
      inner.push_back(z);
      auto body = random_local(rng, inner, depth - 1);
      if (k == 8) return exists(z, conj(leq(z, "n"), body));
      return forall(z, impl(leq(z, "n"), body));
    }
  }
}

}  // namespace

TEST(Fo, QuantifierDepth) {
  EXPECT_EQ(quantifier_depth(parse("La(x)")), 0);
  EXPECT_EQ(quantifier_depth(shorthand("reach#")), 1);
  // forall x (u_succ ...): u_succ nests forall y, forall y', then succ's exists z.
  EXPECT_EQ(quantifier_depth(shorthand("is_string")), 4);
}

TEST(Fo, EvalExamples) {
  auto reach = shorthand("reach#");
  EXPECT_TRUE(eval(reach, kRunning, {{"x", 1}}));
  EXPECT_FALSE(eval(reach, kRunning, {{"x", 9}}));
  EXPECT_TRUE(eval(reach, kRunning, {{"x", 7}}));
  EXPECT_FALSE(eval(reach, kRunning, {{"x", 8}}));
  for (auto w : {kRunning, UPWord::parse("(a)^w"), UPWord::parse("b#(ab)^w")})
    EXPECT_TRUE(eval(shorthand("first"), w, {{"x", 1}}));
  EXPECT_FALSE(eval(shorthand("first"), kRunning, {{"x", 2}}));
}

TEST(Fo, ShorthandsAsPrinted) {
  EXPECT_TRUE(structurally_equal(shorthand("first"), parse("!E y. (y < x)")));
  EXPECT_TRUE(structurally_equal(shorthand("btw"), parse("(y < z & z < x) | (x < z & z < y)")));
  EXPECT_TRUE(structurally_equal(shorthand("reach#"), parse("E y. (x < y & L#(y))")));
  EXPECT_THROW(shorthand("nope"), Error);
}

TEST(Fo, ShorthandCalls) {
  auto f = parse("@btw#(y, x)");
  EXPECT_EQ(free_vars(f), (std::set<std::string>{"x", "y"}));
  // a # strictly between 2 and 6 on abbb#...
  EXPECT_TRUE(eval(f, kRunning, {{"y", 2}, {"x", 6}}));
  EXPECT_FALSE(eval(f, kRunning, {{"y", 2}, {"x", 4}}));
  EXPECT_THROW(parse("@btw#(x)"), Error);
}

TEST(Fo, StringShape) {
  for (auto& w : testsupport::f1_corpus()) EXPECT_TRUE(eval(shorthand("is_string"), w, {}));
  EXPECT_TRUE(eval(shorthand("is_string#"), kRunning, {}));
  EXPECT_FALSE(eval(shorthand("is_string#"), UPWord::parse("(ab#)^w"), {}));
}

TEST(Fo, ParsePrintRoundTrip) {
  for (std::string s : {"E x. (La(x) & A y. (x <= y -> !L#(y)))", "x = y | x != y", "true -> false",
                        "@reach#(z) & Lb(z)"}) {
    auto f = parse(s);
    EXPECT_TRUE(structurally_equal(parse(print(f)), f)) << s;
  }
  EXPECT_THROW(parse("E x. (La(x)"), Error);
  EXPECT_THROW(parse("x <"), Error);
}

TEST(Fo, FreeVariableNeeded) { EXPECT_THROW(eval(parse("La(x)"), kRunning, {}), Error); }

TEST(Fo, RenameAvoidsCapture) {
  auto f = rename(shorthand("reach#"), {{"x", "y"}});
  EXPECT_EQ(free_vars(f), std::set<std::string>{"y"});
  EXPECT_TRUE(eval(f, kRunning, {{"y", 1}}));
  EXPECT_FALSE(eval(f, kRunning, {{"y", 9}}));
}

TEST(Fo, AgreesWithNaiveEvaluator) {
  std::mt19937 rng(12);
  for (int n = 0; n < 300; ++n) {
    auto f = random_local(rng, {"x", "n"}, 4);
    UPWord w = testsupport::random_word(rng, "ab");
    std::size_t bound = 6;
    for (std::size_t x = 1; x <= bound; ++x) {
      std::map<std::string, std::size_t> a{{"x", x}, {"n", bound}};
      EXPECT_EQ(eval(f, w, a), naive(f, w, a, bound)) << print(f) << " on " << w.str() << " x=" << x;
    }
  }
}

TEST(Fo, DeMorganSanity) {
  std::mt19937 rng(13);
  for (int n = 0; n < 100; ++n) {
    auto f = random_local(rng, {"x", "n"}, 3);
    UPWord w = testsupport::random_word(rng, "ab");
    Assignment a{{"n", 5}};
    for (std::size_t x = 1; x <= 5; ++x) {
      a["x"] = x;
      EXPECT_EQ(eval(neg(neg(f)), w, a), eval(f, w, a));
    }
    a.erase("x");
    EXPECT_EQ(eval(forall("x", f), w, a), eval(neg(exists("x", neg(f))), w, a));
  }
}

TEST(Fo, StableUnderMoreDoublings) {
  EvalConfig more{4, 3};
  for (auto& w : testsupport::f1_corpus()) {
    EXPECT_EQ(eval(shorthand("is_string#"), w, {}), eval(shorthand("is_string#"), w, {}, more));
    for (std::size_t x = 1; x <= 12; ++x)
      EXPECT_EQ(eval(shorthand("reach#"), w, {{"x", x}}), eval(shorthand("reach#"), w, {{"x", x}}, more));
  }
}

TEST(Fo, CompiledMatchesEval) {
  auto f = parse("(@btw#(x, y) -> x < y) & !L#(x)");
  Compiled c(f, {"x", "y"});
  for (std::size_t x = 1; x <= 10; ++x)
    for (std::size_t y = 1; y <= 10; ++y)
      EXPECT_EQ(c.eval(kRunning, {x, y}), eval(f, kRunning, {{"x", x}, {"y", y}}));
}
