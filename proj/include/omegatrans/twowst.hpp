#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omegatrans/muller.hpp"
#include "omegatrans/words.hpp"

namespace omt {

// Internal symbol for the left end-marker; never part of an alphabet.
constexpr char kLeftEnd = '\x02';

struct TwTransition {
  int from = 0;
  int lb = -1;  // look-behind guard: B started here accepts the prefix; -1 = none
  char sym = 0;
  int la = -1;  // look-ahead guard: A started here accepts the suffix; -1 = none
  int to = 0;
  std::string out;
  int move = 1;
};

struct TwoWst {
  Alphabet input, output;
  std::vector<std::string> states;
  int initial = 0;
  std::vector<TwTransition> trans;
  std::vector<std::vector<int>> muller;
  std::optional<Dma> lookahead;
  std::optional<Dfa> lookbehind;

  int state_index(const std::string& name) const;
  MullerFamily family() const { return MullerFamily(states.size(), muller); }
  // Transitions leaving q on sym (kLeftEnd for the end-marker).
  const std::vector<int>& candidates(int q, char sym) const;
  void validate() const;
  void index();

 private:
  std::vector<std::vector<std::vector<int>>> by_;  // [q][sym slot]
};

// Guard contexts of a factor: lambda[r] is the look-behind state reached
// from r on everything left of the factor, R[a] tells whether the
// look-ahead automaton started in a accepts everything right of it.
struct GuardContext {
  std::vector<int> lambda;
  std::vector<bool> R;
  bool operator<(const GuardContext& o) const {
    return lambda != o.lambda ? lambda < o.lambda : R < o.R;
  }
  bool operator==(const GuardContext& o) const { return lambda == o.lambda && R == o.R; }
};

// All realizable contexts: lambda over look-behind transformations of
// finite words, R over look-ahead acceptance sets of ultimately periodic words.
struct GuardSpace {
  std::vector<std::vector<int>> lambdas;
  std::vector<std::vector<bool>> rsets;
  std::vector<GuardContext> contexts;  // lambdas x rsets
  std::map<GuardContext, int> index;

  int find(const GuardContext& c) const;
};

GuardSpace guard_space(const TwoWst& t, std::size_t cap = 100000);
std::vector<std::vector<int>> lookbehind_lambdas(const Dfa& b, std::size_t cap = 100000);
std::vector<std::vector<bool>> lookahead_rsets(const Dma& a, std::size_t cap = 100000);
// Context of a factor placed at the very start of the input followed by `after`.
GuardContext start_context(const TwoWst& t, const UPWord& after);
// Acceptance set of the look-ahead automaton on an ultimately periodic word.
std::vector<bool> lookahead_set(const Dma& a, const UPWord& w);

Outcome run_2wst(const TwoWst& t, const UPWord& w, std::size_t k);
bool reaches(const TwoWst& t, const UPWord& w, int q, std::size_t x, int q2, std::size_t y);

enum class Quadrant { LL, LR, RL, RR };
const char* quadrant_name(Quadrant q);

struct Quads {
  TransMatrix ll, lr, rl, rr;
  const TransMatrix& get(Quadrant q) const;
  std::string key() const;
  bool operator==(const Quads& o) const { return key() == o.key(); }
};

Quads identity_quads(std::size_t n, const MullerFamily& f);

// Direct simulation of w under a guard context.  With `anchored`, the
// end-marker sits left of w and leaving on the left is impossible.
Quads behavior(const TwoWst& t, std::string_view w, const GuardContext& ctx, bool anchored);
TransMatrix behavior(const TwoWst& t, std::string_view w, const GuardContext& ctx, bool anchored,
                     Quadrant q);
std::vector<std::pair<int, int>> behavior_pairs(const TransMatrix& m);

// The four-quadrant equations for the product w1.w2 under one context.
Quads compose_quads(const Quads& a, const Quads& b, const MullerFamily& f);
// Deterministic closure: follow m from each row until it is undefined.
TransMatrix terminal_star(const TransMatrix& m, const MullerFamily& f);

struct TwElem {
  std::vector<int> btrans;    // look-behind transformation
  TransMatrix atrans;         // look-ahead transition matrix
  std::vector<Quads> quads;   // per context of the guard space
  std::string key() const;
};

class TwMonoid {
 public:
  explicit TwMonoid(const TwoWst& t, std::size_t cap = 100000);
  const GuardSpace& space() const { return space_; }
  TwElem identity() const;
  TwElem of_word(std::string_view w) const;
  TwElem mul(const TwElem& a, const TwElem& b) const;
  Closure<TwElem> generate(std::size_t cap = 1000000) const;

 private:
  const TwoWst& t_;
  GuardSpace space_;
  MullerFamily fam_, afam_;
};

AperiodicReport is_aperiodic_2wst(const TwoWst& t, std::size_t cap = 1000000);

}  // namespace omt
