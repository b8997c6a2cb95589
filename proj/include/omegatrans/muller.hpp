#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "omegatrans/words.hpp"

namespace omt {

// One coordinate of a monoid entry.  Part holds a bitmask over the
// members of the corresponding Muller set (bit k = k-th smallest member).
enum class CompKind : std::uint8_t { Zero, One, Part, Neutral };

struct Comp {
  CompKind kind = CompKind::Neutral;
  std::uint64_t mask = 0;
  bool operator==(const Comp& o) const { return kind == o.kind && mask == o.mask; }
  bool operator<(const Comp& o) const {
    return kind != o.kind ? kind < o.kind : mask < o.mask;
  }
};

using Tuple = std::vector<Comp>;

// The Muller sets of an automaton, with the entry product over them.
class MullerFamily {
 public:
  MullerFamily() = default;
  MullerFamily(std::size_t nstates, std::vector<std::vector<int>> sets);

  std::size_t arity() const { return sets_.size(); }
  std::size_t nstates() const { return nstates_; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }

  // Tuple describing a run whose witnessed states (ends included) are
  // exactly `visited`.
  Tuple tuple_of(const std::vector<int>& visited) const;
  Tuple neutral() const { return Tuple(sets_.size()); }
  Tuple mul(const Tuple& x, const Tuple& y) const;
  // Index of the Muller set equal to omega, or -1.
  int match(const std::set<int>& omega) const;
  // True when some coordinate is One: the run's state set is a Muller set.
  static bool any_one(const Tuple& t);

  std::string comp_str(std::size_t i, const Comp& c,
                       const std::vector<std::string>& names) const;
  std::string tuple_str(const Tuple& t, const std::vector<std::string>& names) const;

 private:
  std::size_t nstates_ = 0;
  std::vector<std::vector<int>> sets_;
  std::vector<std::vector<int>> pos_;  // pos_[i][state] = bit index in F_i or -1
  std::vector<std::uint64_t> full_;
};

Comp comp_mul(const Comp& x, const Comp& y, std::uint64_t full);

struct MonoidEntry {
  bool bot = true;
  Tuple tuple;
  bool operator==(const MonoidEntry& o) const {
    return bot == o.bot && (bot || tuple == o.tuple);
  }
};

MonoidEntry entry_mul(const MonoidEntry& a, const MonoidEntry& b, const MullerFamily& f);
// Only bottom + x is ever needed for deterministic machines.
MonoidEntry entry_add(const MonoidEntry& a, const MonoidEntry& b);

struct Dma {
  Alphabet alphabet;
  std::vector<std::string> states;
  int initial = 0;
  std::vector<std::vector<int>> delta;  // [state][symbol index]
  std::vector<std::vector<int>> muller;

  int state_index(const std::string& name) const;
  int step(int q, char c) const { return delta[q][alphabet.index_of(c)]; }
  int run_state(std::string_view w, int from) const;
  // States visited infinitely often on w from `from`.
  std::set<int> omega(const UPWord& w, int from) const;
  bool accepts(const UPWord& w) const { return accepts_from(w, initial); }
  bool accepts_from(const UPWord& w, int from) const;
  MullerFamily family() const { return MullerFamily(states.size(), muller); }
  void validate() const;
};

// Deterministic automaton on finite words (look-behind).
struct Dfa {
  Alphabet alphabet;
  std::vector<std::string> states;
  int initial = 0;
  std::vector<std::vector<int>> delta;
  std::vector<bool> accepting;

  int state_index(const std::string& name) const;
  int step(int q, char c) const { return delta[q][alphabet.index_of(c)]; }
  int run_state(std::string_view w, int from) const;
  void validate() const;
};

// Row-deterministic matrix: row p has its only non-bottom entry at
// column target[p] (or none when target[p] < 0).
struct TransMatrix {
  std::vector<int> target;
  std::vector<Tuple> tuple;

  static TransMatrix identity(std::size_t n, const MullerFamily& f);
  MonoidEntry at(int p, int q) const;
  bool operator==(const TransMatrix& o) const;
  std::string key() const;
};

TransMatrix matrix_of_word(const Dma& a, std::string_view w);
TransMatrix matrix_mul(const TransMatrix& a, const TransMatrix& b, const MullerFamily& f);
std::string matrix_str(const TransMatrix& m, const Dma& a);

void append_tuple_key(std::string& out, const Tuple& t);

// Breadth-first closure of generators under a product.  Elements are
// identified by their key; words[i] is a shortest word producing elems[i].
template <class E>
struct Closure {
  std::vector<E> elems;
  std::vector<std::string> words;
};

template <class E, class Mul, class Key>
Closure<E> close_monoid(const E& identity, const std::vector<std::pair<char, E>>& gens,
                        Mul mul, Key key, std::size_t cap) {
  Closure<E> c;
  std::unordered_map<std::string, std::size_t> seen;
  auto add = [&](E e, std::string w) {
    auto k = key(e);
    if (seen.count(k)) return;
    if (c.elems.size() >= cap)
      throw Error("monoid blowup", "more than " + std::to_string(cap) + " elements");
    seen.emplace(std::move(k), c.elems.size());
    c.elems.push_back(std::move(e));
    c.words.push_back(std::move(w));
  };
  add(identity, "");
  for (std::size_t i = 0; i < c.elems.size(); ++i)
    for (auto& [ch, g] : gens) {
      E prod = mul(c.elems[i], g);
      add(std::move(prod), c.words[i] + ch);
    }
  return c;
}

struct AperiodicReport {
  bool aperiodic = true;
  std::size_t monoid_size = 0;
  std::string witness;   // shortest word whose powers cycle with period > 1
  std::size_t period = 1;
};

// M is aperiodic iff every element's power sequence ends in a fixpoint.
template <class E, class Mul, class Key>
AperiodicReport check_aperiodic(const Closure<E>& c, Mul mul, Key key) {
  AperiodicReport r;
  r.monoid_size = c.elems.size();
  for (std::size_t i = 0; i < c.elems.size(); ++i) {
    std::unordered_map<std::string, std::size_t> at;
    E cur = c.elems[i];
    for (std::size_t n = 1;; ++n) {
      auto k = key(cur);
      auto it = at.find(k);
      if (it != at.end()) {
        std::size_t period = n - it->second;
        if (period > 1) {
          r.aperiodic = false;
          r.witness = c.words[i];
          r.period = period;
          return r;
        }
        break;
      }
      at.emplace(std::move(k), n);
      cur = mul(cur, c.elems[i]);
    }
  }
  return r;
}

Closure<TransMatrix> generate_monoid(const Dma& a, std::size_t cap = 1000000);
AperiodicReport is_aperiodic(const Dma& a, std::size_t cap = 1000000);

}  // namespace omt
