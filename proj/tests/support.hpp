#pragma once
// Helpers shared by the unit tests and the acceptance binary: fixture
// paths, random machines, and oracles written independently of the
// library's own algorithms.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "omegatrans/io.hpp"

namespace testsupport {

inline std::string data(const std::string& name) { return std::string(OMT_DATA_DIR) + "/" + name; }

template <class T>
T load(const std::string& name) {
  return std::get<T>(omt::load_machine(data(name)));
}

inline std::vector<omt::UPWord> f1_corpus() { return omt::read_corpus(data("f1_corpus.txt")); }

inline std::string random_string(std::mt19937& rng, const std::string& sigma, std::size_t lo,
                                 std::size_t hi) {
  std::uniform_int_distribution<std::size_t> len(lo, hi);
  std::uniform_int_distribution<std::size_t> pick(0, sigma.size() - 1);
  std::string s(len(rng), ' ');
  for (auto& c : s) c = sigma[pick(rng)];
  return s;
}

inline omt::UPWord random_word(std::mt19937& rng, const std::string& sigma) {
  return omt::UPWord(random_string(rng, sigma, 0, 4), random_string(rng, sigma, 1, 3));
}

// f1 computed by hand: every block u# becomes reverse(u) u #, and the
// #-free tail is copied.  Words with infinitely many # have no image.
inline std::optional<std::string> f1_oracle(const omt::UPWord& w, std::size_t k) {
  if (w.period().find('#') != std::string::npos) return std::nullopt;
  std::string out, block;
  for (char c : w.prefix()) {
    if (c == '#') {
      out += std::string(block.rbegin(), block.rend()) + block + "#";
      block.clear();
    } else {
      block += c;
    }
  }
  out += block;
  while (out.size() < k) out += w.period();
  return out.substr(0, k);
}

// Applies one substitution to concrete values, spelled out letter by letter.
inline std::vector<std::string> substitute(const omt::Substitution& s,
                                           const std::vector<std::string>& vals) {
  std::vector<std::string> next(vals.size());
  for (std::size_t x = 0; x < s.size(); ++x)
    for (auto& it : s[x]) next[x] += it.is_var() ? vals[it.var] : std::string(1, it.letter);
  return next;
}

// Values of all variables after the first i letters of w.
inline std::vector<std::string> values_after(const omt::Sst& t, const omt::UPWord& w, std::size_t i) {
  std::vector<std::string> vals(t.vars.size());
  int q = t.initial;
  for (std::size_t p = 1; p <= i && q >= 0; ++p) {
    char a = w.at(p);
    vals = substitute(t.update(q, a), vals);
    q = t.step(q, a);
  }
  return vals;
}

// Total deterministic SST over {a, b} whose updates are copyless: every
// variable occurs at most once across the right-hand sides of a step.
inline omt::Sst random_copyless_sst(std::mt19937& rng, int max_states = 4, int max_vars = 3) {
  omt::Sst t;
  t.input = omt::Alphabet("ab");
  t.output = omt::Alphabet("ab");
  int n = std::uniform_int_distribution<int>(1, max_states)(rng);
  int m = std::uniform_int_distribution<int>(1, max_vars)(rng);
  for (int q = 0; q < n; ++q) t.states.push_back("q" + std::to_string(q));
  for (int x = 0; x < m; ++x) t.vars.push_back(std::string(1, static_cast<char>('X' + x)));
  std::uniform_int_distribution<int> st(0, n - 1), var(0, m - 1), coin(0, 2);
  // With an accumulator, variable 0 is only ever appended to, which makes
  // every set of states usable as a Muller set.
  bool acc = coin(rng) > 0;
  t.delta.assign(n, std::vector<int>(2));
  t.rho.assign(n, std::vector<omt::Substitution>(2));
  for (int q = 0; q < n; ++q)
    for (int a = 0; a < 2; ++a) {
      t.delta[q][a] = st(rng);
      omt::Substitution s(m);
      std::vector<int> order;
      for (int x = acc ? 1 : 0; x < m; ++x) order.push_back(x);
      std::shuffle(order.begin(), order.end(), rng);
      for (int y : order)
        if (coin(rng)) s[var(rng)].push_back(omt::Item{y, 0});
      for (auto& rhs : s) {
        int letters = coin(rng);
        for (int l = 0; l < letters; ++l) {
          auto at = rhs.begin() + std::uniform_int_distribution<long>(0, static_cast<long>(rhs.size()))(rng);
          rhs.insert(at, omt::Item{-1, "ab"[coin(rng) % 2]});
        }
      }
      if (acc) s[0].insert(s[0].begin(), omt::Item{0, 0});
      t.rho[q][a] = s;
    }
  // A set P gets an output rule when some variable is only appended to on
  // the transitions inside P.
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> P;
    for (int q = 0; q < n; ++q)
      if (mask >> q & 1) P.push_back(q);
    std::vector<int> ok;
    for (int x = 0; x < m; ++x) {
      bool good = true;
      for (int q : P)
        for (int a = 0; a < 2; ++a)
          if (mask >> t.delta[q][a] & 1) {
            auto& rhs = t.rho[q][a][x];
            if (rhs.empty() || rhs[0].var != x) good = false;
          }
      if (good) ok.push_back(x);
    }
    if (ok.empty()) continue;
    t.outputs.push_back({P, {ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)]}});
  }
  t.validate();
  return t;
}

// Deterministic two-way machine without look-around over {a, b}.
inline omt::TwoWst random_2wst(std::mt19937& rng, int max_states = 3) {
  omt::TwoWst t;
  t.input = omt::Alphabet("ab");
  t.output = omt::Alphabet("ab");
  int n = std::uniform_int_distribution<int>(1, max_states)(rng);
  for (int q = 0; q < n; ++q) t.states.push_back("q" + std::to_string(q));
  std::uniform_int_distribution<int> st(0, n - 1), mv(-1, 1), coin(0, 1);
  for (int q = 0; q < n; ++q) {
    t.trans.push_back({q, -1, omt::kLeftEnd, -1, st(rng), "", 1});
    for (char a : std::string("ab")) {
      std::string out = random_string(rng, "ab", 0, 2);
      t.trans.push_back({q, -1, a, -1, st(rng), out, mv(rng)});
    }
  }
  for (int mask = 1; mask < (1 << n); ++mask)
    if (coin(rng)) {
      std::vector<int> s;
      for (int q = 0; q < n; ++q)
        if (mask >> q & 1) s.push_back(q);
      t.muller.push_back(s);
    }
  t.index();
  t.validate();
  return t;
}

}  // namespace testsupport
