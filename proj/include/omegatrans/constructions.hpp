#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "omegatrans/muller.hpp"
#include "omegatrans/sst.hpp"
#include "omegatrans/twowst.hpp"
#include "omegatrans/words.hpp"

namespace omt {

// A guard literal: look-ahead state p (A from p accepts the suffix that
// starts at the current letter) or look-behind state r (B from r accepts
// the prefix strictly left of the current letter).
struct GuardLit {
  bool ahead = true;
  int state = 0;
  bool operator==(const GuardLit& o) const { return ahead == o.ahead && state == o.state; }
};

// SST whose transitions also key on a valuation of the guard literals
// (bit j of the valuation is the truth value of lits[j]).
struct SstSf {
  struct Move {
    int to = -1;             // -1: undefined
    Substitution upd;
    std::uint64_t visits = 0;  // acceptance states seen by this step
  };

  Alphabet input, output;
  std::vector<std::string> states;
  std::vector<std::string> notes;  // optional description per state
  int initial = 0;
  std::vector<std::string> vars;
  int out_var = 0;
  std::vector<GuardLit> lits;
  std::optional<Dma> lookahead;
  std::optional<Dfa> lookbehind;
  // Acceptance: the union of the visits of the steps taken infinitely
  // often must be one of these sets over acc_names.
  std::vector<std::string> acc_names;
  std::vector<std::vector<int>> muller;
  std::vector<std::vector<std::vector<Move>>> delta;  // [state][symbol][valuation]
  // Set by twowst_to_sst_sf, not stored in files: moves where two
  // excursions returned in the same state and only the one from the
  // least state kept its summary entry.
  std::size_t lossy_moves = 0;

  std::size_t nvals() const { return std::size_t{1} << lits.size(); }
  int state_index(const std::string& name) const;
  int var_index(const std::string& name) const;
  // Valuations realised by some input word.
  std::vector<bool> feasible() const;
  void validate() const;
};

// Shepherdson-style simulation of a two-way machine by a one-way one;
// the variables X_q plus the output variable O.
SstSf twowst_to_sst_sf(const TwoWst& t, std::size_t cap = 100000);

// Per-position valuations of the guard literals on w.
class GuardTrack {
 public:
  GuardTrack(const SstSf& s, const UPWord& w);
  // Valuation at position i (1-based); positions must be queried in order.
  std::uint32_t at(std::size_t i);
  const std::vector<int>& eta() const { return eta_; }  // B-states before position i

 private:
  const SstSf& s_;
  const UPWord& w_;
  std::size_t next_ = 1;
  std::vector<int> eta_;
  std::vector<std::vector<bool>> la_by_phase_;
};

Outcome run_sst_sf(const SstSf& s, const UPWord& w, std::size_t k);

// ---------------------------------------------------- look-around removal

struct Config {
  int q = 0;
  std::vector<int> eta;                    // B state reached from each B state
  std::vector<std::pair<int, bool>> P;     // signed look-ahead obligations, sorted
  bool operator<(const Config& o) const;
  bool operator==(const Config& o) const { return q == o.q && eta == o.eta && P == o.P; }
};
std::string config_str(const SstSf& s, const Config& c);

Config initial_config(const SstSf& s);
// Successor of c on letter a under the guessed valuation, if consistent.
std::optional<Config> config_step(const SstSf& s, const Config& c, char a, std::uint32_t val,
                                  const std::vector<std::vector<bool>>& rsets);

// Accessible configurations from which an infinite consistent
// continuation exists, sorted by the configuration order.
std::vector<Config> useful_configs(const SstSf& s, std::size_t cap = 200000);

struct Eliminated {
  Sst sst;
  std::vector<Config> configs;  // variable block c holds the SstSf variables of configs[c]
  std::size_t block = 0;        // SstSf variables per configuration
  int out_var = 0;
  int var(std::size_t config, int v) const { return static_cast<int>(config * block) + v; }
};

Eliminated eliminate_lookaround(const SstSf& s, std::size_t cap = 20000);

// Output of the eliminated machine on w, reading the output variable of
// the configuration that the source machine's run passes through.
Outcome run_eliminated(const Eliminated& e, const SstSf& src, const UPWord& w, std::size_t k);

// ------------------------------------------------------------- comparison

using Runner = std::function<Outcome(const UPWord&, std::size_t)>;

struct CompareRow {
  UPWord word;
  std::string verdict;  // "equal", "both-reject", "mismatch"
  std::optional<std::size_t> divergence;
  std::string detail;
};

struct CompareReport {
  std::vector<CompareRow> rows;
  std::size_t mismatches() const;
  std::string tsv() const;
};

CompareReport compare_outputs(const Runner& a, const Runner& b, const std::vector<UPWord>& corpus,
                              std::size_t k);

}  // namespace omt
