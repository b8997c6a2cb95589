#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "omegatrans/muller.hpp"
#include "omegatrans/words.hpp"

namespace omt {

struct Item {
  int var = -1;  // variable index, or -1 for a letter
  char letter = 0;
  bool is_var() const { return var >= 0; }
  bool operator==(const Item& o) const { return var == o.var && (var >= 0 || letter == o.letter); }
};

using Rhs = std::vector<Item>;
using Substitution = std::vector<Rhs>;  // indexed by variable

Substitution identity_subst(std::size_t nvars);
// x -> s1^(s2(x)): first s1, then s2.
Substitution compose_subst(const Substitution& s1, const Substitution& s2);
bool is_copyless(const Substitution& s);
std::vector<std::string> apply_subst(const Substitution& s, const std::vector<std::string>& vals);
std::string rhs_str(const Rhs& r, const std::vector<std::string>& vars);
Rhs rhs_var(int v);
Rhs rhs_text(std::string_view s);

struct OutputRule {
  std::vector<int> states;  // sorted
  std::vector<int> vars;
};

struct Sst {
  Alphabet input, output;
  std::vector<std::string> states;
  int initial = 0;
  std::vector<std::string> vars;
  std::vector<std::vector<int>> delta;                 // -1 where undefined
  std::vector<std::vector<Substitution>> rho;          // [state][symbol]
  std::vector<OutputRule> outputs;
  std::optional<std::vector<int>> wildcard;            // F(P) for every P
  bool copyless = true;

  int state_index(const std::string& name) const;
  int var_index(const std::string& name) const;
  int step(int q, char c) const { return delta[q][input.index_of(c)]; }
  const Substitution& update(int q, char c) const { return rho[q][input.index_of(c)]; }
  std::optional<std::vector<int>> output_for(const std::set<int>& P) const;
  // Muller sets of the flow monoid: dom(F); none when the output is a wildcard.
  MullerFamily family() const;
  void validate() const;
};

struct SstLasso {
  std::vector<int> run;  // q_0 .. q_{j0+L}
  std::size_t j0 = 0, L = 0;
  std::set<int> P;
  int state_at(std::size_t i) const { return run[i < j0 ? i : j0 + (i - j0) % L]; }
};

std::optional<SstLasso> sst_lasso(const Sst& t, const UPWord& w);

Outcome run_output(const Sst& t, const UPWord& w, std::size_t k);

// ----------------------------------------------------------- flow monoid

struct FlowEntry {
  bool bot = true;
  int count = 0;
  Tuple tuple;
};

struct FlowMatrix {
  std::size_t nvars = 0;
  std::vector<int> target;
  std::vector<Tuple> tuple;
  std::vector<std::vector<std::uint8_t>> count;  // [p][X*nvars+Y], saturating at 2

  static FlowMatrix identity(std::size_t nstates, std::size_t nvars, const MullerFamily& f);
  FlowEntry at(int p, int X, int q, int Y) const;
  std::string key() const;
  bool operator==(const FlowMatrix& o) const { return key() == o.key(); }
};

FlowMatrix flow_matrix(const Sst& t, std::string_view w);
FlowMatrix flow_mul(const FlowMatrix& a, const FlowMatrix& b, const MullerFamily& f);
std::string flow_matrix_str(const FlowMatrix& m, const Sst& t);
Closure<FlowMatrix> sst_monoid(const Sst& t, std::size_t cap = 1000000);

struct BoundedReport {
  bool bounded = true;
  std::size_t monoid_size = 0;
  std::string witness;
};
BoundedReport is_1_bounded(const Sst& t, std::size_t cap = 1000000);
AperiodicReport is_aperiodic_sst(const Sst& t, std::size_t cap = 1000000);

// ------------------------------------------------- run-level semantics
//
// Positions follow the output-graph convention: (X,i) is the content of
// X after the first i letters, i >= 0; step i reads s[i] from q_{i-1}.

class SstRun {
 public:
  SstRun(const Sst& t, const UPWord& w);

  const Sst& sst() const { return t_; }
  const UPWord& word() const { return w_; }
  const SstLasso& lasso() const { return lasso_; }
  const std::vector<int>& out_vars() const { return out_vars_; }
  int state_at(std::size_t i) const { return lasso_.state_at(i); }
  const Substitution& update_at(std::size_t step) const;
  // Representative of i in the eventually periodic run.
  std::size_t phase(std::size_t i) const;

  long long flows(int X, std::size_t i, int Y, std::size_t j) const;
  bool useful(int X, std::size_t i) const;
  std::vector<std::string> valuation(std::size_t i) const;

  enum Side { In, Out };
  bool path_conditions(int X, std::size_t i, Side d, int Y, std::size_t j, Side e) const;

 private:
  std::set<int> advance(std::set<int> s, std::size_t step) const;
  std::set<int> carry(int X, std::size_t from, std::size_t to) const;
  bool concat_after(std::set<int> vx, std::set<int> vy, std::size_t k) const;

  const Sst& t_;
  UPWord w_;
  SstLasso lasso_;
  std::vector<int> out_vars_;
  std::set<int> out_set_;
};

struct GraphNode {
  int var;
  std::size_t pos;
  bool out;
  bool operator<(const GraphNode& o) const {
    if (pos != o.pos) return pos < o.pos;
    if (var != o.var) return var < o.var;
    return out < o.out;
  }
  bool operator==(const GraphNode& o) const {
    return var == o.var && pos == o.pos && out == o.out;
  }
};

struct GraphEdge {
  GraphNode from, to;
  std::string label;
};

struct OutputGraph {
  std::vector<std::string> vars;
  std::size_t horizon = 0;
  std::vector<GraphNode> nodes;  // sorted
  std::vector<GraphEdge> edges;  // sorted by (from, to)
  std::set<std::string> labels;  // the strings O_T used on edges
};

OutputGraph build_output_graph(const SstRun& run, std::size_t horizon);
OutputGraph build_output_graph(const Sst& t, const UPWord& w, std::size_t horizon);
std::string node_name(const OutputGraph& g, const GraphNode& n);
std::string to_dot(const OutputGraph& g);

}  // namespace omt
