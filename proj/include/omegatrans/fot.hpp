#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegatrans/fo.hpp"
#include "omegatrans/words.hpp"

namespace omt {

// FO string transducer.  Copies are numbered from 1.  Node formulas have
// free variable x; order formulas have x (left node) and y (right node)
// and express the strict order "x^c comes before y^d".
struct Fot {
  Alphabet input, output;
  fo::FormulaPtr dom;
  int copies = 1;
  std::map<std::pair<int, char>, fo::FormulaPtr> pos;
  std::map<std::pair<int, int>, fo::FormulaPtr> ord;

  void validate() const;
};

struct FotNode {
  int copy;
  std::size_t pos;
  char label;
};

class FotEvaluator {
 public:
  explicit FotEvaluator(const Fot& t, fo::EvalConfig cfg = {});

  bool in_domain(const UPWord& w) const;
  // Throws Error("ambiguous label") when two output symbols hold.
  std::optional<char> label(const UPWord& w, int copy, std::size_t v) const;
  bool before(const UPWord& w, const FotNode& a, const FotNode& b) const;

 private:
  const Fot& t_;
  fo::EvalConfig cfg_;
  fo::Compiled dom_;
  std::map<std::pair<int, char>, fo::Compiled> pos_;
  std::map<std::pair<int, int>, fo::Compiled> ord_;
};

bool fot_domain(const Fot& t, const UPWord& w, const fo::EvalConfig& cfg = {});
std::optional<char> node_label(const Fot& t, const UPWord& w, int copy, std::size_t v,
                               const fo::EvalConfig& cfg = {});

struct FotRunOptions {
  std::size_t window = 0;     // initial window; 0 means k
  std::size_t max_window = 4096;
  bool full_order_check = false;  // verify every pair, not just neighbours
  fo::EvalConfig cfg;
};

// Output nodes with input position <= window, linearised by the order
// formulas.  Fails with Error("not string-shaped") on an order violation
// and Error("window exhausted") when the window cap is reached.
Outcome run_fot(const Fot& t, const UPWord& w, std::size_t k, const FotRunOptions& opt = {});

// The three-copy transducer for f1 over {a, b, #}.
Fot f1_fot();

}  // namespace omt
