#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "omegatrans/words.hpp"

namespace omt::fo {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class Kind { True, False, Eq, Leq, Lt, Label, Not, And, Or, Implies, Exists, Forall };

struct Formula {
  Kind kind;
  std::string x, y;  // variables of atoms; x is the bound variable of quantifiers
  char label = 0;
  FormulaPtr a, b;
};

FormulaPtr top();
FormulaPtr bottom();
FormulaPtr eq(std::string x, std::string y);
FormulaPtr leq(std::string x, std::string y);
FormulaPtr lt(std::string x, std::string y);
FormulaPtr label(char c, std::string x);
FormulaPtr neg(FormulaPtr f);
FormulaPtr conj(FormulaPtr f, FormulaPtr g);
FormulaPtr disj(FormulaPtr f, FormulaPtr g);
FormulaPtr impl(FormulaPtr f, FormulaPtr g);
FormulaPtr exists(std::string x, FormulaPtr f);
FormulaPtr forall(std::string x, FormulaPtr f);
FormulaPtr conj_all(const std::vector<FormulaPtr>& fs);
FormulaPtr disj_all(const std::vector<FormulaPtr>& fs);

std::set<std::string> free_vars(const FormulaPtr& f);
std::set<char> labels_used(const FormulaPtr& f);
int quantifier_depth(const FormulaPtr& f);

// Capture-avoiding renaming of free variables.
FormulaPtr rename(const FormulaPtr& f, const std::map<std::string, std::string>& m);

bool structurally_equal(const FormulaPtr& f, const FormulaPtr& g);

// Textual syntax: E x. (...), A x. (...), x<=y, x<y, x=y, x!=y, La(x),
// true, false, @shorthand(args), with ! & | -> in decreasing precedence.
FormulaPtr parse(const std::string& text);
std::string print(const FormulaPtr& f);

struct EvalConfig {
  int base_bound = 4;
  int stability_doublings = 2;
};

using Assignment = std::map<std::string, std::size_t>;

// Evaluation with scope-relative quantifier horizons.  A quantifier node
// ranges over 1..B with B = max(|u|, values of its free variables) +
// |v| * m * depth(node); m is base_bound * 2^d for d = doublings-1 and
// d = doublings and both runs must agree, else Error("unstable").
bool eval(const FormulaPtr& f, const UPWord& w, const Assignment& a,
          const EvalConfig& cfg = {});

// Precompiled form: variables become slots, subformulas that do not
// mention a quantified variable are hoisted out of its loop.
class Compiled {
 public:
  Compiled(const FormulaPtr& f, std::vector<std::string> free_order);
  bool eval(const UPWord& w, const std::vector<std::size_t>& vals,
            const EvalConfig& cfg = {}) const;
  // One horizon multiplier only, no stability check.
  bool eval_at(const UPWord& w, const std::vector<std::size_t>& vals,
               int multiplier) const;
  const std::vector<std::string>& free_order() const { return free_; }

  struct Node;

 private:
  std::vector<std::string> free_;
  std::shared_ptr<const Node> root_;
  int slots_ = 0;
};

// Catalogue: first, lt, gt, succ, btw, btw_label (pass the label as
// "btw#"), reach#, is_string, is_string_printed, u_succ, u_pred,
// is_string#.
FormulaPtr shorthand(const std::string& name);
// Shorthand with its free variables (taken in the order x, y, z, y')
// renamed to args; the parser reads this as @name(args).
FormulaPtr shorthand_call(const std::string& name, const std::vector<std::string>& args);
std::vector<std::string> shorthand_names();

}  // namespace omt::fo
