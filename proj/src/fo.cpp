#include "omegatrans/fo.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace omt::fo {

namespace {

FormulaPtr make(Kind k, std::string x = {}, std::string y = {}, char c = 0,
                FormulaPtr a = nullptr, FormulaPtr b = nullptr) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->x = std::move(x);
  f->y = std::move(y);
  f->label = c;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

bool is_quant(Kind k) { return k == Kind::Exists || k == Kind::Forall; }

}  // namespace

FormulaPtr top() { return make(Kind::True); }
FormulaPtr bottom() { return make(Kind::False); }
FormulaPtr eq(std::string x, std::string y) { return make(Kind::Eq, std::move(x), std::move(y)); }
FormulaPtr leq(std::string x, std::string y) { return make(Kind::Leq, std::move(x), std::move(y)); }
FormulaPtr lt(std::string x, std::string y) { return make(Kind::Lt, std::move(x), std::move(y)); }
FormulaPtr label(char c, std::string x) { return make(Kind::Label, std::move(x), {}, c); }
FormulaPtr neg(FormulaPtr f) { return make(Kind::Not, {}, {}, 0, std::move(f)); }
FormulaPtr conj(FormulaPtr f, FormulaPtr g) { return make(Kind::And, {}, {}, 0, std::move(f), std::move(g)); }
FormulaPtr disj(FormulaPtr f, FormulaPtr g) { return make(Kind::Or, {}, {}, 0, std::move(f), std::move(g)); }
FormulaPtr impl(FormulaPtr f, FormulaPtr g) { return make(Kind::Implies, {}, {}, 0, std::move(f), std::move(g)); }
FormulaPtr exists(std::string x, FormulaPtr f) { return make(Kind::Exists, std::move(x), {}, 0, std::move(f)); }
FormulaPtr forall(std::string x, FormulaPtr f) { return make(Kind::Forall, std::move(x), {}, 0, std::move(f)); }

FormulaPtr conj_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return top();
  FormulaPtr acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

FormulaPtr disj_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return bottom();
  FormulaPtr acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

std::set<std::string> free_vars(const FormulaPtr& f) {
  switch (f->kind) {
    case Kind::True:
    case Kind::False:
      return {};
    case Kind::Eq:
    case Kind::Leq:
    case Kind::Lt:
      return {f->x, f->y};
    case Kind::Label:
      return {f->x};
    case Kind::Not:
      return free_vars(f->a);
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      auto s = free_vars(f->a);
      auto t = free_vars(f->b);
      s.insert(t.begin(), t.end());
      return s;
    }
    case Kind::Exists:
    case Kind::Forall: {
      auto s = free_vars(f->a);
      s.erase(f->x);
      return s;
    }
  }
  return {};
}

std::set<char> labels_used(const FormulaPtr& f) {
  std::set<char> out;
  std::function<void(const FormulaPtr&)> go = [&](const FormulaPtr& g) {
    if (!g) return;
    if (g->kind == Kind::Label) out.insert(g->label);
    go(g->a);
    go(g->b);
  };
  go(f);
  return out;
}

int quantifier_depth(const FormulaPtr& f) {
  if (!f) return 0;
  int d = std::max(quantifier_depth(f->a), quantifier_depth(f->b));
  return is_quant(f->kind) ? d + 1 : d;
}

FormulaPtr rename(const FormulaPtr& f, const std::map<std::string, std::string>& m) {
  if (m.empty()) return f;
  auto sub = [&](const std::string& v) {
    auto it = m.find(v);
    return it == m.end() ? v : it->second;
  };
  switch (f->kind) {
    case Kind::True:
    case Kind::False:
      return f;
    case Kind::Eq:
    case Kind::Leq:
    case Kind::Lt:
      return make(f->kind, sub(f->x), sub(f->y));
    case Kind::Label:
      return label(f->label, sub(f->x));
    case Kind::Not:
      return neg(rename(f->a, m));
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      return make(f->kind, {}, {}, 0, rename(f->a, m), rename(f->b, m));
    case Kind::Exists:
    case Kind::Forall: {
      auto inner = m;
      inner.erase(f->x);
      auto body_free = free_vars(f->a);
      bool capture = false;
      for (auto& [from, to] : inner)
        if (to == f->x && body_free.count(from)) capture = true;
      std::string z = f->x;
      FormulaPtr body = f->a;
      if (capture) {
        std::set<std::string> avoid = body_free;
        for (auto& [from, to] : inner) avoid.insert(to);
        while (avoid.count(z) || z == f->x) z += "'";
        body = rename(body, {{f->x, z}});
      }
      return make(f->kind, z, {}, 0, rename(body, inner));
    }
  }
  return f;
}

bool structurally_equal(const FormulaPtr& f, const FormulaPtr& g) {
  if (!f || !g) return !f && !g;
  if (f->kind != g->kind || f->x != g->x || f->y != g->y || f->label != g->label) return false;
  return structurally_equal(f->a, g->a) && structurally_equal(f->b, g->b);
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  FormulaPtr run() {
    auto f = implication();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error("parse", msg + " at column " + std::to_string(pos_ + 1) + " in formula '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }
  std::string ident() {
    skip();
    std::size_t b = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    }
    if (b == pos_) fail("expected variable");
    return s_.substr(b, pos_ - b);
  }

  FormulaPtr implication() {
    auto f = disjunction();
    if (eat("->")) return impl(f, implication());
    return f;
  }
  FormulaPtr disjunction() {
    auto f = conjunction();
    while (eat("|")) f = disj(f, conjunction());
    return f;
  }
  FormulaPtr conjunction() {
    auto f = unary();
    while (eat("&")) f = conj(f, unary());
    return f;
  }
  bool quantifier_ahead(char q) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != q) return false;
    std::size_t p = pos_ + 1;
    if (p >= s_.size() || !std::isspace(static_cast<unsigned char>(s_[p]))) return false;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    while (p < s_.size() && ident_char(s_[p])) ++p;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    return p < s_.size() && s_[p] == '.';
  }
  FormulaPtr unary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (s_[pos_] == '!' && !(pos_ + 1 < s_.size() && s_[pos_ + 1] == '=')) {
      ++pos_;
      return neg(unary());
    }
    if (quantifier_ahead('E') || quantifier_ahead('A')) {
      bool ex = s_[pos_] == 'E';
      ++pos_;
      std::string v = ident();
      if (!eat(".")) fail("expected '.' after quantified variable");
      auto body = implication();
      return ex ? exists(v, body) : forall(v, body);
    }
    if (s_[pos_] == '(') {
      ++pos_;
      auto f = implication();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    if (s_[pos_] == '@') {
      std::size_t b = ++pos_;
      while (pos_ < s_.size() && s_[pos_] != '(' && !std::isspace(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      std::string name = s_.substr(b, pos_ - b);
      std::vector<std::string> args;
      if (eat("(") && !eat(")")) {
        do args.push_back(ident());
        while (eat(","));
        if (!eat(")")) fail("expected ')' after macro arguments");
      }
      try {
        return shorthand_call(name, args);
      } catch (const Error& e) {
        if (e.kind() == "parse") throw;
        fail(e.what());
      }
    }
    if (s_[pos_] == 'L' && pos_ + 2 < s_.size() && s_[pos_ + 2] == '(') {
      char c = s_[pos_ + 1];
      pos_ += 3;
      std::string v = ident();
      if (!eat(")")) fail("expected ')' after label variable");
      return label(c, v);
    }
    std::string w = ident();
    if (w == "true") return top();
    if (w == "false") return bottom();
    if (eat("<=")) return leq(w, ident());
    if (eat("!=")) return neg(eq(w, ident()));
    if (eat("<")) return lt(w, ident());
    if (eat("=")) return eq(w, ident());
    fail("expected comparison after '" + w + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const FormulaPtr& f) {
  switch (f->kind) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Eq: return f->x + "=" + f->y;
    case Kind::Leq: return f->x + "<=" + f->y;
    case Kind::Lt: return f->x + "<" + f->y;
    case Kind::Label: return std::string("L") + f->label + "(" + f->x + ")";
    case Kind::Not: return "!" + print(f->a);
    case Kind::And: return "(" + print(f->a) + " & " + print(f->b) + ")";
    case Kind::Or: return "(" + print(f->a) + " | " + print(f->b) + ")";
    case Kind::Implies: return "(" + print(f->a) + " -> " + print(f->b) + ")";
    // the outer parentheses stop the scope from swallowing a right operand
    case Kind::Exists: return "(E " + f->x + ". " + print(f->a) + ")";
    case Kind::Forall: return "(A " + f->x + ". " + print(f->a) + ")";
  }
  return {};
}

// ------------------------------------------------------------- evaluation

struct Compiled::Node {
  Kind kind;
  int sx = -1, sy = -1;
  char label = 0;
  bool negate = false;  // for Or children coming from Implies antecedents
  std::vector<std::shared_ptr<const Node>> kids;  // And/Or (n-ary), Not
  // quantifiers
  int bound = -1;
  int depth = 0;
  std::vector<int> free_slots;
  std::vector<std::shared_ptr<const Node>> indep, dep;
  std::set<int> mentions;  // free slots of this subtree
  // Range narrowing for the bound slot: (other slot, offset) pairs giving
  // z >= v[slot] + offset and z <= v[slot] + offset.
  std::vector<std::pair<int, int>> lower, upper;
};

namespace {

using NodeP = std::shared_ptr<const Compiled::Node>;
using NodeM = std::shared_ptr<Compiled::Node>;

struct Compiler {
  std::map<std::string, std::vector<int>> scope;
  int next = 0;

  int slot_of(const std::string& v) {
    auto it = scope.find(v);
    if (it == scope.end() || it->second.empty())
      throw Error("fo", "variable '" + v + "' is free but not assigned");
    return it->second.back();
  }

  // Collect the operands of a chain of the same connective; Implies is
  // read as !a | b so it joins Or-chains.
  // Negated operands are split by De Morgan so that parts which do not
  // mention a bound variable can be hoisted out of its loop.
  void flatten(const FormulaPtr& f, Kind k, std::vector<std::pair<FormulaPtr, bool>>& out, bool neg_a) {
    if (f->kind == k) {
      flatten(f->a, k, out, false);
      flatten(f->b, k, out, false);
    } else if (k == Kind::Or && f->kind == Kind::Implies) {
      flatten_negated(f->a, k, out);
      flatten(f->b, k, out, false);
    } else if (f->kind == Kind::Not) {
      flatten_negated(f->a, k, out);
    } else {
      out.push_back({f, neg_a});
    }
  }

  // Operands of the chain k equivalent to !f.
  void flatten_negated(const FormulaPtr& f, Kind k, std::vector<std::pair<FormulaPtr, bool>>& out) {
    Kind dual = k == Kind::Or ? Kind::And : Kind::Or;
    if (f->kind == dual) {
      flatten_negated(f->a, k, out);
      flatten_negated(f->b, k, out);
    } else if (k == Kind::And && f->kind == Kind::Implies) {
      flatten(f->a, k, out, false);
      flatten_negated(f->b, k, out);
    } else if (f->kind == Kind::Not) {
      flatten(f->a, k, out, false);
    } else {
      out.push_back({f, true});
    }
  }

  // An existential conjunct x<z, or a universal disjunct !(x<z), bounds
  // the range of z that can change the quantifier's value.
  static void narrow(Compiled::Node& q, const Compiled::Node& c, bool ex) {
    const Compiled::Node* a = &c;
    if (!ex) {
      if (c.kind != Kind::Not) return;
      a = c.kids[0].get();
    }
    int z = q.bound;
    if (a->kind != Kind::Lt && a->kind != Kind::Leq && a->kind != Kind::Eq) return;
    if ((a->sx == z) == (a->sy == z)) return;
    int strict = a->kind == Kind::Lt ? 1 : 0;
    if (a->kind == Kind::Eq) {
      int o = a->sx == z ? a->sy : a->sx;
      q.lower.push_back({o, 0});
      q.upper.push_back({o, 0});
    } else if (a->sy == z) {
      q.lower.push_back({a->sx, strict});
    } else {
      q.upper.push_back({a->sy, -strict});
    }
  }

  NodeP wrap_not(NodeP n) {
    auto m = std::make_shared<Compiled::Node>();
    m->kind = Kind::Not;
    m->mentions = n->mentions;
    m->kids.push_back(std::move(n));
    return m;
  }

  NodeP build(const FormulaPtr& f) {
    auto n = std::make_shared<Compiled::Node>();
    n->kind = f->kind;
    switch (f->kind) {
      case Kind::True:
      case Kind::False:
        break;
      case Kind::Eq:
      case Kind::Leq:
      case Kind::Lt:
        n->sx = slot_of(f->x);
        n->sy = slot_of(f->y);
        n->mentions = {n->sx, n->sy};
        break;
      case Kind::Label:
        n->sx = slot_of(f->x);
        n->label = f->label;
        n->mentions = {n->sx};
        break;
      case Kind::Not: {
        auto k = build(f->a);
        n->mentions = k->mentions;
        n->kids.push_back(k);
        break;
      }
      case Kind::And:
      case Kind::Or:
      case Kind::Implies: {
        Kind k = f->kind == Kind::And ? Kind::And : Kind::Or;
        n->kind = k;
        std::vector<std::pair<FormulaPtr, bool>> parts;
        flatten(f, k, parts, false);
        for (auto& [g, ng] : parts) {
          NodeP c = build(g);
          if (ng) c = wrap_not(c);
          n->mentions.insert(c->mentions.begin(), c->mentions.end());
          n->kids.push_back(c);
        }
        break;
      }
      case Kind::Exists:
      case Kind::Forall: {
        int s = next++;
        scope[f->x].push_back(s);
        n->bound = s;
        n->depth = quantifier_depth(f);
        Kind k = f->kind == Kind::Exists ? Kind::And : Kind::Or;
        std::vector<std::pair<FormulaPtr, bool>> parts;
        flatten(f->a, k, parts, false);
        for (auto& [g, ng] : parts) {
          NodeP c = build(g);
          if (ng) c = wrap_not(c);
          n->mentions.insert(c->mentions.begin(), c->mentions.end());
          (c->mentions.count(s) ? n->dep : n->indep).push_back(c);
        }
        scope[f->x].pop_back();
        for (auto& c : n->dep) narrow(*n, *c, f->kind == Kind::Exists);
        n->mentions.erase(s);
        n->free_slots.assign(n->mentions.begin(), n->mentions.end());
        break;
      }
    }
    return n;
  }
};

struct Evaluator {
  const UPWord& w;
  std::size_t plen, vlen;
  int mult;
  std::vector<std::size_t>& v;

  bool all(const std::vector<NodeP>& ks) {
    for (auto& k : ks)
      if (!ev(*k)) return false;
    return true;
  }
  bool any(const std::vector<NodeP>& ks) {
    for (auto& k : ks)
      if (ev(*k)) return true;
    return false;
  }

  bool ev(const Compiled::Node& n) {
    switch (n.kind) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Eq: return v[n.sx] == v[n.sy];
      case Kind::Leq: return v[n.sx] <= v[n.sy];
      case Kind::Lt: return v[n.sx] < v[n.sy];
      case Kind::Label: return w.at(v[n.sx]) == n.label;
      case Kind::Not: return !ev(*n.kids[0]);
      case Kind::And: return all(n.kids);
      case Kind::Or: return any(n.kids);
      case Kind::Implies: return false;  // never built
      case Kind::Exists:
      case Kind::Forall: {
        bool ex = n.kind == Kind::Exists;
        if (ex && !all(n.indep)) return false;
        if (!ex && any(n.indep)) return true;
        std::size_t base = plen;
        for (int s : n.free_slots) base = std::max(base, v[s]);
        std::size_t bound = base + vlen * static_cast<std::size_t>(mult) * n.depth;
        std::size_t lo = 1, hi = bound;
        for (auto& [s, off] : n.lower)
          lo = std::max<std::size_t>(lo, static_cast<std::size_t>(static_cast<long long>(v[s]) + off));
        for (auto& [s, off] : n.upper) {
          long long h = static_cast<long long>(v[s]) + off;
          hi = h < 0 ? 0 : std::min<std::size_t>(hi, static_cast<std::size_t>(h));
        }
        std::size_t saved = v[n.bound];
        bool result = !ex;
        for (std::size_t z = lo; z <= hi; ++z) {
          v[n.bound] = z;
          if (ex ? all(n.dep) : !any(n.dep)) {
            result = ex;
            break;
          }
        }
        v[n.bound] = saved;
        return result;
      }
    }
    return false;
  }
};

}  // namespace

Compiled::Compiled(const FormulaPtr& f, std::vector<std::string> free_order)
    : free_(std::move(free_order)) {
  Compiler c;
  for (auto& name : free_) c.scope[name].push_back(c.next++);
  for (auto& fv : free_vars(f))
    if (!c.scope.count(fv)) throw Error("fo", "free variable '" + fv + "' has no assigned position");
  root_ = c.build(f);
  slots_ = c.next;
}

bool Compiled::eval_at(const UPWord& w, const std::vector<std::size_t>& vals,
                       int multiplier) const {
  if (vals.size() != free_.size()) throw Error("fo", "assignment arity mismatch");
  std::vector<std::size_t> frame(static_cast<std::size_t>(slots_), 0);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] == 0) throw Error("fo", "positions are 1-based");
    frame[i] = vals[i];
  }
  Evaluator e{w, w.prefix().size(), w.period().size(), multiplier, frame};
  return e.ev(*root_);
}

bool Compiled::eval(const UPWord& w, const std::vector<std::size_t>& vals,
                    const EvalConfig& cfg) const {
  if (cfg.base_bound < 1) throw Error("fo", "base_bound must be >= 1");
  int d = std::max(0, cfg.stability_doublings);
  int hi = cfg.base_bound << d;
  bool r = eval_at(w, vals, hi);
  if (d > 0) {
    bool lo = eval_at(w, vals, hi / 2);
    if (lo != r) throw Error("unstable", "value changed at the last horizon doubling");
  }
  return r;
}

bool eval(const FormulaPtr& f, const UPWord& w, const Assignment& a, const EvalConfig& cfg) {
  std::vector<std::string> order;
  std::vector<std::size_t> vals;
  for (auto& [k, v] : a) {
    order.push_back(k);
    vals.push_back(v);
  }
  return Compiled(f, order).eval(w, vals, cfg);
}

// -------------------------------------------------------------- shorthands

namespace {

FormulaPtr lt3(const std::string& a, const std::string& b, const std::string& c) {
  return conj(lt(a, b), lt(b, c));
}

FormulaPtr succ(const std::string& x, const std::string& y) {
  return conj(lt(x, y), neg(exists("z", conj(lt(x, "z"), lt("z", y)))));
}

FormulaPtr first(const std::string& x) {
  std::string y = x == "y" ? "w" : "y";
  return neg(exists(y, lt(y, x)));
}

FormulaPtr btw_xyz() { return disj(lt3("y", "z", "x"), lt3("x", "z", "y")); }

FormulaPtr btw_label(char c) { return exists("z", conj(label(c, "z"), btw_xyz())); }

FormulaPtr reach(char c) { return exists("y", conj(lt("x", "y"), label(c, "y"))); }

// As printed: the consequent y=y' sits outside the scopes of y and y'.
FormulaPtr u_succ_printed() {
  auto s = [](const std::string& y) {
    return exists(y, conj(lt("x", y), neg(exists("z", conj(lt("x", "z"), lt("z", y))))));
  };
  return conj(impl(conj(s("y"), s("y'")), eq("y", "y'")), s("y"));
}

FormulaPtr u_pred_printed() {
  auto p = [](const std::string& y) {
    return exists(y, conj(lt(y, "x"), neg(exists("z", conj(lt(y, "z"), lt("z", "x"))))));
  };
  return conj(impl(conj(p("y"), p("y'")), eq("y", "y'")), p("y"));
}

FormulaPtr unique_first() {
  return exists("y", conj(first("y"), forall("z", impl(first("z"), eq("z", "y")))));
}

FormulaPtr no_last() { return forall("x", exists("y", conj(lt("x", "y"), neg(eq("x", "y"))))); }

FormulaPtr is_string_printed() {
  return conj(conj(forall("x", conj(u_succ_printed(), u_pred_printed())), unique_first()), no_last());
}

FormulaPtr u_succ() {
  return conj(exists("y", succ("x", "y")),
              forall("y", forall("y'", impl(conj(succ("x", "y"), succ("x", "y'")), eq("y", "y'")))));
}

FormulaPtr u_pred() {
  return conj(exists("y", succ("y", "x")),
              forall("y", forall("y'", impl(conj(succ("y", "x"), succ("y'", "x")), eq("y", "y'")))));
}

FormulaPtr is_string() {
  return conj(conj(forall("x", conj(u_succ(), disj(first("x"), u_pred()))), unique_first()), no_last());
}

}  // namespace

FormulaPtr shorthand(const std::string& name) {
  if (name == "first") return first("x");
  if (name == "lt") return conj(leq("x", "y"), neg(eq("x", "y")));
  if (name == "gt") return neg(leq("x", "y"));
  if (name == "succ") return succ("x", "y");
  if (name == "btw") return btw_xyz();
  if (name.size() == 4 && name.rfind("btw", 0) == 0) return btw_label(name[3]);
  if (name.size() == 6 && name.rfind("reach", 0) == 0) return reach(name[5]);
  if (name == "u_succ_printed") return u_succ_printed();
  if (name == "u_pred_printed") return u_pred_printed();
  if (name == "is_string_printed") return is_string_printed();
  if (name == "u_succ") return u_succ();
  if (name == "u_pred") return u_pred();
  if (name == "is_string") return is_string();
  if (name == "is_string#")
    return conj(is_string(), exists("x", neg(reach('#'))));
  throw Error("fo", "unknown shorthand '" + name + "'");
}

FormulaPtr shorthand_call(const std::string& name, const std::vector<std::string>& args) {
  auto f = shorthand(name);
  auto fv = free_vars(f);
  std::vector<std::string> params;
  for (const char* v : {"x", "y", "z", "y'"})
    if (fv.count(v)) params.push_back(v);
  if (args.size() != params.size())
    throw Error("parse", "@" + name + " takes " + std::to_string(params.size()) + " argument(s)");
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < args.size(); ++i) m[params[i]] = args[i];
  return rename(f, m);
}

std::vector<std::string> shorthand_names() {
  return {"first", "lt", "gt", "succ", "btw", "btw#", "reach#", "u_succ_printed", "u_pred_printed",
          "is_string_printed", "u_succ", "u_pred", "is_string", "is_string#"};
}

}  // namespace omt::fo
