#include "omegatrans/twowst.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace omt {

int TwoWst::state_index(const std::string& name) const {
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) throw Error("model", "unknown state '" + name + "'");
  return static_cast<int>(it - states.begin());
}

void TwoWst::index() {
  by_.assign(states.size(), std::vector<std::vector<int>>(input.size() + 1));
  for (std::size_t i = 0; i < trans.size(); ++i) {
    const auto& t = trans[i];
    if (t.from < 0 || t.from >= static_cast<int>(states.size()))
      throw Error("model", "transition from an unknown state");
    int slot = t.sym == kLeftEnd ? static_cast<int>(input.size()) : input.index_of(t.sym);
    if (slot < 0) throw Error("model", std::string("transition on unknown symbol '") + t.sym + "'");
    by_[t.from][slot].push_back(static_cast<int>(i));
  }
}

const std::vector<int>& TwoWst::candidates(int q, char sym) const {
  int slot = sym == kLeftEnd ? static_cast<int>(input.size()) : input.index_of(sym);
  return by_[q][slot];
}

int GuardSpace::find(const GuardContext& c) const {
  auto it = index.find(c);
  if (it == index.end()) throw Error("internal", "guard context outside the guard space");
  return it->second;
}

namespace {

bool guards_hold(const TwTransition& tr, const std::vector<bool>& la_ok,
                 const std::vector<bool>& lb_ok) {
  if (tr.la >= 0 && !la_ok[tr.la]) return false;
  if (tr.lb >= 0 && !lb_ok[tr.lb]) return false;
  return true;
}

// The unique enabled transition, or nullptr.
const TwTransition* enabled(const TwoWst& t, int q, char sym, const std::vector<bool>& la_ok,
                            const std::vector<bool>& lb_ok) {
  const TwTransition* hit = nullptr;
  for (int i : t.candidates(q, sym)) {
    const auto& tr = t.trans[i];
    if (!guards_hold(tr, la_ok, lb_ok)) continue;
    if (hit)
      throw Error("nondeterministic", "two transitions enabled in state " + t.states[q]);
    hit = &tr;
  }
  return hit;
}

std::vector<int> identity_vec(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  return v;
}

bool accepts_cycle(const TransMatrix& U, const TransMatrix& Y, const MullerFamily& f, int a) {
  int b = U.target[a];
  std::map<int, std::size_t> seen;
  std::vector<int> seq;
  while (!seen.count(b)) {
    seen[b] = seq.size();
    seq.push_back(b);
    b = Y.target[b];
  }
  Tuple acc = f.neutral();
  for (std::size_t i = seen[b]; i < seq.size(); ++i) acc = f.mul(acc, Y.tuple[seq[i]]);
  return MullerFamily::any_one(acc);
}

}  // namespace

std::vector<bool> lookahead_set(const Dma& a, const UPWord& w) {
  std::vector<bool> r(a.states.size());
  for (std::size_t p = 0; p < a.states.size(); ++p) r[p] = a.accepts_from(w, static_cast<int>(p));
  return r;
}

std::vector<std::vector<int>> lookbehind_lambdas(const Dfa& b, std::size_t cap) {
  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> todo{identity_vec(b.states.size())};
  seen.insert(todo[0]);
  while (!todo.empty()) {
    auto v = todo.back();
    todo.pop_back();
    out.push_back(v);
    for (char c : b.alphabet.symbols()) {
      auto n = v;
      for (auto& x : n) x = b.step(x, c);
      if (seen.insert(n).second) todo.push_back(n);
    }
    if (seen.size() > cap) throw Error("monoid blowup", "look-behind transformations");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<bool>> lookahead_rsets(const Dma& a, std::size_t cap) {
  auto f = a.family();
  auto mon = generate_monoid(a, cap);
  std::set<std::vector<bool>> rs;
  // element 0 is the identity, i.e. the empty period
  for (std::size_t u = 0; u < mon.elems.size(); ++u)
    for (std::size_t y = 1; y < mon.elems.size(); ++y) {
      std::vector<bool> r(a.states.size());
      for (std::size_t p = 0; p < a.states.size(); ++p)
        r[p] = accepts_cycle(mon.elems[u], mon.elems[y], f, static_cast<int>(p));
      rs.insert(r);
    }
  return {rs.begin(), rs.end()};
}

GuardSpace guard_space(const TwoWst& t, std::size_t cap) {
  GuardSpace g;
  if (t.lookbehind)
    g.lambdas = lookbehind_lambdas(*t.lookbehind, cap);
  else
    g.lambdas.push_back({});
  if (t.lookahead)
    g.rsets = lookahead_rsets(*t.lookahead, cap);
  else
    g.rsets.push_back({});
  for (auto& l : g.lambdas)
    for (auto& r : g.rsets) {
      g.index[{l, r}] = static_cast<int>(g.contexts.size());
      g.contexts.push_back({l, r});
    }
  return g;
}

GuardContext start_context(const TwoWst& t, const UPWord& after) {
  GuardContext c;
  if (t.lookbehind) c.lambda = identity_vec(t.lookbehind->states.size());
  if (t.lookahead) c.R = lookahead_set(*t.lookahead, after);
  return c;
}

void TwoWst::validate() const {
  if (states.empty()) throw Error("model", "2WST has no states");
  if (initial < 0 || initial >= static_cast<int>(states.size()))
    throw Error("model", "bad initial state");
  if (lookahead) {
    lookahead->validate();
    if (!(lookahead->alphabet == input)) throw Error("model", "look-ahead alphabet differs from input");
  }
  if (lookbehind) {
    lookbehind->validate();
    if (!(lookbehind->alphabet == input)) throw Error("model", "look-behind alphabet differs from input");
  }
  for (auto& tr : trans) {
    if (tr.to < 0 || tr.to >= static_cast<int>(states.size()))
      throw Error("model", "transition to an unknown state");
    if (tr.move < -1 || tr.move > 1) throw Error("model", "move must be -1, 0 or +1");
    if (tr.sym == kLeftEnd && tr.move == -1)
      throw Error("model", "no move left of the end-marker");
    if (tr.la >= 0 && (!lookahead || tr.la >= static_cast<int>(lookahead->states.size())))
      throw Error("model", "look-ahead guard without a matching look-ahead state");
    if (tr.lb >= 0 && (!lookbehind || tr.lb >= static_cast<int>(lookbehind->states.size())))
      throw Error("model", "look-behind guard without a matching look-behind state");
    output.check_word(tr.out, "transition output");
  }
  (void)family();
  if (by_.size() != states.size()) throw Error("internal", "transition index not built");
  // Guards on a common (state, symbol) must never hold together.
  GuardSpace g = guard_space(*this);
  for (std::size_t q = 0; q < states.size(); ++q)
    for (std::size_t s = 0; s <= input.size(); ++s) {
      const auto& cs = by_[q][s];
      for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
          const auto& a = trans[cs[i]];
          const auto& b = trans[cs[j]];
          for (auto& ctx : g.contexts) {
            std::vector<bool> la(lookahead ? lookahead->states.size() : 0);
            std::vector<bool> lb(lookbehind ? lookbehind->states.size() : 0);
            for (std::size_t p = 0; p < la.size(); ++p) la[p] = ctx.R[p];
            for (std::size_t r = 0; r < lb.size(); ++r)
              lb[r] = lookbehind->accepting[ctx.lambda[r]];
            if (guards_hold(a, la, lb) && guards_hold(b, la, lb))
              throw Error("nondeterministic", "guards of two transitions on state " + states[q] +
                                                  " are not mutually exclusive");
          }
        }
    }
}

// ------------------------------------------------------------------- runs

namespace {

struct Sum {
  int ret = -1;
  std::string vis;
  std::string out;
  bool hit = false;
};

class Runner {
 public:
  Runner(const TwoWst& t, const UPWord& w) : t_(t), w_(w), nq_(t.states.size()) {
    if (t.lookbehind) eta_ = identity_vec(t.lookbehind->states.size());
  }

  int hit_q = -1;
  std::size_t hit_pos = 0;

  // Run at position n from `cur` until the head leaves to n+1.
  Sum local(std::size_t n, int cur, const std::vector<Sum>* H) {
    Sum s;
    s.vis.assign(nq_, '0');
    std::vector<char> seen(nq_, 0);
    const char sym = n == 0 ? kLeftEnd : w_.at(n);
    const auto& la = la_at(n);
    const auto lb = lb_now();
    while (true) {
      if (seen[cur]) return s;
      seen[cur] = 1;
      s.vis[cur] = '1';
      if (cur == hit_q && n == hit_pos) s.hit = true;
      const TwTransition* tr = enabled(t_, cur, sym, la, lb);
      if (!tr) return s;
      s.out += tr->out;
      if (tr->move == 1) {
        s.ret = tr->to;
        return s;
      }
      if (tr->move == 0) {
        cur = tr->to;
        continue;
      }
      if (!H) return s;
      const Sum& h = (*H)[tr->to];
      for (std::size_t q = 0; q < nq_; ++q)
        if (h.vis[q] == '1') s.vis[q] = '1';
      s.out += h.out;
      s.hit = s.hit || h.hit;
      if (h.ret < 0) return s;
      cur = h.ret;
    }
  }

  std::vector<Sum> summaries(std::size_t n, const std::vector<Sum>* H) {
    std::vector<Sum> out(nq_);
    for (std::size_t x = 0; x < nq_; ++x) out[x] = local(n, static_cast<int>(x), H);
    return out;
  }

  // Called after finishing position n >= 1: look-behind now covers w[1..n].
  void advance_past(std::size_t n) {
    if (n >= 1 && t_.lookbehind)
      for (auto& e : eta_) e = t_.lookbehind->step(e, w_.at(n));
  }

  std::string key(std::size_t n, int s, const std::vector<Sum>& H, bool with_hit) const {
    std::string k = std::to_string(s) + "|" + std::to_string(w_.phase(n)) + "|";
    for (int e : eta_) k += std::to_string(e) + ",";
    k += "|";
    for (auto& h : H) {
      k += std::to_string(h.ret) + ":" + h.vis + (h.out.empty() ? "e" : "n");
      if (with_hit) k += h.hit ? "h" : "-";
      k += ";";
    }
    return k;
  }

 private:
  const std::vector<bool>& la_at(std::size_t n) {
    static const std::vector<bool> none;
    if (!t_.lookahead) return none;
    std::size_t ph = w_.phase(std::max<std::size_t>(n, 1));
    auto it = la_cache_.find(ph);
    if (it != la_cache_.end()) return it->second;
    return la_cache_[ph] = lookahead_set(*t_.lookahead, w_.suffix(std::max<std::size_t>(n, 1)));
  }
  std::vector<bool> lb_now() const {
    std::vector<bool> r(eta_.size());
    for (std::size_t i = 0; i < eta_.size(); ++i) r[i] = t_.lookbehind->accepting[eta_[i]];
    return r;
  }

  const TwoWst& t_;
  const UPWord& w_;
  std::size_t nq_;
  std::vector<int> eta_;
  std::unordered_map<std::size_t, std::vector<bool>> la_cache_;
};

}  // namespace

Outcome run_2wst(const TwoWst& t, const UPWord& w, std::size_t k) {
  check_input(t.input, w);
  Outcome res;
  Runner r(t, w);
  const auto fam = t.family();
  Sum first = r.local(0, t.initial, nullptr);
  std::vector<Sum> H = r.summaries(0, nullptr);
  if (first.ret < 0) {
    res.verdict = Outcome::Stuck;
    res.note = "the run never leaves the end-marker";
    return res;
  }
  std::string out = first.out;
  int s = first.ret;
  std::unordered_map<std::string, std::size_t> keys;
  std::vector<std::string> seg_vis(1);
  std::vector<bool> seg_out(1);
  bool lasso = false;
  for (std::size_t n = 1;; ++n) {
    if (!lasso) {
      auto key = r.key(n, s, H, false);
      auto it = keys.find(key);
      if (it != keys.end()) {
        lasso = true;
        std::set<int> omega;
        bool produces = false;
        for (std::size_t m = it->second; m < n; ++m) {
          for (std::size_t q = 0; q < seg_vis[m].size(); ++q)
            if (seg_vis[m][q] == '1') omega.insert(static_cast<int>(q));
          produces = produces || seg_out[m];
        }
        if (fam.match(omega) < 0) {
          res.verdict = Outcome::Rejected;
          res.note = "infinitely visited states are not a Muller set";
          return res;
        }
        if (!produces) {
          out.resize(std::max(out.size(), k), kBottom);
          break;
        }
      } else {
        keys.emplace(std::move(key), n);
      }
    }
    if (lasso && out.size() >= k) break;
    Sum seg = r.local(n, s, &H);
    if (seg.ret < 0) {
      res.verdict = Outcome::Stuck;
      res.note = "loop or missing transition at position " + std::to_string(n);
      return res;
    }
    out += seg.out;
    seg_vis.push_back(seg.vis);
    seg_out.push_back(!seg.out.empty());
    H = r.summaries(n, &H);
    r.advance_past(n);
    s = seg.ret;
  }
  res.verdict = Outcome::Accepted;
  out.resize(k, kBottom);
  res.out = out;
  return res;
}

bool reaches(const TwoWst& t, const UPWord& w, int q, std::size_t x, int q2, std::size_t y) {
  if (x == 0) throw Error("usage", "positions are 1-based");
  if (q == q2 && x == y) return true;
  Runner r(t, w);
  r.hit_q = q2;
  r.hit_pos = y;
  std::vector<Sum> H = r.summaries(0, nullptr);
  for (std::size_t n = 1; n < x; ++n) {
    H = r.summaries(n, &H);
    r.advance_past(n);
  }
  std::set<std::string> keys;
  int s = q;
  for (std::size_t n = x;; ++n) {
    if (n > y && !keys.insert(r.key(n, s, H, true)).second) return false;
    Sum seg = r.local(n, s, &H);
    if (seg.hit) return true;
    if (seg.ret < 0) return false;
    H = r.summaries(n, &H);
    r.advance_past(n);
    s = seg.ret;
  }
}

// -------------------------------------------------------------- behaviors

const char* quadrant_name(Quadrant q) {
  switch (q) {
    case Quadrant::LL: return "ll";
    case Quadrant::LR: return "lr";
    case Quadrant::RL: return "rl";
    case Quadrant::RR: return "rr";
  }
  return "?";
}

const TransMatrix& Quads::get(Quadrant q) const {
  switch (q) {
    case Quadrant::LL: return ll;
    case Quadrant::LR: return lr;
    case Quadrant::RL: return rl;
    case Quadrant::RR: return rr;
  }
  return ll;
}

std::string Quads::key() const {
  return ll.key() + "/" + lr.key() + "/" + rl.key() + "/" + rr.key();
}

namespace {
TransMatrix empty_matrix(std::size_t n) {
  TransMatrix m;
  m.target.assign(n, -1);
  m.tuple.resize(n);
  return m;
}

TransMatrix sum(const TransMatrix& a, const TransMatrix& b) {
  TransMatrix c = a;
  for (std::size_t p = 0; p < a.target.size(); ++p) {
    if (b.target[p] < 0) continue;
    if (c.target[p] >= 0)
      throw Error("internal", "two exits for one entry; the machine is not deterministic");
    c.target[p] = b.target[p];
    c.tuple[p] = b.tuple[p];
  }
  return c;
}
}  // namespace

Quads identity_quads(std::size_t n, const MullerFamily& f) {
  Quads q;
  q.ll = empty_matrix(n);
  q.rr = empty_matrix(n);
  q.lr = TransMatrix::identity(n, f);
  q.rl = TransMatrix::identity(n, f);
  return q;
}

Quads behavior(const TwoWst& t, std::string_view w, const GuardContext& ctx, bool anchored) {
  const std::size_t nq = t.states.size(), n = w.size();
  const auto fam = t.family();
  Quads res;
  res.ll = res.lr = res.rl = res.rr = empty_matrix(nq);
  if (n == 0 && !anchored) return identity_quads(nq, fam);

  // la_ok[pos][p] and lb_ok[pos][r] for pos in 0..n (0 is the end-marker).
  std::vector<std::vector<bool>> la_ok(n + 1), lb_ok(n + 1);
  if (t.lookahead) {
    const Dma& a = *t.lookahead;
    for (std::size_t pos = n; pos >= 1; --pos) {
      std::vector<bool> ok(a.states.size());
      for (std::size_t p = 0; p < a.states.size(); ++p) {
        int s = a.run_state(w.substr(pos - 1), static_cast<int>(p));
        ok[p] = ctx.R[s];
      }
      la_ok[pos] = ok;
    }
    // at the end-marker the suffix is the one seen from position 1
    la_ok[0] = n ? la_ok[1] : ctx.R;
  }
  if (t.lookbehind) {
    const Dfa& b = *t.lookbehind;
    std::vector<int> cur = ctx.lambda;
    for (std::size_t pos = 0; pos <= n; ++pos) {
      std::vector<bool> ok(cur.size());
      for (std::size_t r = 0; r < cur.size(); ++r) ok[r] = b.accepting[cur[r]];
      lb_ok[pos] = ok;
      if (pos >= 1)
        for (auto& c : cur) c = b.step(c, w[pos - 1]);
    }
    // at the end-marker and at position 1 the prefix is the same
    if (n) lb_ok[0] = lb_ok[1];
  }

  for (int side = 0; side < 2; ++side)
    for (std::size_t p = 0; p < nq; ++p) {
      std::size_t pos = side == 0 ? 1 : n;
      int cur = static_cast<int>(p);
      std::set<std::pair<int, std::size_t>> seen;
      std::vector<int> visited;
      int exit_side = -1;
      while (true) {
        if (pos == n + 1) {
          exit_side = 1;
          break;
        }
        if (pos == 0 && !anchored) {
          exit_side = 0;
          break;
        }
        if (!seen.insert({cur, pos}).second) break;
        visited.push_back(cur);
        char sym = pos == 0 ? kLeftEnd : w[pos - 1];
        const TwTransition* tr = enabled(t, cur, sym, la_ok[pos], lb_ok[pos]);
        if (!tr) break;
        cur = tr->to;
        if (tr->move == -1 && pos == 0) break;
        pos = static_cast<std::size_t>(static_cast<long long>(pos) + tr->move);
      }
      if (exit_side < 0) continue;
      visited.push_back(cur);
      TransMatrix& m = side == 0 ? (exit_side == 0 ? res.ll : res.lr)
                                 : (exit_side == 0 ? res.rl : res.rr);
      m.target[p] = cur;
      m.tuple[p] = fam.tuple_of(visited);
    }
  return res;
}

TransMatrix behavior(const TwoWst& t, std::string_view w, const GuardContext& ctx, bool anchored,
                     Quadrant q) {
  return behavior(t, w, ctx, anchored).get(q);
}

std::vector<std::pair<int, int>> behavior_pairs(const TransMatrix& m) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t p = 0; p < m.target.size(); ++p)
    if (m.target[p] >= 0) out.push_back({static_cast<int>(p), m.target[p]});
  return out;
}

TransMatrix terminal_star(const TransMatrix& m, const MullerFamily& f) {
  TransMatrix s = empty_matrix(m.target.size());
  for (std::size_t p = 0; p < m.target.size(); ++p) {
    int cur = static_cast<int>(p);
    Tuple acc = f.neutral();
    std::set<int> seen;
    bool loops = false;
    while (m.target[cur] >= 0) {
      if (!seen.insert(cur).second) {
        loops = true;
        break;
      }
      acc = f.mul(acc, m.tuple[cur]);
      cur = m.target[cur];
    }
    if (loops) continue;
    s.target[p] = cur;
    s.tuple[p] = acc;
  }
  return s;
}

Quads compose_quads(const Quads& a, const Quads& b, const MullerFamily& f) {
  auto mul = [&](const TransMatrix& x, const TransMatrix& y) { return matrix_mul(x, y, f); };
  // Zig-zags across the boundary between the two factors.
  TransMatrix right = terminal_star(mul(b.ll, a.rr), f);
  TransMatrix left = terminal_star(mul(a.rr, b.ll), f);
  Quads c;
  c.lr = mul(mul(a.lr, right), b.lr);
  c.ll = sum(a.ll, mul(mul(mul(a.lr, right), b.ll), a.rl));
  c.rl = mul(mul(b.rl, left), a.rl);
  c.rr = sum(b.rr, mul(mul(mul(b.rl, left), a.rr), b.lr));
  return c;
}

// ------------------------------------------------------------------ monoid

std::string TwElem::key() const {
  std::string k;
  for (int b : btrans) k += std::to_string(b) + ",";
  k += "#" + atrans.key() + "#";
  for (auto& q : quads) k += q.key() + "|";
  return k;
}

TwMonoid::TwMonoid(const TwoWst& t, std::size_t cap)
    : t_(t), space_(guard_space(t, cap)), fam_(t.family()) {
  if (t.lookahead) afam_ = t.lookahead->family();
}

TwElem TwMonoid::identity() const {
  TwElem e;
  if (t_.lookbehind) e.btrans = identity_vec(t_.lookbehind->states.size());
  if (t_.lookahead)
    e.atrans = TransMatrix::identity(t_.lookahead->states.size(), afam_);
  e.quads.assign(space_.contexts.size(), identity_quads(t_.states.size(), fam_));
  return e;
}

TwElem TwMonoid::of_word(std::string_view w) const {
  TwElem e;
  if (t_.lookbehind) {
    e.btrans = identity_vec(t_.lookbehind->states.size());
    for (auto& b : e.btrans) b = t_.lookbehind->run_state(w, b);
  }
  if (t_.lookahead) e.atrans = matrix_of_word(*t_.lookahead, w);
  for (auto& ctx : space_.contexts) e.quads.push_back(behavior(t_, w, ctx, false));
  return e;
}

TwElem TwMonoid::mul(const TwElem& a, const TwElem& b) const {
  TwElem c;
  c.btrans.resize(a.btrans.size());
  for (std::size_t r = 0; r < a.btrans.size(); ++r) c.btrans[r] = b.btrans[a.btrans[r]];
  if (t_.lookahead) c.atrans = matrix_mul(a.atrans, b.atrans, afam_);
  c.quads.reserve(space_.contexts.size());
  for (auto& ctx : space_.contexts) {
    GuardContext c1{ctx.lambda, ctx.R};
    for (std::size_t p = 0; p < c1.R.size(); ++p) c1.R[p] = ctx.R[b.atrans.target[p]];
    GuardContext c2{ctx.lambda, ctx.R};
    for (auto& l : c2.lambda) l = a.btrans[l];
    c.quads.push_back(compose_quads(a.quads[space_.find(c1)], b.quads[space_.find(c2)], fam_));
  }
  return c;
}

Closure<TwElem> TwMonoid::generate(std::size_t cap) const {
  std::vector<std::pair<char, TwElem>> gens;
  for (char c : t_.input.symbols()) gens.push_back({c, of_word(std::string(1, c))});
  return close_monoid(
      identity(), gens, [&](const TwElem& x, const TwElem& y) { return mul(x, y); },
      [](const TwElem& x) { return x.key(); }, cap);
}

AperiodicReport is_aperiodic_2wst(const TwoWst& t, std::size_t cap) {
  TwMonoid m(t);
  auto c = m.generate(cap);
  return check_aperiodic(
      c, [&](const TwElem& x, const TwElem& y) { return m.mul(x, y); },
      [](const TwElem& x) { return x.key(); });
}

}  // namespace omt
