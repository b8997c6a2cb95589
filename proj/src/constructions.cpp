#include "omegatrans/constructions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace omt {

int SstSf::state_index(const std::string& name) const {
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) throw Error("model", "unknown state '" + name + "'");
  return static_cast<int>(it - states.begin());
}

int SstSf::var_index(const std::string& name) const {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw Error("model", "unknown variable '" + name + "'");
  return static_cast<int>(it - vars.begin());
}

namespace {

bool bit(std::uint32_t v, std::size_t j) { return (v >> j) & 1U; }

bool consistent_rset(const std::vector<bool>& R, const std::vector<std::pair<int, bool>>& obligations) {
  for (auto& [s, sign] : obligations)
    if (R[s] != sign) return false;
  return true;
}

}  // namespace

std::vector<bool> SstSf::feasible() const {
  std::vector<bool> ok(nvals(), false);
  std::vector<std::vector<bool>> rsets;
  std::vector<std::vector<int>> lambdas;
  if (lookahead) rsets = lookahead_rsets(*lookahead);
  if (lookbehind) lambdas = lookbehind_lambdas(*lookbehind);
  for (std::uint32_t v = 0; v < nvals(); ++v) {
    std::vector<std::pair<int, bool>> ahead;
    bool behind_ok = true, any_behind = false;
    for (std::size_t j = 0; j < lits.size(); ++j)
      if (lits[j].ahead) ahead.push_back({lits[j].state, bit(v, j)});
      else any_behind = true;
    if (any_behind) {
      behind_ok = std::any_of(lambdas.begin(), lambdas.end(), [&](const std::vector<int>& l) {
        for (std::size_t j = 0; j < lits.size(); ++j)
          if (!lits[j].ahead && lookbehind->accepting[l[lits[j].state]] != bit(v, j)) return false;
        return true;
      });
    }
    bool ahead_ok = ahead.empty() || std::any_of(rsets.begin(), rsets.end(), [&](auto& R) {
                      return consistent_rset(R, ahead);
                    });
    ok[v] = behind_ok && ahead_ok;
  }
  return ok;
}

void SstSf::validate() const {
  if (states.empty()) throw Error("model", "machine has no states");
  if (initial < 0 || initial >= static_cast<int>(states.size()))
    throw Error("model", "bad initial state");
  if (lits.size() > 20) throw Error("model", "too many guard literals");
  if (out_var < 0 || out_var >= static_cast<int>(vars.size())) throw Error("model", "bad output variable");
  if (lookahead) lookahead->validate();
  if (lookbehind) lookbehind->validate();
  for (auto& l : lits) {
    const std::size_t n = l.ahead ? (lookahead ? lookahead->states.size() : 0)
                                  : (lookbehind ? lookbehind->states.size() : 0);
    if (l.state < 0 || static_cast<std::size_t>(l.state) >= n)
      throw Error("model", "guard literal without a matching look-around state");
  }
  if (acc_names.size() > 64) throw Error("model", "at most 64 acceptance states");
  MullerFamily(acc_names.size(), muller);
  if (delta.size() != states.size()) throw Error("model", "transition table size");
  for (std::size_t q = 0; q < states.size(); ++q) {
    if (delta[q].size() != input.size()) throw Error("model", "transition row size");
    for (std::size_t a = 0; a < input.size(); ++a) {
      if (delta[q][a].size() != nvals()) throw Error("model", "transition valuation size");
      for (auto& mv : delta[q][a]) {
        if (mv.to < 0) continue;
        if (mv.to >= static_cast<int>(states.size())) throw Error("model", "bad target state");
        if (mv.upd.size() != vars.size()) throw Error("model", "update arity");
        for (auto& r : mv.upd)
          for (auto& it : r) {
            if (it.is_var() && it.var >= static_cast<int>(vars.size())) throw Error("model", "bad variable");
            if (!it.is_var() && !output.contains(it.letter))
              throw Error("model", "update letter outside the output alphabet");
          }
        if (!is_copyless(mv.upd))
          throw Error("copyless violation", "update on " + states[q] + "," + input.at(a) +
                                                " uses a variable more than once");
      }
    }
  }
}

// ------------------------------------------------------- 2WST to SST_sf

namespace {

using Summary = std::vector<std::optional<std::pair<int, std::uint64_t>>>;

struct PosStep {
  bool ok = false;
  int main_to = -1;
  std::uint64_t visits = 0;
  Summary f;
  Substitution upd;
  std::size_t dropped = 0;  // defined entries lost to the one-per-exit rule
};

class Simulator {
 public:
  Simulator(const TwoWst& t, const std::vector<GuardLit>& lits) : t_(t), lits_(lits) {}

  // Process one position (sym, or kLeftEnd) whose guards are given by val.
  // `main` is the state in which the run first arrives there; `old` the
  // summary of the position to its left.
  PosStep step(char sym, std::uint32_t val, int main, const Summary& old) const {
    const std::size_t nq = t_.states.size();
    const int O = static_cast<int>(nq);
    std::vector<bool> la(t_.lookahead ? t_.lookahead->states.size() : 0);
    std::vector<bool> lb(t_.lookbehind ? t_.lookbehind->states.size() : 0);
    for (std::size_t j = 0; j < lits_.size(); ++j)
      (lits_[j].ahead ? la : lb)[lits_[j].state] = bit(val, j);

    struct Res {
      int target = -1;
      std::uint64_t mask = 0;
      Rhs rhs;
    };
    std::vector<Res> res(nq);
    std::vector<int> mark(nq, 0);
    std::function<void(int)> go = [&](int p) {
      if (mark[p]) return;  // done, or on the stack (a loop stays undefined)
      mark[p] = 1;
      const TwTransition* tr = nullptr;
      for (int i : t_.candidates(p, sym)) {
        const auto& c = t_.trans[i];
        if (c.la >= 0 && !la[c.la]) continue;
        if (c.lb >= 0 && !lb[c.lb]) continue;
        if (tr) throw Error("nondeterministic", "two transitions enabled in state " + t_.states[p]);
        tr = &c;
      }
      Res r;
      if (tr) {
        const std::uint64_t me = std::uint64_t{1} << p;
        Rhs text = rhs_text(tr->out);
        if (tr->move == 1) {
          r = {tr->to, me, text};
        } else if (tr->move == 0) {
          go(tr->to);
          const Res& n = res[tr->to];
          if (n.target >= 0) {
            r = {n.target, me | n.mask, text};
            r.rhs.insert(r.rhs.end(), n.rhs.begin(), n.rhs.end());
          }
        } else if (old[tr->to]) {
          auto [back, m] = *old[tr->to];
          go(back);
          const Res& n = res[back];
          if (n.target >= 0) {
            r = {n.target, me | m | n.mask, text};
            r.rhs.push_back(Item{tr->to, 0});
            r.rhs.insert(r.rhs.end(), n.rhs.begin(), n.rhs.end());
          }
        }
      }
      res[p] = std::move(r);
      mark[p] = 2;
    };
    for (std::size_t p = 0; p < nq; ++p) go(static_cast<int>(p));

    PosStep out;
    if (res[main].target < 0) return out;
    out.ok = true;
    out.main_to = res[main].target;
    out.visits = res[main].mask;
    out.upd.assign(nq + 1, Rhs{});
    out.upd[O] = rhs_var(O);
    out.upd[O].insert(out.upd[O].end(), res[main].rhs.begin(), res[main].rhs.end());
    out.f.assign(nq, std::nullopt);
    // Runs that share an exit share old variables; keep one per exit.
    // Everything merging with the main run is consumed by O.
    std::map<int, int> keep;
    for (std::size_t p = 0; p < nq; ++p) {
      const int T = res[p].target;
      if (T < 0 || T == out.main_to) continue;
      auto it = keep.find(T);
      if (it == keep.end())
        keep[T] = static_cast<int>(p);  // the least source state wins
      else
        ++out.dropped;
    }
    for (auto [T, p] : keep) {
      out.f[p] = {{T, res[p].mask}};
      out.upd[p] = res[p].rhs;
    }
    return out;
  }

 private:
  const TwoWst& t_;
  const std::vector<GuardLit>& lits_;
};

std::string summary_note(const TwoWst& t, int main, const Summary& f) {
  std::string s = t.states[main] + " |";
  for (std::size_t p = 0; p < f.size(); ++p) {
    s += " " + t.states[p] + "->";
    if (!f[p]) {
      s += "-";
      continue;
    }
    s += t.states[f[p]->first] + "{";
    bool first = true;
    for (std::size_t q = 0; q < t.states.size(); ++q)
      if (f[p]->second >> q & 1) {
        if (!first) s += ",";
        first = false;
        s += t.states[q];
      }
    s += "}";
  }
  return s;
}

}  // namespace

SstSf twowst_to_sst_sf(const TwoWst& t, std::size_t cap) {
  if (t.states.size() > 63) throw Error("model", "at most 63 states are supported");
  SstSf s;
  s.input = t.input;
  s.output = t.output;
  s.lookahead = t.lookahead;
  s.lookbehind = t.lookbehind;
  s.acc_names = t.states;
  s.muller = t.muller;
  for (auto& tr : t.trans) {
    if (tr.la >= 0 && std::find(s.lits.begin(), s.lits.end(), GuardLit{true, tr.la}) == s.lits.end())
      s.lits.push_back({true, tr.la});
    if (tr.lb >= 0 && std::find(s.lits.begin(), s.lits.end(), GuardLit{false, tr.lb}) == s.lits.end())
      s.lits.push_back({false, tr.lb});
  }
  std::sort(s.lits.begin(), s.lits.end(), [](const GuardLit& a, const GuardLit& b) {
    return a.ahead != b.ahead ? a.ahead > b.ahead : a.state < b.state;
  });
  const std::size_t nq = t.states.size();
  for (std::size_t p = 0; p < nq; ++p) s.vars.push_back("X" + t.states[p]);
  s.vars.push_back("O");
  s.out_var = static_cast<int>(nq);

  const auto feasible = s.feasible();
  Simulator sim(t, s.lits);
  struct Node {
    bool init;
    int main;
    Summary f;
  };
  std::vector<Node> nodes{{true, t.initial, Summary(nq)}};
  std::map<std::string, int> ids;
  auto key_of = [&](int main, const Summary& f) {
    std::string k = std::to_string(main);
    for (auto& e : f) k += e ? ";" + std::to_string(e->first) + ":" + std::to_string(e->second) : ";-";
    return k;
  };
  auto intern = [&](int main, Summary f) {
    auto k = key_of(main, f);
    auto it = ids.find(k);
    if (it != ids.end()) return it->second;
    if (nodes.size() >= cap) throw Error("state blowup", "more than " + std::to_string(cap) + " states");
    ids[k] = static_cast<int>(nodes.size());
    nodes.push_back({false, main, std::move(f)});
    return static_cast<int>(nodes.size() - 1);
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::vector<std::vector<SstSf::Move>> row(t.input.size(), std::vector<SstSf::Move>(s.nvals()));
    for (std::size_t a = 0; a < t.input.size(); ++a)
      for (std::uint32_t v = 0; v < s.nvals(); ++v) {
        if (!feasible[v]) continue;
        Node cur = nodes[i];  // copy: intern may reallocate
        Substitution pre = identity_subst(nq + 1);
        std::uint64_t visits = 0;
        std::size_t z_dropped = 0;
        if (cur.init) {
          PosStep z = sim.step(kLeftEnd, v, cur.main, cur.f);
          if (!z.ok) continue;
          pre = z.upd;
          visits = z.visits;
          z_dropped = z.dropped;
          cur.main = z.main_to;
          cur.f = z.f;
        }
        PosStep r = sim.step(t.input.at(a), v, cur.main, cur.f);
        if (z_dropped + r.dropped) ++s.lossy_moves;  // counted even if the move dies
        if (!r.ok) continue;
        SstSf::Move mv;
        mv.upd = compose_subst(pre, r.upd);
        mv.visits = visits | r.visits;
        mv.to = intern(r.main_to, r.f);
        row[a][v] = std::move(mv);
      }
    s.delta.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    s.states.push_back("s" + std::to_string(i));
    s.notes.push_back(nodes[i].init ? "start, before the end-marker"
                                    : summary_note(t, nodes[i].main, nodes[i].f));
  }
  s.initial = 0;
  s.validate();
  return s;
}

// --------------------------------------------------------------- running

GuardTrack::GuardTrack(const SstSf& s, const UPWord& w) : s_(s), w_(w) {
  if (s.lookbehind) {
    eta_.resize(s.lookbehind->states.size());
    for (std::size_t r = 0; r < eta_.size(); ++r) eta_[r] = static_cast<int>(r);
  }
  la_by_phase_.resize(w.span() + 1);
}

std::uint32_t GuardTrack::at(std::size_t i) {
  if (i != next_) throw Error("internal", "guard positions must be visited in order");
  ++next_;
  std::uint32_t v = 0;
  std::size_t ph = w_.phase(i);
  for (std::size_t j = 0; j < s_.lits.size(); ++j) {
    const auto& l = s_.lits[j];
    bool b;
    if (l.ahead) {
      auto& la = la_by_phase_[ph];
      if (la.empty()) la = lookahead_set(*s_.lookahead, w_.suffix(i));
      b = la[l.state];
    } else {
      b = s_.lookbehind->accepting[eta_[l.state]];
    }
    if (b) v |= std::uint32_t{1} << j;
  }
  for (auto& e : eta_) e = s_.lookbehind->step(e, w_.at(i));
  return v;
}

Outcome run_sst_sf(const SstSf& s, const UPWord& w, std::size_t k) {
  check_input(s.input, w);
  Outcome res;
  GuardTrack g(s, w);
  MullerFamily fam(s.acc_names.size(), s.muller);
  std::vector<std::string> vals(s.vars.size());
  int state = s.initial;
  std::unordered_map<std::string, std::size_t> keys;
  std::vector<std::uint64_t> visits{0};
  std::vector<std::size_t> olen{0};
  bool lasso = false;
  for (std::size_t i = 1;; ++i) {
    if (!lasso) {
      std::string key = std::to_string(state) + "|" + std::to_string(w.phase(i)) + "|";
      for (int e : g.eta()) key += std::to_string(e) + ",";
      key += "|";
      for (auto& v : vals) key += v.empty() ? '0' : '1';
      auto it = keys.find(key);
      if (it != keys.end()) {
        lasso = true;
        std::uint64_t m = 0;
        for (std::size_t j = it->second; j < i; ++j) m |= visits[j];
        std::set<int> omega;
        for (std::size_t q = 0; q < s.acc_names.size(); ++q)
          if (m >> q & 1) omega.insert(static_cast<int>(q));
        if (fam.match(omega) < 0) {
          res.verdict = Outcome::Rejected;
          res.note = "infinitely visited states are not a Muller set";
          return res;
        }
        if (olen[it->second - 1] == vals[s.out_var].size()) {
          res.out = vals[s.out_var].substr(0, k);
          res.out.resize(k, kBottom);
          res.verdict = Outcome::Accepted;
          return res;
        }
      } else {
        keys.emplace(std::move(key), i);
      }
    }
    if (lasso && vals[s.out_var].size() >= k) break;
    std::uint32_t v = g.at(i);
    const auto& mv = s.delta[state][s.input.index_of(w.at(i))][v];
    if (mv.to < 0) {
      res.verdict = Outcome::Stuck;
      res.note = "no transition at position " + std::to_string(i);
      return res;
    }
    vals = apply_subst(mv.upd, vals);
    visits.push_back(mv.visits);
    olen.push_back(vals[s.out_var].size());
    state = mv.to;
  }
  res.verdict = Outcome::Accepted;
  res.out = vals[s.out_var].substr(0, k);
  return res;
}

// ------------------------------------------------------ configurations

bool Config::operator<(const Config& o) const {
  if (q != o.q) return q < o.q;
  if (eta != o.eta) return eta < o.eta;
  return P < o.P;
}

std::string config_str(const SstSf& s, const Config& c) {
  std::string out = "(" + s.states[c.q] + ", [";
  for (std::size_t r = 0; r < c.eta.size(); ++r) {
    if (r) out += " ";
    out += s.lookbehind->states[c.eta[r]];
  }
  out += "], {";
  for (std::size_t i = 0; i < c.P.size(); ++i) {
    if (i) out += " ";
    out += (c.P[i].second ? "+" : "-") + s.lookahead->states[c.P[i].first];
  }
  return out + "})";
}

Config initial_config(const SstSf& s) {
  Config c;
  c.q = s.initial;
  if (s.lookbehind)
    for (std::size_t r = 0; r < s.lookbehind->states.size(); ++r) c.eta.push_back(static_cast<int>(r));
  return c;
}

std::optional<Config> config_step(const SstSf& s, const Config& c, char a, std::uint32_t val,
                                  const std::vector<std::vector<bool>>& rsets) {
  for (std::size_t j = 0; j < s.lits.size(); ++j)
    if (!s.lits[j].ahead && s.lookbehind->accepting[c.eta[s.lits[j].state]] != bit(val, j))
      return std::nullopt;
  const auto& mv = s.delta[c.q][s.input.index_of(a)][val];
  if (mv.to < 0) return std::nullopt;
  std::set<std::pair<int, bool>> now(c.P.begin(), c.P.end());
  for (std::size_t j = 0; j < s.lits.size(); ++j)
    if (s.lits[j].ahead) now.insert({s.lits[j].state, bit(val, j)});
  Config n;
  n.q = mv.to;
  n.eta = c.eta;
  for (auto& e : n.eta) e = s.lookbehind->step(e, a);
  std::set<std::pair<int, bool>> next;
  for (auto [p, sign] : now) next.insert({s.lookahead->step(p, a), sign});
  n.P.assign(next.begin(), next.end());
  for (std::size_t i = 0; i + 1 < n.P.size(); ++i)
    if (n.P[i].first == n.P[i + 1].first) return std::nullopt;
  if (!n.P.empty() &&
      std::none_of(rsets.begin(), rsets.end(), [&](auto& R) { return consistent_rset(R, n.P); }))
    return std::nullopt;
  return n;
}

std::vector<Config> useful_configs(const SstSf& s, std::size_t cap) {
  const auto feasible = s.feasible();
  std::vector<std::vector<bool>> rsets;
  if (s.lookahead) rsets = lookahead_rsets(*s.lookahead);
  std::map<Config, int> id;
  std::vector<Config> all{initial_config(s)};
  id[all[0]] = 0;
  std::vector<std::set<int>> succ;
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::set<int> out;
    for (char a : s.input.symbols())
      for (std::uint32_t v = 0; v < s.nvals(); ++v) {
        if (!feasible[v]) continue;
        auto n = config_step(s, all[i], a, v, rsets);
        if (!n) continue;
        auto [it, fresh] = id.emplace(*n, static_cast<int>(all.size()));
        if (fresh) {
          if (all.size() >= cap) throw Error("state blowup", "too many configurations");
          all.push_back(*n);
        }
        out.insert(it->second);
      }
    succ.push_back(std::move(out));
  }
  // Keep configurations with an infinite continuation.
  std::vector<bool> alive(all.size(), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!alive[i]) continue;
      bool any = std::any_of(succ[i].begin(), succ[i].end(), [&](int j) { return alive[j]; });
      if (!any) {
        alive[i] = false;
        changed = true;
      }
    }
  }
  std::vector<Config> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (alive[i]) out.push_back(all[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// -------------------------------------------------------- elimination

Eliminated eliminate_lookaround(const SstSf& s, std::size_t cap) {
  Eliminated e;
  e.configs = useful_configs(s);
  e.block = s.vars.size();
  e.out_var = s.out_var;
  const auto feasible = s.feasible();
  std::vector<std::vector<bool>> rsets;
  if (s.lookahead) rsets = lookahead_rsets(*s.lookahead);
  auto cidx = [&](const Config& c) -> int {
    auto it = std::lower_bound(e.configs.begin(), e.configs.end(), c);
    return it != e.configs.end() && *it == c ? static_cast<int>(it - e.configs.begin()) : -1;
  };
  Sst& t = e.sst;
  t.input = s.input;
  t.output = s.output;
  t.copyless = false;
  t.wildcard = std::vector<int>{};
  for (std::size_t c = 0; c < e.configs.size(); ++c)
    for (auto& v : s.vars) t.vars.push_back(v + "_" + std::to_string(c));
  const std::size_t nv = t.vars.size();

  std::vector<std::vector<int>> subsets;
  std::map<std::vector<int>, int> sid;
  int c0 = cidx(initial_config(s));
  subsets.push_back(c0 >= 0 ? std::vector<int>{c0} : std::vector<int>{});
  sid[subsets[0]] = 0;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::vector<int> drow(s.input.size(), -1);
    std::vector<Substitution> rrow(s.input.size(), Substitution(nv));
    for (std::size_t a = 0; a < s.input.size(); ++a) {
      const char sym = s.input.at(a);
      std::map<int, std::pair<int, std::uint32_t>> pred;  // successor -> least predecessor
      for (int c : subsets[i])
        for (std::uint32_t v = 0; v < s.nvals(); ++v) {
          if (!feasible[v]) continue;
          auto n = config_step(s, e.configs[c], sym, v, rsets);
          if (!n) continue;
          int ci = cidx(*n);
          if (ci >= 0) pred.emplace(ci, std::make_pair(c, v));
        }
      if (pred.empty()) continue;
      std::vector<int> next;
      Substitution& upd = rrow[a];
      for (auto& [ci, pv] : pred) {
        next.push_back(ci);
        auto [c, v] = pv;
        const auto& src = s.delta[e.configs[c].q][a][v].upd;
        for (std::size_t x = 0; x < e.block; ++x) {
          Rhs r = src[x];
          for (auto& it : r)
            if (it.is_var()) it.var = e.var(c, it.var);
          upd[e.var(ci, static_cast<int>(x))] = std::move(r);
        }
      }
      auto [it, fresh] = sid.emplace(next, static_cast<int>(subsets.size()));
      if (fresh) {
        if (subsets.size() >= cap) throw Error("state blowup", "too many subset states");
        subsets.push_back(next);
      }
      drow[a] = it->second;
    }
    t.delta.push_back(std::move(drow));
    t.rho.push_back(std::move(rrow));
  }
  for (std::size_t i = 0; i < subsets.size(); ++i) t.states.push_back("S" + std::to_string(i));
  t.initial = 0;
  t.validate();
  return e;
}

Outcome run_eliminated(const Eliminated& e, const SstSf& src, const UPWord& w, std::size_t k) {
  Outcome ref = run_sst_sf(src, w, k);
  if (!ref.accepted()) return ref;
  const std::size_t L = std::min(ref.out.find(kBottom), ref.out.size());
  std::vector<std::vector<bool>> rsets;
  if (src.lookahead) rsets = lookahead_rsets(*src.lookahead);
  GuardTrack g(src, w);
  Config c = initial_config(src);
  int state = e.sst.initial;
  std::vector<std::string> vals(e.sst.vars.size());
  const std::size_t limit = 100000 + 50 * k * w.span();
  for (std::size_t i = 1; i <= limit; ++i) {
    auto it = std::lower_bound(e.configs.begin(), e.configs.end(), c);
    if (it == e.configs.end() || !(*it == c))
      throw Error("internal", "the source run left the useful configurations");
    const std::string& o = vals[e.var(it - e.configs.begin(), e.out_var)];
    if (o.size() >= L) {
      Outcome res;
      res.verdict = Outcome::Accepted;
      res.out = o.substr(0, L);
      res.out.resize(k, kBottom);
      return res;
    }
    auto n = config_step(src, c, w.at(i), g.at(i), rsets);
    int next = e.sst.step(state, w.at(i));
    if (!n || next < 0) throw Error("internal", "the eliminated machine lost the source run");
    vals = apply_subst(e.sst.update(state, w.at(i)), vals);
    state = next;
    c = *n;
  }
  throw Error("internal", "output did not grow to the reference length");
}

// ---------------------------------------------------------- comparison

std::size_t CompareReport::mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](auto& r) { return r.verdict == "mismatch"; }));
}

std::string CompareReport::tsv() const {
  std::string s = "word\tverdict\tdivergence_index\n";
  for (auto& r : rows)
    s += r.word.str() + "\t" + r.verdict + "\t" +
         (r.divergence ? std::to_string(*r.divergence) : std::string("-")) + "\n";
  return s;
}

CompareReport compare_outputs(const Runner& a, const Runner& b, const std::vector<UPWord>& corpus,
                              std::size_t k) {
  CompareReport rep;
  for (auto& w : corpus) {
    CompareRow row{w, "", std::nullopt, ""};
    try {
      Outcome x = a(w, k), y = b(w, k);
      if (!x.accepted() && !y.accepted()) {
        row.verdict = "both-reject";
      } else if (x.accepted() != y.accepted()) {
        row.verdict = "mismatch";
        row.divergence = 0;
        row.detail = std::string(verdict_name(x.verdict)) + " vs " + verdict_name(y.verdict);
      } else if (auto d = first_divergence(x.out, y.out)) {
        row.verdict = "mismatch";
        row.divergence = *d;
        row.detail = render_output(x.out) + " vs " + render_output(y.out);
      } else {
        row.verdict = "equal";
      }
    } catch (const Error& e) {
      row.verdict = "mismatch";
      row.detail = e.what();
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace omt
