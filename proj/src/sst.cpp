#include "omegatrans/sst.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace omt {

// ---------------------------------------------------------- substitutions

Substitution identity_subst(std::size_t nvars) {
  Substitution s(nvars);
  for (std::size_t x = 0; x < nvars; ++x) s[x] = rhs_var(static_cast<int>(x));
  return s;
}

Rhs rhs_var(int v) { return Rhs{Item{v, 0}}; }

Rhs rhs_text(std::string_view s) {
  Rhs r;
  for (char c : s) r.push_back(Item{-1, c});
  return r;
}

Substitution compose_subst(const Substitution& s1, const Substitution& s2) {
  Substitution out(s2.size());
  for (std::size_t x = 0; x < s2.size(); ++x)
    for (const Item& it : s2[x]) {
      if (it.is_var())
        out[x].insert(out[x].end(), s1[it.var].begin(), s1[it.var].end());
      else
        out[x].push_back(it);
    }
  return out;
}

bool is_copyless(const Substitution& s) {
  std::vector<int> seen(s.size(), 0);
  for (const Rhs& r : s)
    for (const Item& it : r)
      if (it.is_var() && seen[it.var]++) return false;
  return true;
}

std::vector<std::string> apply_subst(const Substitution& s, const std::vector<std::string>& vals) {
  std::vector<std::string> out(s.size());
  for (std::size_t x = 0; x < s.size(); ++x)
    for (const Item& it : s[x]) {
      if (it.is_var())
        out[x] += vals[it.var];
      else
        out[x].push_back(it.letter);
    }
  return out;
}

std::string rhs_str(const Rhs& r, const std::vector<std::string>& vars) {
  if (r.empty()) return "ε";
  std::string s;
  for (const Item& it : r) {
    if (it.is_var())
      s += vars[it.var];
    else
      s.push_back(it.letter);
  }
  return s;
}

// -------------------------------------------------------------------- Sst

namespace {
int index_in(const std::vector<std::string>& v, const std::string& name, const char* what) {
  auto it = std::find(v.begin(), v.end(), name);
  if (it == v.end()) throw Error("model", std::string("unknown ") + what + " '" + name + "'");
  return static_cast<int>(it - v.begin());
}

bool in_sorted(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }
}  // namespace

int Sst::state_index(const std::string& name) const { return index_in(states, name, "state"); }
int Sst::var_index(const std::string& name) const { return index_in(vars, name, "variable"); }

std::optional<std::vector<int>> Sst::output_for(const std::set<int>& P) const {
  std::vector<int> key(P.begin(), P.end());
  for (auto& o : outputs)
    if (o.states == key) return o.vars;
  if (wildcard) return *wildcard;
  return std::nullopt;
}

MullerFamily Sst::family() const {
  std::vector<std::vector<int>> sets;
  for (auto& o : outputs) sets.push_back(o.states);
  return MullerFamily(states.size(), sets);
}

void Sst::validate() const {
  if (states.empty()) throw Error("model", "SST has no states");
  if (initial < 0 || initial >= static_cast<int>(states.size()))
    throw Error("model", "bad initial state");
  const std::size_t nv = vars.size();
  if (delta.size() != states.size() || rho.size() != states.size())
    throw Error("model", "transition table size");
  for (std::size_t q = 0; q < states.size(); ++q) {
    if (delta[q].size() != input.size() || rho[q].size() != input.size())
      throw Error("model", "transition row size");
    for (std::size_t a = 0; a < input.size(); ++a) {
      if (delta[q][a] < 0) continue;
      if (delta[q][a] >= static_cast<int>(states.size())) throw Error("model", "bad target state");
      const Substitution& s = rho[q][a];
      if (s.size() != nv) throw Error("model", "update arity");
      for (auto& r : s)
        for (auto& it : r) {
          if (it.is_var() && it.var >= static_cast<int>(nv)) throw Error("model", "bad variable");
          if (!it.is_var() && !output.contains(it.letter))
            throw Error("model", std::string("update letter '") + it.letter +
                                     "' is not in the output alphabet");
        }
      if (copyless && !is_copyless(s))
        throw Error("copyless violation", "update on " + states[q] + "," + input.at(a) +
                                              " uses a variable more than once");
    }
  }
  auto check_rule = [&](const std::vector<int>& P, const std::vector<int>& F, bool all) {
    std::vector<int> seen(nv, 0);
    for (int x : F) {
      if (x < 0 || x >= static_cast<int>(nv)) throw Error("model", "bad output variable");
      if (seen[x]++) throw Error("copyless violation", "output uses a variable twice");
    }
    if (F.empty()) return;
    for (std::size_t q = 0; q < states.size(); ++q)
      for (std::size_t a = 0; a < input.size(); ++a) {
        int t = delta[q][a];
        if (t < 0) continue;
        if (!all && !(in_sorted(P, static_cast<int>(q)) && in_sorted(P, t))) continue;
        const Substitution& s = rho[q][a];
        for (std::size_t i = 0; i + 1 < F.size(); ++i)
          if (!(s[F[i]] == rhs_var(F[i])))
            throw Error("model", "output variable " + vars[F[i]] + " must stay unchanged inside its Muller set");
        const Rhs& last = s[F.back()];
        if (last.empty() || last[0].var != F.back())
          throw Error("model", "last output variable " + vars[F.back()] + " may only be appended to");
      }
  };
  std::set<std::vector<int>> doms;
  for (auto& o : outputs) {
    if (o.states.empty()) throw Error("model", "empty output set");
    if (!std::is_sorted(o.states.begin(), o.states.end())) throw Error("model", "unsorted output set");
    if (!doms.insert(o.states).second) throw Error("model", "duplicate output set");
    check_rule(o.states, o.vars, false);
  }
  if (wildcard) check_rule({}, *wildcard, true);
  (void)family();
}

std::optional<SstLasso> sst_lasso(const Sst& t, const UPWord& w) {
  SstLasso l;
  int q = t.initial;
  l.run.push_back(q);
  for (char c : w.prefix()) {
    q = t.step(q, c);
    if (q < 0) return std::nullopt;
    l.run.push_back(q);
  }
  std::map<int, std::size_t> seen;
  std::size_t m = 0;
  while (!seen.count(q)) {
    seen[q] = m++;
    for (char c : w.period()) {
      q = t.step(q, c);
      if (q < 0) return std::nullopt;
      l.run.push_back(q);
    }
  }
  const std::size_t u = w.prefix().size(), v = w.period().size();
  l.j0 = u + seen[q] * v;
  l.L = (m - seen[q]) * v;
  l.run.resize(l.j0 + l.L + 1);
  for (std::size_t i = l.j0; i < l.j0 + l.L; ++i) l.P.insert(l.run[i]);
  return l;
}

Outcome run_output(const Sst& t, const UPWord& w, std::size_t k) {
  check_input(t.input, w);
  Outcome res;
  auto l = sst_lasso(t, w);
  if (!l) {
    res.note = "transition undefined";
    return res;
  }
  auto F = t.output_for(l->P);
  if (!F) {
    res.note = "infinitely visited states are not in dom(F)";
    return res;
  }
  res.verdict = Outcome::Accepted;
  auto upd = [&](std::size_t step) -> const Substitution& {
    return t.update(l->state_at(step - 1), w.at(step));
  };
  std::vector<std::string> vals(t.vars.size());
  for (std::size_t i = 1; i <= l->j0; ++i) vals = apply_subst(upd(i), vals);
  std::string fixed;
  for (std::size_t i = 0; i + 1 < F->size(); ++i) fixed += vals[(*F)[i]];
  if (F->empty()) {
    res.out = std::string(k, kBottom);
    return res;
  }
  const int last = F->back();
  std::set<std::vector<bool>> idle;
  std::size_t pos = l->j0;
  while (fixed.size() + vals[last].size() < k) {
    std::vector<bool> pattern(vals.size());
    for (std::size_t x = 0; x < vals.size(); ++x) pattern[x] = vals[x].empty();
    // The emptiness pattern at a cycle boundary decides whether the last
    // output variable can grow during the following cycles.
    if (!idle.insert(pattern).second) break;
    std::size_t before = vals[last].size();
    for (std::size_t s = 0; s < l->L; ++s) vals = apply_subst(upd(++pos), vals);
    if (vals[last].size() > before) idle.clear();
  }
  res.out = fixed + vals[last];
  if (res.out.size() > k) res.out.resize(k);
  res.out.resize(k, kBottom);
  return res;
}

// ------------------------------------------------------------ flow monoid

FlowMatrix FlowMatrix::identity(std::size_t nstates, std::size_t nvars, const MullerFamily& f) {
  FlowMatrix m;
  m.nvars = nvars;
  m.target.resize(nstates);
  m.tuple.assign(nstates, f.neutral());
  m.count.assign(nstates, std::vector<std::uint8_t>(nvars * nvars, 0));
  for (std::size_t p = 0; p < nstates; ++p) {
    m.target[p] = static_cast<int>(p);
    for (std::size_t x = 0; x < nvars; ++x) m.count[p][x * nvars + x] = 1;
  }
  return m;
}

FlowEntry FlowMatrix::at(int p, int X, int q, int Y) const {
  FlowEntry e;
  if (target[p] != q) return e;
  int c = count[p][static_cast<std::size_t>(X) * nvars + Y];
  bool neutral = std::all_of(tuple[p].begin(), tuple[p].end(),
                             [](const Comp& x) { return x.kind == CompKind::Neutral; });
  if (neutral && c == 0) return e;
  e.bot = false;
  e.count = c;
  e.tuple = tuple[p];
  return e;
}

std::string FlowMatrix::key() const {
  std::string k;
  for (std::size_t p = 0; p < target.size(); ++p) {
    k.append(reinterpret_cast<const char*>(&target[p]), sizeof(int));
    if (target[p] < 0) continue;
    append_tuple_key(k, tuple[p]);
    k.append(reinterpret_cast<const char*>(count[p].data()), count[p].size());
  }
  return k;
}

FlowMatrix flow_matrix(const Sst& t, std::string_view w) {
  auto f = t.family();
  const std::size_t nv = t.vars.size();
  if (w.empty()) return FlowMatrix::identity(t.states.size(), nv, f);
  FlowMatrix m;
  m.nvars = nv;
  m.target.assign(t.states.size(), -1);
  m.tuple.resize(t.states.size());
  m.count.assign(t.states.size(), std::vector<std::uint8_t>(nv * nv, 0));
  for (std::size_t p = 0; p < t.states.size(); ++p) {
    int q = static_cast<int>(p);
    std::vector<int> visited{q};
    Substitution comp = identity_subst(nv);
    bool dead = false;
    for (char c : w) {
      int n = t.step(q, c);
      if (n < 0) {
        dead = true;
        break;
      }
      comp = compose_subst(comp, t.update(q, c));
      visited.push_back(q = n);
    }
    if (dead) continue;
    m.target[p] = q;
    m.tuple[p] = f.tuple_of(visited);
    for (std::size_t y = 0; y < nv; ++y)
      for (const Item& it : comp[y])
        if (it.is_var()) {
          auto& c = m.count[p][it.var * nv + y];
          if (c < 2) ++c;
        }
  }
  return m;
}

FlowMatrix flow_mul(const FlowMatrix& a, const FlowMatrix& b, const MullerFamily& f) {
  const std::size_t nv = a.nvars;
  FlowMatrix c;
  c.nvars = nv;
  c.target.assign(a.target.size(), -1);
  c.tuple.resize(a.target.size());
  c.count.assign(a.target.size(), std::vector<std::uint8_t>(nv * nv, 0));
  for (std::size_t p = 0; p < a.target.size(); ++p) {
    int m = a.target[p];
    if (m < 0 || b.target[m] < 0) continue;
    c.target[p] = b.target[m];
    c.tuple[p] = f.mul(a.tuple[p], b.tuple[m]);
    const auto& ac = a.count[p];
    const auto& bc = b.count[m];
    auto& cc = c.count[p];
    for (std::size_t x = 0; x < nv; ++x)
      for (std::size_t y = 0; y < nv; ++y) {
        int k1 = ac[x * nv + y];
        if (!k1) continue;
        for (std::size_t z = 0; z < nv; ++z) {
          int k2 = bc[y * nv + z];
          if (!k2) continue;
          int s = cc[x * nv + z] + k1 * k2;
          cc[x * nv + z] = static_cast<std::uint8_t>(std::min(s, 2));
        }
      }
  }
  return c;
}

std::string flow_matrix_str(const FlowMatrix& m, const Sst& t) {
  auto f = t.family();
  std::string out;
  const std::size_t nv = t.vars.size();
  for (std::size_t p = 0; p < t.states.size(); ++p)
    for (std::size_t x = 0; x < nv; ++x) {
      out += "(" + t.states[p] + "," + t.vars[x] + "):";
      for (std::size_t q = 0; q < t.states.size(); ++q)
        for (std::size_t y = 0; y < nv; ++y) {
          auto e = m.at(static_cast<int>(p), static_cast<int>(x), static_cast<int>(q), static_cast<int>(y));
          out += " ";
          out += e.bot ? "⊥" : std::to_string(e.count) + f.tuple_str(e.tuple, t.states);
        }
      out += "\n";
    }
  return out;
}

Closure<FlowMatrix> sst_monoid(const Sst& t, std::size_t cap) {
  auto f = t.family();
  std::vector<std::pair<char, FlowMatrix>> gens;
  for (char c : t.input.symbols()) gens.push_back({c, flow_matrix(t, std::string(1, c))});
  return close_monoid(
      FlowMatrix::identity(t.states.size(), t.vars.size(), f), gens,
      [&](const FlowMatrix& x, const FlowMatrix& y) { return flow_mul(x, y, f); },
      [](const FlowMatrix& x) { return x.key(); }, cap);
}

BoundedReport is_1_bounded(const Sst& t, std::size_t cap) {
  BoundedReport r;
  auto c = sst_monoid(t, cap);
  r.monoid_size = c.elems.size();
  for (std::size_t i = 0; i < c.elems.size(); ++i) {
    const auto& m = c.elems[i];
    for (std::size_t p = 0; p < m.target.size(); ++p) {
      if (m.target[p] < 0) continue;
      for (auto k : m.count[p])
        if (k > 1) {
          r.bounded = false;
          r.witness = c.words[i];
          return r;
        }
    }
  }
  return r;
}

AperiodicReport is_aperiodic_sst(const Sst& t, std::size_t cap) {
  auto f = t.family();
  auto c = sst_monoid(t, cap);
  return check_aperiodic(
      c, [&](const FlowMatrix& x, const FlowMatrix& y) { return flow_mul(x, y, f); },
      [](const FlowMatrix& x) { return x.key(); });
}

// ------------------------------------------------------------------ SstRun

SstRun::SstRun(const Sst& t, const UPWord& w) : t_(t), w_(w) {
  auto l = sst_lasso(t, w);
  if (!l) throw Error("not in domain", "transition undefined on " + w.str());
  lasso_ = *l;
  auto F = t.output_for(lasso_.P);
  if (!F) throw Error("not in domain", "infinitely visited states are not in dom(F) on " + w.str());
  out_vars_ = *F;
  out_set_.insert(F->begin(), F->end());
}

const Substitution& SstRun::update_at(std::size_t step) const {
  if (step == 0) throw Error("internal", "steps are 1-based");
  return t_.update(state_at(step - 1), w_.at(step));
}

std::size_t SstRun::phase(std::size_t i) const {
  return i < lasso_.j0 ? i : lasso_.j0 + (i - lasso_.j0) % lasso_.L;
}

std::set<int> SstRun::advance(std::set<int> s, std::size_t step) const {
  std::set<int> out;
  if (s.empty()) return out;
  const Substitution& u = update_at(step);
  for (std::size_t y = 0; y < u.size(); ++y)
    for (const Item& it : u[y])
      if (it.is_var() && s.count(it.var)) {
        out.insert(static_cast<int>(y));
        break;
      }
  return out;
}

std::set<int> SstRun::carry(int X, std::size_t from, std::size_t to) const {
  std::set<int> s{X};
  for (std::size_t k = from; k < to && !s.empty(); ++k) s = advance(std::move(s), k + 1);
  return s;
}

long long SstRun::flows(int X, std::size_t i, int Y, std::size_t j) const {
  if (j < i) return 0;
  const std::size_t nv = t_.vars.size();
  std::vector<long long> c(nv, 0);
  c[X] = 1;
  for (std::size_t k = i; k < j; ++k) {
    const Substitution& u = update_at(k + 1);
    std::vector<long long> n(nv, 0);
    for (std::size_t y = 0; y < nv; ++y)
      for (const Item& it : u[y])
        if (it.is_var()) n[y] = std::min<long long>(n[y] + c[it.var], 1LL << 40);
    c = std::move(n);
  }
  return c[Y];
}

bool SstRun::useful(int X, std::size_t i) const {
  std::size_t l = std::max(i, lasso_.j0);
  std::set<int> s = carry(X, i, l);
  std::set<std::pair<std::size_t, std::set<int>>> seen;
  while (!s.empty()) {
    for (int x : s)
      if (out_set_.count(x)) return true;
    if (!seen.insert({phase(l), s}).second) return false;
    s = advance(std::move(s), l + 1);
    ++l;
  }
  return false;
}

std::vector<std::string> SstRun::valuation(std::size_t i) const {
  std::vector<std::string> vals(t_.vars.size());
  for (std::size_t k = 1; k <= i; ++k) vals = apply_subst(update_at(k), vals);
  return vals;
}

bool SstRun::concat_after(std::set<int> vx, std::set<int> vy, std::size_t k) const {
  std::set<std::tuple<std::size_t, std::set<int>, std::set<int>>> seen;
  while (!vx.empty() && !vy.empty()) {
    for (const Rhs& r : update_at(k + 1)) {
      bool x_seen = false;
      for (const Item& it : r) {
        if (!it.is_var()) continue;
        if (vy.count(it.var) && x_seen) return true;
        if (vx.count(it.var)) x_seen = true;
      }
    }
    if (k >= lasso_.j0 && !seen.insert({phase(k), vx, vy}).second) return false;
    vx = advance(std::move(vx), k + 1);
    vy = advance(std::move(vy), k + 1);
    ++k;
  }
  return false;
}

bool SstRun::path_conditions(int X, std::size_t i, Side d, int Y, std::size_t j, Side e) const {
  if (!useful(X, i) || !useful(Y, j)) return false;
  if (X == Y && i == j && d == e) return true;
  auto y_in_x = [&] { return j <= i && flows(Y, j, X, i) > 0; };
  auto x_in_y = [&] { return i <= j && flows(X, i, Y, j) > 0; };
  auto psi3 = [&] {
    std::size_t k = std::max(i, j);
    return concat_after(carry(X, i, k), carry(Y, j, k), k);
  };
  if (d == In && e == In) return y_in_x() || psi3();
  if (d == In && e == Out) return y_in_x() || x_in_y() || psi3();
  if (d == Out && e == In) return psi3();
  return x_in_y() || psi3();
}

// ------------------------------------------------------------ output graph

OutputGraph build_output_graph(const SstRun& run, std::size_t horizon) {
  const Sst& t = run.sst();
  const std::size_t nv = t.vars.size();
  OutputGraph g;
  g.vars = t.vars;
  g.horizon = horizon;
  std::vector<std::vector<bool>> use(horizon + 1, std::vector<bool>(nv));
  for (std::size_t i = 0; i <= horizon; ++i)
    for (std::size_t x = 0; x < nv; ++x) {
      use[i][x] = run.useful(static_cast<int>(x), i);
      if (use[i][x]) {
        g.nodes.push_back({static_cast<int>(x), i, false});
        g.nodes.push_back({static_cast<int>(x), i, true});
      }
    }
  std::sort(g.nodes.begin(), g.nodes.end());
  std::map<std::pair<GraphNode, GraphNode>, std::string> edges;
  auto add = [&](GraphNode a, GraphNode b, std::string label) {
    if (!edges.emplace(std::make_pair(a, b), label).second)
      throw Error("not 1-bounded", "two edges between " + node_name(g, a) + " and " + node_name(g, b));
    g.labels.insert(std::move(label));
  };
  for (std::size_t x = 0; x < nv; ++x)
    if (use[0][x]) add({static_cast<int>(x), 0, false}, {static_cast<int>(x), 0, true}, "");
  for (std::size_t i = 0; i < horizon; ++i) {
    const Substitution& u = run.update_at(i + 1);
    for (std::size_t x = 0; x < nv; ++x) {
      if (!use[i + 1][x]) continue;
      const int X = static_cast<int>(x);
      GraphNode cur{X, i + 1, false};
      std::string label;
      for (const Item& it : u[x]) {
        if (!it.is_var()) {
          label.push_back(it.letter);
          continue;
        }
        add(cur, {it.var, i, false}, label);
        cur = {it.var, i, true};
        label.clear();
      }
      add(cur, {X, i + 1, true}, label);
    }
  }
  for (auto& [k, label] : edges) g.edges.push_back({k.first, k.second, label});
  return g;
}

OutputGraph build_output_graph(const Sst& t, const UPWord& w, std::size_t horizon) {
  SstRun run(t, w);
  return build_output_graph(run, horizon);
}

std::string node_name(const OutputGraph& g, const GraphNode& n) {
  return g.vars[n.var] + (n.out ? "out_" : "in_") + std::to_string(n.pos);
}

namespace {
std::string dot_id(const std::string& s) {
  bool plain = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
  if (plain && !std::isdigit(static_cast<unsigned char>(s[0]))) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') q.push_back('\\');
    q.push_back(c);
  }
  return q + "\"";
}
}  // namespace

std::string to_dot(const OutputGraph& g) {
  std::string out = "digraph output {\n  rankdir=RL;\n  node [shape=circle, fontsize=10];\n";
  for (auto& n : g.nodes) out += "  " + dot_id(node_name(g, n)) + ";\n";
  for (auto& e : g.edges) {
    std::string label = e.label.empty() ? "ε" : e.label;
    std::string esc;
    for (char c : label) {
      if (c == '"' || c == '\\') esc.push_back('\\');
      esc.push_back(c);
    }
    out += "  " + dot_id(node_name(g, e.from)) + " -> " + dot_id(node_name(g, e.to)) +
           " [label=\"" + esc + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace omt
