#include "omegatrans/muller.hpp"

#include <algorithm>
#include <map>

namespace omt {

MullerFamily::MullerFamily(std::size_t nstates, std::vector<std::vector<int>> sets)
    : nstates_(nstates), sets_(std::move(sets)) {
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw Error("muller", "empty Muller set");
    if (s.size() > 64) throw Error("muller", "Muller sets are limited to 64 states");
    std::vector<int> pos(nstates, -1);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] < 0 || static_cast<std::size_t>(s[k]) >= nstates)
        throw Error("muller", "Muller set mentions an unknown state");
      pos[s[k]] = static_cast<int>(k);
    }
    pos_.push_back(std::move(pos));
    full_.push_back(s.size() == 64 ? ~0ULL : ((1ULL << s.size()) - 1));
  }
}

Tuple MullerFamily::tuple_of(const std::vector<int>& visited) const {
  Tuple t(sets_.size());
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    std::uint64_t m = 0;
    bool outside = false;
    for (int s : visited) {
      int b = pos_[i][s];
      if (b < 0) {
        outside = true;
        break;
      }
      m |= 1ULL << b;
    }
    if (outside)
      t[i] = {CompKind::Zero, 0};
    else if (m == full_[i])
      t[i] = {CompKind::One, 0};
    else
      t[i] = {CompKind::Part, m};
  }
  return t;
}

Comp comp_mul(const Comp& x, const Comp& y, std::uint64_t full) {
  if (x.kind == CompKind::Neutral) return y;
  if (y.kind == CompKind::Neutral) return x;
  if (x.kind == CompKind::Zero || y.kind == CompKind::Zero) return {CompKind::Zero, 0};
  if (x.kind == CompKind::One || y.kind == CompKind::One) return {CompKind::One, 0};
  std::uint64_t u = x.mask | y.mask;
  if (u == full) return {CompKind::One, 0};
  return {CompKind::Part, u};
}

Tuple MullerFamily::mul(const Tuple& x, const Tuple& y) const {
  Tuple z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = comp_mul(x[i], y[i], full_[i]);
  return z;
}

int MullerFamily::match(const std::set<int>& omega) const {
  for (std::size_t i = 0; i < sets_.size(); ++i)
    if (std::set<int>(sets_[i].begin(), sets_[i].end()) == omega) return static_cast<int>(i);
  return -1;
}

bool MullerFamily::any_one(const Tuple& t) {
  return std::any_of(t.begin(), t.end(), [](const Comp& c) { return c.kind == CompKind::One; });
}

std::string MullerFamily::comp_str(std::size_t i, const Comp& c,
                                   const std::vector<std::string>& names) const {
  switch (c.kind) {
    case CompKind::Zero: return "0";
    case CompKind::One: return "1";
    case CompKind::Neutral: return "∅";
    case CompKind::Part: {
      std::string s = "{";
      bool first = true;
      for (std::size_t k = 0; k < sets_[i].size(); ++k)
        if (c.mask >> k & 1) {
          if (!first) s += ",";
          first = false;
          s += names[sets_[i][k]];
        }
      return s + "}";
    }
  }
  return "?";
}

std::string MullerFamily::tuple_str(const Tuple& t, const std::vector<std::string>& names) const {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += comp_str(i, t[i], names);
  }
  return s + ")";
}

MonoidEntry entry_mul(const MonoidEntry& a, const MonoidEntry& b, const MullerFamily& f) {
  if (a.bot || b.bot) return {};
  if (a.tuple.size() != b.tuple.size()) throw Error("internal", "entry arity mismatch");
  return {false, f.mul(a.tuple, b.tuple)};
}

MonoidEntry entry_add(const MonoidEntry& a, const MonoidEntry& b) {
  if (a.bot) return b;
  if (b.bot) return a;
  throw Error("internal", "two non-bottom entries summed; the automaton is not deterministic");
}

// ------------------------------------------------------------------ Dma

namespace {

int find_state(const std::vector<std::string>& states, const std::string& name) {
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) throw Error("model", "unknown state '" + name + "'");
  return static_cast<int>(it - states.begin());
}

void check_delta(const std::vector<std::vector<int>>& delta, std::size_t nstates,
                 const Alphabet& al, const char* what, bool total) {
  if (delta.size() != nstates) throw Error("model", std::string(what) + ": delta has wrong size");
  for (std::size_t q = 0; q < nstates; ++q) {
    if (delta[q].size() != al.size()) throw Error("model", std::string(what) + ": delta row size");
    for (std::size_t a = 0; a < al.size(); ++a) {
      int t = delta[q][a];
      if (t < 0 && total)
        throw Error("model", std::string(what) + ": delta undefined on a symbol; must be total");
      if (t >= static_cast<int>(nstates)) throw Error("model", std::string(what) + ": bad target");
    }
  }
}

}  // namespace

int Dma::state_index(const std::string& name) const { return find_state(states, name); }

int Dma::run_state(std::string_view w, int from) const {
  int q = from;
  for (char c : w) q = step(q, c);
  return q;
}

std::set<int> Dma::omega(const UPWord& w, int from) const {
  check_input(alphabet, w);
  int q = run_state(w.prefix(), from);
  std::map<int, std::size_t> seen;
  std::vector<int> boundary;
  while (!seen.count(q)) {
    seen[q] = boundary.size();
    boundary.push_back(q);
    q = run_state(w.period(), q);
  }
  std::set<int> om;
  for (std::size_t i = seen[q]; i < boundary.size(); ++i) {
    int s = boundary[i];
    om.insert(s);
    for (char c : w.period()) om.insert(s = step(s, c));
  }
  return om;
}

bool Dma::accepts_from(const UPWord& w, int from) const {
  return family().match(omega(w, from)) >= 0;
}

void Dma::validate() const {
  if (states.empty()) throw Error("model", "automaton has no states");
  if (initial < 0 || initial >= static_cast<int>(states.size()))
    throw Error("model", "bad initial state");
  check_delta(delta, states.size(), alphabet, "muller automaton", true);
  if (muller.empty()) throw Error("model", "at least one Muller set is required");
  MullerFamily f(states.size(), muller);
  (void)f;
}

int Dfa::state_index(const std::string& name) const { return find_state(states, name); }

int Dfa::run_state(std::string_view w, int from) const {
  int q = from;
  for (char c : w) q = step(q, c);
  return q;
}

void Dfa::validate() const {
  if (states.empty()) throw Error("model", "automaton has no states");
  if (initial < 0 || initial >= static_cast<int>(states.size()))
    throw Error("model", "bad initial state");
  check_delta(delta, states.size(), alphabet, "look-behind automaton", true);
  if (accepting.size() != states.size()) throw Error("model", "accepting vector size");
}

// ---------------------------------------------------------- TransMatrix

TransMatrix TransMatrix::identity(std::size_t n, const MullerFamily& f) {
  TransMatrix m;
  m.target.resize(n);
  m.tuple.assign(n, f.neutral());
  for (std::size_t p = 0; p < n; ++p) m.target[p] = static_cast<int>(p);
  return m;
}

MonoidEntry TransMatrix::at(int p, int q) const {
  if (target[p] != q) return {};
  return {false, tuple[p]};
}

bool TransMatrix::operator==(const TransMatrix& o) const {
  if (target != o.target) return false;
  for (std::size_t p = 0; p < target.size(); ++p)
    if (target[p] >= 0 && tuple[p] != o.tuple[p]) return false;
  return true;
}

void append_tuple_key(std::string& out, const Tuple& t) {
  for (auto& c : t) {
    out.push_back(static_cast<char>(c.kind));
    if (c.kind == CompKind::Part)
      out.append(reinterpret_cast<const char*>(&c.mask), sizeof c.mask);
  }
}

std::string TransMatrix::key() const {
  std::string k;
  for (std::size_t p = 0; p < target.size(); ++p) {
    k.append(reinterpret_cast<const char*>(&target[p]), sizeof(int));
    if (target[p] >= 0) append_tuple_key(k, tuple[p]);
  }
  return k;
}

TransMatrix matrix_of_word(const Dma& a, std::string_view w) {
  auto f = a.family();
  if (w.empty()) return TransMatrix::identity(a.states.size(), f);
  TransMatrix m;
  m.target.resize(a.states.size());
  m.tuple.resize(a.states.size());
  for (std::size_t p = 0; p < a.states.size(); ++p) {
    std::vector<int> visited{static_cast<int>(p)};
    int q = static_cast<int>(p);
    for (char c : w) visited.push_back(q = a.step(q, c));
    m.target[p] = q;
    m.tuple[p] = f.tuple_of(visited);
  }
  return m;
}

TransMatrix matrix_mul(const TransMatrix& a, const TransMatrix& b, const MullerFamily& f) {
  TransMatrix c;
  c.target.assign(a.target.size(), -1);
  c.tuple.resize(a.target.size());
  for (std::size_t p = 0; p < a.target.size(); ++p) {
    int m = a.target[p];
    if (m < 0 || b.target[m] < 0) continue;
    c.target[p] = b.target[m];
    c.tuple[p] = f.mul(a.tuple[p], b.tuple[m]);
  }
  return c;
}

std::string matrix_str(const TransMatrix& m, const Dma& a) {
  auto f = a.family();
  std::string out;
  for (std::size_t p = 0; p < m.target.size(); ++p) {
    out += a.states[p] + ":";
    for (std::size_t q = 0; q < m.target.size(); ++q) {
      out += " ";
      out += m.target[p] == static_cast<int>(q) ? f.tuple_str(m.tuple[p], a.states) : "⊥";
    }
    out += "\n";
  }
  return out;
}

Closure<TransMatrix> generate_monoid(const Dma& a, std::size_t cap) {
  auto f = a.family();
  std::vector<std::pair<char, TransMatrix>> gens;
  for (char c : a.alphabet.symbols()) gens.push_back({c, matrix_of_word(a, std::string(1, c))});
  return close_monoid(
      TransMatrix::identity(a.states.size(), f), gens,
      [&](const TransMatrix& x, const TransMatrix& y) { return matrix_mul(x, y, f); },
      [](const TransMatrix& x) { return x.key(); }, cap);
}

AperiodicReport is_aperiodic(const Dma& a, std::size_t cap) {
  auto f = a.family();
  auto c = generate_monoid(a, cap);
  return check_aperiodic(
      c, [&](const TransMatrix& x, const TransMatrix& y) { return matrix_mul(x, y, f); },
      [](const TransMatrix& x) { return x.key(); });
}

}  // namespace omt
