#include "omegatrans/io.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

namespace omt {

namespace {

const std::string kEps = "ε";

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t b = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(b, i - b)));
      b = i + 1;
    }
  return out;
}

std::vector<std::string> words_of(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct Line {
  int no;
  std::string key, value;
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error("parse", "line " + std::to_string(line) + ": " + msg);
}

// Splits text into `key: value` lines; embedded sections are kept as
// raw lines between `lookahead:`/`lookbehind:` and `end`.
struct Doc {
  std::vector<Line> lines;
  std::vector<std::pair<Line, std::vector<std::string>>> sections;
  std::string kind;
  int kind_line = 0;

  explicit Doc(std::string_view text, int base = 0) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int no = base;
    std::vector<std::string>* section = nullptr;
    while (std::getline(in, raw)) {
      ++no;
      std::string t = trim(raw);
      if (section) {
        if (t == "end") {
          section = nullptr;
          continue;
        }
        section->push_back(raw);
        continue;
      }
      if (t.empty() || t.rfind("//", 0) == 0) continue;
      auto colon = t.find(':');
      if (colon == std::string::npos) fail(no, "expected 'key: value'");
      Line l{no, trim(t.substr(0, colon)), trim(t.substr(colon + 1))};
      if (l.key == "lookahead" || l.key == "lookbehind") {
        sections.push_back({l, {}});
        section = &sections.back().second;
        continue;
      }
      if (l.key == "kind") {
        kind = l.value;
        kind_line = no;
        continue;
      }
      lines.push_back(std::move(l));
    }
    if (section) fail(no, "section not closed by 'end'");
  }

  std::vector<const Line*> all(const std::string& key) const {
    std::vector<const Line*> out;
    for (auto& l : lines)
      if (l.key == key) out.push_back(&l);
    return out;
  }
  const Line* one(const std::string& key, bool required = true) const {
    auto v = all(key);
    if (v.size() > 1) fail(v[1]->no, "duplicate '" + key + "'");
    if (v.empty() && required) fail(kind_line, "missing '" + key + ":'");
    return v.empty() ? nullptr : v[0];
  }
  void only(std::initializer_list<const char*> keys) const {
    for (auto& l : lines)
      if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return l.key == k; }))
        fail(l.no, "unexpected key '" + l.key + "'");
  }
};

Alphabet alphabet_of(const Line& l) {
  std::string s;
  for (char c : l.value)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  try {
    return Alphabet(s);
  } catch (const Error& e) {
    fail(l.no, e.what());
  }
}

int index_in(const std::vector<std::string>& names, const std::string& n, int line, const char* what) {
  auto it = std::find(names.begin(), names.end(), n);
  if (it == names.end()) fail(line, std::string("unknown ") + what + " '" + n + "'");
  return static_cast<int>(it - names.begin());
}

char symbol_of(const std::string& s, const Alphabet& al, int line) {
  if (s.size() != 1 || !al.contains(s[0])) fail(line, "unknown symbol '" + s + "'");
  return s[0];
}

std::vector<std::vector<int>> muller_of(const Line& l, const std::vector<std::string>& states) {
  std::vector<std::vector<int>> sets;
  std::string v = l.value;
  std::size_t i = 0;
  while (true) {
    while (i < v.size() && std::isspace(static_cast<unsigned char>(v[i]))) ++i;
    if (i >= v.size()) break;
    if (v[i] != '{') fail(l.no, "expected '{' in Muller set list");
    auto close = v.find('}', i);
    if (close == std::string::npos) fail(l.no, "missing '}'");
    std::vector<int> set;
    std::string body = v.substr(i + 1, close - i - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    for (auto& n : words_of(body)) set.push_back(index_in(states, n, l.no, "state"));
    std::sort(set.begin(), set.end());
    sets.push_back(set);
    i = close + 1;
  }
  return sets;
}

std::string set_str(const std::vector<int>& s, const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + names[s[i]];
  return out + "}";
}

std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

// `q,a -> q'` style transition tables for automata.
std::vector<std::vector<int>> delta_of(const Doc& d, const std::vector<std::string>& states,
                                       const Alphabet& al) {
  std::vector<std::vector<int>> delta(states.size(), std::vector<int>(al.size(), -1));
  for (auto* l : d.all("delta")) {
    auto arrow = l->value.find("->");
    if (arrow == std::string::npos) fail(l->no, "expected 'q,a -> q'");
    auto lhs = split(l->value.substr(0, arrow), ',');
    if (lhs.size() != 2) fail(l->no, "expected 'q,a' before '->'");
    int q = index_in(states, lhs[0], l->no, "state");
    int a = al.index_of(symbol_of(lhs[1], al, l->no));
    if (delta[q][a] >= 0) fail(l->no, "transition defined twice");
    delta[q][a] = index_in(states, trim(l->value.substr(arrow + 2)), l->no, "state");
  }
  return delta;
}

void print_delta(std::string& out, const std::vector<std::vector<int>>& delta,
                 const std::vector<std::string>& states, const Alphabet& al) {
  for (std::size_t q = 0; q < states.size(); ++q)
    for (std::size_t a = 0; a < al.size(); ++a)
      if (delta[q][a] >= 0)
        out += "delta: " + states[q] + "," + al.at(a) + " -> " + states[delta[q][a]] + "\n";
}

std::vector<std::string> states_of(const Doc& d) {
  auto* l = d.one("states");
  auto s = words_of(l->value);
  if (s.empty()) fail(l->no, "no states");
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j]) fail(l->no, "duplicate state '" + s[i] + "'");
  return s;
}

Dma dma_of(const Doc& d, const Alphabet* inherited) {
  d.only({"alphabet", "states", "initial", "delta", "muller"});
  Dma a;
  auto* al = d.one("alphabet", inherited == nullptr);
  a.alphabet = al ? alphabet_of(*al) : *inherited;
  a.states = states_of(d);
  auto* in = d.one("initial");
  a.initial = index_in(a.states, in->value, in->no, "state");
  a.delta = delta_of(d, a.states, a.alphabet);
  for (auto* l : d.all("muller")) {
    auto s = muller_of(*l, a.states);
    a.muller.insert(a.muller.end(), s.begin(), s.end());
  }
  a.validate();
  return a;
}

Dfa dfa_of(const Doc& d, const Alphabet* inherited) {
  d.only({"alphabet", "states", "initial", "delta", "accepting"});
  Dfa a;
  auto* al = d.one("alphabet", inherited == nullptr);
  a.alphabet = al ? alphabet_of(*al) : *inherited;
  a.states = states_of(d);
  auto* in = d.one("initial");
  a.initial = index_in(a.states, in->value, in->no, "state");
  a.delta = delta_of(d, a.states, a.alphabet);
  a.accepting.assign(a.states.size(), false);
  if (auto* acc = d.one("accepting", false))
    for (auto& n : words_of(acc->value)) a.accepting[index_in(a.states, n, acc->no, "state")] = true;
  a.validate();
  return a;
}

std::string print_dma(const Dma& a, bool embedded) {
  std::string out = embedded ? "" : "kind: dma\n";
  out += "alphabet: " + a.alphabet.symbols() + "\n";
  out += "states: " + join(a.states) + "\n";
  out += "initial: " + a.states[a.initial] + "\n";
  print_delta(out, a.delta, a.states, a.alphabet);
  std::vector<std::string> sets;
  for (auto& s : a.muller) sets.push_back(set_str(s, a.states));
  out += "muller: " + join(sets) + "\n";
  return out;
}

std::string print_dfa(const Dfa& a, bool embedded) {
  std::string out = embedded ? "" : "kind: dfa\n";
  out += "alphabet: " + a.alphabet.symbols() + "\n";
  out += "states: " + join(a.states) + "\n";
  out += "initial: " + a.states[a.initial] + "\n";
  print_delta(out, a.delta, a.states, a.alphabet);
  std::vector<std::string> acc;
  for (std::size_t q = 0; q < a.states.size(); ++q)
    if (a.accepting[q]) acc.push_back(a.states[q]);
  out += "accepting: " + join(acc) + "\n";
  return out;
}

std::string indent(const std::string& s) {
  std::string out;
  for (auto& l : split(s, '\n'))
    if (!l.empty()) out += "  " + l + "\n";
  return out;
}

void lookaround_of(const Doc& d, const Alphabet& input, std::optional<Dma>& la, std::optional<Dfa>& lb) {
  for (auto& [l, body] : d.sections) {
    std::string text;
    for (auto& b : body) text += b + "\n";
    Doc sub(text, l.no);
    if (l.key == "lookahead") {
      if (la) fail(l.no, "duplicate look-ahead section");
      la = dma_of(sub, &input);
    } else {
      if (lb) fail(l.no, "duplicate look-behind section");
      lb = dfa_of(sub, &input);
    }
  }
}

void print_lookaround(std::string& out, const std::optional<Dma>& la, const std::optional<Dfa>& lb) {
  if (la) out += "lookahead:\n" + indent(print_dma(*la, true)) + "end\n";
  if (lb) out += "lookbehind:\n" + indent(print_dfa(*lb, true)) + "end\n";
}

std::vector<std::pair<std::string, std::string>> assignments(const std::string& s, int line) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& part : split(s, ';')) {
    if (part.empty()) continue;
    auto eq = part.find(":=");
    if (eq == std::string::npos) fail(line, "expected 'X := ...'");
    out.push_back({trim(part.substr(0, eq)), trim(part.substr(eq + 2))});
  }
  return out;
}

Substitution subst_of(const std::string& text, const std::vector<std::string>& vars, const Alphabet& out,
                      int line) {
  Substitution s = identity_subst(vars.size());
  std::vector<bool> seen(vars.size());
  for (auto& [lhs, rhs] : assignments(text, line)) {
    int v = index_in(vars, lhs, line, "variable");
    if (seen[v]) fail(line, "variable " + lhs + " assigned twice");
    seen[v] = true;
    try {
      s[v] = parse_rhs(rhs, vars, out);
    } catch (const Error& e) {
      fail(line, e.what());
    }
  }
  return s;
}

std::string print_subst(const Substitution& s, const std::vector<std::string>& vars) {
  std::vector<std::string> parts;
  for (std::size_t v = 0; v < s.size(); ++v)
    if (!(s[v] == rhs_var(static_cast<int>(v)))) parts.push_back(vars[v] + " := " + print_rhs(s[v], vars));
  return join(parts, "; ");
}

std::vector<std::string> vars_of(const Doc& d) {
  auto* l = d.one("vars");
  auto v = words_of(l->value);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) fail(l->no, "duplicate variable '" + v[i] + "'");
  return v;
}

// --------------------------------------------------------------- SST

Sst sst_of(const Doc& d) {
  d.only({"input", "output", "states", "initial", "vars", "copyless", "delta", "update", "out"});
  Sst t;
  t.input = alphabet_of(*d.one("input"));
  t.output = alphabet_of(*d.one("output"));
  t.states = states_of(d);
  auto* in = d.one("initial");
  t.initial = index_in(t.states, in->value, in->no, "state");
  t.vars = vars_of(d);
  if (auto* c = d.one("copyless", false)) {
    if (c->value != "yes" && c->value != "no") fail(c->no, "copyless must be yes or no");
    t.copyless = c->value == "yes";
  }
  t.delta = delta_of(d, t.states, t.input);
  t.rho.assign(t.states.size(), std::vector<Substitution>(t.input.size(), identity_subst(t.vars.size())));
  std::vector<std::vector<bool>> has(t.states.size(), std::vector<bool>(t.input.size()));
  for (auto* l : d.all("update")) {
    auto colon = l->value.find(':');
    if (colon == std::string::npos) fail(l->no, "expected 'q,a: assignments'");
    auto lhs = split(l->value.substr(0, colon), ',');
    if (lhs.size() != 2) fail(l->no, "expected 'q,a' before ':'");
    int q = index_in(t.states, lhs[0], l->no, "state");
    int a = t.input.index_of(symbol_of(lhs[1], t.input, l->no));
    if (has[q][a]) fail(l->no, "update given twice");
    has[q][a] = true;
    if (t.delta[q][a] < 0) fail(l->no, "update for an undefined transition");
    t.rho[q][a] = subst_of(l->value.substr(colon + 1), t.vars, t.output, l->no);
  }
  for (auto* l : d.all("out")) {
    auto arrow = l->value.find("->");
    if (arrow == std::string::npos) fail(l->no, "expected '{P} -> vars' or '* -> vars'");
    std::string lhs = trim(l->value.substr(0, arrow));
    std::vector<int> vs;
    for (auto& n : words_of(l->value.substr(arrow + 2))) vs.push_back(index_in(t.vars, n, l->no, "variable"));
    if (lhs == "*") {
      if (t.wildcard) fail(l->no, "duplicate wildcard output");
      t.wildcard = vs;
      continue;
    }
    auto sets = muller_of(Line{l->no, "", lhs}, t.states);
    if (sets.size() != 1) fail(l->no, "expected exactly one state set");
    t.outputs.push_back({sets[0], vs});
  }
  t.validate();
  return t;
}

std::string print_sst(const Sst& t) {
  std::string out = "kind: sst\n";
  out += "input: " + t.input.symbols() + "\n";
  out += "output: " + t.output.symbols() + "\n";
  out += "states: " + join(t.states) + "\n";
  out += "initial: " + t.states[t.initial] + "\n";
  out += "vars: " + join(t.vars) + "\n";
  if (!t.copyless) out += "copyless: no\n";
  print_delta(out, t.delta, t.states, t.input);
  for (std::size_t q = 0; q < t.states.size(); ++q)
    for (std::size_t a = 0; a < t.input.size(); ++a) {
      if (t.delta[q][a] < 0) continue;
      std::string u = print_subst(t.rho[q][a], t.vars);
      if (!u.empty()) out += "update: " + t.states[q] + "," + t.input.at(a) + ": " + u + "\n";
    }
  auto names = [&](const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) s += " " + t.vars[v];
    return s;
  };
  for (auto& o : t.outputs) out += "out: " + set_str(o.states, t.states) + " ->" + names(o.vars) + "\n";
  if (t.wildcard) out += "out: * ->" + names(*t.wildcard) + "\n";
  return out;
}

// --------------------------------------------------------------- 2WST

const char* kLeftEndText = "|-";

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

TwoWst twowst_of(const Doc& d) {
  d.only({"input", "output", "states", "initial", "muller", "trans"});
  TwoWst t;
  t.input = alphabet_of(*d.one("input"));
  t.output = alphabet_of(*d.one("output"));
  t.states = states_of(d);
  auto* in = d.one("initial");
  t.initial = index_in(t.states, in->value, in->no, "state");
  for (auto* l : d.all("muller")) {
    auto s = muller_of(*l, t.states);
    t.muller.insert(t.muller.end(), s.begin(), s.end());
  }
  lookaround_of(d, t.input, t.lookahead, t.lookbehind);
  for (auto* l : d.all("trans")) {
    auto arrow = l->value.find("->");
    if (arrow == std::string::npos) fail(l->no, "expected '->' in transition");
    auto lhs = split(l->value.substr(0, arrow), ',');
    if (lhs.size() < 2) fail(l->no, "expected 'q, symbol' before '->'");
    TwTransition tr;
    tr.from = index_in(t.states, lhs[0], l->no, "state");
    if (lhs[1] == kLeftEndText || lhs[1] == "⊢")
      tr.sym = kLeftEnd;
    else
      tr.sym = symbol_of(lhs[1], t.input, l->no);
    for (std::size_t i = 2; i < lhs.size(); ++i) {
      const auto& g = lhs[i];
      if (g.empty()) continue;
      auto eq = g.find('=');
      if (eq == std::string::npos) fail(l->no, "guards are written la=p or lb=r");
      std::string k = trim(g.substr(0, eq)), v = trim(g.substr(eq + 1));
      if (k == "la") {
        if (!t.lookahead) fail(l->no, "look-ahead guard without a lookahead section");
        tr.la = index_in(t.lookahead->states, v, l->no, "look-ahead state");
      } else if (k == "lb") {
        if (!t.lookbehind) fail(l->no, "look-behind guard without a lookbehind section");
        tr.lb = index_in(t.lookbehind->states, v, l->no, "look-behind state");
      } else {
        fail(l->no, "unknown guard '" + k + "'");
      }
    }
    std::string rhs = trim(l->value.substr(arrow + 2));
    auto c1 = rhs.find(',');
    if (c1 == std::string::npos) fail(l->no, "expected 'q', \"out\", move' after '->'");
    tr.to = index_in(t.states, trim(rhs.substr(0, c1)), l->no, "state");
    std::size_t i = c1 + 1;
    while (i < rhs.size() && std::isspace(static_cast<unsigned char>(rhs[i]))) ++i;
    if (i >= rhs.size() || rhs[i] != '"') fail(l->no, "output must be quoted");
    for (++i; i < rhs.size() && rhs[i] != '"'; ++i) {
      if (rhs[i] == '\\' && i + 1 < rhs.size()) ++i;
      tr.out.push_back(rhs[i]);
    }
    if (i >= rhs.size()) fail(l->no, "unterminated output string");
    auto rest = split(rhs.substr(i + 1), ',');
    if (rest.size() != 2 || !rest[0].empty()) fail(l->no, "expected ', move' after the output");
    if (rest[1] == "+1" || rest[1] == "1")
      tr.move = 1;
    else if (rest[1] == "0")
      tr.move = 0;
    else if (rest[1] == "-1")
      tr.move = -1;
    else
      fail(l->no, "move must be +1, 0 or -1");
    t.trans.push_back(tr);
  }
  t.index();
  t.validate();
  return t;
}

std::string print_twowst(const TwoWst& t) {
  std::string out = "kind: 2wst\n";
  out += "input: " + t.input.symbols() + "\n";
  out += "output: " + t.output.symbols() + "\n";
  out += "states: " + join(t.states) + "\n";
  out += "initial: " + t.states[t.initial] + "\n";
  std::vector<std::string> sets;
  for (auto& s : t.muller) sets.push_back(set_str(s, t.states));
  out += "muller: " + join(sets) + "\n";
  print_lookaround(out, t.lookahead, t.lookbehind);
  for (auto& tr : t.trans) {
    out += "trans: " + t.states[tr.from] + ", " +
           (tr.sym == kLeftEnd ? std::string(kLeftEndText) : std::string(1, tr.sym));
    if (tr.la >= 0) out += ", la=" + t.lookahead->states[tr.la];
    if (tr.lb >= 0) out += ", lb=" + t.lookbehind->states[tr.lb];
    out += " -> " + t.states[tr.to] + ", " + quote(tr.out) + ", " +
           (tr.move == 1 ? "+1" : tr.move == 0 ? "0" : "-1") + "\n";
  }
  return out;
}

// ---------------------------------------------------------------- FOT

fo::FormulaPtr formula_of(const std::string& s, int line) {
  try {
    return fo::parse(s);
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

Fot fot_of(const Doc& d) {
  d.only({"input", "output", "copies", "dom", "pos", "ord"});
  Fot t;
  t.input = alphabet_of(*d.one("input"));
  t.output = alphabet_of(*d.one("output"));
  auto* c = d.one("copies");
  try {
    t.copies = std::stoi(c->value);
  } catch (...) {
    fail(c->no, "copies must be a number");
  }
  auto* dom = d.one("dom");
  t.dom = formula_of(dom->value, dom->no);
  auto copy_of = [&](const std::string& s, int line) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw 0;
      return v;
    } catch (...) {
      fail(line, "bad copy number '" + s + "'");
    }
  };
  for (auto* l : d.all("pos")) {
    auto comma = l->value.find(',');
    if (comma == std::string::npos) fail(l->no, "expected 'c, γ: formula'");
    int cp = copy_of(trim(l->value.substr(0, comma)), l->no);
    std::string rest = trim(l->value.substr(comma + 1));
    if (rest.size() < 2 || trim(rest.substr(1)).rfind(':', 0) != 0) fail(l->no, "expected 'γ:' after the copy");
    char g = symbol_of(rest.substr(0, 1), t.output, l->no);
    std::string f = trim(rest.substr(1));
    if (!t.pos.emplace(std::make_pair(cp, g), formula_of(trim(f.substr(1)), l->no)).second)
      fail(l->no, "node formula given twice");
  }
  for (auto* l : d.all("ord")) {
    auto colon = l->value.find(':');
    if (colon == std::string::npos) fail(l->no, "expected 'c,d: formula'");
    auto cd = split(l->value.substr(0, colon), ',');
    if (cd.size() != 2) fail(l->no, "expected 'c,d' before ':'");
    auto key = std::make_pair(copy_of(cd[0], l->no), copy_of(cd[1], l->no));
    if (!t.ord.emplace(key, formula_of(trim(l->value.substr(colon + 1)), l->no)).second)
      fail(l->no, "order formula given twice");
  }
  t.validate();
  return t;
}

std::string print_fot(const Fot& t) {
  std::string out = "kind: fot\n";
  out += "input: " + t.input.symbols() + "\n";
  out += "output: " + t.output.symbols() + "\n";
  out += "copies: " + std::to_string(t.copies) + "\n";
  out += "dom: " + fo::print(t.dom) + "\n";
  for (auto& [k, f] : t.pos)
    out += "pos: " + std::to_string(k.first) + ", " + k.second + ": " + fo::print(f) + "\n";
  for (auto& [k, f] : t.ord)
    out += "ord: " + std::to_string(k.first) + "," + std::to_string(k.second) + ": " + fo::print(f) + "\n";
  return out;
}

// --------------------------------------------------------------- SST_sf

SstSf sstsf_of(const Doc& d) {
  d.only({"input", "output", "states", "note", "initial", "vars", "out", "guards", "accept-states",
          "muller", "move"});
  SstSf s;
  s.input = alphabet_of(*d.one("input"));
  s.output = alphabet_of(*d.one("output"));
  s.states = states_of(d);
  s.notes.assign(s.states.size(), "");
  for (auto* l : d.all("note")) {
    auto eq = l->value.find('=');
    if (eq == std::string::npos) fail(l->no, "expected 'state = text'");
    s.notes[index_in(s.states, trim(l->value.substr(0, eq)), l->no, "state")] = trim(l->value.substr(eq + 1));
  }
  auto* in = d.one("initial");
  s.initial = index_in(s.states, in->value, in->no, "state");
  s.vars = vars_of(d);
  auto* o = d.one("out");
  s.out_var = index_in(s.vars, o->value, o->no, "variable");
  lookaround_of(d, s.input, s.lookahead, s.lookbehind);
  if (auto* g = d.one("guards", false))
    for (auto& lit : split(g->value, ',')) {
      if (lit.empty()) continue;
      auto w = words_of(lit);
      if (w.size() != 2 || (w[0] != "la" && w[0] != "lb")) fail(g->no, "guards are 'la p' or 'lb r'");
      GuardLit gl;
      gl.ahead = w[0] == "la";
      if (gl.ahead && !s.lookahead) fail(g->no, "look-ahead guard without a lookahead section");
      if (!gl.ahead && !s.lookbehind) fail(g->no, "look-behind guard without a lookbehind section");
      gl.state = index_in(gl.ahead ? s.lookahead->states : s.lookbehind->states, w[1], g->no, "guard state");
      s.lits.push_back(gl);
    }
  s.acc_names = words_of(d.one("accept-states")->value);
  for (auto* l : d.all("muller")) {
    auto sets = muller_of(*l, s.acc_names);
    s.muller.insert(s.muller.end(), sets.begin(), sets.end());
  }
  if (s.lits.size() > 20) fail(d.one("guards")->no, "too many guards");
  s.delta.assign(s.states.size(),
                 std::vector<std::vector<SstSf::Move>>(s.input.size(), std::vector<SstSf::Move>(s.nvals())));
  for (auto* l : d.all("move")) {
    // move: q, a, bits -> q' {visits} : assignments
    auto arrow = l->value.find("->");
    if (arrow == std::string::npos) fail(l->no, "expected '->' in move");
    auto lhs = split(l->value.substr(0, arrow), ',');
    if (lhs.size() != 3) fail(l->no, "expected 'q, a, valuation' before '->'");
    int q = index_in(s.states, lhs[0], l->no, "state");
    int a = s.input.index_of(symbol_of(lhs[1], s.input, l->no));
    if (lhs[2].size() != s.lits.size() || lhs[2].find_first_not_of("01") != std::string::npos)
      if (!(s.lits.empty() && lhs[2] == "-")) fail(l->no, "valuation must have one 0/1 per guard");
    std::uint32_t v = 0;
    for (std::size_t j = 0; j < s.lits.size(); ++j)
      if (lhs[2][j] == '1') v |= std::uint32_t{1} << j;
    std::string rhs = l->value.substr(arrow + 2);
    auto brace = rhs.find('{');
    auto close = rhs.find('}');
    if (brace == std::string::npos || close == std::string::npos || close < brace)
      fail(l->no, "expected the visited set in braces");
    auto& mv = s.delta[q][a][v];
    if (mv.to >= 0) fail(l->no, "move given twice");
    mv.to = index_in(s.states, trim(rhs.substr(0, brace)), l->no, "state");
    auto vis = muller_of(Line{l->no, "", rhs.substr(brace, close - brace + 1)}, s.acc_names);
    for (int x : vis.at(0)) mv.visits |= std::uint64_t{1} << x;
    std::string tail = trim(rhs.substr(close + 1));
    if (!tail.empty() && tail[0] != ':') fail(l->no, "expected ':' before the update");
    mv.upd = subst_of(tail.empty() ? "" : tail.substr(1), s.vars, s.output, l->no);
  }
  s.validate();
  return s;
}

std::string print_sstsf(const SstSf& s) {
  std::string out = "kind: sstsf\n";
  out += "input: " + s.input.symbols() + "\n";
  out += "output: " + s.output.symbols() + "\n";
  out += "states: " + join(s.states) + "\n";
  for (std::size_t q = 0; q < s.states.size(); ++q)
    if (q < s.notes.size() && !s.notes[q].empty()) out += "note: " + s.states[q] + " = " + s.notes[q] + "\n";
  out += "initial: " + s.states[s.initial] + "\n";
  out += "vars: " + join(s.vars) + "\n";
  out += "out: " + s.vars[s.out_var] + "\n";
  print_lookaround(out, s.lookahead, s.lookbehind);
  std::vector<std::string> lits;
  for (auto& l : s.lits)
    lits.push_back(l.ahead ? "la " + s.lookahead->states[l.state] : "lb " + s.lookbehind->states[l.state]);
  if (!lits.empty()) out += "guards: " + join(lits, ", ") + "\n";
  out += "accept-states: " + join(s.acc_names) + "\n";
  std::vector<std::string> sets;
  for (auto& m : s.muller) sets.push_back(set_str(m, s.acc_names));
  out += "muller: " + join(sets) + "\n";
  for (std::size_t q = 0; q < s.states.size(); ++q)
    for (std::size_t a = 0; a < s.input.size(); ++a)
      for (std::uint32_t v = 0; v < s.nvals(); ++v) {
        const auto& mv = s.delta[q][a][v];
        if (mv.to < 0) continue;
        std::string bits;
        for (std::size_t j = 0; j < s.lits.size(); ++j) bits += (v >> j & 1) ? '1' : '0';
        if (bits.empty()) bits = "-";
        std::vector<int> vis;
        for (std::size_t x = 0; x < s.acc_names.size(); ++x)
          if (mv.visits >> x & 1) vis.push_back(static_cast<int>(x));
        out += "move: " + s.states[q] + ", " + s.input.at(a) + ", " + bits + " -> " + s.states[mv.to] + " " +
               set_str(vis, s.acc_names);
        std::string u = print_subst(mv.upd, s.vars);
        if (!u.empty()) out += " : " + u;
        out += "\n";
      }
  return out;
}

}  // namespace

Rhs parse_rhs(std::string_view text, const std::vector<std::string>& vars, const Alphabet& out) {
  std::vector<int> order(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return vars[a].size() > vars[b].size(); });
  Rhs r;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text.compare(i, kEps.size(), kEps) == 0) {
      i += kEps.size();
      continue;
    }
    if (text[i] == '\\') {
      if (i + 1 >= text.size()) throw Error("parse", "dangling escape in update");
      if (!out.contains(text[i + 1]))
        throw Error("parse", std::string("letter '") + text[i + 1] + "' is not in the output alphabet");
      r.push_back(Item{-1, text[i + 1]});
      i += 2;
      continue;
    }
    bool matched = false;
    for (int v : order)
      if (text.compare(i, vars[v].size(), vars[v]) == 0) {
        r.push_back(Item{v, 0});
        i += vars[v].size();
        matched = true;
        break;
      }
    if (matched) continue;
    if (!out.contains(text[i]))
      throw Error("parse", std::string("'") + text[i] + "' is neither a variable nor an output letter");
    r.push_back(Item{-1, text[i]});
    ++i;
  }
  return r;
}

std::string print_rhs(const Rhs& r, const std::vector<std::string>& vars) {
  if (r.empty()) return kEps;
  std::string s;
  for (const Item& it : r) {
    if (it.is_var()) {
      s += vars[it.var];
      continue;
    }
    char c = it.letter;
    bool clash = c == '\\' || c == ';' || std::isspace(static_cast<unsigned char>(c));
    for (auto& v : vars)
      if (v.find(c) != std::string::npos) clash = true;
    if (clash) s.push_back('\\');
    s.push_back(c);
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Machine parse_machine(std::string_view text) {
  Doc d(text);
  if (d.kind.empty()) throw Error("parse", "missing 'kind:' header");
  if (d.kind != "2wst" && d.kind != "sstsf" && !d.sections.empty())
    fail(d.sections[0].first.no, "look-around sections are only allowed in 2wst and sstsf files");
  if (d.kind == "dma") return dma_of(d, nullptr);
  if (d.kind == "dfa") return dfa_of(d, nullptr);
  if (d.kind == "sst") return sst_of(d);
  if (d.kind == "2wst") return twowst_of(d);
  if (d.kind == "fot") return fot_of(d);
  if (d.kind == "sstsf") return sstsf_of(d);
  fail(d.kind_line, "unknown kind '" + d.kind + "'");
}

Machine load_machine(const std::string& path) { return parse_machine(read_file(path)); }

std::string print_machine(const Machine& m) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Dma>) return print_dma(x, false);
        if constexpr (std::is_same_v<T, Dfa>) return print_dfa(x, false);
        if constexpr (std::is_same_v<T, Sst>) return print_sst(x);
        if constexpr (std::is_same_v<T, TwoWst>) return print_twowst(x);
        if constexpr (std::is_same_v<T, Fot>) return print_fot(x);
        if constexpr (std::is_same_v<T, SstSf>) return print_sstsf(x);
      },
      m);
}

const char* kind_name(const Machine& m) {
  static const char* names[] = {"dma", "dfa", "sst", "2wst", "fot", "sstsf"};
  return names[m.index()];
}

// The runner keeps its own copy of the machine, so it may outlive m.
Runner runner_for(const Machine& m, RunOptions opt) {
  if (auto* s = std::get_if<Sst>(&m)) {
    auto p = std::make_shared<const Sst>(*s);
    return [p](const UPWord& w, std::size_t k) { return run_output(*p, w, k); };
  }
  if (auto* t = std::get_if<TwoWst>(&m)) {
    auto p = std::make_shared<const TwoWst>(*t);
    return [p](const UPWord& w, std::size_t k) { return run_2wst(*p, w, k); };
  }
  if (auto* f = std::get_if<Fot>(&m)) {
    auto p = std::make_shared<const Fot>(*f);
    return [p, opt](const UPWord& w, std::size_t k) { return run_fot(*p, w, k, opt.fot); };
  }
  if (auto* s = std::get_if<SstSf>(&m)) {
    auto p = std::make_shared<const SstSf>(*s);
    return [p](const UPWord& w, std::size_t k) { return run_sst_sf(*p, w, k); };
  }
  throw Error("usage", std::string(kind_name(m)) + " files describe automata, not transducers");
}

}  // namespace omt
