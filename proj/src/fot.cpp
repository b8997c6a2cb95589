#include "omegatrans/fot.hpp"

#include <algorithm>
#include <tuple>

namespace omt {

void Fot::validate() const {
  if (copies < 1) throw Error("model", "a transducer needs at least one copy");
  if (!dom) throw Error("model", "missing domain formula");
  if (!fo::free_vars(dom).empty()) throw Error("model", "domain formula must be closed");
  auto check_labels = [&](const fo::FormulaPtr& f) {
    for (char c : fo::labels_used(f))
      if (!input.contains(c))
        throw Error("model", std::string("formula tests unknown input letter '") + c + "'");
  };
  check_labels(dom);
  for (auto& [key, f] : pos) {
    if (key.first < 1 || key.first > copies) throw Error("model", "node formula for unknown copy");
    if (!output.contains(key.second))
      throw Error("model", std::string("node formula for unknown output letter '") + key.second + "'");
    for (auto& v : fo::free_vars(f))
      if (v != "x") throw Error("model", "node formulas may only have x free, found " + v);
    check_labels(f);
  }
  for (auto& [key, f] : ord) {
    if (key.first < 1 || key.first > copies || key.second < 1 || key.second > copies)
      throw Error("model", "order formula for unknown copy");
    for (auto& v : fo::free_vars(f))
      if (v != "x" && v != "y") throw Error("model", "order formulas may only have x, y free, found " + v);
    check_labels(f);
  }
}

FotEvaluator::FotEvaluator(const Fot& t, fo::EvalConfig cfg)
    : t_(t), cfg_(cfg), dom_(t.dom, {}) {
  for (auto& [key, f] : t.pos) pos_.emplace(key, fo::Compiled(f, {"x"}));
  for (auto& [key, f] : t.ord) ord_.emplace(key, fo::Compiled(f, {"x", "y"}));
}

bool FotEvaluator::in_domain(const UPWord& w) const { return dom_.eval(w, {}, cfg_); }

std::optional<char> FotEvaluator::label(const UPWord& w, int copy, std::size_t v) const {
  std::optional<char> found;
  for (char g : t_.output.symbols()) {
    auto it = pos_.find({copy, g});
    if (it == pos_.end() || !it->second.eval(w, {v}, cfg_)) continue;
    if (found)
      throw Error("ambiguous label", "copy " + std::to_string(copy) + " at position " +
                                         std::to_string(v) + " has two labels");
    found = g;
  }
  return found;
}

bool FotEvaluator::before(const UPWord& w, const FotNode& a, const FotNode& b) const {
  auto it = ord_.find({a.copy, b.copy});
  if (it == ord_.end()) return false;
  return it->second.eval(w, {a.pos, b.pos}, cfg_);
}

bool fot_domain(const Fot& t, const UPWord& w, const fo::EvalConfig& cfg) {
  return FotEvaluator(t, cfg).in_domain(w);
}

std::optional<char> node_label(const Fot& t, const UPWord& w, int copy, std::size_t v,
                               const fo::EvalConfig& cfg) {
  if (v == 0) throw Error("usage", "positions are 1-based");
  if (copy < 1 || copy > t.copies) throw Error("usage", "no such copy");
  return FotEvaluator(t, cfg).label(w, copy, v);
}

namespace {

std::string node_str(const FotNode& n) {
  return std::to_string(n.pos) + "^" + std::to_string(n.copy);
}

std::vector<FotNode> nodes_in(const FotEvaluator& ev, const Fot& t, const UPWord& w,
                              std::size_t from, std::size_t to) {
  std::vector<FotNode> out;
  for (std::size_t v = from; v <= to; ++v)
    for (int c = 1; c <= t.copies; ++c)
      if (auto g = ev.label(w, c, v)) out.push_back({c, v, *g});
  return out;
}

// Order queries repeat across window rounds; remember them.
class OrderCache {
 public:
  OrderCache(const FotEvaluator& ev, const UPWord& w) : ev_(ev), w_(w) {}
  bool operator()(const FotNode& a, const FotNode& b) {
    auto key = std::make_tuple(a.copy, a.pos, b.copy, b.pos);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool r = ev_.before(w_, a, b);
    memo_.emplace(key, r);
    return r;
  }

 private:
  const FotEvaluator& ev_;
  const UPWord& w_;
  std::map<std::tuple<int, std::size_t, int, std::size_t>, bool> memo_;
};

// First index i with n before sorted[i]; sorted.size() if none.
std::size_t insertion_point(OrderCache& before, const std::vector<FotNode>& sorted,
                            const FotNode& n) {
  std::size_t lo = 0, hi = sorted.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (before(n, sorted[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace

Outcome run_fot(const Fot& t, const UPWord& w, std::size_t k, const FotRunOptions& opt) {
  check_input(t.input, w);
  Outcome res;
  FotEvaluator ev(t, opt.cfg);
  if (!ev.in_domain(w)) {
    res.verdict = Outcome::Rejected;
    res.note = "input outside the domain";
    return res;
  }
  if (k == 0) {
    res.verdict = Outcome::Accepted;
    return res;
  }
  const std::size_t band = 2 * w.period().size();
  std::size_t W = std::max<std::size_t>({opt.window ? opt.window : k, w.span(), 1});
  OrderCache before(ev, w);
  std::vector<FotNode> sorted;
  std::size_t done = 0;  // positions already inserted
  bool band_was_empty = false;
  while (true) {
    for (auto& n : nodes_in(ev, t, w, done + 1, W))
      sorted.insert(sorted.begin() + static_cast<std::ptrdiff_t>(insertion_point(before, sorted, n)), n);
    done = W;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
      const auto &a = sorted[i], &b = sorted[i + 1];
      if (!before(a, b) || before(b, a))
        throw Error("not string-shaped",
                    "nodes " + node_str(a) + " and " + node_str(b) + " are not ordered");
    }
    if (opt.full_order_check)
      for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
          if (!before(sorted[i], sorted[j]) || before(sorted[j], sorted[i]))
            throw Error("not string-shaped", "nodes " + node_str(sorted[i]) + " and " +
                                                 node_str(sorted[j]) + " are not ordered");
    // Nodes just beyond the window must not overtake the emitted prefix.
    auto beyond = nodes_in(ev, t, w, W + 1, W + band);
    std::size_t safe = sorted.size();
    for (auto& n : beyond) safe = std::min(safe, insertion_point(before, sorted, n));
    if (safe >= k) {
      for (std::size_t i = 0; i < k; ++i) res.out += sorted[i].label;
      break;
    }
    bool periodic_zone = W > w.prefix().size();
    if (beyond.empty() && band_was_empty && periodic_zone) {
      for (auto& n : sorted) res.out += n.label;
      res.out.resize(k, kBottom);
      break;
    }
    band_was_empty = beyond.empty() && periodic_zone;
    if (W >= opt.max_window)
      throw Error("window exhausted", "only " + std::to_string(safe) +
                                          " output letters are settled within " +
                                          std::to_string(W) + " positions");
    W = std::min(2 * W, opt.max_window);
  }
  res.verdict = Outcome::Accepted;
  return res;
}

Fot f1_fot() {
  using fo::parse;
  Fot t;
  t.input = Alphabet("ab#");
  t.output = Alphabet("ab#");
  t.copies = 3;
  t.dom = parse("@is_string#");
  for (char g : std::string("ab")) {
    std::string L = std::string("L") + g + "(x)";
    auto inner = parse(L + " & !L#(x) & @reach#(x)");
    t.pos[{1, g}] = inner;
    t.pos[{2, g}] = inner;
    t.pos[{3, g}] = parse(L + " & (L#(x) | (!L#(x) & !@reach#(x)))");
  }
  t.pos[{3, '#'}] = parse("L#(x) & (L#(x) | (!L#(x) & !@reach#(x)))");
  t.ord[{1, 1}] = parse("x < y");
  t.ord[{3, 3}] = parse("x < y");
  t.ord[{2, 2}] = parse("(!@btw#(x, y) -> y < x) & (@btw#(x, y) -> x < y)");
  t.ord[{1, 3}] = parse("x < y");
  t.ord[{2, 3}] = parse("x < y");
  t.ord[{1, 2}] = parse("x < y & @btw#(x, y)");
  t.ord[{3, 1}] = parse("L#(x) & x < y");
  t.ord[{3, 2}] = parse("L#(x) & x < y");
  t.ord[{2, 1}] = parse("(x < y & @btw#(x, y)) | !@btw#(x, y)");
  return t;
}

}  // namespace omt
