#include "omegatrans/words.hpp"

#include <algorithm>
#include <fstream>

namespace omt {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  std::fill(std::begin(lookup_), std::end(lookup_), -1);
  if (symbols_.empty()) throw Error("alphabet", "empty alphabet");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto c = static_cast<unsigned char>(symbols_[i]);
    if (lookup_[c] >= 0)
      throw Error("alphabet", std::string("duplicate symbol '") + symbols_[i] + "'");
    lookup_[c] = static_cast<int>(i);
  }
}

int Alphabet::index_of(char c) const {
  if (symbols_.empty()) return -1;
  return lookup_[static_cast<unsigned char>(c)];
}

void Alphabet::check_word(std::string_view w, const char* what) const {
  for (char c : w)
    if (!contains(c))
      throw Error("alphabet", std::string(what) + " uses symbol '" + c +
                                  "' outside {" + symbols_ + "}");
}

void check_input(const Alphabet& a, const UPWord& w) {
  a.check_word(w.prefix(), "input word");
  a.check_word(w.period(), "input word");
}

namespace {

std::string primitive_root(const std::string& v) {
  const std::size_t n = v.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = v[i] == v[i - d];
    if (ok) return v.substr(0, d);
  }
  return v;
}

}  // namespace

UPWord::UPWord(std::string prefix, std::string period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw Error("word", "period must be non-empty");
  period_ = primitive_root(period_);
  // u.c . (v'.c)^w  ==  u . (c.v')^w
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

UPWord UPWord::parse(std::string_view text) {
  // PREFIX(PERIOD)^w with \( \) \\ escapes
  std::string prefix, period;
  std::string* cur = &prefix;
  bool in_period = false, closed = false;
  std::size_t i = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (closed) break;
    if (c == '\\') {
      if (i + 1 >= text.size()) throw Error("parse", "dangling escape in word");
      cur->push_back(text[++i]);
    } else if (c == '(' && !in_period) {
      in_period = true;
      cur = &period;
    } else if (c == ')' && in_period) {
      closed = true;
    } else if (c == '(' || c == ')') {
      throw Error("parse", "unbalanced parenthesis in word '" + std::string(text) + "'");
    } else {
      cur->push_back(c);
    }
  }
  std::string_view rest = closed ? text.substr(i) : std::string_view{};
  if (!closed || (rest != "^w" && rest != "^ω"))
    throw Error("parse", "expected PREFIX(PERIOD)^w, got '" + std::string(text) + "'");
  return UPWord(prefix, period);
}

namespace {
void escape_into(std::string& out, const std::string& s) {
  for (char c : s) {
    if (c == '(' || c == ')' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
}
}  // namespace

std::string UPWord::str() const {
  std::string out;
  escape_into(out, prefix_);
  out.push_back('(');
  escape_into(out, period_);
  out += ")^w";
  return out;
}

std::size_t UPWord::phase(std::size_t i) const {
  if (i <= prefix_.size()) return i;
  return prefix_.size() + 1 + (i - prefix_.size() - 1) % period_.size();
}

char UPWord::at(std::size_t i) const {
  if (i == 0) throw Error("word", "positions are 1-based");
  if (i <= prefix_.size()) return prefix_[i - 1];
  return period_[(i - prefix_.size() - 1) % period_.size()];
}

UPWord UPWord::suffix(std::size_t i) const {
  if (i == 0) throw Error("word", "positions are 1-based");
  if (i <= prefix_.size()) return UPWord(prefix_.substr(i - 1), period_);
  std::size_t r = (i - prefix_.size() - 1) % period_.size();
  return UPWord("", period_.substr(r) + period_.substr(0, r));
}

std::string UPWord::take(std::size_t n) const {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(at(i));
  return out;
}

char letter_at(const UPWord& w, std::size_t i) { return w.at(i); }
UPWord suffix(const UPWord& w, std::size_t i) { return w.suffix(i); }

std::optional<std::size_t> first_divergence(const UPWord& a, const UPWord& b,
                                            std::size_t bound) {
  for (std::size_t j = 1; j <= bound; ++j)
    if (a.at(j) != b.at(j)) return j;
  return std::nullopt;
}

std::optional<std::size_t> first_divergence(std::string_view a,
                                            std::string_view b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t j = 0; j < n; ++j)
    if (a[j] != b[j]) return j + 1;
  if (a.size() != b.size()) return n + 1;
  return std::nullopt;
}

std::vector<UPWord> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open corpus " + path);
  std::vector<UPWord> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::size_t s = line.find_first_not_of(' ');
    if (s == std::string::npos) continue;
    line = line.substr(s);
    if (line.rfind("//", 0) == 0) continue;
    out.push_back(UPWord::parse(line));
  }
  return out;
}

std::string render_output(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == kBottom)
      out += "⊥";
    else
      out.push_back(c);
  }
  return out;
}

const char* verdict_name(Outcome::Verdict v) {
  switch (v) {
    case Outcome::Accepted: return "accepted";
    case Outcome::Rejected: return "rejected";
    case Outcome::Stuck: return "stuck";
  }
  return "?";
}

}  // namespace omt
