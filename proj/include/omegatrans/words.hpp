#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace omt {

// Raised for malformed input, failed invariants and semantic dead ends.
// The kind is a short stable tag ("parse", "unstable", "rejected", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string symbols);

  const std::string& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool contains(char c) const { return index_of(c) >= 0; }
  int index_of(char c) const;
  char at(std::size_t i) const { return symbols_[i]; }
  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

  void check_word(std::string_view w, const char* what) const;

 private:
  std::string symbols_;
  int lookup_[256];
};

using FiniteWord = std::string;

// u.v^w kept canonical: shortest prefix, primitive period.  Two values
// compare equal exactly when they denote the same infinite word.
class UPWord {
 public:
  UPWord() : period_("a") {}
  UPWord(std::string prefix, std::string period);

  static UPWord parse(std::string_view text);
  std::string str() const;

  const std::string& prefix() const { return prefix_; }
  const std::string& period() const { return period_; }

  char at(std::size_t i) const;  // 1-based
  UPWord suffix(std::size_t i) const;
  std::string take(std::size_t n) const;

  // Positions i > prefix().size() share letters with i + period().size();
  // phase() maps a position to its representative in 1..|u|+|v|.
  std::size_t phase(std::size_t i) const;
  std::size_t span() const { return prefix_.size() + period_.size(); }

  bool operator==(const UPWord& o) const {
    return prefix_ == o.prefix_ && period_ == o.period_;
  }
  bool operator!=(const UPWord& o) const { return !(*this == o); }
  bool operator<(const UPWord& o) const {
    return prefix_ != o.prefix_ ? prefix_ < o.prefix_ : period_ < o.period_;
  }

 private:
  std::string prefix_;
  std::string period_;
};

char letter_at(const UPWord& w, std::size_t i);
UPWord suffix(const UPWord& w, std::size_t i);
std::optional<std::size_t> first_divergence(const UPWord& a, const UPWord& b,
                                            std::size_t bound);

// Same comparison on two finite symbol streams; used by the compare
// harness where outputs are k-letter prefixes.
std::optional<std::size_t> first_divergence(std::string_view a,
                                            std::string_view b);

// Throws Error("alphabet") when w uses a letter outside a.
void check_input(const Alphabet& a, const UPWord& w);

std::vector<UPWord> read_corpus(const std::string& path);

// Stands for the padding letter of a finite limit.
constexpr char kBottom = '\x01';
std::string render_output(std::string_view s);

// Result of running a transducer for k output letters.
struct Outcome {
  enum Verdict { Accepted, Rejected, Stuck };
  Verdict verdict = Rejected;
  std::string out;  // exactly k letters when accepted; kBottom marks padding
  std::string note;
  bool accepted() const { return verdict == Accepted; }
};
const char* verdict_name(Outcome::Verdict v);

}  // namespace omt
