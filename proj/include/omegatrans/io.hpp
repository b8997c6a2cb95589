#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "omegatrans/constructions.hpp"
#include "omegatrans/fot.hpp"
#include "omegatrans/muller.hpp"
#include "omegatrans/sst.hpp"
#include "omegatrans/twowst.hpp"

namespace omt {

using Machine = std::variant<Dma, Dfa, Sst, TwoWst, Fot, SstSf>;

// Text formats share a `kind:` header (dma, dfa, sst, 2wst, fot, sstsf);
// `//` starts a comment line.  Parse errors carry the line number.
Machine parse_machine(std::string_view text);
Machine load_machine(const std::string& path);
std::string print_machine(const Machine& m);
const char* kind_name(const Machine& m);

// Right-hand side of an update: longest variable name first, then an
// output letter; `\c` forces a letter, `ε` and blanks are skipped.
Rhs parse_rhs(std::string_view text, const std::vector<std::string>& vars, const Alphabet& out);
std::string print_rhs(const Rhs& r, const std::vector<std::string>& vars);

struct RunOptions {
  FotRunOptions fot;
};

// Transducer as a function on words; throws Error("usage") for automata.
Runner runner_for(const Machine& m, RunOptions opt = {});

std::string read_file(const std::string& path);

}  // namespace omt
