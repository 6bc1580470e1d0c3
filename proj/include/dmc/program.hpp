#ifndef DMC_PROGRAM_HPP
#define DMC_PROGRAM_HPP

#include <optional>
#include <string>
#include <vector>

#include "dmc/terms.hpp"

namespace dmc {

/// One (def NAME [TYPE] TERM) form. References to earlier definitions and to
/// the standard library are inlined at parse time, so `term` is closed.
struct Definition {
  std::string name;
  std::optional<std::pair<Obj, Obj>> declared;  // (arrow DOM COD), if given
  TermPtr term;
};

/// A (run NAME ARGS...) or (check NAME) directive, kept in file order. Run
/// arguments stay as source text; the CLI parses them against the fuel and
/// bound it was configured with.
struct Directive {
  enum class Kind { Run, Check };
  Kind kind;
  std::string name;
  std::vector<std::string> args;
};

struct ProgramFile {
  std::vector<Definition> definitions;
  std::vector<Directive> directives;

  const Definition* find(const std::string& name) const;
};

/// Parses a .dmc source. The standard library names are in scope from the
/// start; definition names must be unique and must not shadow each other.
ProgramFile parse_program(const std::string& src, int levels = 3,
                          bool extended_prn = false);

/// Prints a ProgramFile so that parse(print(p)) is identical (same names,
/// declared types, terms, and directives).
std::string print_program(const ProgramFile& p);

bool program_equal(const ProgramFile& a, const ProgramFile& b);

}  // namespace dmc

#endif
