#ifndef DMC_TYPECHECK_HPP
#define DMC_TYPECHECK_HPP

#include <string>
#include <variant>

#include "dmc/terms.hpp"

namespace dmc {

/// Typing result: normalized domain and codomain plus the deepest Min
/// nesting, which is also the program's hierarchy level.
struct Judgment {
  Obj dom;
  Obj cod;
  int mindepth = 0;
};

struct TypeError {
  enum class Kind {
    Mismatch,
    SafeCodomainViolation,
    MinBudgetExceeded,
    MinTargetMismatch,
    IndexOutOfRange,
    DisabledExtension
  };
  Kind kind;
  std::string path;    // term path like .arg[0].body
  std::string detail;  // names the violated side condition
};

std::string type_error_kind_name(TypeError::Kind k);
std::string render_judgment(const Judgment& j);
std::string render_type_error(const TypeError& e);

using TypeResult = std::variant<Judgment, TypeError>;

struct CheckConfig {
  int levels = 3;           // the hierarchy parameter i
  bool extended_prn = false;
};

/// Deterministic and total: every term gets exactly one Judgment or one
/// TypeError. Objects in the result are normalized; composition compares
/// codomain/domain up to normal form (so Top (x) X and X coincide).
TypeResult typecheck(const TermPtr& t, const CheckConfig& cfg);

bool judgment_equal(const Judgment& a, const Judgment& b);

/// Min-nesting depth of a well-typed term; the evaluated function lies in
/// the hierarchy class with index mindepth+1 (upper bound by construction).
/// Throws std::runtime_error when the term does not typecheck.
int classify(const TermPtr& t, const CheckConfig& cfg);

}  // namespace dmc

#endif
