#ifndef DMC_EVAL_HPP
#define DMC_EVAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dmc/typecheck.hpp"

namespace dmc {

using Nat = boost::multiprecision::cpp_int;

struct Value;
using Val = std::shared_ptr<const Value>;

/// Evaluator values: Star : Top, Nat : N[k,p], Pair : tensor, Inl/Inr : sum.
struct Value {
  enum class Kind { Star, Nat, Pair, Inl, Inr };
  Kind kind;
  Nat n;      // Nat
  Val a, b;   // Pair (a,b); Inl/Inr payload in a
};

Val val_star();
Val val_nat(Nat n);
Val val_nat_u(unsigned long long n);
Val val_pair(Val a, Val b);
Val val_inl(Val v);
Val val_inr(Val v);

bool value_equal(const Val& a, const Val& b);
std::string print_value(const Val& v);
Val parse_value(const std::string& src);

/// Evaluation result: a value, or fuel ran out (possible divergence).
struct Outcome {
  bool done;
  Val value;             // when done
  unsigned long long steps = 0;  // the configured fuel, when exhausted
};

/// Structural defect (a value of the wrong shape reached a node); these are
/// bugs in the caller, not Outcomes.
struct EvalDefect : std::runtime_error {
  explicit EvalDefect(const std::string& what) : std::runtime_error(what) {}
};

/// One line per fuel unit: node kind, input value, fuel remaining.
using TraceFn = std::function<void(const std::string& node, const Val& input,
                                   unsigned long long fuel_left)>;

/// Big-step evaluation of the standard model: t must typecheck and v inhabit
/// its domain. Scheme unfoldings and Min iterations each cost one fuel unit;
/// structural nodes are free.
Outcome eval(const TermPtr& t, const Val& v, unsigned long long fuel,
             const TraceFn& trace = nullptr);

/// Kleene minimization over f : x_obj (x) N[counter] -> N[*]: least b with
/// f(x,b) = 0, packaged as a Min term with carrier x_obj (x) N[counter].
/// When x_obj is Top, f may be typed N[counter] -> N[*] directly.
/// Fuel-exhausts when no witness exists.
TermPtr kleene_min(const TermPtr& f, const Obj& x_obj, LevelIndex counter_ix,
                   const CheckConfig& cfg);

/// Safe minimization: least b with h(x,b) even, result 2b+1. Partial: absence
/// of a witness fuel-exhausts.
TermPtr safe_min(const TermPtr& h, const Obj& x_obj, LevelIndex counter_ix,
                 const CheckConfig& cfg);

/// Total variant with an explicit search bound: scans b = 0..bound and
/// returns 0 when no even output occurs. A semantic variant, not the
/// coalgebraic operator. x may be null when x_obj is Top.
Outcome safe_min_bounded(const TermPtr& h, const Obj& x_obj, const Val& x,
                         const Nat& bound, unsigned long long fuel,
                         const CheckConfig& cfg);

// ---------------------------------------------------------------------------
// Extensional diagram checking

struct DiagramSpec {
  std::string name;
  TermPtr lhs, rhs;
  std::vector<Val> samples;
};

struct Disagreement {
  Val input;
  Outcome lhs, rhs;
};

struct DiagramReport {
  std::string name;
  bool judgments_match = false;
  std::string judgment_detail;
  int checked = 0;
  std::vector<Disagreement> disagreements;
  std::vector<Val> inconclusive;  // fuel ran out on a leg

  bool commutes() const {
    return judgments_match && disagreements.empty() && inconclusive.empty();
  }
};

/// Evaluates both legs on every sample; requires equal judgments first.
DiagramReport check_diagram(const DiagramSpec& d, const CheckConfig& cfg,
                            unsigned long long fuel);

/// All points of a shape: Star for Top, 0..bound for Nat, cross products for
/// tensors, both injections for sums. The shape is structural, not
/// normalized.
std::vector<Val> enumerate_points(const Obj& shape, unsigned long long bound);

}  // namespace dmc

#endif
