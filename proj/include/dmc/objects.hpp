#ifndef DMC_OBJECTS_HPP
#define DMC_OBJECTS_HPP

#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmc {

/// Tiering index of a copy of the naturals: k is the safety index (0 or 1),
/// p counts how many minimizations were spent to reach this level.
struct LevelIndex {
  int k = 0;
  int p = 0;
  auto operator<=>(const LevelIndex&) const = default;
};

struct IndexOutOfRange : std::runtime_error {
  explicit IndexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

/// Validates 0 <= k <= 1 and 0 <= p <= levels-1.
void check_index(LevelIndex ix, int levels);

struct ObjExpr;
using Obj = std::shared_ptr<const ObjExpr>;

/// Objects of the free category: Top, tiered naturals, tensor, coproduct.
/// Trees are immutable and shared.
struct ObjExpr {
  enum class Kind { Top, Nat, Tensor, Coprod };
  Kind kind;
  LevelIndex ix{};   // Nat
  Obj left, right;   // Tensor / Coprod
};

Obj obj_top();
Obj obj_nat(LevelIndex ix);
Obj obj_nat(int k, int p);
Obj obj_tensor(Obj a, Obj b);
Obj obj_coprod(Obj a, Obj b);

/// Tensor power x^n (Top for n = 0), right-nested.
Obj obj_pow(const Obj& x, int n);

bool obj_equal(const Obj& a, const Obj& b);

/// Canonical form: a right-nested coproduct of right-nested tensors, tensor
/// factors sorted by (k,p), Top units dropped, tensor distributed over
/// coproduct left-to-right. Idempotent. Object equality everywhere in the
/// checker means equality of these forms.
Obj normalize_object(const Obj& x, int levels);

enum class FunctorKind { T, G, M };

/// One of the endofunctors T, G, M_p acting on objects and terms.
struct FunctorTag {
  FunctorKind kind;
  int q = 0;  // only for M
  static FunctorTag t() { return {FunctorKind::T}; }
  static FunctorTag g() { return {FunctorKind::G}; }
  static FunctorTag m(int q) { return {FunctorKind::M, q}; }
};

std::string functor_name(FunctorTag f);

/// Action on generators: T sends N[0,p] to Top and fixes N[1,p]; G lifts
/// N[0,p] to N[1,p]; M(q) sends N[k,q] to Top (q = 0) or N[k,q-1] and fixes
/// other levels. Homomorphic through Tensor/Coprod; result is normalized.
Obj apply_functor_obj(FunctorTag f, const Obj& x, int levels);

/// True iff T x = Top: x is Top or a tensor of N[0,*] factors only.
bool in_fiber_T_over_top(const Obj& x);

/// M(i-1) ... M(1) M(0) applied to x, M(0) first.
Obj min_fiber_residue(const Obj& x, int levels);

/// Textual grammar: Top | N[k,p] | (x * y) | (x + y). Round-trips exactly.
std::string print_object(const Obj& x);
Obj parse_object(const std::string& src);

}  // namespace dmc

#endif
