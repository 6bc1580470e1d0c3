#ifndef DMC_TERMS_HPP
#define DMC_TERMS_HPP

#include <functional>
#include <string>
#include <vector>

#include "dmc/objects.hpp"

namespace dmc {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Arrow syntax of the free category. Object annotations are typing data;
/// evaluation is purely structural on values.
struct Term {
  enum class Kind {
    Id,        // a -> a
    Comp,      // f . g  (g first)
    Par,       // f (x) g
    Sym,       // a (x) b -> b (x) a
    LUnit,     // Top (x) a -> a
    LUnitInv,  // a -> Top (x) a
    Inl,       // a -> a (+) b
    Inr,       // b -> a (+) b
    Copair,    // [f, g] : a (+) b -> c
    Proj1,     // a (x) b -> a
    Proj2,     // a (x) b -> b
    Dup,       // a -> a (x) a
    Bang,      // a -> Top
    Zero,      // Top -> N[ix]
    Succ,      // N[ix] -> N[ix], n = 1 doubles, n = 2 doubles-plus-one
    Eta,       // a -> T a
    Eps,       // G a -> a
    FR,        // flat recursion: case split on zero vs successor
    SRR,       // safe ramified recursion: one step per binary digit
    Min,       // bounded safe minimization (anamorphism)
    Dist,      // d (x) (a (+) b) -> (d (x) a) (+) (d (x) b)
    Prn2       // two-branch recursion on notation (extension)
  };

  Kind kind;
  Obj a, b;         // object parameters
  LevelIndex ix{};  // level parameter (SRR keeps only ix.p)
  int n = 0;        // bit choice for Succ / Min
  TermPtr c0, c1, c2;
};

// Builders. Object arguments are normalized on construction.
struct TermFactory {
  int levels;
  explicit TermFactory(int levels = 3) : levels(levels) {}

  Obj norm(const Obj& x) const { return normalize_object(x, levels); }

  TermPtr id(const Obj& x) const;
  TermPtr comp(TermPtr f, TermPtr g) const;  // f after g
  TermPtr comp(TermPtr f, TermPtr g, TermPtr h) const;
  TermPtr par(TermPtr f, TermPtr g) const;
  TermPtr sym(const Obj& x, const Obj& y) const;
  TermPtr lunit(const Obj& x) const;
  TermPtr lunit_inv(const Obj& x) const;
  TermPtr inl(const Obj& x, const Obj& y) const;
  TermPtr inr(const Obj& x, const Obj& y) const;
  TermPtr copair(TermPtr f, TermPtr g) const;
  TermPtr proj1(const Obj& x, const Obj& y) const;
  TermPtr proj2(const Obj& x, const Obj& y) const;
  TermPtr dup(const Obj& x) const;
  TermPtr bang(const Obj& x) const;
  TermPtr zero(LevelIndex ix) const;
  TermPtr succ(int n, LevelIndex ix) const;
  TermPtr eta(const Obj& x) const;
  TermPtr eps(const Obj& x) const;
  TermPtr fr(TermPtr g, TermPtr h, LevelIndex ix) const;
  TermPtr srr(TermPtr g, TermPtr h, int p) const;
  TermPtr min(TermPtr h, int n, LevelIndex target) const;
  TermPtr dist_node(const Obj& d, const Obj& x, const Obj& y) const;
  TermPtr prn2(TermPtr g, TermPtr h1, TermPtr h2, LevelIndex ix) const;

  /// Distributivity arrow d : N[1,p] (x) (x (+) y) -> (N[1,p] (x) x) (+)
  /// (N[1,p] (x) y). Kept as a derived primitive with direct isomorphism
  /// semantics; see README for why it is not an SRR node.
  TermPtr dist(int p, const Obj& x, const Obj& y) const;

  /// Inverse of dist, built from the copair of d (x) in_l and d (x) in_r.
  TermPtr dist_inv(const Obj& d, const Obj& x, const Obj& y) const;

  /// Top -> N[ix] spelling m in binary, most significant bit first.
  TermPtr numeral(unsigned long long m, LevelIndex ix) const;

  /// Point Top -> x1 (x) ... (x) xn as right-nested pairs of numerals.
  TermPtr tuple_point(const std::vector<TermPtr>& points) const;

  /// j-th projection (0-based) out of a right-nested tensor of objs.
  TermPtr projection(size_t j, const std::vector<Obj>& objs) const;

  // Derived standard library pieces.
  TermPtr pred(LevelIndex ix) const;            // n -> floor(n/2)
  TermPtr monus1(LevelIndex ix) const;          // a -> 1 -. a
  TermPtr inc(LevelIndex ix) const;             // a -> a + 1 (Prn2-built)
  TermPtr mod2(LevelIndex ix) const;            // a -> a mod 2 (Prn2-built)
  TermPtr mod2_notation(int p, LevelIndex out) const;  // SRR diagram: parity
                                                       // of bit length
  TermPtr cond_zero(LevelIndex driver, LevelIndex data) const;  // Z
  TermPtr cond(LevelIndex ix) const;            // C(a,(b,c)) truth table
  TermPtr cond_notation(int p, LevelIndex out) const;  // literal composite of
                                                       // Z with mod2_notation
  TermPtr const_nat(unsigned long long m, const Obj& dom, LevelIndex ix) const;
};

/// Named stdlib entry; reference_semantics is prose for humans, the tests
/// carry the executable oracles.
struct StdLibEntry {
  std::string name;
  TermPtr term;
  std::string reference_semantics;
};

std::vector<StdLibEntry> stdlib(int levels = 3);

struct DisabledExtension : std::runtime_error {
  explicit DisabledExtension(const std::string& what)
      : std::runtime_error(what) {}
};

/// Two-branch predicative recursion on notation; only reachable when the
/// extended-prn configuration is on.
TermPtr prn_extended(TermPtr g, TermPtr h1, TermPtr h2, LevelIndex ix,
                     bool extension_enabled, int levels = 3);

/// Functor action on terms; pushes F through the structure, adjusting
/// generators and index fields. Requires t to typecheck.
TermPtr apply_functor_term(FunctorTag f, const TermPtr& t, int levels);

/// Largest second index targeted by a Min node in t, or -1 when Min-free.
int max_min_target(const TermPtr& t);

bool term_equal(const TermPtr& a, const TermPtr& b);

/// S-expression grammar, round-trips bit-exact.
struct Sexpr;
std::string print_term(const TermPtr& t);
TermPtr parse_term(const std::string& src, int levels = 3,
                   bool extended_prn = false);

/// Resolves bare atoms to previously defined terms; returns null for
/// unknown names.
using NameLookup = std::function<TermPtr(const std::string&)>;
TermPtr term_from_sexpr(const Sexpr& e, int levels, bool extended_prn,
                        const NameLookup& lookup = nullptr);
Sexpr sexpr_of_object(const Obj& x);
Obj object_of_sexpr(const Sexpr& e);

}  // namespace dmc

#endif
