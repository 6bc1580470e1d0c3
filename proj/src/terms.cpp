#include "dmc/terms.hpp"

#include <sstream>

#include "dmc/sexpr.hpp"

namespace dmc {

namespace {

std::shared_ptr<Term> mk(Term::Kind k) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  return t;
}

}  // namespace

TermPtr TermFactory::id(const Obj& x) const {
  auto t = mk(Term::Kind::Id);
  t->a = norm(x);
  return t;
}

TermPtr TermFactory::comp(TermPtr f, TermPtr g) const {
  auto t = mk(Term::Kind::Comp);
  t->c0 = std::move(f);
  t->c1 = std::move(g);
  return t;
}

TermPtr TermFactory::comp(TermPtr f, TermPtr g, TermPtr h) const {
  return comp(std::move(f), comp(std::move(g), std::move(h)));
}

TermPtr TermFactory::par(TermPtr f, TermPtr g) const {
  auto t = mk(Term::Kind::Par);
  t->c0 = std::move(f);
  t->c1 = std::move(g);
  return t;
}

TermPtr TermFactory::sym(const Obj& x, const Obj& y) const {
  auto t = mk(Term::Kind::Sym);
  t->a = norm(x);
  t->b = norm(y);
  return t;
}

TermPtr TermFactory::lunit(const Obj& x) const {
  auto t = mk(Term::Kind::LUnit);
  t->a = norm(x);
  return t;
}

TermPtr TermFactory::lunit_inv(const Obj& x) const {
  auto t = mk(Term::Kind::LUnitInv);
  t->a = norm(x);
  return t;
}

TermPtr TermFactory::inl(const Obj& x, const Obj& y) const {
  auto t = mk(Term::Kind::Inl);
  t->a = norm(x);
  t->b = norm(y);
  return t;
}

TermPtr TermFactory::inr(const Obj& x, const Obj& y) const {
  auto t = mk(Term::Kind::Inr);
  t->a = norm(x);
  t->b = norm(y);
  return t;
}

TermPtr TermFactory::copair(TermPtr f, TermPtr g) const {
  auto t = mk(Term::Kind::Copair);
  t->c0 = std::move(f);
  t->c1 = std::move(g);
  return t;
}

TermPtr TermFactory::proj1(const Obj& x, const Obj& y) const {
  auto t = mk(Term::Kind::Proj1);
  t->a = norm(x);
  t->b = norm(y);
  return t;
}

TermPtr TermFactory::proj2(const Obj& x, const Obj& y) const {
  auto t = mk(Term::Kind::Proj2);
  t->a = norm(x);
  t->b = norm(y);
  return t;
}

TermPtr TermFactory::dup(const Obj& x) const {
  auto t = mk(Term::Kind::Dup);
  t->a = norm(x);
  return t;
}

TermPtr TermFactory::bang(const Obj& x) const {
  auto t = mk(Term::Kind::Bang);
  t->a = norm(x);
  return t;
}

TermPtr TermFactory::zero(LevelIndex ix) const {
  check_index(ix, levels);
  auto t = mk(Term::Kind::Zero);
  t->ix = ix;
  return t;
}

TermPtr TermFactory::succ(int n, LevelIndex ix) const {
  check_index(ix, levels);
  if (n != 1 && n != 2) throw IndexOutOfRange("successor bit choice must be 1 or 2");
  auto t = mk(Term::Kind::Succ);
  t->n = n;
  t->ix = ix;
  return t;
}

TermPtr TermFactory::eta(const Obj& x) const {
  auto t = mk(Term::Kind::Eta);
  t->a = norm(x);
  return t;
}

TermPtr TermFactory::eps(const Obj& x) const {
  auto t = mk(Term::Kind::Eps);
  t->a = norm(x);
  return t;
}

TermPtr TermFactory::fr(TermPtr g, TermPtr h, LevelIndex ix) const {
  check_index(ix, levels);
  auto t = mk(Term::Kind::FR);
  t->c0 = std::move(g);
  t->c1 = std::move(h);
  t->ix = ix;
  return t;
}

TermPtr TermFactory::srr(TermPtr g, TermPtr h, int p) const {
  check_index({1, p}, levels);
  auto t = mk(Term::Kind::SRR);
  t->c0 = std::move(g);
  t->c1 = std::move(h);
  t->ix = {1, p};
  return t;
}

TermPtr TermFactory::min(TermPtr h, int n, LevelIndex target) const {
  // target range is the typechecker's business (budget vs. plain range)
  if (n != 1 && n != 2) throw IndexOutOfRange("minimization bit choice must be 1 or 2");
  auto t = mk(Term::Kind::Min);
  t->c0 = std::move(h);
  t->n = n;
  t->ix = target;
  return t;
}

TermPtr TermFactory::dist_node(const Obj& d, const Obj& x, const Obj& y) const {
  auto t = mk(Term::Kind::Dist);
  t->a = norm(d);
  // the top-level coproduct is kept split so both summands stay recoverable
  t->b = obj_coprod(norm(x), norm(y));
  return t;
}

TermPtr TermFactory::prn2(TermPtr g, TermPtr h1, TermPtr h2,
                          LevelIndex ix) const {
  check_index(ix, levels);
  auto t = mk(Term::Kind::Prn2);
  t->c0 = std::move(g);
  t->c1 = std::move(h1);
  t->c2 = std::move(h2);
  t->ix = ix;
  return t;
}

TermPtr TermFactory::dist(int p, const Obj& x, const Obj& y) const {
  check_index({1, p}, levels);
  return dist_node(obj_nat(1, p), x, y);
}

TermPtr TermFactory::dist_inv(const Obj& d, const Obj& x, const Obj& y) const {
  return copair(par(id(d), inl(x, y)), par(id(d), inr(x, y)));
}

TermPtr TermFactory::numeral(unsigned long long m, LevelIndex ix) const {
  TermPtr t = zero(ix);
  if (m == 0) return t;
  int hi = 63;
  while (!((m >> hi) & 1ULL)) hi--;
  for (int b = hi; b >= 0; --b)
    t = comp(succ(((m >> b) & 1ULL) ? 2 : 1, ix), t);
  return t;
}

TermPtr TermFactory::tuple_point(const std::vector<TermPtr>& points) const {
  if (points.empty()) return id(obj_top());
  TermPtr t = points.back();
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it)
    t = comp(par(*it, t), dup(obj_top()));
  return t;
}

namespace {

Obj tensor_tail(const std::vector<Obj>& objs, size_t from) {
  Obj out = objs.back();
  for (size_t j = objs.size() - 1; j > from; --j)
    out = obj_tensor(objs[j - 1], out);
  return out;
}

}  // namespace

TermPtr TermFactory::projection(size_t j, const std::vector<Obj>& objs) const {
  if (objs.empty() || j >= objs.size())
    throw IndexOutOfRange("projection index out of range");
  if (objs.size() == 1) return id(objs[0]);
  TermPtr t;
  size_t pos = 0;
  for (; pos < j; ++pos) {
    TermPtr step = proj2(objs[pos], tensor_tail(objs, pos + 1));
    t = t ? comp(step, t) : step;
  }
  if (j + 1 < objs.size()) {
    TermPtr step = proj1(objs[j], tensor_tail(objs, j + 1));
    t = t ? comp(step, t) : step;
  }
  return t ? t : id(objs[j]);
}

TermPtr TermFactory::pred(LevelIndex ix) const {
  return fr(zero(ix), id(obj_nat(ix)), ix);
}

TermPtr TermFactory::monus1(LevelIndex ix) const {
  Obj n = obj_nat(ix);
  return fr(numeral(1, ix), comp(zero(ix), bang(n)), ix);
}

TermPtr TermFactory::inc(LevelIndex ix) const {
  Obj n = obj_nat(ix);
  // inc 0 = 1; inc (2q) = 2q+1; inc (2q+1) = 2 (inc q)
  return prn2(numeral(1, ix), comp(succ(2, ix), proj1(n, n)),
              comp(succ(1, ix), proj2(n, n)), ix);
}

TermPtr TermFactory::mod2(LevelIndex ix) const {
  Obj n = obj_nat(ix);
  Obj nn = obj_tensor(n, n);
  return prn2(zero(ix), comp(zero(ix), bang(nn)),
              comp(numeral(1, ix), bang(nn)), ix);
}

TermPtr TermFactory::mod2_notation(int p, LevelIndex out) const {
  return srr(zero(out), monus1(out), p);
}

TermPtr TermFactory::cond_zero(LevelIndex driver, LevelIndex data) const {
  Obj nd = obj_nat(data);
  Obj pairdd = obj_tensor(nd, nd);
  return fr(proj1(nd, nd),
            comp(proj2(nd, nd), proj2(obj_nat(driver), pairdd)), driver);
}

TermPtr TermFactory::cond(LevelIndex ix) const {
  Obj n = obj_nat(ix);
  return comp(cond_zero(ix, ix), par(mod2(ix), id(obj_tensor(n, n))));
}

TermPtr TermFactory::cond_notation(int p, LevelIndex out) const {
  Obj n = obj_nat(out);
  return comp(cond_zero(out, out),
              par(mod2_notation(p, out), id(obj_tensor(n, n))));
}

TermPtr TermFactory::const_nat(unsigned long long m, const Obj& dom,
                               LevelIndex ix) const {
  return comp(numeral(m, ix), bang(dom));
}

std::vector<StdLibEntry> stdlib(int levels) {
  TermFactory tf(levels);
  LevelIndex s0{0, 0};
  std::vector<StdLibEntry> out;
  out.push_back({"zero", tf.zero(s0), "constant 0"});
  out.push_back({"succ1", tf.succ(1, s0), "m -> 2m"});
  out.push_back({"succ2", tf.succ(2, s0), "m -> 2m+1"});
  out.push_back({"pred", tf.pred(s0), "n -> floor(n/2): drop the last binary digit"});
  out.push_back({"monus1", tf.monus1(s0), "a -> 1 -. a"});
  out.push_back({"inc", tf.inc(s0), "a -> a+1"});
  out.push_back({"mod2", tf.mod2(s0), "a -> a mod 2"});
  out.push_back({"z", tf.cond_zero({1, 0}, s0),
                 "(n,(a,b)) -> a if n = 0 else b"});
  out.push_back({"mod2-notation", tf.mod2_notation(0, s0),
                 "(n) -> parity of the bit length of n"});
  out.push_back({"cond", tf.cond(s0),
                 "(a,(b,c)) -> b if a mod 2 = 0 else c"});
  out.push_back({"cond-notation", tf.cond_notation(0, s0),
                 "(n,(b,c)) -> b if bit length of n is even else c"});
  return out;
}

TermPtr prn_extended(TermPtr g, TermPtr h1, TermPtr h2, LevelIndex ix,
                     bool extension_enabled, int levels) {
  if (!extension_enabled)
    throw DisabledExtension(
        "two-branch recursion on notation requires --extended-prn");
  TermFactory tf(levels);
  return tf.prn2(std::move(g), std::move(h1), std::move(h2), ix);
}

int max_min_target(const TermPtr& t) {
  if (!t) return -1;
  int out = -1;
  if (t->kind == Term::Kind::Min) out = t->ix.p;
  for (const TermPtr& c : {t->c0, t->c1, t->c2})
    if (c) out = std::max(out, max_min_target(c));
  return out;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->ix != b->ix || a->n != b->n) return false;
  auto objs_ok = [](const Obj& x, const Obj& y) {
    if (!x && !y) return true;
    if (!x || !y) return false;
    return obj_equal(x, y);
  };
  if (!objs_ok(a->a, b->a) || !objs_ok(a->b, b->b)) return false;
  return term_equal(a->c0, b->c0) && term_equal(a->c1, b->c1) &&
         term_equal(a->c2, b->c2);
}

// ---------------------------------------------------------------------------
// s-expression printing and parsing

Sexpr sexpr_of_object(const Obj& x) {
  Sexpr e;
  switch (x->kind) {
    case ObjExpr::Kind::Top:
      e.kind = Sexpr::Kind::Atom;
      e.atom = "top";
      return e;
    case ObjExpr::Kind::Nat:
      e.kind = Sexpr::Kind::List;
      e.items.resize(3);
      e.items[0] = {Sexpr::Kind::Atom, "N"};
      e.items[1] = {Sexpr::Kind::Atom, std::to_string(x->ix.k)};
      e.items[2] = {Sexpr::Kind::Atom, std::to_string(x->ix.p)};
      return e;
    case ObjExpr::Kind::Tensor:
    case ObjExpr::Kind::Coprod:
      e.kind = Sexpr::Kind::List;
      e.items.resize(3);
      e.items[0] = {Sexpr::Kind::Atom,
                    x->kind == ObjExpr::Kind::Tensor ? "*" : "+"};
      e.items[1] = sexpr_of_object(x->left);
      e.items[2] = sexpr_of_object(x->right);
      return e;
  }
  throw std::logic_error("bad object");
}

namespace {

int atom_int(const Sexpr& e) {
  if (!e.is_atom()) throw ParseError("expected number", e.line, e.column);
  try {
    return std::stoi(e.atom);
  } catch (...) {
    throw ParseError("expected number, got '" + e.atom + "'", e.line, e.column);
  }
}

unsigned long long atom_u64(const Sexpr& e) {
  if (!e.is_atom()) throw ParseError("expected number", e.line, e.column);
  try {
    return std::stoull(e.atom);
  } catch (...) {
    throw ParseError("expected number, got '" + e.atom + "'", e.line, e.column);
  }
}

LevelIndex index_of_sexpr(const Sexpr& e) {
  if (!e.is_list() || e.size() != 2)
    throw ParseError("expected level index (k p)", e.line, e.column);
  return {atom_int(e.at(0)), atom_int(e.at(1))};
}

Sexpr sexpr_of_index(LevelIndex ix) {
  Sexpr e;
  e.kind = Sexpr::Kind::List;
  e.items.push_back({Sexpr::Kind::Atom, std::to_string(ix.k)});
  e.items.push_back({Sexpr::Kind::Atom, std::to_string(ix.p)});
  return e;
}

Sexpr atom(const std::string& s) { return {Sexpr::Kind::Atom, s}; }

Sexpr list(std::vector<Sexpr> items) {
  Sexpr e;
  e.kind = Sexpr::Kind::List;
  e.items = std::move(items);
  return e;
}

}  // namespace

Obj object_of_sexpr(const Sexpr& e) {
  if (e.is_atom()) {
    if (e.atom == "top") return obj_top();
    throw ParseError("expected object, got '" + e.atom + "'", e.line, e.column);
  }
  std::string h = e.head();
  if (h == "N") {
    if (e.size() != 3) throw ParseError("(N k p) expected", e.line, e.column);
    return obj_nat(atom_int(e.at(1)), atom_int(e.at(2)));
  }
  if (h == "*" || h == "+") {
    if (e.size() != 3)
      throw ParseError("(" + h + " x y) expected", e.line, e.column);
    Obj a = object_of_sexpr(e.at(1));
    Obj b = object_of_sexpr(e.at(2));
    return h == "*" ? obj_tensor(a, b) : obj_coprod(a, b);
  }
  throw ParseError("expected object form", e.line, e.column);
}

namespace {

Sexpr term_to_sexpr(const TermPtr& t) {
  using K = Term::Kind;
  auto obj = [](const Obj& x) { return sexpr_of_object(x); };
  switch (t->kind) {
    case K::Id: return list({atom("id"), obj(t->a)});
    case K::Comp:
      return list({atom("comp"), term_to_sexpr(t->c0), term_to_sexpr(t->c1)});
    case K::Par:
      return list({atom("par"), term_to_sexpr(t->c0), term_to_sexpr(t->c1)});
    case K::Sym: return list({atom("sym"), obj(t->a), obj(t->b)});
    case K::LUnit: return list({atom("lunit"), obj(t->a)});
    case K::LUnitInv: return list({atom("lunit-inv"), obj(t->a)});
    case K::Inl: return list({atom("inl"), obj(t->a), obj(t->b)});
    case K::Inr: return list({atom("inr"), obj(t->a), obj(t->b)});
    case K::Copair:
      return list({atom("copair"), term_to_sexpr(t->c0), term_to_sexpr(t->c1)});
    case K::Proj1: return list({atom("proj1"), obj(t->a), obj(t->b)});
    case K::Proj2: return list({atom("proj2"), obj(t->a), obj(t->b)});
    case K::Dup: return list({atom("dup"), obj(t->a)});
    case K::Bang: return list({atom("bang"), obj(t->a)});
    case K::Zero: return list({atom("zero"), sexpr_of_index(t->ix)});
    case K::Succ:
      return list({atom("succ"), atom(std::to_string(t->n)),
                   sexpr_of_index(t->ix)});
    case K::Eta: return list({atom("eta"), obj(t->a)});
    case K::Eps: return list({atom("eps"), obj(t->a)});
    case K::FR:
      return list({atom("fr"), term_to_sexpr(t->c0), term_to_sexpr(t->c1),
                   sexpr_of_index(t->ix)});
    case K::SRR:
      return list({atom("srr"), term_to_sexpr(t->c0), term_to_sexpr(t->c1),
                   atom(std::to_string(t->ix.p))});
    case K::Min:
      return list({atom("min"), term_to_sexpr(t->c0),
                   atom(std::to_string(t->n)), sexpr_of_index(t->ix)});
    case K::Dist:
      return list({atom("dist"), obj(t->a), obj(t->b->left), obj(t->b->right)});
    case K::Prn2:
      return list({atom("prn2"), term_to_sexpr(t->c0), term_to_sexpr(t->c1),
                   term_to_sexpr(t->c2), sexpr_of_index(t->ix)});
  }
  throw std::logic_error("bad term");
}

}  // namespace

std::string print_term(const TermPtr& t) { return print_sexpr(term_to_sexpr(t)); }

TermPtr term_from_sexpr(const Sexpr& e, int levels, bool extended_prn,
                        const NameLookup& lookup) {
  TermFactory tf(levels);
  if (e.is_atom()) {
    if (lookup)
      if (TermPtr t = lookup(e.atom)) return t;
    throw ParseError("unknown term '" + e.atom + "'", e.line, e.column);
  }
  std::string h = e.head();
  auto want = [&](size_t n, const char* shape) {
    if (e.size() != n) throw ParseError(std::string("expected ") + shape,
                                        e.line, e.column);
  };
  auto sub = [&](size_t i) {
    return term_from_sexpr(e.at(i), levels, extended_prn, lookup);
  };
  auto obj = [&](size_t i) { return object_of_sexpr(e.at(i)); };
  try {
    if (h == "id") { want(2, "(id X)"); return tf.id(obj(1)); }
    if (h == "comp") { want(3, "(comp f g)"); return tf.comp(sub(1), sub(2)); }
    if (h == "par") { want(3, "(par f g)"); return tf.par(sub(1), sub(2)); }
    if (h == "sym") { want(3, "(sym X Y)"); return tf.sym(obj(1), obj(2)); }
    if (h == "lunit") { want(2, "(lunit X)"); return tf.lunit(obj(1)); }
    if (h == "lunit-inv") { want(2, "(lunit-inv X)"); return tf.lunit_inv(obj(1)); }
    if (h == "inl") { want(3, "(inl X Y)"); return tf.inl(obj(1), obj(2)); }
    if (h == "inr") { want(3, "(inr X Y)"); return tf.inr(obj(1), obj(2)); }
    if (h == "copair") { want(3, "(copair f g)"); return tf.copair(sub(1), sub(2)); }
    if (h == "proj1") { want(3, "(proj1 X Y)"); return tf.proj1(obj(1), obj(2)); }
    if (h == "proj2") { want(3, "(proj2 X Y)"); return tf.proj2(obj(1), obj(2)); }
    if (h == "dup") { want(2, "(dup X)"); return tf.dup(obj(1)); }
    if (h == "bang") { want(2, "(bang X)"); return tf.bang(obj(1)); }
    if (h == "zero") { want(2, "(zero (k p))"); return tf.zero(index_of_sexpr(e.at(1))); }
    if (h == "succ") {
      want(3, "(succ n (k p))");
      return tf.succ(atom_int(e.at(1)), index_of_sexpr(e.at(2)));
    }
    if (h == "eta") { want(2, "(eta X)"); return tf.eta(obj(1)); }
    if (h == "eps") { want(2, "(eps X)"); return tf.eps(obj(1)); }
    if (h == "fr") {
      want(4, "(fr g h (k p))");
      return tf.fr(sub(1), sub(2), index_of_sexpr(e.at(3)));
    }
    if (h == "srr") {
      want(4, "(srr g h p)");
      return tf.srr(sub(1), sub(2), atom_int(e.at(3)));
    }
    if (h == "min") {
      want(4, "(min h n (k p))");
      return tf.min(sub(1), atom_int(e.at(2)), index_of_sexpr(e.at(3)));
    }
    if (h == "dist") {
      want(4, "(dist D X Y)");
      return tf.dist_node(obj(1), obj(2), obj(3));
    }
    if (h == "prn2") {
      want(5, "(prn2 g h1 h2 (k p))");
      if (!extended_prn)
        throw ParseError("prn2 requires --extended-prn", e.line, e.column);
      return tf.prn2(sub(1), sub(2), sub(3), index_of_sexpr(e.at(4)));
    }
    if (h == "numeral") {
      want(3, "(numeral m (k p))");
      return tf.numeral(atom_u64(e.at(1)), index_of_sexpr(e.at(2)));
    }
  } catch (const IndexOutOfRange& err) {
    throw ParseError(err.what(), e.line, e.column);
  }
  throw ParseError("unknown term form '" + h + "'", e.line, e.column);
}

TermPtr parse_term(const std::string& src, int levels, bool extended_prn) {
  return term_from_sexpr(parse_sexpr(src), levels, extended_prn);
}

}  // namespace dmc
