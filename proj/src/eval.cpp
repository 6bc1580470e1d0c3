#include "dmc/eval.hpp"

#include <sstream>

#include "dmc/sexpr.hpp"

namespace dmc {

Val val_star() {
  static const Val s = std::make_shared<Value>(Value{Value::Kind::Star});
  return s;
}

Val val_nat(Nat n) {
  auto v = std::make_shared<Value>();
  v->kind = Value::Kind::Nat;
  v->n = std::move(n);
  return v;
}

Val val_nat_u(unsigned long long n) { return val_nat(Nat(n)); }

Val val_pair(Val a, Val b) {
  auto v = std::make_shared<Value>();
  v->kind = Value::Kind::Pair;
  v->a = std::move(a);
  v->b = std::move(b);
  return v;
}

Val val_inl(Val x) {
  auto v = std::make_shared<Value>();
  v->kind = Value::Kind::Inl;
  v->a = std::move(x);
  return v;
}

Val val_inr(Val x) {
  auto v = std::make_shared<Value>();
  v->kind = Value::Kind::Inr;
  v->a = std::move(x);
  return v;
}

bool value_equal(const Val& a, const Val& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Value::Kind::Star: return true;
    case Value::Kind::Nat: return a->n == b->n;
    case Value::Kind::Pair:
      return value_equal(a->a, b->a) && value_equal(a->b, b->b);
    case Value::Kind::Inl:
    case Value::Kind::Inr:
      return value_equal(a->a, b->a);
  }
  return false;
}

std::string print_value(const Val& v) {
  switch (v->kind) {
    case Value::Kind::Star: return "*";
    case Value::Kind::Nat: return v->n.str();
    case Value::Kind::Pair:
      return "(pair " + print_value(v->a) + " " + print_value(v->b) + ")";
    case Value::Kind::Inl: return "(inl " + print_value(v->a) + ")";
    case Value::Kind::Inr: return "(inr " + print_value(v->a) + ")";
  }
  return "?";
}

namespace {

Val value_of_sexpr(const Sexpr& e) {
  if (e.is_atom()) {
    if (e.atom == "*" || e.atom == "star") return val_star();
    try {
      return val_nat(Nat(e.atom));
    } catch (...) {
      throw ParseError("expected value, got '" + e.atom + "'", e.line,
                       e.column);
    }
  }
  std::string h = e.head();
  if (h == "pair" && e.size() == 3)
    return val_pair(value_of_sexpr(e.at(1)), value_of_sexpr(e.at(2)));
  if (h == "inl" && e.size() == 2) return val_inl(value_of_sexpr(e.at(1)));
  if (h == "inr" && e.size() == 2) return val_inr(value_of_sexpr(e.at(1)));
  throw ParseError("expected value form", e.line, e.column);
}

}  // namespace

Val parse_value(const std::string& src) {
  return value_of_sexpr(parse_sexpr(src));
}

// ---------------------------------------------------------------------------

namespace {

struct FuelOut {};

struct Machine {
  unsigned long long remaining;
  const TraceFn& trace;

  void spend(const char* node, const Val& input) {
    if (remaining == 0) throw FuelOut{};
    remaining--;
    if (trace) trace(node, input, remaining);
  }

  [[noreturn]] static void defect(const std::string& what, const Val& v) {
    throw EvalDefect(what + " (value: " + print_value(v) + ")");
  }

  static const Nat& as_nat(const Val& v, const char* who) {
    if (v->kind != Value::Kind::Nat) defect(std::string(who) + " needs a natural", v);
    return v->n;
  }

  // Recursion input: a driver natural optionally tensored with a parameter.
  static std::pair<Nat, Val> split_driver(const Val& v, const char* who) {
    if (v->kind == Value::Kind::Nat) return {v->n, nullptr};
    if (v->kind == Value::Kind::Pair && v->a->kind == Value::Kind::Nat)
      return {v->a->n, v->b};
    defect(std::string(who) + " needs a driver natural", v);
  }

  static Val join_driver(Nat m, const Val& x) {
    Val mv = val_nat(std::move(m));
    return x ? val_pair(mv, x) : mv;
  }

  Val run(const TermPtr& t, const Val& v) {
    using K = Term::Kind;
    switch (t->kind) {
      case K::Id: return v;
      case K::Comp: return run(t->c0, run(t->c1, v));
      case K::Par:
        if (v->kind != Value::Kind::Pair) defect("par needs a pair", v);
        return val_pair(run(t->c0, v->a), run(t->c1, v->b));
      case K::Sym:
        if (v->kind != Value::Kind::Pair) defect("sym needs a pair", v);
        return val_pair(v->b, v->a);
      case K::LUnit:
        if (v->kind == Value::Kind::Star) return v;  // degenerate Top (x) Top
        if (v->kind != Value::Kind::Pair || v->a->kind != Value::Kind::Star)
          defect("lunit needs (*, x)", v);
        return v->b;
      case K::LUnitInv: return val_pair(val_star(), v);
      case K::Inl: return val_inl(v);
      case K::Inr: return val_inr(v);
      case K::Copair:
        if (v->kind == Value::Kind::Inl) return run(t->c0, v->a);
        if (v->kind == Value::Kind::Inr) return run(t->c1, v->a);
        defect("copair needs a tagged sum", v);
      case K::Proj1:
        if (v->kind != Value::Kind::Pair) defect("proj1 needs a pair", v);
        return v->a;
      case K::Proj2:
        if (v->kind != Value::Kind::Pair) defect("proj2 needs a pair", v);
        return v->b;
      case K::Dup: return val_pair(v, v);
      case K::Bang: return val_star();
      case K::Zero: return val_nat_u(0);
      case K::Succ: {
        Nat m = as_nat(v, "succ");
        return val_nat(2 * m + (t->n - 1));
      }
      case K::Eta:
      case K::Eps:
        return v;  // typing-level content only
      case K::FR: {
        auto [m, x] = split_driver(v, "flat recursion");
        spend("fr", v);
        if (m == 0) return run(t->c0, x ? x : val_star());
        return run(t->c1, join_driver(m >> 1, x));
      }
      case K::SRR: {
        auto [m, x] = split_driver(v, "ramified recursion");
        Val acc = run(t->c0, x ? x : val_star());
        while (m > 0) {
          spend("srr", acc);
          acc = run(t->c1, acc);
          m >>= 1;
        }
        return acc;
      }
      case K::Prn2: {
        auto [m, x] = split_driver(v, "notation recursion");
        spend("prn2", v);
        if (m == 0) return run(t->c0, x ? x : val_star());
        Nat q = m >> 1;
        Val rec = run(t, join_driver(q, x));
        Val head = join_driver(q, x);
        return run(bit_is_one(m) ? t->c2 : t->c1, val_pair(head, rec));
      }
      case K::Min: {
        Val cur = v;
        Nat count = 0;
        while (true) {
          spend("min", cur);
          Val r = run(t->c0, cur);
          if (r->kind == Value::Kind::Inl) return val_nat(count);
          if (r->kind != Value::Kind::Inr)
            defect("minimization body must produce a tagged sum", r);
          cur = r->a;
          count++;
        }
      }
      case K::Dist: {
        if (v->kind != Value::Kind::Pair) defect("dist needs a pair", v);
        const Val& tag = v->b;
        if (tag->kind == Value::Kind::Inl)
          return val_inl(val_pair(v->a, tag->a));
        if (tag->kind == Value::Kind::Inr)
          return val_inr(val_pair(v->a, tag->a));
        defect("dist needs a tagged second component", v);
      }
    }
    throw EvalDefect("unknown term node");
  }

  static bool bit_is_one(const Nat& m) { return boost::multiprecision::bit_test(m, 0); }
};

}  // namespace

Outcome eval(const TermPtr& t, const Val& v, unsigned long long fuel,
             const TraceFn& trace) {
  Machine m{fuel, trace};
  try {
    Val out = m.run(t, v);
    return Outcome{true, out, 0};
  } catch (const FuelOut&) {
    return Outcome{false, nullptr, fuel};
  }
}

// ---------------------------------------------------------------------------
// Derived minimization combinators

TermPtr kleene_min(const TermPtr& f, const Obj& x_obj, LevelIndex counter_ix,
                   const CheckConfig& cfg) {
  TermFactory tf(cfg.levels);
  Obj x = tf.norm(x_obj);
  Obj counter = obj_nat(counter_ix);

  TypeResult fr = typecheck(f, cfg);
  auto* fj = std::get_if<Judgment>(&fr);
  if (!fj) throw std::runtime_error("kleene_min: f does not typecheck: " +
                                    render_type_error(std::get<TypeError>(fr)));
  if (fj->cod->kind != ObjExpr::Kind::Nat)
    throw std::runtime_error("kleene_min: f must produce a natural");
  LevelIndex out_ix = fj->cod->ix;

  bool x_trivial = x->kind == ObjExpr::Kind::Top;
  TermPtr f_used = f;
  if (x_trivial && obj_equal(fj->dom, counter))
    f_used = tf.comp(f, tf.lunit(counter));  // accept f : N -> N directly

  Obj carrier = tf.norm(obj_tensor(x, counter));
  Obj out_nat = obj_nat(out_ix);

  // h(x,b) = inl * when f(x,b) = 0, inr (x, b+1) otherwise
  TermPtr test = tf.fr(tf.comp(tf.inl(obj_top(), carrier), tf.bang(carrier)),
                       tf.comp(tf.inr(obj_top(), carrier),
                               tf.proj2(out_nat, carrier)),
                       out_ix);
  TermPtr bump = tf.par(tf.id(x), tf.inc(counter_ix));
  TermPtr body = tf.comp(test, tf.comp(tf.par(f_used, bump), tf.dup(carrier)));

  int target_p = max_min_target(body) + 1;
  TermPtr mu = tf.min(body, 1, LevelIndex{0, target_p});

  // start : x -> (x, 0)
  TermPtr start = tf.comp(tf.par(tf.id(x), tf.zero(counter_ix)),
                          tf.comp(tf.sym(obj_top(), x), tf.lunit_inv(x)));
  return tf.comp(mu, start);
}

TermPtr safe_min(const TermPtr& h, const Obj& x_obj, LevelIndex counter_ix,
                 const CheckConfig& cfg) {
  TermFactory tf(cfg.levels);
  TypeResult hr = typecheck(h, cfg);
  auto* hj = std::get_if<Judgment>(&hr);
  if (!hj) throw std::runtime_error("safe_min: h does not typecheck: " +
                                    render_type_error(std::get<TypeError>(hr)));
  if (hj->cod->kind != ObjExpr::Kind::Nat)
    throw std::runtime_error("safe_min: h must produce a natural");
  TermPtr f = tf.comp(tf.mod2(hj->cod->ix), h);
  TermPtr km = kleene_min(f, x_obj, counter_ix, cfg);

  TypeResult kr = typecheck(km, cfg);
  auto* kj = std::get_if<Judgment>(&kr);
  if (!kj || kj->cod->kind != ObjExpr::Kind::Nat)
    throw std::runtime_error("safe_min: internal search term failed to type");
  return tf.comp(tf.succ(2, kj->cod->ix), km);
}

Outcome safe_min_bounded(const TermPtr& h, const Obj& x_obj, const Val& x,
                         const Nat& bound, unsigned long long fuel,
                         const CheckConfig& cfg) {
  bool x_trivial = normalize_object(x_obj, cfg.levels)->kind == ObjExpr::Kind::Top;
  for (Nat b = 0; b <= bound; ++b) {
    Val input = x_trivial ? val_nat(b) : val_pair(x, val_nat(b));
    Outcome r = eval(h, input, fuel);
    if (!r.done) return r;
    if (r.value->kind != Value::Kind::Nat)
      throw EvalDefect("safe_min_bounded: h must produce a natural");
    if ((r.value->n & 1) == 0) return Outcome{true, val_nat(2 * b + 1), 0};
  }
  return Outcome{true, val_nat_u(0), 0};
}

// ---------------------------------------------------------------------------

DiagramReport check_diagram(const DiagramSpec& d, const CheckConfig& cfg,
                            unsigned long long fuel) {
  DiagramReport rep;
  rep.name = d.name;

  TypeResult lr = typecheck(d.lhs, cfg);
  TypeResult rr = typecheck(d.rhs, cfg);
  auto* lj = std::get_if<Judgment>(&lr);
  auto* rj = std::get_if<Judgment>(&rr);
  if (!lj || !rj) {
    rep.judgment_detail =
        !lj ? "lhs: " + render_type_error(std::get<TypeError>(lr))
            : "rhs: " + render_type_error(std::get<TypeError>(rr));
    return rep;
  }
  if (!obj_equal(lj->dom, rj->dom) || !obj_equal(lj->cod, rj->cod)) {
    rep.judgment_detail = "legs disagree: " + render_judgment(*lj) + " vs " +
                          render_judgment(*rj);
    return rep;
  }
  rep.judgments_match = true;

  for (const Val& s : d.samples) {
    rep.checked++;
    Outcome a = eval(d.lhs, s, fuel);
    Outcome b = eval(d.rhs, s, fuel);
    if (!a.done || !b.done) {
      rep.inconclusive.push_back(s);
      continue;
    }
    if (!value_equal(a.value, b.value))
      rep.disagreements.push_back({s, a, b});
  }
  return rep;
}

std::vector<Val> enumerate_points(const Obj& shape, unsigned long long bound) {
  switch (shape->kind) {
    case ObjExpr::Kind::Top:
      return {val_star()};
    case ObjExpr::Kind::Nat: {
      std::vector<Val> out;
      for (unsigned long long m = 0; m <= bound; ++m) out.push_back(val_nat_u(m));
      return out;
    }
    case ObjExpr::Kind::Tensor: {
      auto ls = enumerate_points(shape->left, bound);
      auto rs = enumerate_points(shape->right, bound);
      std::vector<Val> out;
      out.reserve(ls.size() * rs.size());
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(val_pair(l, r));
      return out;
    }
    case ObjExpr::Kind::Coprod: {
      std::vector<Val> out;
      for (const auto& l : enumerate_points(shape->left, bound))
        out.push_back(val_inl(l));
      for (const auto& r : enumerate_points(shape->right, bound))
        out.push_back(val_inr(r));
      return out;
    }
  }
  return {};
}

}  // namespace dmc
