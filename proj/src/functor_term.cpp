#include "dmc/typecheck.hpp"

namespace dmc {

namespace {

struct FunctorRewriter {
  FunctorTag f;
  int levels;
  TermFactory tf;
  CheckConfig cfg;

  FunctorRewriter(FunctorTag f, int levels)
      : f(f), levels(levels), tf(levels), cfg{levels, true} {}

  Obj obj(const Obj& x) const { return apply_functor_obj(f, x, levels); }

  bool erases(LevelIndex ix) const {
    // does F send N[ix] to Top?
    if (f.kind == FunctorKind::T) return ix.k == 0;
    if (f.kind == FunctorKind::M) return f.q == 0 && ix.p == 0;
    return false;
  }

  LevelIndex reindex(LevelIndex ix) const {
    switch (f.kind) {
      case FunctorKind::T: return ix;
      case FunctorKind::G: return {1, ix.p};
      case FunctorKind::M:
        return ix.p == f.q ? LevelIndex{ix.k, ix.p - 1} : ix;
    }
    return ix;
  }

  Obj dom_of(const TermPtr& t) const {
    TypeResult r = typecheck(t, cfg);
    auto* j = std::get_if<Judgment>(&r);
    if (!j)
      throw std::runtime_error(
          "apply_functor_term requires a well-typed term: " +
          render_type_error(std::get<TypeError>(r)));
    return j->dom;
  }

  Obj cod_of(const TermPtr& t) const {
    TypeResult r = typecheck(t, cfg);
    auto* j = std::get_if<Judgment>(&r);
    if (!j)
      throw std::runtime_error(
          "apply_functor_term requires a well-typed term: " +
          render_type_error(std::get<TypeError>(r)));
    return j->cod;
  }

  TermPtr go(const TermPtr& t) const {
    using K = Term::Kind;
    switch (t->kind) {
      case K::Id: return tf.id(obj(t->a));
      case K::Comp: return tf.comp(go(t->c0), go(t->c1));
      case K::Par: return tf.par(go(t->c0), go(t->c1));
      case K::Sym: return tf.sym(obj(t->a), obj(t->b));
      case K::LUnit: return tf.lunit(obj(t->a));
      case K::LUnitInv: return tf.lunit_inv(obj(t->a));
      case K::Inl: return tf.inl(obj(t->a), obj(t->b));
      case K::Inr: return tf.inr(obj(t->a), obj(t->b));
      case K::Copair: return tf.copair(go(t->c0), go(t->c1));
      case K::Proj1: return tf.proj1(obj(t->a), obj(t->b));
      case K::Proj2: return tf.proj2(obj(t->a), obj(t->b));
      case K::Dup: return tf.dup(obj(t->a));
      case K::Bang: return tf.bang(obj(t->a));
      case K::Zero:
        if (erases(t->ix)) return tf.id(obj_top());
        return tf.zero(reindex(t->ix));
      case K::Succ:
        if (erases(t->ix)) return tf.id(obj_top());
        return tf.succ(t->n, reindex(t->ix));
      case K::Eta: return tf.eta(obj(t->a));
      case K::Eps: return tf.eps(obj(t->a));
      case K::FR: {
        if (erases(t->ix)) {
          // the driver collapses to Top: only the base branch remains
          Obj x = dom_of(t->c0);
          return tf.comp(go(t->c0), tf.lunit(obj(x)));
        }
        return tf.fr(go(t->c0), go(t->c1), reindex(t->ix));
      }
      case K::SRR: {
        if (erases(t->ix)) {
          Obj x = dom_of(t->c0);
          return tf.comp(go(t->c0), tf.lunit(obj(x)));
        }
        TermPtr g = go(t->c0);
        TermPtr h = go(t->c1);
        Obj y = obj(cod_of(t->c1));
        if (in_fiber_T_over_top(y)) return tf.srr(g, h, reindex(t->ix).p);
        // the image's accumulator leaves the safe fiber, so it is no longer
        // an admissible SRR node; the same iteration is expressible as
        // digit-blind two-branch recursion on notation
        LevelIndex ix = reindex(t->ix);
        ix.k = 1;
        Obj x = obj(dom_of(t->c0));
        TermPtr step = tf.comp(
            h, tf.proj2(tf.norm(obj_tensor(obj_nat(ix), x)), y));
        return tf.prn2(g, step, step, ix);
      }
      case K::Prn2: {
        if (erases(t->ix)) {
          Obj x = dom_of(t->c0);
          return tf.comp(go(t->c0), tf.lunit(obj(x)));
        }
        return tf.prn2(go(t->c0), go(t->c1), go(t->c2), reindex(t->ix));
      }
      case K::Min: {
        if (erases(t->ix)) return tf.bang(obj(dom_of(t->c0)));
        return tf.min(go(t->c0), t->n, reindex(t->ix));
      }
      case K::Dist:
        return tf.dist_node(obj(t->a), obj(t->b->left), obj(t->b->right));
    }
    throw std::logic_error("bad term");
  }
};

}  // namespace

TermPtr apply_functor_term(FunctorTag f, const TermPtr& t, int levels) {
  return FunctorRewriter(f, levels).go(t);
}

}  // namespace dmc
