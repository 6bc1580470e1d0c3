#include "dmc/diagrams.hpp"

namespace dmc {

namespace {

/// Point Top -> shape carrying v (shape read structurally).
TermPtr point_term(const TermFactory& tf, const Val& v, const Obj& shape) {
  switch (shape->kind) {
    case ObjExpr::Kind::Top: return tf.id(obj_top());
    case ObjExpr::Kind::Nat:
      return tf.numeral(v->n.convert_to<unsigned long long>(), shape->ix);
    case ObjExpr::Kind::Tensor:
      return tf.comp(tf.par(point_term(tf, v->a, shape->left),
                            point_term(tf, v->b, shape->right)),
                     tf.dup(obj_top()));
    case ObjExpr::Kind::Coprod:
      if (v->kind == Value::Kind::Inl)
        return tf.comp(tf.inl(shape->left, shape->right),
                       point_term(tf, v->a, shape->left));
      return tf.comp(tf.inr(shape->left, shape->right),
                     point_term(tf, v->a, shape->right));
  }
  throw std::logic_error("bad shape");
}

std::vector<Val> nat_points(unsigned long long bound) {
  std::vector<Val> out;
  for (unsigned long long n = 0; n <= bound; ++n) out.push_back(val_nat_u(n));
  return out;
}

}  // namespace

SuiteReport prop3_suite(const CheckConfig& cfg, unsigned long long fuel,
                        unsigned long long m_max, unsigned long long val_bound,
                        unsigned long long alpha_max) {
  SuiteReport rep{"prop-dist", {}};
  TermFactory tf(cfg.levels);
  Obj top = obj_top();
  Obj n00 = obj_nat(0, 0);
  Obj n2 = obj_tensor(n00, n00);

  struct Shape {
    Obj obj;
    std::vector<Val> points;
  };
  std::vector<Shape> shapes = {
      {top, {val_star()}},
      {n00, nat_points(val_bound)},
      {n2, {}},
  };
  for (unsigned long long a : {0ull, val_bound / 2, val_bound})
    for (unsigned long long b : {0ull, val_bound / 2, val_bound})
      shapes[2].points.push_back(val_pair(val_nat_u(a), val_nat_u(b)));

  Val sample = val_pair(val_star(), val_star());

  auto square = [&](const std::string& name, const TermPtr& driver_pt,
                    const Obj& driver_obj, const Obj& x_obj, const Obj& y_obj,
                    const TermPtr& pt, bool left) {
    // top leg: tensor the numeral with the injected point, then distribute;
    // bottom leg: inject the tensored pair directly
    TermPtr inj = left ? tf.inl(x_obj, y_obj) : tf.inr(x_obj, y_obj);
    TermPtr d = tf.dist_node(driver_obj, x_obj, y_obj);
    TermPtr lhs = tf.comp(d, tf.par(driver_pt, tf.comp(inj, pt)));
    Obj nx = tf.norm(obj_tensor(driver_obj, x_obj));
    Obj ny = tf.norm(obj_tensor(driver_obj, y_obj));
    TermPtr out_inj = left ? tf.inl(nx, ny) : tf.inr(nx, ny);
    TermPtr rhs = tf.comp(out_inj, tf.par(driver_pt, pt));
    rep.diagrams.push_back(
        check_diagram({name, lhs, rhs, {sample}}, cfg, fuel));
  };

  for (unsigned long long m = 0; m <= m_max; ++m) {
    TermPtr mhat = tf.numeral(m, {1, 0});
    Obj n10 = obj_nat(1, 0);
    for (const Shape& sx : shapes)
      for (const Shape& sy : shapes) {
        for (const Val& x : sx.points)
          square("dist-inl m=" + std::to_string(m), mhat, n10, sx.obj, sy.obj,
                 point_term(tf, x, sx.obj), true);
        for (const Val& y : sy.points)
          square("dist-inr m=" + std::to_string(m), mhat, n10, sx.obj, sy.obj,
                 point_term(tf, y, sy.obj), false);
      }
  }

  // a second level index, small m
  for (unsigned long long m = 0; m <= 4 && m <= m_max; ++m) {
    TermPtr mhat = tf.numeral(m, {1, 1});
    for (const Val& x : shapes[1].points)
      square("dist-p1-inl m=" + std::to_string(m), mhat, obj_nat(1, 1), n00,
             n00, point_term(tf, x, n00), true);
  }

  // the two-fold power of the driver
  for (unsigned long long m1 = 0; m1 <= alpha_max; ++m1)
    for (unsigned long long m2 = 0; m2 <= alpha_max; ++m2) {
      TermPtr pair_pt = tf.tuple_point(
          {tf.numeral(m1, {1, 0}), tf.numeral(m2, {1, 0})});
      Obj drv = obj_tensor(obj_nat(1, 0), obj_nat(1, 0));
      for (unsigned long long v : {0ull, val_bound}) {
        TermPtr pt = tf.numeral(v, {0, 0});
        square("dist-pow-inl", pair_pt, drv, n00, n00, pt, true);
        square("dist-pow-inr", pair_pt, drv, n00, n00, pt, false);
      }
    }

  // dist and its inverse cancel both ways
  for (int p = 0; p < cfg.levels; ++p) {
    Obj drv = obj_nat(1, p);
    Obj dom = obj_tensor(drv, obj_coprod(n00, n00));
    TermPtr d = tf.dist(p, n00, n00);
    TermPtr dinv = tf.dist_inv(drv, n00, n00);
    std::vector<Val> pts = enumerate_points(dom, 3);
    rep.diagrams.push_back(check_diagram(
        {"dist-retract p=" + std::to_string(p), tf.comp(dinv, d), tf.id(dom),
         pts},
        cfg, fuel));
    Obj cod = obj_coprod(obj_tensor(drv, n00), obj_tensor(drv, n00));
    rep.diagrams.push_back(check_diagram(
        {"dist-section p=" + std::to_string(p), tf.comp(d, dinv), tf.id(cod),
         enumerate_points(cod, 3)},
        cfg, fuel));
  }

  return rep;
}

SuiteReport coherence_suite(const CheckConfig& cfg, unsigned long long fuel) {
  SuiteReport rep{"coherence", {}};
  TermFactory tf(cfg.levels);
  Obj n00 = obj_nat(0, 0);
  Obj n11 = cfg.levels > 1 ? obj_nat(1, 1) : obj_nat(1, 0);
  std::vector<std::pair<Obj, Obj>> xys = {
      {n00, n00}, {n00, n11}, {obj_top(), n00}};

  std::vector<FunctorTag> fs = {FunctorTag::t(), FunctorTag::g()};
  for (int p = 0; p < cfg.levels; ++p) fs.push_back(FunctorTag::m(p));

  for (const FunctorTag& f : fs)
    for (int k = 0; k <= 1; ++k)
      for (int p = 0; p < cfg.levels; ++p)
        for (const auto& [x, y] : xys) {
          Obj drv = obj_nat(k, p);
          TermPtr d = tf.dist_node(drv, x, y);
          TermPtr lhs = apply_functor_term(f, d, cfg.levels);
          TermPtr rhs =
              tf.dist_node(apply_functor_obj(f, drv, cfg.levels),
                           apply_functor_obj(f, x, cfg.levels),
                           apply_functor_obj(f, y, cfg.levels));
          Obj shape = obj_tensor(
              apply_functor_obj(f, drv, cfg.levels),
              obj_coprod(apply_functor_obj(f, x, cfg.levels),
                         apply_functor_obj(f, y, cfg.levels)));
          std::string name = "F-dist";
          switch (f.kind) {
            case FunctorKind::T: name = "T-dist"; break;
            case FunctorKind::G: name = "G-dist"; break;
            case FunctorKind::M:
              name = "M" + std::to_string(f.q) + "-dist";
              break;
          }
          name += " N[" + std::to_string(k) + "," + std::to_string(p) + "]";
          rep.diagrams.push_back(check_diagram(
              {name, lhs, rhs, enumerate_points(shape, 2)}, cfg, fuel));
        }
  return rep;
}

SuiteReport eta_suite(const CheckConfig& cfg, unsigned long long fuel,
                      unsigned long long bound) {
  SuiteReport rep{"eta-naturality", {}};
  TermFactory tf(cfg.levels);

  auto square = [&](const std::string& name, const TermPtr& f, const Obj& dom,
                    const Obj& cod, const std::vector<Val>& pts) {
    TermPtr lhs = tf.comp(apply_functor_term(FunctorTag::t(), f, cfg.levels),
                          tf.eta(dom));
    TermPtr rhs = tf.comp(tf.eta(cod), f);
    rep.diagrams.push_back(check_diagram({name, lhs, rhs, pts}, cfg, fuel));
  };

  Obj n10 = obj_nat(1, 0);
  square("eta-pred", tf.pred({1, 0}), n10, n10, nat_points(bound));

  Obj triple = obj_tensor(n10, obj_tensor(n10, n10));
  std::vector<Val> triples;
  for (unsigned long long a = 0; a <= bound; a += bound / 4 ? bound / 4 : 1)
    for (unsigned long long b : {0ull, 1ull, bound})
      for (unsigned long long c : {0ull, 2ull, bound})
        triples.push_back(
            val_pair(val_nat_u(a), val_pair(val_nat_u(b), val_nat_u(c))));
  square("eta-cond", tf.cond({1, 0}), triple, n10, triples);

  // recursion on notation that swaps a level-0 pair once per digit
  Obj n00 = obj_nat(0, 0);
  Obj pr = obj_tensor(n00, n00);
  TermPtr swapper = tf.srr(tf.id(pr), tf.sym(n00, n00), 0);
  Obj dom = obj_tensor(obj_nat(1, 0), pr);
  std::vector<Val> pts;
  for (unsigned long long m = 0; m <= bound; ++m)
    for (unsigned long long a : {0ull, 7ull, bound})
      pts.push_back(
          val_pair(val_nat_u(m), val_pair(val_nat_u(a), val_nat_u(bound - a))));
  square("eta-srr-swap", swapper, dom, pr, pts);

  return rep;
}

SuiteReport min_square_suite(const CheckConfig& cfg, unsigned long long fuel,
                             unsigned long long input_bound) {
  SuiteReport rep{"min-square", {}};
  TermFactory tf(cfg.levels);
  Obj top = obj_top();
  Obj n00 = obj_nat(0, 0);
  Obj n2 = obj_tensor(n00, n00);

  // step maps A -> Top (+) A that reach the left summand from every input
  auto countdown = [&](const Obj& a, LevelIndex ix) {
    // zero driver: stop; successor: continue from the binary predecessor
    return tf.fr(tf.inl(top, a), tf.inr(top, a), ix);
  };
  TermPtr h1 = countdown(n00, {0, 0});
  TermPtr h4 = tf.fr(tf.comp(tf.inl(top, n2), tf.bang(n00)), tf.inr(top, n2),
                     {0, 0});
  auto post = [&](const TermPtr& h, const TermPtr& after) {
    return tf.comp(h, after);
  };
  auto remap = [&](const TermPtr& h, const Obj& a, const TermPtr& on_inr) {
    // keep stops, transform the continuation value
    return tf.comp(tf.copair(tf.inl(top, a), tf.comp(tf.inr(top, a), on_inr)),
                   h);
  };

  struct Case {
    std::string name;
    TermPtr h;
    Obj carrier;
  };
  std::vector<Case> cases = {
      {"bitlen", h1, n00},
      {"bitlen-after-pred", post(h1, tf.pred({0, 0})), n00},
      {"bitlen-after-two-preds",
       post(h1, tf.comp(tf.pred({0, 0}), tf.pred({0, 0}))), n00},
      {"pair-first", h4, n2},
      {"pair-first-swapped", post(h4, tf.sym(n00, n00)), n2},
      {"halved-continuation", remap(h1, n00, tf.pred({0, 0})), n00},
      {"quartered-continuation",
       remap(h1, n00, tf.comp(tf.pred({0, 0}), tf.pred({0, 0}))), n00},
      {"always-stop", tf.comp(tf.inl(top, n00), tf.bang(n00)), n00},
      {"bitlen-level1", countdown(obj_nat(1, 0), {1, 0}), obj_nat(1, 0)},
      {"pair-both-halved",
       post(h4, tf.par(tf.pred({0, 0}), tf.pred({0, 0}))), n2},
  };

  for (const Case& c : cases) {
    TermPtr mu = tf.min(c.h, 1, {0, 0});
    DiagramReport d;
    d.name = "min-square " + c.name;
    TypeResult tr = typecheck(mu, cfg);
    if (auto* err = std::get_if<TypeError>(&tr)) {
      d.judgment_detail = render_type_error(*err);
      rep.diagrams.push_back(d);
      continue;
    }
    d.judgments_match = true;

    std::vector<Val> inputs =
        c.carrier->kind == ObjExpr::Kind::Nat
            ? nat_points(input_bound)
            : enumerate_points(c.carrier, 8);
    for (const Val& v : inputs) {
      d.checked++;
      Outcome mo = eval(mu, v, fuel);
      if (!mo.done) {
        d.inconclusive.push_back(v);
        continue;
      }
      // left-bottom leg: unfold the produced count one step
      Val lhs = mo.value->n == 0
                    ? val_inl(val_star())
                    : val_inr(val_nat(mo.value->n - 1));
      // top-right leg: one step map application, then minimize recursively
      Outcome ho = eval(c.h, v, fuel);
      Val rhs;
      if (ho.done && ho.value->kind == Value::Kind::Inl)
        rhs = val_inl(val_star());
      else if (ho.done) {
        Outcome rec = eval(mu, ho.value->a, fuel);
        if (!rec.done) {
          d.inconclusive.push_back(v);
          continue;
        }
        rhs = val_inr(rec.value);
      } else {
        d.inconclusive.push_back(v);
        continue;
      }
      if (!value_equal(lhs, rhs)) d.disagreements.push_back({v, mo, ho});

      // independent oracle: iterate the step map by hand
      Nat count = 0;
      Val cur = v;
      bool ok = false;
      for (unsigned long long i = 0; i <= fuel; ++i) {
        Outcome step = eval(c.h, cur, fuel);
        if (!step.done) break;
        if (step.value->kind == Value::Kind::Inl) {
          ok = true;
          break;
        }
        cur = step.value->a;
        count++;
      }
      if (!ok || count != mo.value->n)
        d.disagreements.push_back({v, mo, Outcome{ok, val_nat(count), 0}});
    }
    rep.diagrams.push_back(d);
  }

  // a step map with no stopping state must exhaust exactly the given fuel
  {
    DiagramReport d;
    d.name = "min-square witness-free";
    TermPtr mu = tf.min(tf.inr(top, n00), 1, {0, 0});
    TypeResult tr = typecheck(mu, cfg);
    d.judgments_match = std::holds_alternative<Judgment>(tr);
    d.checked = 1;
    Outcome o = eval(mu, val_nat_u(0), fuel);
    if (o.done || o.steps != fuel)
      d.disagreements.push_back({val_nat_u(0), o, o});
    rep.diagrams.push_back(d);
  }

  return rep;
}

std::vector<SuiteReport> all_suites(const CheckConfig& cfg,
                                    unsigned long long fuel) {
  return {prop3_suite(cfg, fuel), coherence_suite(cfg, fuel),
          eta_suite(cfg, fuel), min_square_suite(cfg, fuel)};
}

}  // namespace dmc
