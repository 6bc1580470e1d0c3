#include "dmc/typecheck.hpp"

#include <sstream>

namespace dmc {

std::string type_error_kind_name(TypeError::Kind k) {
  switch (k) {
    case TypeError::Kind::Mismatch: return "Mismatch";
    case TypeError::Kind::SafeCodomainViolation: return "SafeCodomainViolation";
    case TypeError::Kind::MinBudgetExceeded: return "MinBudgetExceeded";
    case TypeError::Kind::MinTargetMismatch: return "MinTargetMismatch";
    case TypeError::Kind::IndexOutOfRange: return "IndexOutOfRange";
    case TypeError::Kind::DisabledExtension: return "DisabledExtension";
  }
  return "?";
}

std::string render_judgment(const Judgment& j) {
  std::ostringstream os;
  os << print_object(j.dom) << " |- " << print_object(j.cod) << " @ depth "
     << j.mindepth;
  return os.str();
}

std::string render_type_error(const TypeError& e) {
  std::ostringstream os;
  os << type_error_kind_name(e.kind) << " at "
     << (e.path.empty() ? "<root>" : e.path) << ": " << e.detail;
  return os.str();
}

bool judgment_equal(const Judgment& a, const Judgment& b) {
  return a.mindepth == b.mindepth && obj_equal(a.dom, b.dom) &&
         obj_equal(a.cod, b.cod);
}

namespace {

struct Fail {
  TypeError err;
};

struct Checker {
  const CheckConfig& cfg;

  [[noreturn]] void fail(TypeError::Kind kind, const std::string& path,
                         const std::string& detail) {
    throw Fail{TypeError{kind, path, detail}};
  }

  Obj norm(const Obj& x, const std::string& path) {
    try {
      return normalize_object(x, cfg.levels);
    } catch (const IndexOutOfRange& e) {
      fail(TypeError::Kind::IndexOutOfRange, path, e.what());
    }
  }

  Obj nat_at(LevelIndex ix, const std::string& path) {
    try {
      check_index(ix, cfg.levels);
    } catch (const IndexOutOfRange& e) {
      fail(TypeError::Kind::IndexOutOfRange, path, e.what());
    }
    return obj_nat(ix);
  }

  void need_equal(const Obj& got, const Obj& want, const std::string& path,
                  const std::string& what) {
    if (!obj_equal(got, want))
      fail(TypeError::Kind::Mismatch, path,
           what + ": expected " + print_object(want) + ", got " +
               print_object(got));
  }

  Judgment check(const TermPtr& t, const std::string& path) {
    using K = Term::Kind;
    switch (t->kind) {
      case K::Id: {
        Obj x = norm(t->a, path);
        return {x, x, 0};
      }
      case K::Comp: {
        Judgment f = check(t->c0, path + ".arg[0]");
        Judgment g = check(t->c1, path + ".arg[1]");
        need_equal(g.cod, f.dom, path, "composition middle object");
        return {g.dom, f.cod, std::max(f.mindepth, g.mindepth)};
      }
      case K::Par: {
        Judgment f = check(t->c0, path + ".arg[0]");
        Judgment g = check(t->c1, path + ".arg[1]");
        return {norm(obj_tensor(f.dom, g.dom), path),
                norm(obj_tensor(f.cod, g.cod), path),
                std::max(f.mindepth, g.mindepth)};
      }
      case K::Sym: {
        Obj x = norm(t->a, path), y = norm(t->b, path);
        return {norm(obj_tensor(x, y), path), norm(obj_tensor(y, x), path), 0};
      }
      case K::LUnit:
      case K::LUnitInv: {
        // Top (x) X and X coincide after normalization; unitors are
        // value-level repackaging only.
        Obj x = norm(t->a, path);
        return {x, x, 0};
      }
      case K::Inl: {
        Obj x = norm(t->a, path), y = norm(t->b, path);
        return {x, norm(obj_coprod(x, y), path), 0};
      }
      case K::Inr: {
        Obj x = norm(t->a, path), y = norm(t->b, path);
        return {y, norm(obj_coprod(x, y), path), 0};
      }
      case K::Copair: {
        Judgment f = check(t->c0, path + ".arg[0]");
        Judgment g = check(t->c1, path + ".arg[1]");
        need_equal(g.cod, f.cod, path, "copair codomains");
        return {norm(obj_coprod(f.dom, g.dom), path), f.cod,
                std::max(f.mindepth, g.mindepth)};
      }
      case K::Proj1: {
        Obj x = norm(t->a, path), y = norm(t->b, path);
        return {norm(obj_tensor(x, y), path), x, 0};
      }
      case K::Proj2: {
        Obj x = norm(t->a, path), y = norm(t->b, path);
        return {norm(obj_tensor(x, y), path), y, 0};
      }
      case K::Dup: {
        Obj x = norm(t->a, path);
        return {x, norm(obj_tensor(x, x), path), 0};
      }
      case K::Bang: {
        Obj x = norm(t->a, path);
        return {x, obj_top(), 0};
      }
      case K::Zero:
        return {obj_top(), nat_at(t->ix, path), 0};
      case K::Succ: {
        Obj n = nat_at(t->ix, path);
        return {n, n, 0};
      }
      case K::Eta: {
        Obj x = norm(t->a, path);
        return {x, apply_functor_obj(FunctorTag::t(), x, cfg.levels), 0};
      }
      case K::Eps: {
        Obj x = norm(t->a, path);
        return {apply_functor_obj(FunctorTag::g(), x, cfg.levels), x, 0};
      }
      case K::FR: {
        Obj driver = nat_at(t->ix, path);
        Judgment g = check(t->c0, path + ".base");
        Judgment h = check(t->c1, path + ".step");
        Obj dom = norm(obj_tensor(driver, g.dom), path);
        need_equal(h.dom, dom, path + ".step", "flat recursion step domain");
        need_equal(h.cod, g.cod, path + ".step", "flat recursion step codomain");
        return {dom, g.cod, std::max(g.mindepth, h.mindepth)};
      }
      case K::SRR: {
        Obj driver = nat_at({1, t->ix.p}, path);
        Judgment g = check(t->c0, path + ".base");
        Judgment h = check(t->c1, path + ".step");
        need_equal(h.dom, g.cod, path + ".step", "ramified step domain");
        need_equal(h.cod, g.cod, path + ".step", "ramified step codomain");
        if (!in_fiber_T_over_top(g.cod))
          fail(TypeError::Kind::SafeCodomainViolation, path,
               "ramified recursion codomain " + print_object(g.cod) +
                   " is not in the fiber of T over Top");
        return {norm(obj_tensor(driver, g.dom), path), g.cod,
                std::max(g.mindepth, h.mindepth)};
      }
      case K::Min: {
        Judgment h = check(t->c0, path + ".body");
        Obj carrier = h.dom;
        need_equal(h.cod, norm(obj_coprod(obj_top(), carrier), path),
                   path + ".body", "minimization body codomain");
        int required_p = max_min_target(t->c0) + 1;
        if (required_p > cfg.levels - 1 || h.mindepth + 1 > cfg.levels)
          fail(TypeError::Kind::MinBudgetExceeded, path,
               "more than i=" + std::to_string(cfg.levels) +
                   " applications of safe minimization");
        if (t->ix.p != required_p)
          fail(TypeError::Kind::MinTargetMismatch, path,
               "minimization target second index must be " +
                   std::to_string(required_p) + " (one above the deepest "
                   "inner target), got " + std::to_string(t->ix.p));
        return {carrier, nat_at(t->ix, path), h.mindepth + 1};
      }
      case K::Dist: {
        Obj d = norm(t->a, path);
        Obj x = norm(t->b->left, path), y = norm(t->b->right, path);
        Obj dom = norm(obj_tensor(d, obj_coprod(x, y)), path);
        Obj cod = norm(obj_coprod(obj_tensor(d, x), obj_tensor(d, y)), path);
        return {dom, cod, 0};
      }
      case K::Prn2: {
        Obj driver = nat_at(t->ix, path);
        Judgment g = check(t->c0, path + ".base");
        Judgment h1 = check(t->c1, path + ".step1");
        Judgment h2 = check(t->c2, path + ".step2");
        Obj dom = norm(obj_tensor(driver, g.dom), path);
        Obj hdom = norm(obj_tensor(dom, g.cod), path);
        need_equal(h1.dom, hdom, path + ".step1", "notation step domain");
        need_equal(h1.cod, g.cod, path + ".step1", "notation step codomain");
        need_equal(h2.dom, hdom, path + ".step2", "notation step domain");
        need_equal(h2.cod, g.cod, path + ".step2", "notation step codomain");
        return {dom, g.cod,
                std::max({g.mindepth, h1.mindepth, h2.mindepth})};
      }
    }
    fail(TypeError::Kind::Mismatch, path, "unknown term node");
  }
};

}  // namespace

TypeResult typecheck(const TermPtr& t, const CheckConfig& cfg) {
  Checker c{cfg};
  try {
    return c.check(t, "");
  } catch (const Fail& f) {
    return f.err;
  }
}

int classify(const TermPtr& t, const CheckConfig& cfg) {
  TypeResult r = typecheck(t, cfg);
  if (auto* err = std::get_if<TypeError>(&r))
    throw std::runtime_error(render_type_error(*err));
  return std::get<Judgment>(r).mindepth;
}

}  // namespace dmc
