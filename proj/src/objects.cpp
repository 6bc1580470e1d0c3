#include "dmc/objects.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dmc/sexpr.hpp"

namespace dmc {

void check_index(LevelIndex ix, int levels) {
  if (ix.k < 0 || ix.k > 1 || ix.p < 0 || ix.p > levels - 1) {
    std::ostringstream os;
    os << "level index (" << ix.k << "," << ix.p
       << ") out of range for i=" << levels;
    throw IndexOutOfRange(os.str());
  }
}

Obj obj_top() {
  static const Obj t = std::make_shared<ObjExpr>(ObjExpr{ObjExpr::Kind::Top});
  return t;
}

Obj obj_nat(LevelIndex ix) {
  auto e = std::make_shared<ObjExpr>();
  e->kind = ObjExpr::Kind::Nat;
  e->ix = ix;
  return e;
}

Obj obj_nat(int k, int p) { return obj_nat(LevelIndex{k, p}); }

Obj obj_tensor(Obj a, Obj b) {
  auto e = std::make_shared<ObjExpr>();
  e->kind = ObjExpr::Kind::Tensor;
  e->left = std::move(a);
  e->right = std::move(b);
  return e;
}

Obj obj_coprod(Obj a, Obj b) {
  auto e = std::make_shared<ObjExpr>();
  e->kind = ObjExpr::Kind::Coprod;
  e->left = std::move(a);
  e->right = std::move(b);
  return e;
}

Obj obj_pow(const Obj& x, int n) {
  if (n <= 0) return obj_top();
  Obj out = x;
  for (int j = 1; j < n; ++j) out = obj_tensor(x, out);
  return out;
}

bool obj_equal(const Obj& a, const Obj& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ObjExpr::Kind::Top: return true;
    case ObjExpr::Kind::Nat: return a->ix == b->ix;
    case ObjExpr::Kind::Tensor:
    case ObjExpr::Kind::Coprod:
      return obj_equal(a->left, b->left) && obj_equal(a->right, b->right);
  }
  return false;
}

namespace {

using Product = std::vector<LevelIndex>;  // tensor factors, kept sorted

// Sum-of-products expansion; distributes tensor over coproduct left-to-right.
std::vector<Product> sum_of_products(const Obj& x, int levels) {
  switch (x->kind) {
    case ObjExpr::Kind::Top:
      return {Product{}};
    case ObjExpr::Kind::Nat:
      check_index(x->ix, levels);
      return {Product{x->ix}};
    case ObjExpr::Kind::Coprod: {
      auto out = sum_of_products(x->left, levels);
      auto rhs = sum_of_products(x->right, levels);
      out.insert(out.end(), rhs.begin(), rhs.end());
      return out;
    }
    case ObjExpr::Kind::Tensor: {
      auto ls = sum_of_products(x->left, levels);
      auto rs = sum_of_products(x->right, levels);
      std::vector<Product> out;
      out.reserve(ls.size() * rs.size());
      for (const auto& l : ls)
        for (const auto& r : rs) {
          Product p = l;
          p.insert(p.end(), r.begin(), r.end());
          std::sort(p.begin(), p.end());
          out.push_back(std::move(p));
        }
      return out;
    }
  }
  return {};
}

Obj rebuild_product(const Product& p) {
  if (p.empty()) return obj_top();
  Obj out = obj_nat(p.back());
  for (auto it = p.rbegin() + 1; it != p.rend(); ++it)
    out = obj_tensor(obj_nat(*it), out);
  return out;
}

}  // namespace

Obj normalize_object(const Obj& x, int levels) {
  auto sop = sum_of_products(x, levels);
  Obj out = rebuild_product(sop.back());
  for (auto it = sop.rbegin() + 1; it != sop.rend(); ++it)
    out = obj_coprod(rebuild_product(*it), out);
  return out;
}

std::string functor_name(FunctorTag f) {
  switch (f.kind) {
    case FunctorKind::T: return "T";
    case FunctorKind::G: return "G";
    case FunctorKind::M: return "M" + std::to_string(f.q);
  }
  return "?";
}

namespace {

Obj functor_leaf(FunctorTag f, LevelIndex ix) {
  switch (f.kind) {
    case FunctorKind::T:
      return ix.k == 0 ? obj_top() : obj_nat(ix);
    case FunctorKind::G:
      return obj_nat(1, ix.p);
    case FunctorKind::M:
      if (ix.p != f.q) return obj_nat(ix);
      return f.q == 0 ? obj_top() : obj_nat(ix.k, ix.p - 1);
  }
  return obj_nat(ix);
}

Obj functor_raw(FunctorTag f, const Obj& x) {
  switch (x->kind) {
    case ObjExpr::Kind::Top: return obj_top();
    case ObjExpr::Kind::Nat: return functor_leaf(f, x->ix);
    case ObjExpr::Kind::Tensor:
      return obj_tensor(functor_raw(f, x->left), functor_raw(f, x->right));
    case ObjExpr::Kind::Coprod:
      return obj_coprod(functor_raw(f, x->left), functor_raw(f, x->right));
  }
  return x;
}

}  // namespace

Obj apply_functor_obj(FunctorTag f, const Obj& x, int levels) {
  if (f.kind == FunctorKind::M) {
    if (f.q < 0 || f.q > levels - 1)
      throw IndexOutOfRange("functor index M" + std::to_string(f.q) +
                            " out of range for i=" + std::to_string(levels));
  }
  return normalize_object(functor_raw(f, x), levels);
}

bool in_fiber_T_over_top(const Obj& x) {
  switch (x->kind) {
    case ObjExpr::Kind::Top: return true;
    case ObjExpr::Kind::Nat: return x->ix.k == 0;
    case ObjExpr::Kind::Tensor:
      return in_fiber_T_over_top(x->left) && in_fiber_T_over_top(x->right);
    case ObjExpr::Kind::Coprod:
      return false;
  }
  return false;
}

Obj min_fiber_residue(const Obj& x, int levels) {
  Obj out = x;
  for (int q = 0; q < levels; ++q)
    out = apply_functor_obj(FunctorTag::m(q), out, levels);
  return out;
}

std::string print_object(const Obj& x) {
  switch (x->kind) {
    case ObjExpr::Kind::Top: return "Top";
    case ObjExpr::Kind::Nat: {
      std::ostringstream os;
      os << "N[" << x->ix.k << "," << x->ix.p << "]";
      return os.str();
    }
    case ObjExpr::Kind::Tensor:
      return "(" + print_object(x->left) + " * " + print_object(x->right) + ")";
    case ObjExpr::Kind::Coprod:
      return "(" + print_object(x->left) + " + " + print_object(x->right) + ")";
  }
  return "?";
}

namespace {

struct ObjReader {
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      pos++;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("object syntax: " + msg, 1, static_cast<int>(pos) + 1);
  }

  bool eat(const std::string& tok) {
    skip();
    if (s.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  int number() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      pos++;
    if (pos == start) fail("expected number");
    return std::stoi(s.substr(start, pos - start));
  }

  Obj expr() {
    skip();
    if (eat("Top")) return obj_top();
    if (eat("N[")) {
      int k = number();
      if (!eat(",")) fail("expected ','");
      int p = number();
      if (!eat("]")) fail("expected ']'");
      return obj_nat(k, p);
    }
    if (eat("(")) {
      Obj a = expr();
      skip();
      if (pos >= s.size()) fail("unterminated '('");
      char op = s[pos];
      if (op != '*' && op != '+') fail("expected '*' or '+'");
      pos++;
      Obj b = expr();
      if (!eat(")")) fail("expected ')'");
      return op == '*' ? obj_tensor(a, b) : obj_coprod(a, b);
    }
    fail("expected object");
  }
};

}  // namespace

Obj parse_object(const std::string& src) {
  ObjReader r{src};
  Obj out = r.expr();
  r.skip();
  if (r.pos != src.size())
    throw ParseError("object syntax: trailing input", 1,
                     static_cast<int>(r.pos) + 1);
  return out;
}

}  // namespace dmc
