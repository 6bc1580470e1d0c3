#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dmc/typecheck.hpp"

using namespace dmc;

namespace {

TermFactory tf(3);
const CheckConfig cfg{3, false};
const Obj top = obj_top();
const Obj n00 = obj_nat(0, 0);

TermPtr countdown(const Obj& a, LevelIndex ix) {
  return tf.fr(tf.inl(obj_top(), a), tf.inr(obj_top(), a), ix);
}

// Minimization nested j deep over the fixed carrier N[0,0]: layer d stops
// when the layer-(d-1) search returns zero, else continues from the binary
// predecessor.
TermPtr nested_min(int j) {
  TermPtr m = tf.min(countdown(n00, {0, 0}), 1, {0, 0});
  for (int d = 1; d < j; ++d) {
    TermPtr stop = tf.comp(tf.inl(top, n00), tf.bang(n00));
    TermPtr go = tf.comp(tf.inr(top, n00), tf.proj2(obj_nat(0, d - 1), n00));
    TermPtr h = tf.comp(tf.fr(stop, go, {0, d - 1}),
                        tf.comp(tf.par(m, tf.pred({0, 0})), tf.dup(n00)));
    m = tf.min(h, 1, {0, d});
  }
  return m;
}

TypeError err_of(const TermPtr& t) {
  return std::get<TypeError>(typecheck(t, cfg));
}

}  // namespace

TEST_CASE("predecessor judgment") {
  Judgment j = std::get<Judgment>(typecheck(tf.pred({0, 0}), cfg));
  CHECK(obj_equal(j.dom, n00));
  CHECK(obj_equal(j.cod, n00));
  CHECK(j.mindepth == 0);
  CHECK(render_judgment(j) == "N[0,0] |- N[0,0] @ depth 0");
}

TEST_CASE("composition compares up to normal form") {
  // Top (x) X and X coincide, so the unitor composes freely
  TermPtr t = tf.comp(tf.pred({0, 0}), tf.lunit(n00));
  CHECK(std::holds_alternative<Judgment>(typecheck(t, cfg)));
  TermPtr bad = tf.comp(tf.pred({0, 0}), tf.zero({0, 1}));
  TypeError e = err_of(bad);
  CHECK(e.kind == TypeError::Kind::Mismatch);
  CHECK(!e.detail.empty());
}

TEST_CASE("copair requires matching codomains") {
  TermPtr ok = tf.copair(tf.pred({0, 0}), tf.id(n00));
  CHECK(std::holds_alternative<Judgment>(typecheck(ok, cfg)));
  TermPtr bad = tf.copair(tf.pred({0, 0}), tf.id(obj_nat(0, 1)));
  CHECK(err_of(bad).kind == TypeError::Kind::Mismatch);
}

TEST_CASE("ramified recursion rejects unsafe accumulators") {
  // accumulator N[1,0] is not in the fiber of T over Top
  TermPtr bad = tf.srr(tf.zero({1, 0}), tf.id(obj_nat(1, 0)), 0);
  CHECK(err_of(bad).kind == TypeError::Kind::SafeCodomainViolation);
  // mixed tensor with one unsafe factor is also rejected
  Obj mixed = obj_tensor(n00, obj_nat(1, 1));
  TermPtr bad2 = tf.srr(tf.id(mixed), tf.id(mixed), 0);
  CHECK(err_of(bad2).kind == TypeError::Kind::SafeCodomainViolation);
  // all-safe accumulators are fine
  Obj safe = obj_tensor(n00, obj_nat(0, 2));
  TermPtr ok = tf.srr(tf.id(safe), tf.sym(n00, obj_nat(0, 2)), 1);
  CHECK(std::holds_alternative<Judgment>(typecheck(ok, cfg)));
}

TEST_CASE("minimization budget and targets") {
  CHECK(std::get<Judgment>(typecheck(nested_min(1), cfg)).mindepth == 1);
  CHECK(std::get<Judgment>(typecheck(nested_min(2), cfg)).mindepth == 2);
  CHECK(std::get<Judgment>(typecheck(nested_min(3), cfg)).mindepth == 3);
  CHECK(err_of(nested_min(4)).kind == TypeError::Kind::MinBudgetExceeded);
  // a wrongly annotated target is its own error
  TermPtr wrong = tf.min(countdown(n00, {0, 0}), 1, {0, 1});
  CHECK(err_of(wrong).kind == TypeError::Kind::MinTargetMismatch);
  // the body must produce Top (+) A over the same carrier
  TermPtr badbody = tf.min(tf.pred({0, 0}), 1, {0, 0});
  CHECK(err_of(badbody).kind == TypeError::Kind::Mismatch);
}

TEST_CASE("classify counts minimization nesting") {
  CHECK(classify(tf.pred({0, 0}), cfg) == 0);
  CHECK(classify(nested_min(1), cfg) == 1);
  CHECK(classify(nested_min(2), cfg) == 2);
  CHECK_THROWS(classify(nested_min(4), cfg));
  // nesting, not occurrence count: two side-by-side searches stay level 1
  TermPtr m = nested_min(1);
  TermPtr side = tf.comp(m, tf.comp(tf.pred({0, 0}), m));
  CHECK(classify(side, cfg) == 1);
}

TEST_CASE("mindepth composes by maximum") {
  TermPtr m1 = nested_min(1);
  TermPtr m2 = nested_min(2);
  Judgment j = std::get<Judgment>(
      typecheck(tf.par(tf.comp(m1, m1), m2), cfg));
  CHECK(j.mindepth == 2);
}

TEST_CASE("level indices are validated against the configured hierarchy") {
  // builders reject out-of-range indices up front
  CHECK_THROWS_AS(tf.succ(1, {0, 3}), IndexOutOfRange);
  // a term legal at i = 4 fails the i = 3 check
  TermPtr t = TermFactory(4).succ(1, {0, 3});
  CHECK(err_of(t).kind == TypeError::Kind::IndexOutOfRange);
  CHECK(std::holds_alternative<Judgment>(typecheck(t, CheckConfig{4, false})));
}

TEST_CASE("two-branch recursion typechecks regardless of the surface gate") {
  // mod2 is built on the two-branch scheme internally
  CHECK(std::holds_alternative<Judgment>(typecheck(tf.mod2({0, 0}), cfg)));
}

TEST_CASE("typechecking is deterministic") {
  TermPtr t = nested_min(3);
  Judgment a = std::get<Judgment>(typecheck(t, cfg));
  Judgment b = std::get<Judgment>(typecheck(t, cfg));
  CHECK(judgment_equal(a, b));
}
