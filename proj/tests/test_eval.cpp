#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dmc/eval.hpp"

using namespace dmc;

namespace {

TermFactory tf(3);
const CheckConfig cfg{3, false};
const Obj top = obj_top();
const Obj n00 = obj_nat(0, 0);
constexpr unsigned long long kFuel = 1'000'000;

Nat out(const TermPtr& t, const Val& v) {
  Outcome o = eval(t, v, kFuel);
  REQUIRE(o.done);
  REQUIRE(o.value->kind == Value::Kind::Nat);
  return o.value->n;
}

}  // namespace

TEST_CASE("successors and predecessor") {
  CHECK(out(tf.succ(2, {0, 0}), val_nat_u(5)) == 11);
  CHECK(out(tf.succ(1, {0, 0}), val_nat_u(5)) == 10);
  for (unsigned long long n = 0; n <= 200; ++n)
    CHECK(out(tf.pred({0, 0}), val_nat_u(n)) == n / 2);
}

TEST_CASE("numerals evaluate to their value at every index") {
  for (int k = 0; k <= 1; ++k)
    for (int p = 0; p < 3; ++p)
      for (unsigned long long m : {0ull, 1ull, 2ull, 6ull, 13ull, 1024ull,
                                   65535ull})
        CHECK(out(tf.numeral(m, {k, p}), val_star()) == m);
}

TEST_CASE("conditional truth table") {
  for (unsigned long long a = 0; a <= 8; ++a)
    for (unsigned long long b : {0ull, 7ull})
      for (unsigned long long c : {1ull, 9ull}) {
        Val v = val_pair(val_nat_u(a), val_pair(val_nat_u(b), val_nat_u(c)));
        CHECK(out(tf.cond({0, 0}), v) == (a % 2 == 0 ? b : c));
      }
}

TEST_CASE("ramified recursion iterates once per binary digit") {
  // step flips the accumulator between 0 and 1; 13 has four digits
  TermPtr flip = tf.srr(tf.zero({0, 0}), tf.monus1({0, 0}), 0);
  CHECK(out(flip, val_nat_u(13)) == 0);
  CHECK(out(flip, val_nat_u(5)) == 1);   // three digits
  CHECK(out(flip, val_nat_u(0)) == 0);   // base clause
}

TEST_CASE("ramified recursion is extensional in its components") {
  // pred(1) = 0 and a triple flip equal a single flip on {0,1}
  TermPtr a = tf.srr(tf.zero({0, 0}), tf.monus1({0, 0}), 0);
  TermPtr m3 = tf.comp(tf.monus1({0, 0}),
                       tf.comp(tf.monus1({0, 0}), tf.monus1({0, 0})));
  TermPtr b = tf.srr(tf.comp(tf.pred({0, 0}), tf.numeral(1, {0, 0})), m3, 0);
  for (unsigned long long n = 0; n <= 1024; ++n)
    CHECK(out(a, val_nat_u(n)) == out(b, val_nat_u(n)));
}

TEST_CASE("minimization counts unfoldings") {
  // stop on an even value, else continue from the predecessor; from 11
  // two iterations strip the trailing 1-bits
  TermPtr stop = tf.comp(tf.inl(top, n00), tf.bang(n00));
  TermPtr go = tf.comp(tf.inr(top, n00), tf.proj2(n00, n00));
  TermPtr h = tf.comp(tf.fr(stop, go, {0, 0}),
                      tf.comp(tf.par(tf.mod2({0, 0}), tf.pred({0, 0})),
                              tf.dup(n00)));
  TermPtr mu = tf.min(h, 1, {0, 0});
  CHECK(out(mu, val_nat_u(11)) == 2);
  CHECK(out(mu, val_nat_u(4)) == 0);
  // independent oracle by direct iteration
  for (unsigned long long n = 0; n <= 64; ++n) {
    unsigned long long v = n, c = 0;
    while (v % 2 == 1) {
      v /= 2;
      c++;
    }
    CHECK(out(mu, val_nat_u(n)) == c);
  }
}

TEST_CASE("witness-free search exhausts exactly the configured fuel") {
  TermPtr mu = tf.min(tf.inr(top, n00), 1, {0, 0});
  Outcome o = eval(mu, val_nat_u(0), 1000);
  CHECK_FALSE(o.done);
  CHECK(o.steps == 1000);
}

TEST_CASE("fuel is monotone") {
  TermPtr flip = tf.srr(tf.zero({0, 0}), tf.monus1({0, 0}), 0);
  Val v = val_nat_u(12345);
  // find the minimal sufficient fuel, then check stability above it
  unsigned long long need = 0;
  while (!eval(flip, v, need).done) need++;
  Val w = eval(flip, v, need).value;
  for (unsigned long long extra : {1ull, 7ull, 1000ull}) {
    Outcome o = eval(flip, v, need + extra);
    REQUIRE(o.done);
    CHECK(value_equal(o.value, w));
  }
  CHECK_FALSE(eval(flip, v, need - 1).done);
}

TEST_CASE("kleene minimization finds the least zero") {
  // f(b) = b mod 2: witness 0; f(b) = 1 -. (b mod 2): witness 1
  TermPtr k0 = kleene_min(tf.mod2({0, 0}), top, {0, 0}, cfg);
  CHECK(out(k0, val_star()) == 0);
  TermPtr f1 = tf.comp(tf.monus1({0, 0}), tf.mod2({0, 0}));
  TermPtr k1 = kleene_min(f1, top, {0, 0}, cfg);
  CHECK(out(k1, val_star()) == 1);
  // f constant 1 never hits zero
  TermPtr f2 = tf.comp(tf.numeral(1, {0, 0}), tf.bang(n00));
  Outcome o = eval(kleene_min(f2, top, {0, 0}, cfg), val_star(), 500);
  CHECK_FALSE(o.done);
}

TEST_CASE("safe minimization returns twice the witness plus one") {
  // h(b) = 1 if b even else 0: first even output at b = 1, result 3
  TermPtr widen = tf.comp(
      tf.par(tf.id(n00), tf.dup(top)),
      tf.comp(tf.sym(top, n00), tf.lunit_inv(n00)));  // b -> (b, (*, *))
  TermPtr pick = tf.comp(
      tf.cond({0, 0}),
      tf.comp(tf.par(tf.id(n00),
                     tf.par(tf.numeral(1, {0, 0}), tf.numeral(0, {0, 0}))),
              widen));
  CHECK(out(pick, val_nat_u(0)) == 1);
  CHECK(out(pick, val_nat_u(1)) == 0);
  CHECK(out(safe_min(pick, top, {0, 0}, cfg), val_star()) == 3);
  // h constant zero stops immediately: result 1
  TermPtr hz = tf.comp(tf.numeral(0, {0, 0}), tf.bang(n00));
  CHECK(out(safe_min(hz, top, {0, 0}, cfg), val_star()) == 1);
}

TEST_CASE("bounded safe minimization is total") {
  TermPtr odd1 = tf.comp(tf.numeral(1, {0, 0}), tf.bang(n00));
  Outcome o = safe_min_bounded(odd1, top, nullptr, 16, kFuel, cfg);
  REQUIRE(o.done);
  CHECK(o.value->n == 0);
}

TEST_CASE("value grammar round-trips") {
  std::vector<Val> vs = {
      val_star(), val_nat_u(0), val_nat_u(12345),
      val_pair(val_nat_u(1), val_star()),
      val_inl(val_nat_u(7)),
      val_inr(val_pair(val_nat_u(2), val_inl(val_star())))};
  for (const Val& v : vs) {
    Val back = parse_value(print_value(v));
    CHECK(value_equal(v, back));
  }
}

TEST_CASE("point enumeration covers shapes") {
  Obj shape = obj_tensor(n00, obj_coprod(top, n00));
  std::vector<Val> pts = enumerate_points(shape, 2);
  CHECK(pts.size() == 3 * (1 + 3));
  for (const Val& p : pts) CHECK(p->kind == Value::Kind::Pair);
}

TEST_CASE("trace reports fuel spending") {
  int lines = 0;
  TraceFn trace = [&](const std::string&, const Val&, unsigned long long) {
    lines++;
  };
  TermPtr flip = tf.srr(tf.zero({0, 0}), tf.monus1({0, 0}), 0);
  eval(flip, val_nat_u(13), kFuel, trace);
  // one per binary digit, plus one for the flat recursion inside each flip
  CHECK(lines == 8);
}
