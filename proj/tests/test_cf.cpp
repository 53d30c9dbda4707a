#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cflab/cf.hpp"
#include "cflab/errors.hpp"

using namespace cflab;

namespace {

CFSpec brouncker() {
  CFSpec cf;
  cf.b0 = 1;
  cf.a_rule = CoeffRule(Polynomial::linear(2, -1).pow(2));
  cf.b_rule = CoeffRule(Polynomial(2));
  return cf;
}

// (-1)^(n-1) a_1...a_n
Rational det_product(const CFSpec& cf, long n) {
  Rational prod = 1;
  for (long k = 1; k <= n; ++k) prod *= cf.term(k)->first;
  return n % 2 == 1 ? prod : Rational(-prod);
}

}  // namespace

TEST_CASE("Brouncker convergents") {
  auto c = convergents(brouncker(), 3);
  REQUIRE(c.size() == 4);
  CHECK(c[0].value() == 1);
  CHECK(c[1].value() == Rational(3, 2));
  CHECK(c[2].value() == Rational(15, 13));
  CHECK(c[3].value() == Rational(105, 76));
  for (const Convergent& x : c) CHECK(x.q > 0);
}

TEST_CASE("coefficient rules") {
  CoeffRule r(Polynomial::linear(2, -1).pow(2));
  CHECK(r(1) == 1);
  CHECK(r(4) == 49);
  CHECK(r.shifted(1)(1) == 9);
  CHECK(r.restarted(5)(7) == r(7));
  CoeffRule alt({Branch{Polynomial::linear(1, 0).pow(2)}, Branch{Polynomial::linear(1, -1).pow(2)}}, 2);
  CHECK(alt.period() == 2);
  CHECK(alt(2) == 4);
  CHECK(alt(3) == 4);
  CHECK(alt(4) == 16);
  CoeffRule half({Branch{Polynomial(1), Polynomial(2)}}, 1);
  CHECK(half(9) == Rational(1, 2));
  BigInt num, den;
  alt.integer_value(5, num, den);
  CHECK(make_rational(num, den) == alt(5));
  CHECK((r * half)(3) == Rational(25, 2));
  CHECK_THROWS_AS(CoeffRule({Branch{Polynomial(1), Polynomial::linear(1, -3)}}, 1).check_denominators(1), DomainError);
  CHECK(CoeffRule(Polynomial::linear(2, -6)).has_zero_from(1));
}

TEST_CASE("determinant identity") {
  CFSpec cf = brouncker();
  auto raw = raw_convergents(cf, 30);
  for (long n = 1; n <= 30; ++n) {
    const RawConvergent& cur = raw[static_cast<size_t>(n)];
    const RawConvergent& prev = raw[static_cast<size_t>(n - 1)];
    CHECK(cur.p * prev.q - prev.p * cur.q == det_product(cf, n));
  }
}

TEST_CASE("finite fractions end at a zero numerator") {
  CFSpec cf;
  cf.b0 = 1;
  cf.a_rule = CoeffRule(Polynomial::linear(-1, 3));  // 2, 1, 0, ...
  cf.b_rule = CoeffRule(Polynomial(1));
  auto c = convergents(cf, 10);
  CHECK(c.size() == 3);
  CHECK(c.back().value() == 2);
  CFEvaluation ev = eval_cf(cf, 20, 100);
  CHECK(ev.exact);
  CHECK(ev.value.midpoint() == c.back().value());

  CFSpec head = CFSpec::constant(Rational(7, 2));
  head.head = {{1, 2}, {3, 4}};
  CHECK(head.is_finite());
  CHECK(convergents(head, 5).back().value() == Rational(7, 2) + 1 / (Rational(2) + Rational(3, 4)));
}

TEST_CASE("breakdown is reported") {
  CFSpec cf;
  cf.head = {{1, 1}, {-1, 1}};  // q_2 = 0
  CHECK_THROWS_AS(convergents(cf, 2), BreakdownError);
}

TEST_CASE("bracketing for positive fractions") {
  CHECK(bracket_check(brouncker(), 40).ok);
  CFSpec signed_cf;
  signed_cf.b0 = 1;
  signed_cf.a_rule = CoeffRule(Polynomial::from_ints({0, -1, -2}));
  signed_cf.b_rule = CoeffRule(Polynomial::linear(3, 1));
  CHECK(!bracket_check(signed_cf, 40).ok);
}

TEST_CASE("equivalence transform keeps the convergents") {
  CFSpec cf = brouncker();
  CFSpec t = equivalence_transform(cf, CoeffRule(Polynomial::linear(1, 2)));
  auto a = convergents(cf, 25), b = convergents(t, 25);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].value() == b[i].value());
  CHECK(t.term(1)->first != cf.term(1)->first);
  CHECK_THROWS_AS(equivalence_transform(cf, CoeffRule(Polynomial::linear(1, -2))), DomainError);
}

TEST_CASE("evaluation") {
  // 1 + K 1/1 is the golden ratio
  CFSpec phi;
  phi.b0 = 1;
  phi.a_rule = CoeffRule(Polynomial(1));
  phi.b_rule = CoeffRule(Polynomial(1));
  CFEvaluation ev = eval_cf(phi, 30, 1000);
  CHECK(ev.certified);
  CHECK(ev.value.to_string(30) == "1.61803398874989484820458683436");
  CHECK(certainly_below_pow10(ev.last_delta, 29));

  CHECK_THROWS_AS(eval_cf(brouncker(), 12, 1000), ConvergenceError);
  try {
    eval_cf(brouncker(), 12, 1000);
  } catch (const ConvergenceError& e) {
    CHECK(e.terms() == 1000);
    CHECK(!e.last_value().empty());
  }
  CFEvaluation low = eval_cf(brouncker(), 3, 100000);
  CHECK(low.value.to_string(3) == "1.27");  // 4/π = 1.2732...
}

TEST_CASE("streams track the head and tail") {
  CFSpec cf = brouncker();
  cf.head = {{-1, 2}};
  ConvergentStream s(cf, 30);
  REQUIRE(s.advance());
  CHECK(s.index() == 1);
  CHECK(s.positive_tail());
  CHECK(certainly_below_pow10(abs_diff(s.value(), HPReal::from_rational(Rational(1, 2), 30)), 25));
}

TEST_CASE("validation") {
  CFSpec cf;
  cf.a_rule = CoeffRule(Polynomial(1));
  CHECK_THROWS_AS(cf.validate(), DomainError);
}
