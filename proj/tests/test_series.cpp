#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cflab/constants.hpp"
#include "cflab/errors.hpp"
#include "cflab/series.hpp"

using namespace cflab;

namespace {

// |closed form - partial sum of n terms| <= tail bound, all in HPReal.
bool closed_form_within_tail(const Series& s, const ConstExpr& value, long n, long digits) {
  HPReal exact = const_expr_eval(value, digits);
  HPReal partial = HPReal::from_rational(family_partial_sum(s, n), digits + 5);
  HPReal bound = HPReal::from_rational(tail_bound(s, n), digits + 5);
  HPReal gap = abs_diff(exact, partial);
  return gap.midpoint() - gap.error_bound() <= bound.midpoint() + bound.error_bound();
}

ConstExpr affine(const Rational& one, const Rational& pi, const Rational& g) {
  return ConstExpr(one) + ConstExpr::pi(pi) + ConstExpr::catalan(g);
}

Rational q(long n) { return Rational(n); }

}  // namespace

TEST_CASE("linear family closed forms") {
  CHECK(linear_y_closed(1) == ConstExpr::pi(Rational(1, 4)));
  CHECK(linear_y_closed(2) == affine(Rational(-1, 2), Rational(1, 4), 0));
  CHECK(linear_y_closed(3) == affine(Rational(-1, 3), Rational(1, 8), 0));
  CHECK(linear_y_closed(4) == affine(Rational(-11, 90), Rational(1, 24), 0));
  CHECK(linear_y_closed(5) == affine(Rational(-2, 63), Rational(1, 96), 0));
  for (long f = 1; f <= 6; ++f) {
    CAPTURE(f);
    CHECK(closed_form_within_tail(linear_family(f), linear_y_closed(f), 2000, 20));
  }
  CHECK_THROWS_AS(linear_y_closed(0), DomainError);
}

TEST_CASE("quadratic family closed forms") {
  CHECK(quadratic_y_closed(1) == ConstExpr::catalan());
  CHECK(quadratic_y_closed(2) == affine(Rational(1, 2), Rational(-1, 8), 0));
  CHECK(quadratic_y_closed(3) == affine(Rational(19, 576), 0, Rational(-1, 32)));
  CHECK(quadratic_y_closed(4) == affine(Rational(-7, 4050), q(8) / (q(24) * 24 * 24), 0));
  CHECK(quadratic_y_closed(5) == affine(Rational(-3919, 108380160), 0, q(27 * 2) / (q(24) * 24 * 24 * 24 * 4)));
  for (long m = 1; m <= 8; ++m) {
    CAPTURE(m);
    CHECK(closed_form_within_tail(quadratic_family(m), quadratic_y_closed(m), 500, 25));
  }
}

TEST_CASE("parity of the transcendental part") {
  for (long m = 1; m <= 10; ++m) {
    ConstExpr y = quadratic_y_closed(m);
    CHECK(y.is_affine());
    CHECK(y.depends_on(Atom::G) == (m % 2 == 1));
    CHECK(y.depends_on(Atom::Pi) == (m % 2 == 0));
  }
}

TEST_CASE("shifted pi sums agree with the quadratic recurrence") {
  CHECK(shifted_pi_sum_closed(0) == quadratic_y_closed(2));
  CHECK(shifted_pi_sum_closed(1) == affine(Rational(-1, 162), Rational(1, 1728), 0));
  for (long k = 0; k <= 3; ++k) {
    CAPTURE(k);
    CHECK(closed_form_within_tail(shifted_pi_series(k), shifted_pi_sum_closed(k), 400, 20));
  }
}

TEST_CASE("weighted telescoping") {
  for (int v = 1; v <= 3; ++v) {
    TelescopeReport r = telescoping_identity_check(v);
    CHECK(r.ok);
    CHECK(r.samples > 2 * weight_polynomial(v).degree());
    CHECK(!telescoping_identity_check(v, Rational(1, 1000000)).ok);
  }
  CHECK(weighted_sum_closed(1) == affine(Rational(-1, 96), 0, Rational(1, 16)));
  CHECK(weighted_sum_closed(2) == affine(Rational(-19, 335872), 0, Rational(1, 4096)));
  CHECK(closed_form_within_tail(poly_weighted(1), weighted_sum_closed(1), 10000, 25));
  CHECK(closed_form_within_tail(poly_weighted(2), weighted_sum_closed(2), 1000, 30));
  CHECK(closed_form_within_tail(poly_weighted(3), weighted_sum_closed(3), 1000, 30));
  CHECK(const_expr_eval(weighted_sum_closed(1), 12).to_string(12) == "0.046831182969");
  CHECK_THROWS_AS(weight_polynomial(4), DomainError);
}

TEST_CASE("misc sums") {
  for (const MiscSum& m : misc_sums()) {
    CAPTURE(m.id);
    if (m.series.alternating) {
      CHECK(closed_form_within_tail(m.series, m.value, 3000, 15));
    } else {
      // positive terms with ratio below 1/2: remainder is under twice the next term
      HPReal partial = HPReal::from_rational(family_partial_sum(m.series, 120), 40);
      CHECK(certainly_below_pow10(abs_diff(partial, const_expr_eval(m.value, 40)), 30));
    }
  }
}

TEST_CASE("tail bounds") {
  Series l = leibnitz_series();
  CHECK(tail_bound(l, 10) == Rational(1, 21));
  CHECK(family_partial_sum(l, 2) == Rational(2, 3));
  Series pos = misc_sums().back().series;
  CHECK_THROWS_AS(tail_bound(pos, 5), DomainError);
  CHECK_THROWS_AS(family_partial_sum(l, 0), DomainError);
}
