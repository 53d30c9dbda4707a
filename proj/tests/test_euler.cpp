#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cflab/errors.hpp"
#include "cflab/euler.hpp"
#include "cflab/series.hpp"

using namespace cflab;

TEST_CASE("Theorem I turns Leibnitz into Brouncker") {
  AltSeries s = *named_alt_series("leibnitz");
  CFSpec cf = theorem1_transform(s);
  CHECK(cf.b0 == 1);
  for (long n = 1; n <= 10; ++n) {
    CHECK(cf.term(n)->first == Rational((2 * n - 1) * (2 * n - 1)));
    CHECK(cf.term(n)->second == 2);
  }
  IdentityReport r = check_partial_sum_identity(s, cf, 50);
  CHECK(r.ok);
  CHECK(r.checked == 50);
  CHECK(r.relation == "c_(n-1) = 1/s_n");
}

TEST_CASE("Theorem II on the two-factor series") {
  AltSeries s = *named_alt_series("twofactor");
  CFSpec cf = theorem2_transform(s);
  CHECK(cf.b0 == 3);
  CHECK(cf.term(1)->first == 3);
  CHECK(cf.term(1)->second == 4);
  CHECK(cf.term(2)->first == 15);
  IdentityReport r = check_partial_sum_identity(s, cf, 50);
  CHECK(r.ok);
  CHECK(r.checked == 50);
}

TEST_CASE("every named series satisfies its identity") {
  for (const std::string& id : named_alt_series_ids()) {
    AltSeries s = *named_alt_series(id);
    if (s.kind == AltSeries::Kind::General) {
      CHECK_THROWS_AS(theorem1_transform(s), DomainError);
      continue;
    }
    CFSpec cf = s.kind == AltSeries::Kind::Reciprocal ? theorem1_transform(s) : theorem2_transform(s);
    CAPTURE(id);
    CHECK(check_partial_sum_identity(s, cf, 40).ok);
  }
  CHECK(!named_alt_series("nosuch"));
}

TEST_CASE("wrong kinds and zero elements are rejected") {
  CHECK_THROWS_AS(theorem2_transform(*named_alt_series("leibnitz")), DomainError);
  CHECK_THROWS_AS(theorem1_transform(*named_alt_series("twofactor")), DomainError);
  AltSeries bad{AltSeries::Kind::Reciprocal, CoeffRule(Polynomial::linear(1, -3)), 1, {}};
  CHECK_THROWS_AS(theorem1_transform(bad), DomainError);
}

TEST_CASE("finite series give finite fractions") {
  AltSeries s{AltSeries::Kind::Reciprocal, CoeffRule(Polynomial::linear(3, 1)), 1, 6L};
  CFSpec cf = theorem1_transform(s);
  CHECK(cf.is_finite());
  CHECK(cf.head.size() == 5);
  CHECK(convergents(cf, 10).back().value() * partial_sum(s, 6) == 1);
  CHECK(check_partial_sum_identity(s, cf, 100).ok);

  AltSeries b{AltSeries::Kind::Biproduct, CoeffRule(Polynomial::linear(1, 1)), 1, 4L};
  CFSpec cb = theorem2_transform(b);
  CHECK(check_partial_sum_identity(b, cb, 100).ok);
}

TEST_CASE("a corrupted fraction is caught") {
  AltSeries s = *named_alt_series("leibnitz");
  CFSpec cf = theorem1_transform(s);
  cf.head = {{1, 3}};
  IdentityReport r = check_partial_sum_identity(s, cf, 10);
  CHECK(!r.ok);
  CHECK(r.first_failure == 2);
}

TEST_CASE("partial sums and series starts") {
  AltSeries s = *named_alt_series("leibnitz");
  CHECK(partial_sum(s, 3) == Rational(1) - Rational(1, 3) + Rational(1, 5));
  s.start = 2;
  CHECK(s.element(1) == 3);
  CHECK(partial_sum(s, 1) == Rational(1, 3));
  CHECK_THROWS_AS(partial_sum(s, 0), DomainError);
}
