#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cflab/const_expr.hpp"
#include "cflab/constants.hpp"
#include "cflab/errors.hpp"
#include "cflab/gamma.hpp"
#include "cflab/hpreal.hpp"
#include "cflab/kernels.hpp"
#include "cflab/polynomial.hpp"
#include "cflab/rational.hpp"

#include <random>

using namespace cflab;

namespace {

// Independent high-precision values (mpmath, 110 digits), frozen.
const std::string kPi =
    "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798";
const std::string kG =
    "0.9159655941772190150546035149323841107741493742816721342664981196217630197762547694793565129261151062";

bool agrees(const HPReal& x, const std::string& ref, long digits) {
  HPReal r = HPReal::from_rational(parse_rational(ref), static_cast<long>(ref.size()));
  return certainly_below_pow10(abs_diff(x, r), digits);
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(factorial(6) == 720);
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK(decimal_length(BigInt(999)) == 3);
  CHECK(ceil_log10(BigInt(1000)) == 3);
  CHECK(ceil_log10(BigInt(1001)) == 4);
}

TEST_CASE("HPReal arithmetic keeps its bound") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int i = 0; i < 200; ++i) {
    Rational a(d(rng), 97), b(d(rng) == 0 ? 1 : d(rng), 89);
    if (b == 0) b = 1;
    HPReal x = HPReal::from_rational(a, 30), y = HPReal::from_rational(b, 30);
    auto within = [](const HPReal& v, const Rational& exact) {
      return abs(v.midpoint() - exact) <= v.error_bound();
    };
    CHECK(within(x + y, a + b));
    CHECK(within(x - y, a - b));
    CHECK(within(x * y, a * b));
    CHECK(within(x / y, a / b));
  }
  CHECK_THROWS_AS(HPReal::from_integer(1, 5) / HPReal(BigInt(0), 5, BigInt(1)), EvaluationError);
}

TEST_CASE("HPReal printing truncates") {
  CHECK(HPReal::from_rational(Rational(2, 3), 20).to_string(5) == "0.66666");
  CHECK(HPReal::from_rational(Rational(-22, 7), 20).to_string(4) == "-3.142");
  CHECK(HPReal::from_integer(5, 10).to_string(3) == "5.00");
}

TEST_CASE("sqrt, exp and log") {
  HPReal two = HPReal::from_integer(2, 40);
  CHECK(hp_sqrt(HPReal::from_integer(3, 40)).to_string(20) == "1.7320508075688772935");
  CHECK(hp_log(two).to_string(20) == "0.69314718055994530941");
  HPReal e = hp_exp(HPReal::from_integer(1, 40));
  CHECK(e.to_string(20) == "2.7182818284590452353");
  HPReal round_trip = hp_exp(hp_log(HPReal::from_rational(Rational(7, 3), 40)));
  CHECK(certainly_below_pow10(abs_diff(round_trip, HPReal::from_rational(Rational(7, 3), 40)), 30));
}

TEST_CASE("reference constants") {
  CHECK(pi_reference(12).to_string(12) == "3.14159265358");
  CHECK(catalan_reference(12).to_string(12) == "0.915965594177");
  CHECK(sqrt3_reference(10).to_string(10) == "1.732050807");
  CHECK(agrees(pi_reference(100), kPi, 100));
  CHECK(agrees(catalan_reference(100), kG, 100));
  CHECK(agrees(ln2_reference(30), "0.6931471805599453094172321214581765680755", 30));
  CHECK_THROWS_AS(pi_reference(0), DomainError);
  CHECK_THROWS_AS(pi_reference(max_reference_digits() + 1), ConfigError);
}

TEST_CASE("independent methods agree") {
  for (long d : {20L, 100L, 250L}) {
    CrossCheck p = cross_check_pi(d), g = cross_check_catalan(d);
    CHECK(p.consistent);
    CHECK(g.consistent);
    CHECK(p.agreed_digits >= d);
    CHECK(g.agreed_digits >= d);
  }
}

TEST_CASE("alternating acceleration") {
  // Σ (-1)^k/(k+1) = ln 2 and Σ (-1)^k/(2k+1) = π/4
  HPReal l = accelerated_alternating_sum([](long k) -> Rational { return Rational(1, k + 1); }, 60);
  CHECK(agrees(l, "0.6931471805599453094172321214581765680755001343602552541206800094933936219696947", 55));
  HPReal q = accelerated_alternating_sum([](long k) -> Rational { return Rational(1, 2 * k + 1); }, 60);
  CHECK(certainly_below_pow10(abs_diff(q * HPReal::from_integer(4, 0), pi_at_scale(60)), 55));
}

TEST_CASE("Gamma") {
  CHECK(gamma_hp(Rational(5), 20).to_string(5) == "24.000");
  CHECK(gamma_hp(Rational(5), 20).is_exact());
  HPReal half = gamma_hp(Rational(1, 2), 30);
  HPReal sqrt_pi = hp_sqrt(pi_at_scale(45));
  CHECK(certainly_below_pow10(abs_diff(half, sqrt_pi), 30));
  CHECK(agrees(gamma_hp(Rational(1, 3), 35), "2.678938534707747633655692940974677644129", 35));
  // Γ(x+1) = xΓ(x)
  HPReal a = gamma_hp(Rational(17, 5), 30), b = gamma_hp(Rational(12, 5), 30);
  CHECK(certainly_below_pow10(abs_diff(a, HPReal::from_rational(Rational(12, 5), 40) * b), 28));
  CHECK_THROWS_AS(gamma_hp(Rational(0), 10), DomainError);
  CHECK_THROWS_AS(gamma_hp(Rational(-1, 2), 10), DomainError);
}

TEST_CASE("ConstExpr algebra") {
  ConstExpr a = ConstExpr::pi(Rational(1, 8)) - ConstExpr(Rational(1, 3));
  CHECK(a.coefficient(Atom::Pi) == Rational(1, 8));
  CHECK(a.coefficient(Atom::One) == Rational(-1, 3));
  CHECK(a.is_affine());
  CHECK(!a.depends_on(Atom::G));
  CHECK(const_expr_eval(a, 10).to_string(10) == "0.0593657483");

  ConstExpr t = ConstExpr(64) / (ConstExpr(19) - ConstExpr::catalan(18));
  CHECK(t == (ConstExpr(Rational(19, 64)) - ConstExpr::catalan(Rational(18, 64))).reciprocal());
  CHECK(const_expr_eval(t, 6).to_string(8) == "25.471427");
  CHECK(!(t == ConstExpr(64) / (ConstExpr(19) - ConstExpr::catalan(17))));

  ConstExpr s = ConstExpr::pi(2) / ConstExpr::sqrt3(3);
  CHECK(certainly_below_pow10(abs_diff(const_expr_eval(s, 30), HPReal::from_rational(parse_rational(
                                  "1.2091995761561452337293855050947704881893775"), 40)),
                              30));
  CHECK_THROWS_AS(ConstExpr::pi() * ConstExpr::catalan(), DomainError);
  CHECK_THROWS_AS(ConstExpr(0).reciprocal(), DomainError);
}

TEST_CASE("ConstExpr evaluation honours offsets") {
  ConstExpr g = ConstExpr::catalan();
  AtomOffsets off;
  off.catalan = Rational(1, 1000000);
  HPReal base = const_expr_eval(g, 20), moved = const_expr_eval(g, 20, off);
  CHECK(!certainly_below_pow10(abs_diff(base, moved), 10));
}

TEST_CASE("polynomials") {
  Polynomial p = Polynomial::from_ints({1, -4, 4});  // (2n-1)^2
  CHECK(p == Polynomial::linear(2, -1).pow(2));
  CHECK(p(3L) == 25);
  CHECK(p.shifted(1)(2L) == p(3L));
  CHECK(p.to_string() == "4n^2 - 4n + 1");
  CHECK(Polynomial::linear(Rational(1, 2), 0).to_string() == "(1/2)n");
  CHECK(Polynomial::linear(2, -6).vanishes_on_progression(1, 1));
  CHECK(!Polynomial::linear(2, -5).vanishes_on_progression(1, 1));
  auto f = Polynomial::linear(Rational(1, 2), Rational(1, 3)).integer_form();
  CHECK(make_rational(f.eval(6), f.den) == Rational(10, 3));
}

TEST_CASE("kernels agree with the serial reference") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> pick(1, 400);
  for (int i = 0; i < 20; ++i) {
    long count = pick(rng);
    long shift = pick(rng);
    kernels::TermFn t = [shift](long k) -> Rational {
      Rational v(1, (k + shift) * (k + shift + 1));
      return k % 2 == 0 ? v : Rational(-v);
    };
    Rational ref = kernels::exact_sum_fold(t, count);
    CHECK(kernels::exact_sum_split(t, count) == ref);
    CHECK(kernels::exact_sum_parallel(t, count) == ref);
    CHECK(kernels::fixed_sum_parallel(t, count, 40) == kernels::fixed_sum_serial(t, count, 40));
  }
  CHECK(kernels::exact_sum_parallel([](long) -> Rational { return 1; }, 0) == 0);
  CHECK(kernels::thread_count() >= 1);
}
