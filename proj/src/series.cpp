#include "cflab/series.hpp"

#include "cflab/errors.hpp"
#include "cflab/kernels.hpp"

namespace cflab {

namespace {

bool odd(long n) { return ((n % 2) + 2) % 2 == 1; }

Rational odd_product(long n, long factors, bool squared) {
  BigInt p = 1;
  for (long j = 0; j < factors; ++j) p *= 2 * n + 2 * j - 1;
  if (squared) p *= p;
  return make_rational(BigInt(1), p);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Rational Series::term(long n) const {
  Rational m = magnitude(n);
  if (alternating && odd(n - 1 + sign_shift)) return -m;
  return m;
}

Series linear_family(long f) {
  require(f >= 1, "linear family needs f >= 1");
  return {"linear(f=" + std::to_string(f) + ")", 1, true, 0, [f](long n) -> Rational { return odd_product(n, f, false); }};
}

Series quadratic_family(long m) {
  require(m >= 1, "quadratic family needs m >= 1");
  return {"quadratic(m=" + std::to_string(m) + ")", 1, true, 0, [m](long n) -> Rational { return odd_product(n, m, true); }};
}

Series shifted_pi_series(long k) {
  require(k >= 0, "shifted series needs k >= 0");
  return {"shifted_pi(k=" + std::to_string(k) + ")", 1 - k, true, 0,
          [k](long n) -> Rational { return odd_product(n, 2 * k + 2, true); }};
}

Polynomial weight_polynomial(int variant) {
  switch (variant) {
    case 1: return Polynomial::from_ints({3, 0, 4});
    case 2: return Polynomial::from_ints({41, 0, 88, 0, 16});
    case 3: return Polynomial::from_ints({1323, 0, 3628, 0, 1168, 0, 64});
    default: throw DomainError("weighted series variant must be 1, 2 or 3");
  }
}

Series poly_weighted(int variant) {
  Polynomial r = weight_polynomial(variant);
  return {"poly_weighted(v=" + std::to_string(variant) + ")", 1, true, 0, [r](long n) -> Rational {
            Rational odd_sq = Rational(2 * n - 1) * (2 * n - 1);
            return 1 / (r(n - 1) * r(n) * odd_sq);
          }};
}

Series leibnitz_series() { return {"leibnitz", 1, true, 0, [](long n) -> Rational { return Rational(1, 2 * n - 1); }}; }

ConstExpr linear_y_closed(long f) {
  require(f >= 1, "linear family needs f >= 1");
  ConstExpr s = ConstExpr::pi(Rational(1, 4));
  for (long k = 2; k <= f; ++k) {
    Rational correction = make_rational(BigInt(1), 2 * (k - 1) * double_factorial(2 * k - 3));
    s = s * ConstExpr(Rational(1, k - 1)) - ConstExpr(correction);
  }
  return s;
}

ConstExpr quadratic_y_closed(long m) {
  require(m >= 1, "quadratic family needs m >= 1");
  ConstExpr prev2 = ConstExpr::catalan();                                // y_1
  ConstExpr prev1 = ConstExpr(Rational(1, 2)) - ConstExpr::pi(Rational(1, 8));  // y_2
  if (m == 1) return prev2;
  if (m == 2) return prev1;
  std::vector<ConstExpr> y{ConstExpr(), prev2, prev1};
  for (long j = 1; static_cast<long>(y.size()) <= m; ++j) {
    // y_(j+2) = ((10j²+8j+1)/(2(2j+1)!!²) - y_j) / (4j(j+1)³)
    BigInt df = double_factorial(2 * j + 1);
    Rational lead = make_rational(BigInt(10 * j * j + 8 * j + 1), 2 * df * df);
    Rational factor = Rational(1) / (Rational(4 * j) * (j + 1) * (j + 1) * (j + 1));
    y.push_back((ConstExpr(lead) - y[static_cast<size_t>(j)]) * ConstExpr(factor));
  }
  return y[static_cast<size_t>(m)];
}

ConstExpr shifted_pi_sum_closed(long k) {
  require(k >= 0, "shifted series needs k >= 0");
  BigInt f1 = factorial(k + 1), f2 = factorial(2 * k + 2), df = double_factorial(2 * k + 1);
  Rational pi_coeff = make_rational(f1 * f1 * f1, f2 * f2 * f2 * factorial(k));
  Rational constant = make_rational(BigInt(1), 2 * df * df * df * df);
  ConstExpr inner = ConstExpr::pi(pi_coeff) - ConstExpr(constant);
  return k % 2 == 1 ? inner : -inner;
}

WeightedDecomposition weighted_decomposition(int variant) {
  switch (variant) {
    case 1: return {Rational(1, 16), Polynomial(Rational(1, 32))};
    case 2: return {Rational(1, 4096), Polynomial::from_ints({19, 0, 4}) * Polynomial(Rational(1, 8192))};
    case 3:
      return {Rational(1, 5308416), Polynomial::from_ints({713, 0, 280, 0, 16}) * Polynomial(Rational(1, 10616832))};
    default: throw DomainError("weighted series variant must be 1, 2 or 3");
  }
}

ConstExpr weighted_sum_closed(int variant) {
  WeightedDecomposition d = weighted_decomposition(variant);
  Rational w0 = d.u(0L) / weight_polynomial(variant)(0L);
  return ConstExpr::catalan(d.c) - ConstExpr(w0);
}

TelescopeReport telescoping_identity_check(int variant, const Rational& perturb) {
  Polynomial r = weight_polynomial(variant);
  WeightedDecomposition d = weighted_decomposition(variant);
  Rational c = d.c + perturb;
  TelescopeReport report;
  // cleared numerator has degree ≤ 2·deg r + 2; sample one more than twice that
  report.samples = 2 * (2 * r.degree() + 2) + 1;
  for (long n = 1; n <= report.samples; ++n) {
    Rational odd_sq = Rational(2 * n - 1) * (2 * n - 1);
    Rational lhs = 1 / (r(n - 1) * r(n) * odd_sq);
    Rational rhs = c / odd_sq - (d.u(n - 1) / r(n - 1) + d.u(n) / r(n));
    if (lhs != rhs) {
      report.ok = false;
      report.first_failure = n;
      return report;
    }
  }
  return report;
}

Rational family_partial_sum(const Series& s, long n) {
  require(n >= 1, "partial sums start at n = 1");
  return kernels::exact_sum_parallel([&s](long i) { return s.nth(i); }, n);
}

Rational tail_bound(const Series& s, long n) {
  require(s.alternating, "tail bound needs an alternating series");
  require(n >= 1, "tail bound needs n >= 1");
  return s.magnitude(s.start + n);
}

std::vector<MiscSum> misc_sums() {
  std::vector<MiscSum> out;
  out.push_back({"eq_pi_minus_3", "sum (-1)^(n-1)/(2n(2n+1)(2n+2)), n>=1",
                 {"eq_pi_minus_3", 1, true, 0,
                  [](long n) -> Rational { return Rational(1) / (Rational(2 * n) * (2 * n + 1) * (2 * n + 2)); }},
                 (ConstExpr::pi() - ConstExpr(3)) * ConstExpr(Rational(1, 4))});
  out.push_back({"eq_10_minus_3pi", "sum (-1)^(n-1)/((2n-1)2n(2n+1)(2n+2)(2n+3)), n>=1",
                 {"eq_10_minus_3pi", 1, true, 0,
                  [](long n) -> Rational {
                    return Rational(1) / (Rational(2 * n - 1) * (2 * n) * (2 * n + 1) * (2 * n + 2) * (2 * n + 3));
                  }},
                 (ConstExpr(10) - ConstExpr::pi(3)) * ConstExpr(Rational(1, 72))});
  out.push_back({"rearranged_22_7", "sum (-1)^n/((2n+1)(2n+2)(2n+3)(2n+4)(2n+5)), n>=2",
                 {"rearranged_22_7", 2, true, 1,
                  [](long n) -> Rational {
                    return Rational(1) /
                           (Rational(2 * n + 1) * (2 * n + 2) * (2 * n + 3) * (2 * n + 4) * (2 * n + 5));
                  }},
                 (ConstExpr(Rational(22, 7)) - ConstExpr::pi()) * ConstExpr(Rational(1, 24))});
  out.push_back({"glaisher_source_1", "sum n!/(2n+1)!!, n>=0 (positive terms)",
                 {"glaisher_source_1", 0, false, 0,
                  [](long n) -> Rational { return make_rational(factorial(n), double_factorial(2 * n + 1)); }},
                 ConstExpr::pi(Rational(1, 2))});
  out.push_back({"glaisher_source_2", "sum (n!)^2/(2n+1)!, n>=0 (positive terms)",
                 {"glaisher_source_2", 0, false, 0,
                  [](long n) -> Rational {
                    BigInt f = factorial(n);
                    return make_rational(f * f, factorial(2 * n + 1));
                  }},
                 ConstExpr::pi(2) / ConstExpr::sqrt3(3)});
  return out;
}

std::optional<AltSeries> named_alt_series(const std::string& id) {
  using K = AltSeries::Kind;
  if (id == "leibnitz") return AltSeries{K::Reciprocal, CoeffRule(Polynomial::linear(2, -1)), 1, {}};
  if (id == "pi8") return AltSeries{K::Reciprocal, CoeffRule(Polynomial::linear(4, -2)), 1, {}};
  if (id == "threefactor")
    return AltSeries{K::Reciprocal,
                     CoeffRule(Polynomial::linear(2, -1) * Polynomial::linear(2, 1) * Polynomial::linear(2, 3)), 1, {}};
  if (id == "twofactor") return AltSeries{K::Biproduct, CoeffRule(Polynomial::linear(2, -1)), 1, {}};
  if (id == "harmonic_pairs") return AltSeries{K::Biproduct, CoeffRule(Polynomial::linear(1, 0)), 1, {}};
  if (id == "catalan")
    return AltSeries{K::General, CoeffRule({Branch{Polynomial(1), Polynomial::linear(2, -1).pow(2)}}, 1), 1, {}};
  return std::nullopt;
}

std::vector<std::string> named_alt_series_ids() {
  return {"leibnitz", "pi8", "threefactor", "twofactor", "harmonic_pairs", "catalan"};
}

}  // namespace cflab
