#include "cflab/gamma.hpp"

#include "cflab/constants.hpp"
#include "cflab/errors.hpp"

#include <cmath>

namespace cflab {

namespace {

// Γ(x+1) = (x+a)^(x+1/2) e^-(x+a) [√(2π) + Σ_{k=1}^{a-1} c_k/(x+k) + ε(x)],
// c_k = (-1)^(k-1) (a-k)^(k-1/2) e^(a-k) / (k-1)!,
// |ε|/(...) ≤ a^(-1/2) (2π)^-(a+1/2) < 6^-a for x > 0.
HPReal spouge_gamma_plus_one(const Rational& x, long a, long scale) {
  HPReal e = hp_exp(HPReal::from_integer(1, scale));
  HPReal series = hp_sqrt(HPReal::from_integer(2, scale) * pi_at_scale(scale));

  // e^(a-k) for k = a-1 down to 1, built by repeated multiplication
  std::vector<HPReal> epow(static_cast<size_t>(a));
  epow[1] = e;
  for (long j = 2; j < a; ++j) epow[static_cast<size_t>(j)] = epow[static_cast<size_t>(j - 1)] * e;

  for (long k = 1; k < a; ++k) {
    long base = a - k;
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(k - 1));
    Rational scale_factor = make_rational(p, factorial(k - 1)) / (x + k);
    if (k % 2 == 0) scale_factor = -scale_factor;
    HPReal root = hp_sqrt(HPReal::from_integer(base, scale));
    series += HPReal::from_rational(scale_factor, scale) * root * epow[static_cast<size_t>(base)];
  }

  Rational shifted = x + a;
  HPReal exponent = HPReal::from_rational(x + Rational(1, 2), scale) * hp_log(HPReal::from_rational(shifted, scale)) -
                    HPReal::from_rational(shifted, scale);
  HPReal result = hp_exp(exponent) * series;

  BigInt six_pow;
  mpz_ui_pow_ui(six_pow.get_mpz_t(), 6, static_cast<unsigned long>(a));
  BigInt trunc;
  BigInt mag = abs(result.mantissa()) + result.error_ulps();
  mpz_cdiv_q(trunc.get_mpz_t(), mag.get_mpz_t(), six_pow.get_mpz_t());
  return result.widened(trunc + 1);
}

}  // namespace

HPReal gamma_hp(const Rational& x, long digits) {
  if (x <= 0) throw DomainError("gamma_hp requires x > 0 (got " + to_string(x) + ")");
  if (digits < 1) throw DomainError("digits must be positive");
  if (x.get_den() == 1) {
    if (!x.get_num().fits_slong_p()) throw DomainError("gamma argument too large");
    return HPReal::from_integer(factorial(x.get_num().get_si() - 1), working_scale(digits));
  }

  // magnitude of Γ(x+1) in decimal digits, to turn an absolute goal into a relative one
  double xd = x.get_d();
  long magnitude = static_cast<long>(std::ceil(std::max(0.0, std::lgamma(xd + 1.0) / std::log(10.0)))) + 1;
  long relative = digits + magnitude + 5;
  long a = static_cast<long>(std::ceil(relative * 1.2532)) + 1;
  long scale = 2 * relative + 20;
  for (int attempt = 0; attempt < 5; ++attempt) {
    HPReal g = spouge_gamma_plus_one(x, a, scale) / HPReal::from_rational(x, scale + 5);
    if (g.digits() >= digits + 1) return g;
    scale += relative;
  }
  throw EvaluationError("gamma_hp could not reach " + std::to_string(digits) + " digits");
}

}  // namespace cflab
