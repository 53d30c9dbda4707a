#include "cflab/constants.hpp"

#include "cflab/errors.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>

namespace cflab {

namespace {

std::atomic<long> g_max_digits{1000};

// atan(1/x) · 10^scale, alternating series in fixed point.
HPReal atan_inv(long x, long scale) {
  BigInt power = pow10(scale) / x;
  BigInt x2 = BigInt(x) * x;
  BigInt sum = 0;
  long terms = 0;
  for (unsigned long k = 0; power != 0; ++k) {
    BigInt t = power / (2 * k + 1);
    if (k % 2 == 0) sum += t;
    else sum -= t;
    power /= x2;
    ++terms;
  }
  return HPReal(sum, scale, BigInt(2 * terms + 2));
}

// Fills are computed at a bucketed scale so every caller sees the same digits.
long bucket(long scale) { return (scale + 63) / 64 * 64 + 16; }

void require_consistent(const HPReal& a, const HPReal& b, const char* what) {
  HPReal d = a - b;
  if (abs(d.mantissa()) > d.error_ulps())
    throw OracleMismatch(std::string(what) + ": independent evaluations disagree");
}

class ConstantCache {
 public:
  using Fill = HPReal (*)(long);
  explicit ConstantCache(Fill fill) : fill_(fill) {}

  HPReal at(long scale) {
    if (scale < 0) throw DomainError("negative scale");
    long b = bucket(scale);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = values_.find(b);
    if (it == values_.end()) it = values_.emplace(b, fill_(b)).first;
    return it->second.rescaled(scale);
  }

 private:
  Fill fill_;
  std::mutex mu_;
  std::map<long, HPReal> values_;
};

HPReal fill_pi(long scale) {
  HPReal a = pi_machin(scale);
  require_consistent(a, pi_hutton(scale), "pi");
  return a;
}

HPReal fill_catalan(long scale) {
  HPReal a = catalan_cvz(scale);
  require_consistent(a, catalan_ramanujan(scale), "Catalan's constant");
  return a;
}

ConstantCache& pi_cache() {
  static ConstantCache c(fill_pi);
  return c;
}
ConstantCache& catalan_cache() {
  static ConstantCache c(fill_catalan);
  return c;
}
ConstantCache& sqrt3_cache() {
  static ConstantCache c(sqrt3_newton);
  return c;
}
ConstantCache& ln2_cache() {
  static ConstantCache c([](long scale) {
    return accelerated_alternating_sum([](long k) -> Rational { return Rational(1, k + 1); }, scale);
  });
  return c;
}

void check_digits(long digits) {
  if (digits < 1) throw DomainError("digits must be positive");
  if (digits > g_max_digits.load())
    throw ConfigError("requested " + std::to_string(digits) + " digits exceeds the configured maximum of " +
                      std::to_string(g_max_digits.load()));
}

CrossCheck compare(HPReal a, HPReal b) {
  CrossCheck r{a, b, 0, false};
  HPReal d = a - b;
  r.consistent = abs(d.mantissa()) <= d.error_ulps();
  BigInt gap = abs(d.mantissa()) + 1;
  r.agreed_digits = std::min({a.digits(), b.digits(), d.scale() - ceil_log10(gap)});
  return r;
}

}  // namespace

long max_reference_digits() { return g_max_digits.load(); }

void set_max_reference_digits(long digits) {
  if (digits < 1) throw DomainError("maximum digits must be positive");
  g_max_digits.store(digits);
}

HPReal pi_at_scale(long scale) { return pi_cache().at(scale); }
HPReal catalan_at_scale(long scale) { return catalan_cache().at(scale); }
HPReal sqrt3_at_scale(long scale) { return sqrt3_cache().at(scale); }

HPReal pi_reference(long digits) {
  check_digits(digits);
  return pi_at_scale(working_scale(digits));
}

HPReal catalan_reference(long digits) {
  check_digits(digits);
  return catalan_at_scale(working_scale(digits));
}

HPReal sqrt3_reference(long digits) {
  check_digits(digits);
  return sqrt3_at_scale(working_scale(digits));
}

HPReal ln2_reference(long digits) {
  check_digits(digits);
  return ln2_cache().at(working_scale(digits));
}

HPReal pi_machin(long scale) {
  long w = scale + 5;
  HPReal four = HPReal::from_integer(4, 0);
  HPReal sixteen = HPReal::from_integer(16, 0);
  return (sixteen * atan_inv(5, w) - four * atan_inv(239, w)).rescaled(scale);
}

HPReal pi_hutton(long scale) {
  long w = scale + 5;
  HPReal four = HPReal::from_integer(4, 0);
  HPReal eight = HPReal::from_integer(8, 0);
  return (eight * atan_inv(3, w) + four * atan_inv(7, w)).rescaled(scale);
}

HPReal catalan_cvz(long scale) {
  return accelerated_alternating_sum([](long k) -> Rational { return Rational(1, (2 * k + 1) * (2 * k + 1)); }, scale);
}

HPReal catalan_ramanujan(long scale) {
  long w = scale + 10;
  BigInt one = pow10(w);

  // Σ 3^-k/(2k+1) = √3·atanh(1/√3)
  BigInt power = one, s1 = 0;
  long t1 = 0;
  for (unsigned long k = 0; power != 0; ++k, ++t1) {
    s1 += power / (2 * k + 1);
    power /= 3;
  }
  // Σ (n!)^2/((2n)!(2n+1)^2), ratio (n+1)/(2(2n+1))
  BigInt u = one, s2 = 0;
  long t2 = 0;
  for (unsigned long n = 0; u != 0; ++n, ++t2) {
    s2 += u / ((2 * n + 1) * (2 * n + 1));
    u = u * (n + 1) / (2 * (2 * n + 1));
  }
  HPReal sum1(s1, w, BigInt(2 * t1 + 3));
  HPReal sum2(s2, w, BigInt(3 * t2 + 3));
  HPReal pi = pi_at_scale(w);
  HPReal r3 = sqrt3_at_scale(w);
  HPReal g = pi / (HPReal::from_integer(4, 0) * r3) * sum1 + HPReal::from_rational(Rational(3, 8), w) * sum2;
  return g.rescaled(scale);
}

HPReal sqrt3_newton(long scale) {
  Rational x = 2;
  const BigInt limit = pow10(scale);
  // x stays above √3; stop once x² − 3 < 10^-scale, so x − √3 < 10^-scale / 3.
  while (true) {
    Rational residual = x * x - 3;
    if (residual * limit < 1) break;
    x = (x + 3 / x) / 2;
  }
  return HPReal::from_rational(x, scale).widened(1);
}

CrossCheck cross_check_pi(long digits) {
  check_digits(digits);
  long s = working_scale(digits);
  return compare(pi_machin(s), pi_hutton(s));
}

CrossCheck cross_check_catalan(long digits) {
  check_digits(digits);
  long s = working_scale(digits);
  return compare(catalan_cvz(s), catalan_ramanujan(s));
}

HPReal accelerated_alternating_sum(const std::function<Rational(long)>& a, long scale) {
  const long w = scale + 5;
  const long n = static_cast<long>(std::ceil((w + 2) * 1.3063)) + 1;
  const BigInt one = pow10(w);

  // d = T_n(3), the Chebyshev value ((3+√8)^n + (3−√8)^n)/2
  BigInt t_prev = 1, d = 3;
  for (long k = 1; k < n; ++k) {
    BigInt next = 6 * d - t_prev;
    t_prev = d;
    d = next;
  }

  BigInt b = -1, c = -d, s = 0, weight = 0, a0 = 0;
  for (long k = 0; k < n; ++k) {
    c = b - c;
    Rational ak = a(k);
    BigInt fixed = ak.get_num() * one / ak.get_den();
    if (k == 0) a0 = fixed;
    s += c * fixed;
    weight += abs(c);
    b = b * (2 * (k + n) * (k - n));
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), BigInt((2 * k + 1) * (k + 1)).get_mpz_t());
  }
  BigInt m;
  mpz_fdiv_q(m.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
  BigInt err;
  mpz_cdiv_q(err.get_mpz_t(), weight.get_mpz_t(), d.get_mpz_t());
  // truncation: |S − s/d| ≤ 2·a_0/(3+√8)^n ≤ 2·a_0/d
  BigInt trunc;
  BigInt twice_a0 = 2 * (a0 + 1);
  mpz_cdiv_q(trunc.get_mpz_t(), twice_a0.get_mpz_t(), d.get_mpz_t());
  return HPReal(m, w, err + trunc + 2).rescaled(scale);
}

}  // namespace cflab
