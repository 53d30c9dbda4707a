#include "cflab/rational.hpp"

#include "cflab/errors.hpp"

#include <cctype>

namespace cflab {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

BigInt double_factorial(long n) {
  if (n < -1) throw DomainError("double factorial of " + std::to_string(n) + " is undefined");
  BigInt r = 1;
  for (long k = n; k > 1; k -= 2) r *= k;
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt pow10(long e) {
  if (e < 0) throw DomainError("negative power of ten");
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return DomainError("cannot parse rational '" + s + "'"); };
  if (s.empty()) throw bad();
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      BigInt num(s.substr(0, slash), 10);
      BigInt den(s.substr(slash + 1), 10);
      return make_rational(num, den);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      long frac = static_cast<long>(s.size() - dot - 1);
      if (digits.empty() || digits == "-" || digits == "+") throw bad();
      return make_rational(BigInt(digits, 10), pow10(frac));
    }
    return Rational(BigInt(s, 10));
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

long decimal_length(const BigInt& x) {
  if (x == 0) return 0;
  BigInt a = abs(x);
  // mpz_sizeinbase may overestimate by one
  long n = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10));
  if (a < pow10(n - 1)) --n;
  return n;
}

long ceil_log10(const BigInt& x) {
  if (x <= 1) return 0;
  long n = decimal_length(x);
  // 10^(n-1) <= x < 10^n
  return x == pow10(n - 1) ? n - 1 : n;
}

}  // namespace cflab
