#include "cflab/polynomial.hpp"

#include <algorithm>

namespace cflab {

Polynomial::Polynomial(const Rational& c) : c_{c} { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::from_ints(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::linear(const Rational& slope, const Rational& intercept) {
  return Polynomial(std::vector<Rational>{intercept, slope});
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<size_t>(i)];
}

Rational Polynomial::operator()(const Rational& n) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

Rational Polynomial::operator()(long n) const { return (*this)(Rational(n)); }

Polynomial Polynomial::shifted(long k) const {
  // Horner in polynomial arithmetic: p(n+k) = (...(c_d (n+k) + c_{d-1})(n+k) ...)
  Polynomial x = linear(1, k);
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Polynomial(*it);
  return acc;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b * Polynomial(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

BigInt Polynomial::IntegerForm::eval(long n) const {
  BigInt acc = 0;
  for (auto it = num.rbegin(); it != num.rend(); ++it) {
    mpz_mul_si(acc.get_mpz_t(), acc.get_mpz_t(), n);
    acc += *it;
  }
  return acc;
}

Polynomial::IntegerForm Polynomial::integer_form() const {
  IntegerForm f;
  for (const Rational& q : c_) mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), q.get_den_mpz_t());
  for (const Rational& q : c_) f.num.push_back(q.get_num() * (f.den / q.get_den()));
  return f;
}

bool Polynomial::vanishes_on_progression(long start, long step, long limit) const {
  if (is_zero()) return true;
  if (is_constant()) return false;
  // Cauchy bound: every root satisfies |x| < 1 + max |c_i / c_d|
  Rational worst = 0;
  for (int i = 0; i < degree(); ++i) worst = std::max(worst, Rational(abs(c_[static_cast<size_t>(i)] / c_.back())));
  BigInt bound = worst.get_num() / worst.get_den() + 2;
  long hi = bound.fits_slong_p() ? std::min(bound.get_si(), limit) : limit;
  IntegerForm f = integer_form();
  for (long n = start; n <= hi; n += step)
    if (f.eval(n) == 0) return true;
  return false;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    std::string term;
    if (i == 0 || mag != 1) term = cflab::to_string(mag);
    if (i > 0 && mag.get_den() != 1) term = "(" + term + ")";
    if (i > 0) term += i == 1 ? "n" : "n^" + std::to_string(i);
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace cflab
