#pragma once

#include "cflab/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace cflab {

/// Univariate polynomial in n with rational coefficients, ascending order.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // constant
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial from_ints(std::initializer_list<long> ascending);
  /// slope·n + intercept
  static Polynomial linear(const Rational& slope, const Rational& intercept);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;

  Rational operator()(const Rational& n) const;
  Rational operator()(long n) const;

  /// p(n + k)
  Polynomial shifted(long k) const;
  Polynomial pow(unsigned e) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Integer coefficients `num` with p(n) = num(n) / den.
  struct IntegerForm {
    std::vector<BigInt> num;
    BigInt den = 1;
    BigInt eval(long n) const;
  };
  IntegerForm integer_form() const;

  /// True if p(n) = 0 for some n ≡ start (mod step), n ≥ start, checked up to
  /// the Cauchy root bound (at most `limit`).
  bool vanishes_on_progression(long start, long step, long limit = 1000000) const;

  /// e.g. "4n^2 - 4n + 1"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace cflab
