#pragma once

#include "cflab/rational.hpp"

#include <optional>
#include <string>

namespace cflab {

/// Fixed-precision decimal real with a tracked error bound.
///
/// The represented interval is (mantissa ± error_ulps) · 10^-scale. Every
/// arithmetic operation widens error_ulps by a worst-case bound, so digits()
/// is always a valid guarantee: |true value − mantissa·10^-scale| ≤ 10^-digits().
class HPReal {
 public:
  HPReal() = default;
  HPReal(BigInt mantissa, long scale, BigInt error_ulps = 0);

  /// floor(q · 10^scale), error 0 when the product is an integer, else 1 ulp.
  static HPReal from_rational(const Rational& q, long scale);
  static HPReal from_integer(const BigInt& z, long scale = 0);

  const BigInt& mantissa() const noexcept { return mantissa_; }
  long scale() const noexcept { return scale_; }
  const BigInt& error_ulps() const noexcept { return error_; }

  /// Guaranteed correct decimal places; never exceeds scale().
  long digits() const;

  bool is_exact() const { return error_ == 0; }
  int sign() const { return sgn(mantissa_); }

  /// Sign of the true value when the interval excludes zero.
  std::optional<int> certain_sign() const;

  /// Re-expresses the value at another scale (rounding down when shrinking).
  HPReal rescaled(long new_scale) const;

  /// Exact rational value of the midpoint.
  Rational midpoint() const;

  /// Upper bound on |value| as an exact rational (|m| + err) · 10^-scale.
  Rational magnitude_bound() const;

  /// Upper bound on the absolute error as an exact rational.
  Rational error_bound() const;

  HPReal abs() const;
  HPReal operator-() const;

  friend HPReal operator+(const HPReal& a, const HPReal& b);
  friend HPReal operator-(const HPReal& a, const HPReal& b);
  friend HPReal operator*(const HPReal& a, const HPReal& b);
  /// Throws EvaluationError when the divisor's interval contains zero.
  friend HPReal operator/(const HPReal& a, const HPReal& b);

  HPReal& operator+=(const HPReal& o) { return *this = *this + o; }
  HPReal& operator-=(const HPReal& o) { return *this = *this - o; }
  HPReal& operator*=(const HPReal& o) { return *this = *this * o; }
  HPReal& operator/=(const HPReal& o) { return *this = *this / o; }

  /// Adds `ulps` to the error bound.
  HPReal widened(const BigInt& ulps) const;

  /// Decimal text truncated toward zero: `n` decimals when |x| < 1, otherwise
  /// `n` significant digits with at least one decimal place.
  std::string to_string(long n) const;

  /// Compact scientific rendering of the midpoint, e.g. "3.1e-35".
  std::string to_scientific(int significant = 2) const;

 private:
  BigInt mantissa_ = 0;
  long scale_ = 0;
  BigInt error_ = 0;
};

/// Scale conventionally used for a request of `digits`: digits + guard, where
/// guard = 10 + 5% of digits.
long working_scale(long digits);

/// Absolute difference |a − b| as an HPReal carrying both error bounds.
HPReal abs_diff(const HPReal& a, const HPReal& b);

/// True when the value is certainly below 10^-digits (uses the upper bound).
bool certainly_below_pow10(const HPReal& x, long digits);

/// Upper bound on -log10|x| style "correct digits" of an error value, capped.
long correct_digits(const HPReal& abs_error, long cap);

/// sqrt, exp and log with tracked errors. Inputs are HPReal intervals.
HPReal hp_sqrt(const HPReal& x);
HPReal hp_exp(const HPReal& x);
HPReal hp_log(const HPReal& x);

}  // namespace cflab
