#include "cflab/hpreal.hpp"

#include "cflab/errors.hpp"

#include <algorithm>
#include <utility>

namespace cflab {

namespace {

BigInt cdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const BigInt& d, const BigInt& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

BigInt isqrt(const BigInt& a) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

// Mantissas and errors of a and b brought to the larger of their scales.
struct Aligned {
  BigInt ma, ea, mb, eb;
  long scale;
};

Aligned align(const HPReal& a, const HPReal& b) {
  long s = std::max(a.scale(), b.scale());
  HPReal x = a.rescaled(s);
  HPReal y = b.rescaled(s);
  return {x.mantissa(), x.error_ulps(), y.mantissa(), y.error_ulps(), s};
}

// atanh(p/q) · 10^scale by the odd power series, |p/q| <= 1/3. Returns the
// truncated sum and the accumulated error in ulps.
std::pair<BigInt, BigInt> atanh_fixed(const BigInt& p, const BigInt& q, long scale) {
  BigInt one = pow10(scale);
  BigInt p2 = p * p;
  BigInt q2 = q * q;
  BigInt power = fdiv(one * p, q);
  BigInt sum = 0;
  long terms = 0;
  for (long k = 0; power != 0; ++k) {
    BigInt t;
    mpz_tdiv_q_ui(t.get_mpz_t(), power.get_mpz_t(), static_cast<unsigned long>(2 * k + 1));
    sum += t;
    power = power * p2;
    mpz_tdiv_q(power.get_mpz_t(), power.get_mpz_t(), q2.get_mpz_t());
    ++terms;
  }
  return {sum, BigInt(3 * terms + 3)};
}

HPReal ln2_at(long scale) {
  auto [s, e] = atanh_fixed(1, 3, scale);
  return HPReal(2 * s, scale, 2 * e);
}

// e^f for 0 <= f < 1 given exactly as a rational.
HPReal exp_fraction(const Rational& f, long scale) {
  constexpr int kHalvings = 8;
  long w = scale + 5;
  BigInt one = pow10(w);
  BigInt g = fdiv(f.get_num() * one, f.get_den() << kHalvings);
  BigInt sum = one;
  BigInt term = one;
  long terms = 0;
  for (unsigned long j = 1; term != 0; ++j) {
    term = term * g;
    mpz_fdiv_q(term.get_mpz_t(), term.get_mpz_t(), one.get_mpz_t());
    mpz_fdiv_q_ui(term.get_mpz_t(), term.get_mpz_t(), j);
    sum += term;
    ++terms;
  }
  HPReal r(sum, w, BigInt(2 * terms + 3));
  for (int i = 0; i < kHalvings; ++i) r = r * r;
  return r;
}

HPReal euler_e(long scale) {
  BigInt one = pow10(scale);
  BigInt sum = 0;
  BigInt term = one;
  long terms = 0;
  for (unsigned long j = 1; term != 0; ++j) {
    sum += term;
    mpz_fdiv_q_ui(term.get_mpz_t(), term.get_mpz_t(), j);
    ++terms;
  }
  return HPReal(sum, scale, BigInt(terms + 1));
}

HPReal pow_int(HPReal base, unsigned long n, long scale) {
  HPReal r = HPReal::from_integer(1, scale);
  while (n > 0) {
    if (n & 1UL) r = r * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

}  // namespace

HPReal::HPReal(BigInt mantissa, long scale, BigInt error_ulps)
    : mantissa_(std::move(mantissa)), scale_(scale), error_(std::move(error_ulps)) {
  if (scale_ < 0) throw DomainError("HPReal scale must be non-negative");
  if (error_ < 0) throw DomainError("HPReal error bound must be non-negative");
}

HPReal HPReal::from_rational(const Rational& q, long scale) {
  BigInt num = q.get_num() * pow10(scale);
  BigInt m = fdiv(num, q.get_den());
  return HPReal(m, scale, divides(q.get_den(), num) ? BigInt(0) : BigInt(1));
}

HPReal HPReal::from_integer(const BigInt& z, long scale) { return HPReal(z * pow10(scale), scale, 0); }

long HPReal::digits() const {
  if (error_ == 0) return scale_;
  return scale_ - ceil_log10(error_);
}

std::optional<int> HPReal::certain_sign() const {
  if (::abs(mantissa_) > error_) return sgn(mantissa_);
  return std::nullopt;
}

HPReal HPReal::rescaled(long new_scale) const {
  if (new_scale == scale_) return *this;
  if (new_scale > scale_) {
    BigInt f = pow10(new_scale - scale_);
    return HPReal(mantissa_ * f, new_scale, error_ * f);
  }
  BigInt f = pow10(scale_ - new_scale);
  BigInt err = cdiv(error_, f);
  if (!divides(f, mantissa_)) err += 1;
  return HPReal(fdiv(mantissa_, f), new_scale, err);
}

Rational HPReal::midpoint() const { return make_rational(mantissa_, pow10(scale_)); }

Rational HPReal::magnitude_bound() const { return make_rational(::abs(mantissa_) + error_, pow10(scale_)); }

Rational HPReal::error_bound() const { return make_rational(error_, pow10(scale_)); }

HPReal HPReal::abs() const { return HPReal(::abs(mantissa_), scale_, error_); }

HPReal HPReal::operator-() const { return HPReal(-mantissa_, scale_, error_); }

HPReal operator+(const HPReal& a, const HPReal& b) {
  Aligned x = align(a, b);
  return HPReal(x.ma + x.mb, x.scale, x.ea + x.eb);
}

HPReal operator-(const HPReal& a, const HPReal& b) {
  Aligned x = align(a, b);
  return HPReal(x.ma - x.mb, x.scale, x.ea + x.eb);
}

HPReal operator*(const HPReal& a, const HPReal& b) {
  long s = std::max(a.scale(), b.scale());
  long shift = a.scale() + b.scale() - s;
  BigInt prod = a.mantissa() * b.mantissa();
  BigInt err = ::abs(a.mantissa()) * b.error_ulps() + ::abs(b.mantissa()) * a.error_ulps() +
               a.error_ulps() * b.error_ulps();
  BigInt f = pow10(shift);
  BigInt e = cdiv(err, f);
  if (!divides(f, prod)) e += 1;
  return HPReal(fdiv(prod, f), s, e);
}

HPReal operator/(const HPReal& a, const HPReal& b) {
  BigInt m2 = ::abs(b.mantissa());
  if (m2 <= b.error_ulps()) throw EvaluationError("division by a value indistinguishable from zero");
  long s = std::max(a.scale(), b.scale());
  BigInt f = pow10(b.scale() + s - a.scale());
  BigInt num = a.mantissa() * f;
  BigInt q = fdiv(num, b.mantissa());
  BigInt err_num = (a.error_ulps() * m2 + ::abs(a.mantissa()) * b.error_ulps()) * f;
  BigInt err = cdiv(err_num, m2 * (m2 - b.error_ulps()));
  if (!divides(b.mantissa(), num)) err += 1;
  return HPReal(q, s, err);
}

HPReal HPReal::widened(const BigInt& ulps) const { return HPReal(mantissa_, scale_, error_ + ::abs(ulps)); }

std::string HPReal::to_string(long n) const {
  std::string digits = BigInt(::abs(mantissa_)).get_str();
  if (static_cast<long>(digits.size()) < scale_ + 1)
    digits.insert(0, static_cast<size_t>(scale_ + 1 - static_cast<long>(digits.size())), '0');
  std::string int_part = digits.substr(0, digits.size() - static_cast<size_t>(scale_));
  std::string frac = digits.substr(digits.size() - static_cast<size_t>(scale_));
  long decimals = int_part == "0" ? n : std::max<long>(1, n - static_cast<long>(int_part.size()));
  decimals = std::min<long>(decimals, scale_);
  std::string out = mantissa_ < 0 ? "-" : "";
  out += int_part;
  if (decimals > 0) out += "." + frac.substr(0, static_cast<size_t>(decimals));
  return out;
}

std::string HPReal::to_scientific(int significant) const {
  if (mantissa_ == 0) return "0";
  std::string digits = BigInt(::abs(mantissa_)).get_str();
  long exponent = static_cast<long>(digits.size()) - 1 - scale_;
  std::string out = mantissa_ < 0 ? "-" : "";
  out += digits.substr(0, 1);
  if (significant > 1 && digits.size() > 1)
    out += "." + digits.substr(1, static_cast<size_t>(significant - 1));
  out += "e" + std::to_string(exponent);
  return out;
}

long working_scale(long digits) { return digits + 10 + (digits + 19) / 20; }

HPReal abs_diff(const HPReal& a, const HPReal& b) { return (a - b).abs(); }

bool certainly_below_pow10(const HPReal& x, long digits) {
  BigInt upper = ::abs(x.mantissa()) + x.error_ulps();
  if (digits <= x.scale()) return upper < pow10(x.scale() - digits);
  return upper == 0;
}

long correct_digits(const HPReal& abs_error, long cap) {
  BigInt upper = ::abs(abs_error.mantissa()) + abs_error.error_ulps();
  if (upper == 0) return cap;
  return std::min(cap, abs_error.scale() - ceil_log10(upper));
}

HPReal hp_sqrt(const HPReal& x) {
  const BigInt& m = x.mantissa();
  const BigInt& e = x.error_ulps();
  if (m == 0 && e == 0) return x;
  if (m - e <= 0) throw EvaluationError("square root of a value not certainly positive");
  BigInt one = pow10(x.scale());
  BigInt radicand = m * one;
  BigInt r = isqrt(radicand);
  BigInt err = (r * r == radicand) ? BigInt(0) : BigInt(1);
  if (e != 0) err += cdiv(e * one, isqrt((m - e) * one)) + 1;
  return HPReal(r, x.scale(), err);
}

HPReal hp_exp(const HPReal& x) {
  const long s = x.scale();
  if (x.error_ulps() >= pow10(s)) throw EvaluationError("exp argument too imprecise");
  Rational mid = x.midpoint();
  BigInt whole = fdiv(mid.get_num(), mid.get_den());
  Rational frac = mid - Rational(whole);
  if (!whole.fits_slong_p()) throw DomainError("exp argument out of range");
  long n = whole.get_si();
  // the absolute error of e^n grows with its magnitude
  long w = s + 12 + (n > 0 ? (n * 44) / 100 + 1 : 0);
  HPReal r = exp_fraction(frac, w);
  if (n != 0) {
    HPReal en = pow_int(euler_e(w + 5), static_cast<unsigned long>(n < 0 ? -n : n), w + 5);
    r = n > 0 ? r * en : r / en;
  }
  r = r.rescaled(s);
  if (x.error_ulps() != 0) r = r.widened(cdiv(2 * ::abs(r.mantissa()) * x.error_ulps(), pow10(s)) + 2 * x.error_ulps() + 1);
  return r;
}

HPReal hp_log(const HPReal& x) {
  const long s = x.scale();
  const BigInt& m = x.mantissa();
  const BigInt& e = x.error_ulps();
  if (m - e <= 0) throw EvaluationError("log of a value not certainly positive");
  BigInt one = pow10(s);
  // choose j with m / (10^s 2^j) in [2/3, 4/3)
  long j = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(one.get_mpz_t(), 2));
  auto reduced = [&](long shift) {
    BigInt num = m, den = one;
    if (shift >= 0) den <<= static_cast<unsigned long>(shift);
    else num <<= static_cast<unsigned long>(-shift);
    return make_rational(num, den);
  };
  Rational y = reduced(j);
  while (y >= Rational(4, 3)) y = reduced(++j);
  while (y < Rational(2, 3)) y = reduced(--j);
  Rational u = (y - 1) / (y + 1);
  long w = s + 12 + decimal_length(BigInt(j));
  auto [t, te] = atanh_fixed(u.get_num(), u.get_den(), w);
  HPReal r(2 * t, w, 2 * te);
  if (j != 0) r = r + HPReal::from_integer(j, w) * ln2_at(w + 2);
  r = r.rescaled(s);
  if (e != 0) r = r.widened(cdiv(e * one, m - e) + 1);
  return r;
}

}  // namespace cflab
