#include "cflab/cf.hpp"

#include "cflab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace cflab {

namespace {

long mod(long a, long p) { return ((a % p) + p) % p; }

long bit_length(const BigInt& x) { return x == 0 ? 0 : static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)); }

void split(const Rational& q, BigInt& num, BigInt& den) {
  num = q.get_num();
  den = q.get_den();
}

}  // namespace

// ---------------------------------------------------------------- CoeffRule

CoeffRule::CoeffRule(Polynomial p, long start) : branches_{Branch{std::move(p), Polynomial(1)}}, start_(start) {
  prepare();
}

CoeffRule::CoeffRule(std::vector<Branch> branches, long start) : branches_(std::move(branches)), start_(start) {
  if (branches_.empty()) throw DomainError("a coefficient rule needs at least one branch");
  for (const Branch& b : branches_)
    if (b.den.is_zero()) throw DomainError("coefficient rule with zero denominator polynomial");
  prepare();
}

void CoeffRule::prepare() {
  ints_.clear();
  for (const Branch& b : branches_) ints_.push_back({b.num.integer_form(), b.den.integer_form()});
}

size_t CoeffRule::branch_index(long n) const { return static_cast<size_t>(mod(n - start_, period())); }

Rational CoeffRule::operator()(long n) const {
  const Branch& b = branches_[branch_index(n)];
  Rational d = b.den(n);
  if (d == 0) throw DomainError("coefficient rule denominator vanishes at n = " + std::to_string(n));
  return b.num(n) / d;
}

void CoeffRule::integer_value(long n, BigInt& num, BigInt& den) const {
  const IntBranch& b = ints_[branch_index(n)];
  num = b.num.eval(n) * b.den.den;
  den = b.den.eval(n) * b.num.den;
  if (den == 0) throw DomainError("coefficient rule denominator vanishes at n = " + std::to_string(n));
}

CoeffRule CoeffRule::restarted(long new_start) const {
  std::vector<Branch> out;
  for (long j = 0; j < period(); ++j) out.push_back(branches_[branch_index(new_start + j)]);
  return CoeffRule(std::move(out), new_start);
}

CoeffRule CoeffRule::shifted(long k) const {
  std::vector<Branch> out;
  for (const Branch& b : branches_) out.push_back({b.num.shifted(k), b.den.shifted(k)});
  return CoeffRule(std::move(out), start_ - k);
}

template <class Op>
CoeffRule combine(const CoeffRule& a, const CoeffRule& b, Op op) {
  long start = std::max(a.start_index(), b.start_index());
  long period = std::lcm(a.period(), b.period());
  std::vector<Branch> out;
  for (long j = 0; j < period; ++j)
    out.push_back(op(a.branches()[a.branch_index(start + j)], b.branches()[b.branch_index(start + j)]));
  return CoeffRule(std::move(out), start);
}

CoeffRule operator*(const CoeffRule& a, const CoeffRule& b) {
  return combine(a, b, [](const Branch& x, const Branch& y) { return Branch{x.num * y.num, x.den * y.den}; });
}

CoeffRule operator+(const CoeffRule& a, const CoeffRule& b) {
  return combine(a, b, [](const Branch& x, const Branch& y) {
    if (x.den == y.den) return Branch{x.num + y.num, x.den};
    return Branch{x.num * y.den + y.num * x.den, x.den * y.den};
  });
}

CoeffRule operator-(const CoeffRule& a, const CoeffRule& b) { return a + b * CoeffRule(Polynomial(-1), b.start_index()); }

void CoeffRule::check_denominators(long from) const {
  for (long j = 0; j < period(); ++j) {
    long first = from + mod(start_ + j - from, period());
    if (branches_[static_cast<size_t>(j)].den.vanishes_on_progression(first, period()))
      throw DomainError("coefficient rule denominator vanishes on branch " + std::to_string(j));
  }
}

bool CoeffRule::has_zero_from(long from) const {
  for (long j = 0; j < period(); ++j) {
    long first = from + mod(start_ + j - from, period());
    if (branches_[static_cast<size_t>(j)].num.vanishes_on_progression(first, period())) return true;
  }
  return false;
}

// ---------------------------------------------------------------- CFSpec

CFSpec CFSpec::constant(const Rational& b0) {
  CFSpec cf;
  cf.b0 = b0;
  return cf;
}

std::optional<std::pair<Rational, Rational>> CFSpec::term(long n) const {
  if (n < 1) throw DomainError("continued fraction terms start at n = 1");
  if (n <= static_cast<long>(head.size())) return head[static_cast<size_t>(n - 1)];
  if (!a_rule) return std::nullopt;
  return std::make_pair((*a_rule)(n), (*b_rule)(n));
}

void CFSpec::validate() const {
  if (a_rule.has_value() != b_rule.has_value())
    throw DomainError("continued fraction needs both an a-rule and a b-rule, or neither");
  if (a_rule) {
    long from = static_cast<long>(head.size()) + 1;
    a_rule->check_denominators(from);
    b_rule->check_denominators(from);
  }
}

// ---------------------------------------------------------------- convergents

std::vector<Convergent> convergents(const CFSpec& cf, long N) {
  if (N < 0) throw DomainError("N must be non-negative");
  // Integer state scaled by a common factor: (p_n, p_(n-1)), (q_n, q_(n-1)).
  BigInt p1, p2, q1, q2 = 0;
  split(cf.b0, p1, q1);
  p2 = q1;
  std::vector<Convergent> out;
  out.push_back({0, cf.b0.get_num(), cf.b0.get_den()});
  BigInt A, B, C, D, g;
  for (long n = 1; n <= N; ++n) {
    auto t = cf.term(n);
    if (!t || t->first == 0) break;
    split(t->first, A, B);
    split(t->second, C, D);
    BigInt cb = C * B, ad = A * D, bd = B * D;
    BigInt p = cb * p1 + ad * p2;
    BigInt q = cb * q1 + ad * q2;
    p2 = bd * p1;
    q2 = bd * q1;
    p1 = std::move(p);
    q1 = std::move(q);
    if (q1 == 0) throw BreakdownError(n);
    mpz_gcd(g.get_mpz_t(), p1.get_mpz_t(), p2.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q1.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q2.get_mpz_t());
    if (g > 1) {
      mpz_divexact(p1.get_mpz_t(), p1.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(p2.get_mpz_t(), p2.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(q1.get_mpz_t(), q1.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(q2.get_mpz_t(), q2.get_mpz_t(), g.get_mpz_t());
    }
    Rational c = make_rational(p1, q1);
    out.push_back({n, c.get_num(), c.get_den()});
  }
  return out;
}

std::vector<RawConvergent> raw_convergents(const CFSpec& cf, long N) {
  if (N < 0) throw DomainError("N must be non-negative");
  Rational p2 = 1, q2 = 0, p1 = cf.b0, q1 = 1;
  std::vector<RawConvergent> out{{0, p1, q1}};
  for (long n = 1; n <= N; ++n) {
    auto t = cf.term(n);
    if (!t || t->first == 0) break;
    Rational p = t->second * p1 + t->first * p2;
    Rational q = t->second * q1 + t->first * q2;
    p2 = p1;
    q2 = q1;
    p1 = p;
    q1 = q;
    if (q1 == 0) throw BreakdownError(n);
    out.push_back({n, p1, q1});
  }
  return out;
}

// ---------------------------------------------------------------- fixed precision

ConvergentStream::ConvergentStream(const CFSpec& cf, long scale)
    : cf_(cf), scale_(scale), bits_(scale * 10 / 3 + 96) {
  split(cf.b0, p1_, q1_);
  p2_ = q1_;
  q2_ = 0;
}

bool ConvergentStream::advance() {
  if (ended_) return false;
  long n = n_ + 1;
  const long head = static_cast<long>(cf_.head.size());
  if (n <= head) {
    split(cf_.head[static_cast<size_t>(n - 1)].first, a_, ad_);
    split(cf_.head[static_cast<size_t>(n - 1)].second, b_, bd_);
  } else if (cf_.a_rule) {
    cf_.a_rule->integer_value(n, a_, ad_);
    cf_.b_rule->integer_value(n, b_, bd_);
  } else {
    ended_ = true;
    return false;
  }
  if (a_ == 0) {
    ended_ = true;
    return false;
  }
  if (n > head && (sgn(a_) * sgn(ad_) <= 0 || sgn(b_) * sgn(bd_) <= 0)) positive_tail_ = false;

  // scale level n by (den a)(den b): p_n = b·den_a·p1 + a·den_b·p2
  b_ *= ad_;
  a_ *= bd_;
  ad_ *= bd_;
  t_ = b_ * p1_ + a_ * p2_;
  p2_ = ad_ * p1_;
  p1_.swap(t_);
  t_ = b_ * q1_ + a_ * q2_;
  q2_ = ad_ * q1_;
  q1_.swap(t_);

  long top = std::max({bit_length(p1_), bit_length(p2_), bit_length(q1_), bit_length(q2_)});
  if (top > bits_ + 64) {
    auto shift = static_cast<mp_bitcnt_t>(top - bits_);
    mpz_tdiv_q_2exp(p1_.get_mpz_t(), p1_.get_mpz_t(), shift);
    mpz_tdiv_q_2exp(p2_.get_mpz_t(), p2_.get_mpz_t(), shift);
    mpz_tdiv_q_2exp(q1_.get_mpz_t(), q1_.get_mpz_t(), shift);
    mpz_tdiv_q_2exp(q2_.get_mpz_t(), q2_.get_mpz_t(), shift);
    truncated_ = true;
  }
  n_ = n;
  return true;
}

HPReal ConvergentStream::value() const {
  if (q1_ == 0) throw BreakdownError(n_);
  BigInt num = p1_ * pow10(scale_);
  BigInt m, r;
  mpz_fdiv_qr(m.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), q1_.get_mpz_t());
  // relative truncation error is below 2^-(bits-64) per step; 4 ulps covers it
  BigInt err = (r == 0 ? 0 : 1) + (truncated_ ? 4 : 0);
  return HPReal(m, scale_, err);
}

CFEvaluation eval_cf(const CFSpec& cf, long digits, long max_terms) {
  if (digits < 1) throw DomainError("digits must be positive");
  if (max_terms < 1) throw DomainError("max_terms must be positive");
  const long scale = digits + 10;
  const long head = static_cast<long>(cf.head.size());
  ConvergentStream stream(cf, scale);
  HPReal prev = stream.value();
  HPReal prev_delta = HPReal::from_integer(1, scale);
  HPReal delta = HPReal::from_integer(0, scale);
  while (stream.advance()) {
    HPReal c = stream.value();
    delta = abs_diff(c, prev);
    const long n = stream.index();
    bool bracketed = stream.positive_tail() && n >= head + 2;
    bool done = bracketed ? certainly_below_pow10(delta + delta, digits)
                          : certainly_below_pow10(delta, digits + 2) && certainly_below_pow10(prev_delta, digits);
    if (done && bracketed) {
      // the limit lies between c_(n-1) and c_n: report the midpoint and half the width
      BigInt sum = c.mantissa() + prev.mantissa();
      BigInt mid;
      mpz_fdiv_q_2exp(mid.get_mpz_t(), sum.get_mpz_t(), 1);
      BigInt half;
      BigInt gap = abs(c.mantissa() - prev.mantissa());
      mpz_cdiv_q_2exp(half.get_mpz_t(), gap.get_mpz_t(), 1);
      BigInt err = half + std::max(c.error_ulps(), prev.error_ulps()) + 1;
      return {HPReal(mid, scale, err), n, true, false, delta};
    }
    if (done) return {c.widened(delta.mantissa() + delta.error_ulps()), n, false, false, delta};
    if (n >= max_terms) throw ConvergenceError(n, c.to_string(digits), delta.to_scientific());
    prev = std::move(c);
    prev_delta = delta;
  }
  return {prev, stream.index(), true, true, delta};
}

// ---------------------------------------------------------------- transforms

CFSpec equivalence_transform(const CFSpec& cf, const CoeffRule& r) {
  CFSpec out;
  out.b0 = cf.b0;
  long h = static_cast<long>(cf.head.size());
  if (cf.a_rule) h = std::max(h, 1L);
  Rational r_prev = 1;
  for (long n = 1; n <= h; ++n) {
    auto t = cf.term(n);
    if (!t) break;
    Rational rn = r(n);
    if (rn == 0) throw DomainError("equivalence factor r(" + std::to_string(n) + ") is zero");
    out.head.emplace_back(rn * r_prev * t->first, rn * t->second);
    r_prev = rn;
  }
  if (cf.a_rule) {
    const long start = h + 1;
    if (r.has_zero_from(start - 1)) throw DomainError("equivalence factor r(n) vanishes");
    CoeffRule rr = r * r.shifted(-1);
    out.a_rule = (rr * *cf.a_rule).restarted(start);
    out.b_rule = (r * *cf.b_rule).restarted(start);
  }
  return out;
}

BracketResult bracket_check(const CFSpec& cf, long N) {
  if (N < 1) throw DomainError("N must be positive");
  std::vector<Convergent> cs = convergents(cf, N);
  for (size_t n = 2; n < cs.size(); ++n) {
    Rational c = cs[n].value(), c1 = cs[n - 1].value(), c2 = cs[n - 2].value();
    if (sgn(c - c2) * sgn(c1 - c) <= 0) return {false, static_cast<long>(n)};
  }
  return {true, -1};
}

}  // namespace cflab
