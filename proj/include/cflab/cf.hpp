#pragma once

#include "cflab/hpreal.hpp"
#include "cflab/polynomial.hpp"
#include "cflab/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cflab {

/// One residue class of a periodic rule: value num(n)/den(n).
struct Branch {
  Polynomial num;
  Polynomial den = Polynomial(1);
};

/// Periodic rational-function rule. rule(n) uses branch (n - start) mod period.
class CoeffRule {
 public:
  CoeffRule() : CoeffRule(Polynomial()) {}
  CoeffRule(Polynomial p, long start = 1);
  CoeffRule(std::vector<Branch> branches, long start);

  long period() const { return static_cast<long>(branches_.size()); }
  long start_index() const { return start_; }
  const std::vector<Branch>& branches() const { return branches_; }
  size_t branch_index(long n) const;

  Rational operator()(long n) const;
  /// Unreduced integers with rule(n) = num/den, used by the evaluation kernel.
  void integer_value(long n, BigInt& num, BigInt& den) const;

  /// Same values for n ≥ new_start, rewritten with branches starting there.
  CoeffRule restarted(long new_start) const;
  /// n ↦ rule(n + k)
  CoeffRule shifted(long k) const;
  /// Pointwise product over n ≥ start (the larger of the two starts).
  friend CoeffRule operator*(const CoeffRule& a, const CoeffRule& b);
  friend CoeffRule operator+(const CoeffRule& a, const CoeffRule& b);
  friend CoeffRule operator-(const CoeffRule& a, const CoeffRule& b);

  /// Throws DomainError if a denominator vanishes at some n ≥ from.
  void check_denominators(long from) const;
  /// True if the rule value vanishes at some n ≥ from.
  bool has_zero_from(long from) const;

 private:
  std::vector<Branch> branches_;
  long start_;
  struct IntBranch {
    Polynomial::IntegerForm num, den;
  };
  std::vector<IntBranch> ints_;
  void prepare();
};

/// b0 + a1/(b1 + a2/(b2 + ...)). The explicit head supplies (a_n, b_n) for
/// n = 1..head.size(); the rules supply every later index. Without rules the
/// fraction is finite. A partial numerator equal to zero ends the fraction.
struct CFSpec {
  Rational b0 = 0;
  std::vector<std::pair<Rational, Rational>> head;
  std::optional<CoeffRule> a_rule;
  std::optional<CoeffRule> b_rule;

  static CFSpec constant(const Rational& b0);
  bool is_finite() const { return !a_rule.has_value(); }
  /// (a_n, b_n) for n ≥ 1, or nullopt past the end of a finite fraction.
  std::optional<std::pair<Rational, Rational>> term(long n) const;
  /// Checks rules come in pairs and denominators never vanish.
  void validate() const;
};

/// Reduced convergent c_n = p/q with q > 0.
struct Convergent {
  long index = 0;
  BigInt p;
  BigInt q;
  Rational value() const { return make_rational(p, q); }
};

/// Raw recurrence values (no reduction), as used by the determinant identity.
struct RawConvergent {
  long index = 0;
  Rational p;
  Rational q;
};

/// c_0..c_N (fewer if the fraction ends). Throws BreakdownError if q_n = 0.
std::vector<Convergent> convergents(const CFSpec& cf, long N);
std::vector<RawConvergent> raw_convergents(const CFSpec& cf, long N);

struct CFEvaluation {
  HPReal value;          // c_n at the stopping index
  long terms_used = 0;   // n
  bool certified = false;  // limit bracketed by c_(n-1), c_n
  bool exact = false;    // the fraction ended, value is exact
  HPReal last_delta;     // |c_n - c_(n-1)|
};

/// Evaluates convergents in fixed precision until the stopping rule holds.
/// Heuristic stop: |c_n - c_(n-1)| < 10^-(digits+2) and |c_(n-1) - c_(n-2)| <
/// 10^-digits. Under bracketing (a_n, b_n > 0 past the head) the stop is
/// |c_n - c_(n-1)| < 10^-digits / 2; the value is then the midpoint of c_(n-1)
/// and c_n with half their distance as error bound.
/// Throws ConvergenceError after max_terms.
CFEvaluation eval_cf(const CFSpec& cf, long digits, long max_terms);

/// Streaming fixed-precision convergents; shared by eval_cf and profiling.
class ConvergentStream {
 public:
  ConvergentStream(const CFSpec& cf, long scale);
  /// Advances to the next index. Returns false when the fraction has ended.
  bool advance();
  long index() const { return n_; }
  /// c_n at the stream's scale with a small rounding bound.
  HPReal value() const;
  /// True while every (a_n, b_n) past the head has been positive.
  bool positive_tail() const { return positive_tail_; }

 private:
  const CFSpec& cf_;
  long scale_;
  long bits_;
  long n_ = 0;
  bool ended_ = false;
  bool positive_tail_ = true;
  bool truncated_ = false;
  BigInt p1_, p2_, q1_, q2_;  // (p_n, p_(n-1)), (q_n, q_(n-1)), common scaling
  BigInt a_, ad_, b_, bd_, t_;
};

/// a'_n = r_n r_(n-1) a_n, b'_n = r_n b_n with r_0 = 1. Throws DomainError if
/// r vanishes.
CFSpec equivalence_transform(const CFSpec& cf, const CoeffRule& r);

struct BracketResult {
  bool ok = true;
  long first_violation = -1;
};

/// Checks c_n lies strictly between c_(n-2) and c_(n-1) for 2 ≤ n ≤ N.
BracketResult bracket_check(const CFSpec& cf, long N);

}  // namespace cflab
