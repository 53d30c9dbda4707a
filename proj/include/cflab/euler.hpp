#pragma once

#include "cflab/cf.hpp"
#include "cflab/rational.hpp"

#include <optional>
#include <string>

namespace cflab {

/// s = t_1 - t_2 + t_3 - ..., with t_k built from rule(start + k - 1):
///   reciprocal: t_k = 1/α_k
///   biproduct:  t_k = 1/(c_k c_(k+1))
///   general:    t_k given directly
/// An optional length makes the series finite.
struct AltSeries {
  enum class Kind { Reciprocal, Biproduct, General };
  Kind kind = Kind::General;
  CoeffRule rule;
  long start = 1;
  std::optional<long> length;

  /// Sequence value α_k / c_k / t_k for k ≥ 1.
  Rational element(long k) const { return rule(start + k - 1); }
  Rational term(long k) const;
  bool has_term(long k) const { return !length || k <= *length; }
};

std::string to_string(AltSeries::Kind kind);

/// Exact Σ_{k=1}^n (-1)^(k-1) t_k (a finite series stops at its length).
Rational partial_sum(const AltSeries& s, long n);

/// 1/s = α_1 + α_1²/(α_2 - α_1 + α_2²/(α_3 - α_2 + ...)).
/// Throws DomainError for other kinds or a vanishing α.
CFSpec theorem1_transform(const AltSeries& s);

/// 1/(c_1 s) = c_2 + c_1c_2/(c_3 - c_1 + c_2c_3/(c_4 - c_2 + ...)).
CFSpec theorem2_transform(const AltSeries& s);

struct IdentityReport {
  bool ok = true;
  long checked = 0;
  long first_failure = -1;  // n where c_(n-1) differs from the partial-sum form
  std::string relation;     // e.g. "c_(n-1) = 1/s_n"
};

/// Compares c_(n-1) of cf with 1/s_n (reciprocal) or 1/(c_1 s_n) (biproduct)
/// exactly, for n = 1..N.
IdentityReport check_partial_sum_identity(const AltSeries& s, const CFSpec& cf, long N);

}  // namespace cflab
