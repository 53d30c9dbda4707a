#pragma once

#include "cflab/const_expr.hpp"
#include "cflab/euler.hpp"
#include "cflab/polynomial.hpp"
#include "cflab/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cflab {

/// Σ_{n ≥ start} sign(n)·magnitude(n), sign(n) = (-1)^(n-1+sign_shift) for
/// alternating series and +1 otherwise.
struct Series {
  std::string name;
  long start = 1;
  bool alternating = true;
  int sign_shift = 0;
  std::function<Rational(long)> magnitude;

  /// Signed term at absolute index n.
  Rational term(long n) const;
  /// Signed term of the i-th summand, i = 0, 1, ...
  Rational nth(long i) const { return term(start + i); }
};

/// t_n = 1/∏_{j<f} (2n+2j-1), f ≥ 1 factors.
Series linear_family(long f);
/// t_n = 1/∏_{j<m} (2n+2j-1)², m ≥ 1 factors.
Series quadratic_family(long m);
/// Σ_{n ≥ 1-k} (-1)^(n-1) / ∏_{j=0}^{2k+1} (2n+2j-1)².
Series shifted_pi_series(long k);
/// t_n = 1/(r(n-1) r(n) (2n-1)²) with r from weight_polynomial(variant).
Series poly_weighted(int variant);
Series leibnitz_series();

/// r(n) for variants 1..3: 4n²+3, 16n⁴+88n²+41, 64n⁶+1168n⁴+3628n²+1323.
Polynomial weight_polynomial(int variant);

ConstExpr linear_y_closed(long f);
ConstExpr quadratic_y_closed(long m);
ConstExpr shifted_pi_sum_closed(long k);
ConstExpr weighted_sum_closed(int variant);

/// Exact sum of the first n summands (indices start..start+n-1).
Rational family_partial_sum(const Series& s, long n);
/// |S - S_n| ≤ |t_(start+n)|; valid once terms decrease in magnitude.
/// Throws DomainError for series that are not alternating.
Rational tail_bound(const Series& s, long n);

struct TelescopeReport {
  bool ok = true;
  long samples = 0;
  long first_failure = -1;  // failing sample point n
};

/// Decomposition t_n = C/(2n-1)² - (w(n-1) + w(n)), w = U/r, checked as an
/// identity of rational functions by exact evaluation at more points than
/// the cleared degree. `perturb` is added to C (for sensitivity tests).
TelescopeReport telescoping_identity_check(int variant, const Rational& perturb = 0);

/// Coefficients of the decomposition above.
struct WeightedDecomposition {
  Rational c;    // multiplies 1/(2n-1)²
  Polynomial u;  // w(n) = u(n)/r(n)
};
WeightedDecomposition weighted_decomposition(int variant);

struct MiscSum {
  std::string id;
  std::string description;
  Series series;
  ConstExpr value;
};

/// One-off identities: two alternating sums for π-3 and 10-3π, the 22/7
/// rearrangement, and two positive-term series behind Glaisher's fractions.
std::vector<MiscSum> misc_sums();

/// Alternating series available to the Euler transforms by name:
/// leibnitz, pi8, threefactor, twofactor, harmonic_pairs, catalan.
std::optional<AltSeries> named_alt_series(const std::string& id);
std::vector<std::string> named_alt_series_ids();

}  // namespace cflab
