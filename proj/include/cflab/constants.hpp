#pragma once

#include "cflab/hpreal.hpp"
#include "cflab/rational.hpp"

#include <functional>

namespace cflab {

/// Largest digit count accepted by the *_reference functions (default 1000).
long max_reference_digits();
void set_max_reference_digits(long digits);

/// Reference constants with at least `digits` correct decimals, memoized.
/// π and G are computed by two independent methods and compared; a
/// disagreement throws OracleMismatch. Throws DomainError for digits < 1 and
/// ConfigError above the configured maximum.
HPReal pi_reference(long digits);
HPReal catalan_reference(long digits);
HPReal sqrt3_reference(long digits);
HPReal ln2_reference(long digits);

/// Same constants at an explicit decimal scale with no digit limit. Values
/// come from a per-bucket cache, so results are independent of call order.
HPReal pi_at_scale(long scale);
HPReal catalan_at_scale(long scale);
HPReal sqrt3_at_scale(long scale);

// Individual methods at a given decimal scale.
HPReal pi_machin(long scale);      // 16 atan(1/5) - 4 atan(1/239)
HPReal pi_hutton(long scale);      // 8 atan(1/3) + 4 atan(1/7)
HPReal catalan_cvz(long scale);    // accelerated Σ (-1)^k/(2k+1)^2
HPReal catalan_ramanujan(long scale);  // π/8·ln(2+√3) + 3/8 Σ (n!)^2/((2n)!(2n+1)^2)
HPReal sqrt3_newton(long scale);

/// Outcome of comparing two independent evaluations.
struct CrossCheck {
  HPReal first;
  HPReal second;
  long agreed_digits = 0;  // guaranteed digits shared by both
  bool consistent = false;  // intervals overlap
};

CrossCheck cross_check_pi(long digits);
CrossCheck cross_check_catalan(long digits);

/// Σ_{k≥0} (-1)^k a_k for a totally monotone sequence a_k (moments of a
/// positive measure, e.g. 1/(k+c) or 1/((k+c)(k+d))), accelerated with the
/// Cohen–Villegas–Zagier Chebyshev weights. Result carries a rigorous bound.
HPReal accelerated_alternating_sum(const std::function<Rational(long)>& a, long scale);

}  // namespace cflab
