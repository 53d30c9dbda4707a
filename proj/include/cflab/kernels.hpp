#pragma once

#include "cflab/rational.hpp"

#include <functional>

namespace cflab::kernels {

/// Signed term t(i) for i in [0, count).
using TermFn = std::function<Rational(long)>;

/// Σ_{i<count} t(i) as a left fold over canonical rationals (reference).
Rational exact_sum_fold(const TermFn& t, long count);

/// Same sum by binary splitting (unreduced p/q merged pairwise, one final
/// reduction).
Rational exact_sum_split(const TermFn& t, long count);

/// Binary splitting over chunks evaluated by OpenMP threads. `t` must be
/// safe to call concurrently.
Rational exact_sum_parallel(const TermFn& t, long count);

/// Σ floor(t(i)·10^scale) with t(i) ≥ 0 or signed; error ≤ count ulps.
BigInt fixed_sum_serial(const TermFn& t, long count, long scale);
BigInt fixed_sum_parallel(const TermFn& t, long count, long scale);

/// Number of OpenMP threads the parallel kernels will use.
int thread_count();

}  // namespace cflab::kernels
