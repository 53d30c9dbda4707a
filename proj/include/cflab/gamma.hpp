#pragma once

#include "cflab/hpreal.hpp"
#include "cflab/rational.hpp"

namespace cflab {

/// Γ(x) for rational x > 0 with at least `digits` correct decimals, using
/// Spouge's approximation with its explicit relative error bound. Integers
/// are returned exactly. Throws DomainError for x <= 0.
HPReal gamma_hp(const Rational& x, long digits);

}  // namespace cflab
