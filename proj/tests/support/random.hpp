#pragma once

#include <random>

#include "aquiver/homological.hpp"
#include "aquiver/interval.hpp"
#include "aquiver/orientation.hpp"
#include "aquiver/tamerep.hpp"

namespace aquiver::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Up to `max_criticals` sinks/sources at distinct half-integers in [-2, 3].
Orientation random_orientation(Rng& rng, int max_criticals = 4);

/// Endpoints drawn from {-2, ..., 3} and the infinities.
Interval random_interval(Rng& rng);

/// Endpoints drawn from the given points and the infinities.
Interval random_interval(Rng& rng, const std::vector<Rational>& points);

BarMultiset random_bars(Rng& rng, int max_bars = 8, int max_mult = 3);

/// A random interval inside [lo, hi] for a bounded pair of rationals.
Interval random_subinterval(Rng& rng, const Interval& window);

/// A random indecomposable projective label for o positioned in [-3, 4].
ProjectiveLabel random_projective(Rng& rng, const Orientation& o);

}  // namespace aquiver::testing
