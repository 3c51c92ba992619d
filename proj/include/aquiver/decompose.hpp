#pragma once

#include "aquiver/interval.hpp"
#include "aquiver/tamerep.hpp"

namespace aquiver {

/// The interval decomposition of v. Bars are exact and canonically ordered.
BarMultiset decompose(const TameRep& v);

std::size_t multiplicity(const TameRep& v, const Interval& i);

/// Throws InputError when the orientations differ.
bool iso(const TameRep& a, const TameRep& b);

/// Decides via the decomposition and checks the answer against the direct
/// criterion (dims at most one, connected support, nonzero maps inside it).
bool is_indecomposable(const TameRep& v);

/// The direct criterion alone.
bool looks_like_interval_module(const TameRep& v);

}  // namespace aquiver
