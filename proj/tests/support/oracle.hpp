#pragma once

#include <stdexcept>

#include "aquiver/interval.hpp"
#include "aquiver/tamerep.hpp"

namespace aquiver::testing {

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Decomposes by searching the endomorphism algebra for an element whose
/// Fitting decomposition V = im(phi^N) + ker(phi^N) is proper, recursing
/// until every piece has a one-dimensional endomorphism algebra. Meant for
/// small representations over F_2.
BarMultiset brute_force_decompose(const TameRep& v);

}  // namespace aquiver::testing
