#pragma once

#include <doctest.h>

#include "aquiver/decompose.hpp"
#include "aquiver/homological.hpp"
#include "random.hpp"

namespace aquiver::testing {

inline Rational q(const char* s) { return parse_rational(s); }
inline Rational ratio(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}
inline Interval iv(const char* s) { return Interval::parse(s); }

inline Orientation sink0_source1() {
  return Orientation({{Rational(0), CriticalKind::sink}, {Rational(1), CriticalKind::source}});
}

inline BarMultiset bars(std::initializer_list<const char*> list) {
  BarMultiset b;
  for (const char* s : list) b.add(Interval::parse(s));
  return b;
}

inline TameRep module(const Orientation& o, const char* interval, Field f = Field::rationals()) {
  return from_bars(o, bars({interval}), f);
}

}  // namespace aquiver::testing
