#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "aquiver/rational.hpp"

namespace aquiver {

/// A nonempty interval of the real line with rational or infinite endpoints.
/// Infinite endpoints are always open; a degenerate interval is a closed
/// point.
class Interval {
 public:
  /// Throws InputError if the data does not describe a nonempty interval.
  Interval(ExtReal lo, ExtReal hi, bool lo_closed, bool hi_closed);

  static Interval point(const Rational& a);
  static Interval closed(const Rational& a, const Rational& b);
  static Interval open(ExtReal a, ExtReal b);
  static Interval closed_open(const Rational& a, ExtReal b);
  static Interval open_closed(ExtReal a, const Rational& b);
  static Interval whole_line();

  /// Nothing if the four fields would describe an empty set.
  static std::optional<Interval> make(ExtReal lo, ExtReal hi, bool lo_closed, bool hi_closed);

  /// Reads "[0,1)", "(-inf,2]", "{1/2}" or "[a,a]".
  static Interval parse(std::string_view text);

  const ExtReal& lo() const { return lo_; }
  const ExtReal& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }
  bool is_point() const { return lo_ == hi_; }
  bool is_bounded() const { return lo_.is_finite() && hi_.is_finite(); }

  bool contains(const Rational& x) const;
  bool contains(const Interval& other) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  ExtReal lo_;
  ExtReal hi_;
  bool lo_closed_;
  bool hi_closed_;
};

std::string format_interval(const Interval& i);

std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Some point of the interval: the midpoint when bounded, otherwise one unit
/// inside the finite end (zero for the whole line).
Rational sample_point(const Interval& i);

/// Two interval modules are isomorphic exactly when their supports agree.
bool same_support_iso(const Interval& a, const Interval& b);

/// Canonical bar order: lo ascending with closed before open, then hi
/// ascending with open before closed.
struct CanonicalOrder {
  bool operator()(const Interval& a, const Interval& b) const;
};

/// A finite multiset of intervals kept in canonical order.
class BarMultiset {
 public:
  using Map = std::map<Interval, std::size_t, CanonicalOrder>;

  BarMultiset() = default;

  /// Adds `mult` copies; zero is a no-op.
  void add(const Interval& i, std::size_t mult = 1);
  void add(const BarMultiset& other);

  std::size_t multiplicity(const Interval& i) const;
  /// Sum of all multiplicities.
  std::size_t total() const;
  bool empty() const { return bars_.empty(); }
  std::size_t distinct() const { return bars_.size(); }

  const Map& bars() const { return bars_; }
  Map::const_iterator begin() const { return bars_.begin(); }
  Map::const_iterator end() const { return bars_.end(); }

  friend bool operator==(const BarMultiset&, const BarMultiset&) = default;

 private:
  Map bars_;
};

std::string format_bars(const BarMultiset& bars);

}  // namespace aquiver
