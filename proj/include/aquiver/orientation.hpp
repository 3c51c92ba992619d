#pragma once

#include <optional>
#include <vector>

#include "aquiver/rational.hpp"

namespace aquiver {

class Interval;

enum class CriticalKind { sink, source };

CriticalKind opposite(CriticalKind k);

struct Critical {
  Rational pos;
  CriticalKind kind;

  friend bool operator==(const Critical&, const Critical&) = default;
};

/// How the orientation order relates to the usual order on a segment. On a
/// `same` segment x <= y implies x ⪯ y; on a `reversed` one it implies y ⪯ x.
enum class Sense { same, reversed };

Sense flip(Sense s);

/// Which of the two orders is used when there are no sinks or sources.
/// `descending` makes ⪯ coincide with <=.
enum class EmptyDirection { descending, ascending };

/// A maximal closed piece of the line between consecutive sinks/sources
/// (or infinities), together with the direction of ⪯ on it.
struct Segment {
  ExtReal lo;
  ExtReal hi;
  Sense sense;
  std::size_t index;  // 0 .. criticals().size()

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// A continuous type-A quiver with finitely many sinks and sources.
///
/// Sinks and sources alternate along the line. A sink is ⪯-minimal among its
/// neighbours and a source ⪯-maximal; between two consecutive critical
/// points the order does not change. The two unbounded end segments take the
/// direction forced by the nearest critical point. Infinities behave like
/// virtual sinks or sources in the same way, which is what
/// `infinity_is_source` reports.
class Orientation {
 public:
  /// Straight descending orientation: no critical points, ⪯ equals <=.
  Orientation() = default;

  /// Throws InputError unless positions strictly increase and kinds alternate.
  explicit Orientation(std::vector<Critical> criticals,
                       EmptyDirection empty_direction = EmptyDirection::descending);

  static Orientation descending() { return Orientation(); }
  static Orientation ascending() { return Orientation({}, EmptyDirection::ascending); }

  const std::vector<Critical>& criticals() const { return criticals_; }
  EmptyDirection empty_direction() const { return empty_direction_; }

  /// x ⪯ y.
  bool leq(const Rational& x, const Rational& y) const;

  /// The segment containing x; a critical point reports the segment to its
  /// right. `segments_touching` returns both for critical points.
  Segment segment_index(const Rational& x) const;
  std::vector<Segment> segments_touching(const Rational& x) const;
  Segment segment(std::size_t index) const;
  std::size_t segment_count() const { return criticals_.size() + 1; }

  /// Direction of ⪯ on the segment immediately below / above x.
  Sense sense_below(const Rational& x) const;
  Sense sense_above(const Rational& x) const;

  std::optional<CriticalKind> kind_at(const Rational& x) const;
  bool is_critical(const Rational& x) const { return kind_at(x).has_value(); }

  /// Whether -inf (at_plus = false) or +inf acts as a virtual source, i.e. the
  /// unbounded end segment grows in ⪯ towards that infinity.
  bool infinity_is_source(bool at_plus) const;

  /// {x : x ⪯ a} and {x : a ⪯ x}.
  Interval down_set(const Rational& a) const;
  Interval up_set(const Rational& a) const;

  /// The down-set of a virtual source at infinity (the whole unbounded end
  /// segment), or nothing when that infinity is a virtual sink.
  std::optional<Interval> down_set_at_infinity(bool at_plus) const;
  std::optional<Interval> up_set_at_infinity(bool at_plus) const;

  /// Number of critical points strictly between lo and hi.
  std::size_t criticals_between(const ExtReal& lo, const ExtReal& hi) const;

  friend bool operator==(const Orientation& a, const Orientation& b);

 private:
  Sense segment_sense(std::size_t index) const;
  // Index of the first critical with pos >= x (or > x when strict).
  std::size_t lower_bound(const Rational& x) const;
  std::size_t upper_bound(const Rational& x) const;

  std::vector<Critical> criticals_;
  EmptyDirection empty_direction_ = EmptyDirection::descending;
};

/// Same positions, sinks and sources swapped: the opposite quiver.
Orientation reverse(const Orientation& o);

/// The piecewise-linear bijection sending the i-th critical point of `from`
/// to the i-th critical point of `to`, affine between them and a translation
/// on the unbounded ends. Throws InputError("incompatible orientations")
/// unless both have the same kind sequence.
Rational reparameterize(const Orientation& from, const Orientation& to, const Rational& x);

}  // namespace aquiver
