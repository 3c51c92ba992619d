#include "aquiver/orientation.hpp"

#include <algorithm>

#include "aquiver/errors.hpp"
#include "aquiver/interval.hpp"

namespace aquiver {

CriticalKind opposite(CriticalKind k) {
  return k == CriticalKind::sink ? CriticalKind::source : CriticalKind::sink;
}

Sense flip(Sense s) { return s == Sense::same ? Sense::reversed : Sense::same; }

Orientation::Orientation(std::vector<Critical> criticals, EmptyDirection empty_direction)
    : criticals_(std::move(criticals)), empty_direction_(empty_direction) {
  for (std::size_t i = 1; i < criticals_.size(); ++i) {
    if (criticals_[i - 1].pos >= criticals_[i].pos) {
      throw InputError("critical positions must be strictly increasing");
    }
    if (criticals_[i - 1].kind == criticals_[i].kind) {
      throw InputError("sinks and sources must alternate");
    }
  }
}

std::size_t Orientation::lower_bound(const Rational& x) const {
  auto it = std::lower_bound(criticals_.begin(), criticals_.end(), x,
                             [](const Critical& c, const Rational& v) { return c.pos < v; });
  return static_cast<std::size_t>(it - criticals_.begin());
}

std::size_t Orientation::upper_bound(const Rational& x) const {
  auto it = std::upper_bound(criticals_.begin(), criticals_.end(), x,
                             [](const Rational& v, const Critical& c) { return v < c.pos; });
  return static_cast<std::size_t>(it - criticals_.begin());
}

Sense Orientation::segment_sense(std::size_t index) const {
  if (criticals_.empty()) {
    return empty_direction_ == EmptyDirection::descending ? Sense::same : Sense::reversed;
  }
  if (index == 0) return criticals_.front().kind == CriticalKind::sink ? Sense::reversed : Sense::same;
  return criticals_[index - 1].kind == CriticalKind::sink ? Sense::same : Sense::reversed;
}

Segment Orientation::segment(std::size_t index) const {
  if (index > criticals_.size()) throw InputError("segment index out of range");
  ExtReal lo = index == 0 ? ExtReal::neg_inf() : ExtReal(criticals_[index - 1].pos);
  ExtReal hi = index == criticals_.size() ? ExtReal::pos_inf() : ExtReal(criticals_[index].pos);
  return Segment{lo, hi, segment_sense(index), index};
}

Segment Orientation::segment_index(const Rational& x) const { return segment(upper_bound(x)); }

std::vector<Segment> Orientation::segments_touching(const Rational& x) const {
  std::vector<Segment> out;
  const std::size_t lb = lower_bound(x);
  const std::size_t ub = upper_bound(x);
  if (lb != ub) out.push_back(segment(lb));
  out.push_back(segment(ub));
  return out;
}

Sense Orientation::sense_below(const Rational& x) const { return segment_sense(lower_bound(x)); }
Sense Orientation::sense_above(const Rational& x) const { return segment_sense(upper_bound(x)); }

std::optional<CriticalKind> Orientation::kind_at(const Rational& x) const {
  const std::size_t i = lower_bound(x);
  if (i < criticals_.size() && criticals_[i].pos == x) return criticals_[i].kind;
  return std::nullopt;
}

std::size_t Orientation::criticals_between(const ExtReal& lo, const ExtReal& hi) const {
  std::size_t n = 0;
  for (const auto& c : criticals_) {
    const ExtReal p(c.pos);
    if (lo < p && p < hi) ++n;
  }
  return n;
}

bool Orientation::leq(const Rational& x, const Rational& y) const {
  if (x == y) return true;
  const Rational& lo = x < y ? x : y;
  const Rational& hi = x < y ? y : x;
  if (criticals_between(ExtReal(lo), ExtReal(hi)) > 0) return false;
  return sense_above(lo) == Sense::same ? x < y : x > y;
}

bool Orientation::infinity_is_source(bool at_plus) const {
  if (at_plus) return segment_sense(criticals_.size()) == Sense::same;
  return segment_sense(0) == Sense::reversed;
}

Interval Orientation::down_set(const Rational& a) const {
  if (auto kind = kind_at(a)) {
    if (*kind == CriticalKind::sink) return Interval::point(a);
    const std::size_t k = lower_bound(a);
    const bool has_left = k > 0;
    const bool has_right = k + 1 < criticals_.size();
    return Interval(has_left ? ExtReal(criticals_[k - 1].pos) : ExtReal::neg_inf(),
                    has_right ? ExtReal(criticals_[k + 1].pos) : ExtReal::pos_inf(), has_left,
                    has_right);
  }
  const Segment seg = segment_index(a);
  if (seg.sense == Sense::same) return Interval(seg.lo, a, seg.lo.is_finite(), true);
  return Interval(a, seg.hi, true, seg.hi.is_finite());
}

Interval Orientation::up_set(const Rational& a) const { return reverse(*this).down_set(a); }

std::optional<Interval> Orientation::down_set_at_infinity(bool at_plus) const {
  if (!infinity_is_source(at_plus)) return std::nullopt;
  const Segment seg = segment(at_plus ? criticals_.size() : 0);
  return Interval(seg.lo, seg.hi, seg.lo.is_finite(), seg.hi.is_finite());
}

std::optional<Interval> Orientation::up_set_at_infinity(bool at_plus) const {
  return reverse(*this).down_set_at_infinity(at_plus);
}

bool operator==(const Orientation& a, const Orientation& b) {
  if (a.criticals_ != b.criticals_) return false;
  return !a.criticals_.empty() || a.empty_direction_ == b.empty_direction_;
}

Orientation reverse(const Orientation& o) {
  std::vector<Critical> flipped = o.criticals();
  for (auto& c : flipped) c.kind = opposite(c.kind);
  return Orientation(std::move(flipped), o.empty_direction() == EmptyDirection::descending
                                             ? EmptyDirection::ascending
                                             : EmptyDirection::descending);
}

Rational reparameterize(const Orientation& from, const Orientation& to, const Rational& x) {
  const auto& s = from.criticals();
  const auto& t = to.criticals();
  bool compatible = s.size() == t.size();
  for (std::size_t i = 0; compatible && i < s.size(); ++i) compatible = s[i].kind == t[i].kind;
  if (compatible && s.empty()) compatible = from.empty_direction() == to.empty_direction();
  if (!compatible) throw InputError("incompatible orientations");
  if (s.empty()) return x;
  if (x <= s.front().pos) return Rational(x - s.front().pos + t.front().pos);
  if (x >= s.back().pos) return Rational(x - s.back().pos + t.back().pos);
  std::size_t i = 0;
  while (!(s[i].pos <= x && x <= s[i + 1].pos)) ++i;
  return Rational(t[i].pos + (x - s[i].pos) * (t[i + 1].pos - t[i].pos) / (s[i + 1].pos - s[i].pos));
}

}  // namespace aquiver
