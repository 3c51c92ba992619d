#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace aquiver {

using Rational = mpq_class;

/// Parses "p/q", "p" or a terminating decimal such as "-0.25". The result is
/// canonical (lowest terms, positive denominator).
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string format_rational(const Rational& q);

/// A rational number or one of the two infinities.
class ExtReal {
 public:
  enum class Kind { neg_infinity, finite, pos_infinity };

  ExtReal() = default;
  ExtReal(const Rational& v) : kind_(Kind::finite), value_(v) {}  // NOLINT
  ExtReal(long v) : kind_(Kind::finite), value_(v) {}             // NOLINT

  static ExtReal neg_inf() { return ExtReal(Kind::neg_infinity); }
  static ExtReal pos_inf() { return ExtReal(Kind::pos_infinity); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_neg_inf() const { return kind_ == Kind::neg_infinity; }
  bool is_pos_inf() const { return kind_ == Kind::pos_infinity; }

  /// Requires is_finite().
  const Rational& value() const;

  friend bool operator==(const ExtReal& a, const ExtReal& b);
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

 private:
  explicit ExtReal(Kind k) : kind_(k) {}

  Kind kind_ = Kind::finite;
  Rational value_{0};
};

/// Accepts "-inf", "+inf", "inf" and anything parse_rational accepts.
ExtReal parse_ext_real(std::string_view text);
std::string format_ext_real(const ExtReal& x);

}  // namespace aquiver
