#include "aquiver/rational.hpp"

#include <cctype>

#include "aquiver/errors.hpp"

namespace aquiver {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw InputError("not a rational number: \"" + std::string(whole) + "\"");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), text);
    mpz_class den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    std::string digits(int_part);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    if (!frac_part.empty() && !is_integer_literal(frac_part)) {
      throw InputError("not a rational number: \"" + std::string(text) + "\"");
    }
    if (!frac_part.empty() && (frac_part.front() == '-' || frac_part.front() == '+')) {
      throw InputError("not a rational number: \"" + std::string(text) + "\"");
    }
    mpz_class whole = parse_integer(digits, text);
    mpz_class scale = 1;
    mpz_class frac = 0;
    if (!frac_part.empty()) {
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
      frac = mpz_class(std::string(frac_part), 10);
    }
    mpz_class num = abs(whole) * scale + frac;
    if (negative) num = -num;
    Rational q(num, scale);
    q.canonicalize();
    return q;
  }
  return Rational(parse_integer(s, text));
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

const Rational& ExtReal::value() const {
  if (kind_ != Kind::finite) throw InternalError("value() on an infinite ExtReal");
  return value_;
}

bool operator==(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtReal::Kind::finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.kind_ != ExtReal::Kind::finite) return std::strong_ordering::equal;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

ExtReal parse_ext_real(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "-inf" || s == "-infinity") return ExtReal::neg_inf();
  if (s == "+inf" || s == "inf" || s == "+infinity") return ExtReal::pos_inf();
  return ExtReal(parse_rational(s));
}

std::string format_ext_real(const ExtReal& x) {
  if (x.is_neg_inf()) return "-inf";
  if (x.is_pos_inf()) return "+inf";
  return format_rational(x.value());
}

}  // namespace aquiver
