#include "aquiver/interval.hpp"

#include <sstream>

#include "aquiver/errors.hpp"

namespace aquiver {

Interval::Interval(ExtReal lo, ExtReal hi, bool lo_closed, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed) {
  if (lo_.is_pos_inf() || hi_.is_neg_inf()) throw InputError("interval endpoint on the wrong infinity");
  if (!lo_.is_finite() && lo_closed_) throw InputError("an infinite endpoint cannot be closed");
  if (!hi_.is_finite() && hi_closed_) throw InputError("an infinite endpoint cannot be closed");
  if (lo_ > hi_) throw InputError("interval with lo > hi");
  if (lo_ == hi_ && !(lo_closed_ && hi_closed_)) throw InputError("empty interval");
}

Interval Interval::point(const Rational& a) { return {a, a, true, true}; }
Interval Interval::closed(const Rational& a, const Rational& b) { return {a, b, true, true}; }
Interval Interval::open(ExtReal a, ExtReal b) { return {std::move(a), std::move(b), false, false}; }
Interval Interval::closed_open(const Rational& a, ExtReal b) { return {a, std::move(b), true, false}; }
Interval Interval::open_closed(ExtReal a, const Rational& b) { return {std::move(a), b, false, true}; }
Interval Interval::whole_line() { return open(ExtReal::neg_inf(), ExtReal::pos_inf()); }

std::optional<Interval> Interval::make(ExtReal lo, ExtReal hi, bool lo_closed, bool hi_closed) {
  if (lo > hi) return std::nullopt;
  if (lo == hi && !(lo_closed && hi_closed && lo.is_finite())) return std::nullopt;
  if (!lo.is_finite()) lo_closed = false;
  if (!hi.is_finite()) hi_closed = false;
  return Interval(std::move(lo), std::move(hi), lo_closed, hi_closed);
}

Interval Interval::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s += c;
  }
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
    return point(parse_rational(s.substr(1, s.size() - 2)));
  }
  if (s.size() < 5) throw InputError("cannot parse interval \"" + std::string(text) + "\"");
  const char open_c = s.front();
  const char close_c = s.back();
  if ((open_c != '[' && open_c != '(') || (close_c != ']' && close_c != ')')) {
    throw InputError("cannot parse interval \"" + std::string(text) + "\"");
  }
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw InputError("cannot parse interval \"" + std::string(text) + "\"");
  ExtReal lo = parse_ext_real(s.substr(1, comma - 1));
  ExtReal hi = parse_ext_real(s.substr(comma + 1, s.size() - comma - 2));
  return Interval(lo, hi, open_c == '[', close_c == ']');
}

bool Interval::contains(const Rational& x) const {
  const ExtReal ex(x);
  if (ex < lo_ || (ex == lo_ && !lo_closed_)) return false;
  if (ex > hi_ || (ex == hi_ && !hi_closed_)) return false;
  return true;
}

bool Interval::contains(const Interval& o) const {
  if (o.lo_ < lo_ || (o.lo_ == lo_ && o.lo_closed_ && !lo_closed_)) return false;
  if (o.hi_ > hi_ || (o.hi_ == hi_ && o.hi_closed_ && !hi_closed_)) return false;
  return true;
}

std::string format_interval(const Interval& i) {
  if (i.is_point()) return "{" + format_ext_real(i.lo()) + "}";
  std::string s;
  s += i.lo_closed() ? '[' : '(';
  s += format_ext_real(i.lo());
  s += ',';
  s += format_ext_real(i.hi());
  s += i.hi_closed() ? ']' : ')';
  return s;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  ExtReal lo;
  bool lo_closed;
  if (a.lo() != b.lo()) {
    const Interval& m = a.lo() > b.lo() ? a : b;
    lo = m.lo();
    lo_closed = m.lo_closed();
  } else {
    lo = a.lo();
    lo_closed = a.lo_closed() && b.lo_closed();
  }
  ExtReal hi;
  bool hi_closed;
  if (a.hi() != b.hi()) {
    const Interval& m = a.hi() < b.hi() ? a : b;
    hi = m.hi();
    hi_closed = m.hi_closed();
  } else {
    hi = a.hi();
    hi_closed = a.hi_closed() && b.hi_closed();
  }
  return Interval::make(lo, hi, lo_closed, hi_closed);
}

bool same_support_iso(const Interval& a, const Interval& b) { return a == b; }

bool CanonicalOrder::operator()(const Interval& a, const Interval& b) const {
  if (a.lo() != b.lo()) return a.lo() < b.lo();
  if (a.lo_closed() != b.lo_closed()) return a.lo_closed();
  if (a.hi() != b.hi()) return a.hi() < b.hi();
  if (a.hi_closed() != b.hi_closed()) return !a.hi_closed();
  return false;
}

void BarMultiset::add(const Interval& i, std::size_t mult) {
  if (mult == 0) return;
  bars_[i] += mult;
}

void BarMultiset::add(const BarMultiset& other) {
  for (const auto& [i, m] : other.bars_) add(i, m);
}

std::size_t BarMultiset::multiplicity(const Interval& i) const {
  auto it = bars_.find(i);
  return it == bars_.end() ? 0 : it->second;
}

std::size_t BarMultiset::total() const {
  std::size_t n = 0;
  for (const auto& [i, m] : bars_) n += m;
  return n;
}

std::string format_bars(const BarMultiset& bars) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [i, m] : bars) {
    if (!first) out << ", ";
    first = false;
    out << format_interval(i);
    if (m != 1) out << " x" << m;
  }
  out << "}";
  return out.str();
}

Rational sample_point(const Interval& i) {
  if (i.is_point()) return i.lo().value();
  if (!i.lo().is_finite() && !i.hi().is_finite()) return 0;
  if (!i.lo().is_finite()) return i.hi().value() - 1;
  if (!i.hi().is_finite()) return i.lo().value() + 1;
  return (i.lo().value() + i.hi().value()) / 2;
}

}  // namespace aquiver
