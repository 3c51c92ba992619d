#include "aquiver/tables.hpp"

#include <algorithm>

#include "aquiver/homological.hpp"

namespace aquiver {

namespace {

std::string region_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "r" + std::to_string(i + 1);
}

// A symbolic position on the line: -inf, region i, critical i or +inf, with
// a numeric stand-in used for the actual computation.
struct Place {
  int rank;
  std::string name;
  ExtReal value;
};

struct Entry {
  Place lo;
  bool lo_closed;
  Place hi;
  bool hi_closed;
  std::string label;
};

}  // namespace

SymbolicTable indecomposable_table(const Orientation& o, bool injective, const std::optional<Interval>& range) {
  const auto& crit = o.criticals();
  const int n = static_cast<int>(crit.size());
  std::vector<Place> places;
  places.push_back({-1, "-inf", ExtReal::neg_inf()});
  for (int i = 0; i <= n; ++i) {
    Rational sample;
    if (n == 0) {
      sample = 0;
    } else if (i == 0) {
      sample = crit.front().pos - 1;
    } else if (i == n) {
      sample = crit.back().pos + 1;
    } else {
      sample = (crit[i - 1].pos + crit[i].pos) / 2;
    }
    places.push_back({2 * i, region_name(static_cast<std::size_t>(i)), sample});
    if (i < n) places.push_back({2 * i + 1, format_rational(crit[i].pos), crit[i].pos});
  }
  places.push_back({2 * n + 1, "+inf", ExtReal::pos_inf()});

  auto place_of = [&](const ExtReal& v) -> const Place& {
    for (const auto& p : places) {
      if (p.value == v) return p;
    }
    throw std::logic_error("support endpoint is not a table position");
  };
  auto in_range = [&](const Place& p) {
    if (!range) return true;
    if (p.rank == -1) return range->lo().is_neg_inf();
    if (p.rank == 2 * n + 1) return range->hi().is_pos_inf();
    if (p.rank % 2 == 1) return range->contains(p.value.value());
    const int i = p.rank / 2;
    const ExtReal lo = i == 0 ? ExtReal::neg_inf() : ExtReal(crit[i - 1].pos);
    const ExtReal hi = i == n ? ExtReal::pos_inf() : ExtReal(crit[i].pos);
    return intersect(*range, Interval::open(lo, hi)).has_value();
  };

  const Orientation base = injective ? reverse(o) : o;
  const char prefix = injective ? 'I' : 'P';
  std::vector<Entry> entries;
  for (const auto& p : places) {
    if (!in_range(p)) continue;
    for (auto form : {LabelForm::point, LabelForm::open_right, LabelForm::open_left}) {
      if (!p.value.is_finite() && form != LabelForm::point) continue;
      Interval support = Interval::whole_line();
      try {
        support = realize(base, ProjectiveLabel{form, p.value});
      } catch (const std::runtime_error&) {
        continue;
      }
      entries.push_back({place_of(support.lo()), support.lo_closed(), place_of(support.hi()),
                         support.hi_closed(), format_label(prefix, form, p.name)});
    }
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.hi.rank != y.hi.rank) return x.hi.rank < y.hi.rank;
    if (x.hi_closed != y.hi_closed) return !x.hi_closed;
    const bool xp = x.lo.rank == x.hi.rank;
    const bool yp = y.lo.rank == y.hi.rank;
    if (xp != yp) return xp;
    if (x.lo.rank != y.lo.rank) return x.lo.rank < y.lo.rank;
    return !x.lo_closed && y.lo_closed;
  });

  SymbolicTable t;
  for (const auto& p : places) {
    if (p.rank < 0 || p.rank > 2 * n) continue;
    if (!t.header.empty()) t.header += " < ";
    t.header += p.name;
  }
  for (const auto& e : entries) {
    std::string s;
    if (e.lo.rank == e.hi.rank) {
      s = "{" + e.lo.name + "}";
    } else {
      s = std::string(e.lo_closed ? "[" : "(") + e.lo.name + "," + e.hi.name + (e.hi_closed ? "]" : ")");
    }
    t.rows.push_back({s, e.label});
  }
  return t;
}

std::string format_table(const SymbolicTable& t) {
  std::size_t width = 0;
  for (const auto& r : t.rows) width = std::max(width, r.support.size());
  std::string out = t.header + "\n";
  for (const auto& r : t.rows) {
    out += r.support + std::string(width + 2 - r.support.size(), ' ') + r.label + "\n";
  }
  return out;
}

}  // namespace aquiver
