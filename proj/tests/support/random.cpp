#include "random.hpp"

#include <algorithm>

namespace aquiver::testing {

Orientation random_orientation(Rng& rng, int max_criticals) {
  std::vector<Rational> slots;
  for (int k = -4; k <= 6; ++k) slots.emplace_back(k, 2);
  for (auto& s : slots) s.canonicalize();
  std::shuffle(slots.begin(), slots.end(), rng);
  const int n = uniform(rng, 0, max_criticals);
  std::vector<Rational> pos(slots.begin(), slots.begin() + n);
  std::sort(pos.begin(), pos.end());
  CriticalKind kind = uniform(rng, 0, 1) ? CriticalKind::sink : CriticalKind::source;
  std::vector<Critical> crit;
  for (const auto& p : pos) {
    crit.push_back({p, kind});
    kind = opposite(kind);
  }
  return Orientation(std::move(crit), uniform(rng, 0, 1) ? EmptyDirection::descending : EmptyDirection::ascending);
}

Interval random_interval(Rng& rng) {
  std::vector<Rational> pts;
  for (int k = -2; k <= 3; ++k) pts.emplace_back(k);
  return random_interval(rng, pts);
}

Interval random_interval(Rng& rng, const std::vector<Rational>& points) {
  const int n = static_cast<int>(points.size());
  for (;;) {
    const int i = uniform(rng, -1, n);
    const int j = uniform(rng, -1, n);
    const ExtReal lo = i < 0 ? ExtReal::neg_inf() : i == n ? ExtReal::pos_inf() : ExtReal(points[i]);
    const ExtReal hi = j < 0 ? ExtReal::neg_inf() : j == n ? ExtReal::pos_inf() : ExtReal(points[j]);
    if (auto iv = Interval::make(lo, hi, uniform(rng, 0, 1), uniform(rng, 0, 1))) return *iv;
  }
}

BarMultiset random_bars(Rng& rng, int max_bars, int max_mult) {
  BarMultiset b;
  const int n = uniform(rng, 0, max_bars);
  for (int k = 0; k < n; ++k) b.add(random_interval(rng), static_cast<std::size_t>(uniform(rng, 1, max_mult)));
  return b;
}

Interval random_subinterval(Rng& rng, const Interval& window) {
  const Rational lo = window.lo().value();
  const Rational hi = window.hi().value();
  for (;;) {
    Rational x = lo + (hi - lo) * Rational(uniform(rng, 0, 8), 8);
    Rational y = lo + (hi - lo) * Rational(uniform(rng, 0, 8), 8);
    x.canonicalize();
    y.canonicalize();
    if (y < x) std::swap(x, y);
    auto iv = Interval::make(x, y, uniform(rng, 0, 1), uniform(rng, 0, 1));
    if (iv && window.contains(*iv)) return *iv;
  }
}

ProjectiveLabel random_projective(Rng& rng, const Orientation& o) {
  for (;;) {
    ExtReal at;
    const int pick = uniform(rng, 0, 9);
    if (pick == 0) {
      at = ExtReal::neg_inf();
    } else if (pick == 1) {
      at = ExtReal::pos_inf();
    } else if (pick <= 4 && !o.criticals().empty()) {
      at = o.criticals()[uniform(rng, 0, static_cast<int>(o.criticals().size()) - 1)].pos;
    } else {
      Rational q(uniform(rng, -12, 16), 4);
      q.canonicalize();
      at = q;
    }
    const auto form = static_cast<LabelForm>(uniform(rng, 0, 2));
    ProjectiveLabel l{form, at};
    try {
      (void)realize(o, l);
      return l;
    } catch (const std::exception&) {
    }
  }
}

}  // namespace aquiver::testing
