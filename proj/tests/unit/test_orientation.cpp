#include "common.hpp"

#include "aquiver/errors.hpp"

using namespace aquiver;
using namespace aquiver::testing;

TEST_CASE("leq on the straight descending orientation is <=") {
  const Orientation o = Orientation::descending();
  CHECK(o.leq(1, 2));
  CHECK_FALSE(o.leq(2, 1));
  CHECK(o.leq(q("-7/3"), q("-7/3")));
}

TEST_CASE("leq reverses below a sink") {
  const Orientation o = sink0_source1();
  CHECK_FALSE(o.leq(-1, q("-1/2")));
  CHECK(o.leq(q("-1/2"), -1));
  CHECK(o.leq(0, q("1/2")));
  CHECK(o.leq(q("1/2"), 1));
  CHECK(o.leq(2, 1));
}

TEST_CASE("points separated by a critical point are incomparable") {
  const Orientation o = sink0_source1();
  CHECK_FALSE(o.leq(q("1/2"), 2));
  CHECK_FALSE(o.leq(2, q("1/2")));
  CHECK_FALSE(o.leq(-1, q("1/2")));
  CHECK_FALSE(o.leq(q("1/2"), -1));
  CHECK_FALSE(o.leq(0, 2));
}

TEST_CASE("segment_index") {
  const Orientation o = sink0_source1();
  Segment s = o.segment_index(q("1/2"));
  CHECK(s.lo == ExtReal(0));
  CHECK(s.hi == ExtReal(1));
  CHECK(s.sense == Sense::same);
  s = o.segment_index(-5);
  CHECK(s.lo == ExtReal::neg_inf());
  CHECK(s.hi == ExtReal(0));
  CHECK(s.sense == Sense::reversed);
  s = Orientation::descending().segment_index(7);
  CHECK(s.lo == ExtReal::neg_inf());
  CHECK(s.hi == ExtReal::pos_inf());
  CHECK(s.sense == Sense::same);
  // Critical points report the segment on their right.
  CHECK(o.segment_index(0).index == 1);
  CHECK(o.segments_touching(0).size() == 2);
}

TEST_CASE("down_set and up_set") {
  const Orientation o = sink0_source1();
  CHECK(o.down_set(1) == iv("[0,+inf)"));
  CHECK(o.down_set(-3) == iv("[-3,0]"));
  CHECK(o.down_set(0) == iv("{0}"));
  CHECK(o.down_set(5) == iv("[5,+inf)"));
  CHECK(Orientation::descending().up_set(0) == iv("[0,+inf)"));
  CHECK(o.up_set(0) == iv("(-inf,1]"));
  CHECK(o.infinity_is_source(false));
  CHECK_FALSE(o.infinity_is_source(true));
}

TEST_CASE("reverse") {
  const Orientation o = sink0_source1();
  const Orientation r = reverse(o);
  CHECK(r.criticals()[0].kind == CriticalKind::source);
  CHECK(r.criticals()[1].kind == CriticalKind::sink);
  CHECK(reverse(r) == o);
  CHECK(reverse(Orientation::descending()) == Orientation::ascending());
}

TEST_CASE("invalid orientations are rejected") {
  CHECK_THROWS_AS(Orientation({{Rational(1), CriticalKind::sink}, {Rational(0), CriticalKind::source}}), InputError);
  CHECK_THROWS_AS(Orientation({{Rational(0), CriticalKind::sink}, {Rational(1), CriticalKind::sink}}), InputError);
}

TEST_CASE("reparameterize") {
  const Orientation a = sink0_source1();
  const Orientation b({{Rational(10), CriticalKind::sink}, {Rational(20), CriticalKind::source}});
  CHECK(reparameterize(a, b, q("1/2")) == 15);
  CHECK(reparameterize(a, b, 0) == 10);
  CHECK(reparameterize(a, a, q("3/7")) == q("3/7"));
  CHECK(reparameterize(b, a, reparameterize(a, b, q("2/3"))) == q("2/3"));
  CHECK_THROWS_WITH_AS(reparameterize(a, reverse(a), 0), "incompatible orientations", InputError);
}

TEST_CASE("order properties on random samples") {
  Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    const Orientation o = random_orientation(rng, 4);
    const Orientation b = reverse(o);
    Rational x(uniform(rng, -16, 24), 4);
    Rational y(uniform(rng, -16, 24), 4);
    Rational z(uniform(rng, -16, 24), 4);
    x.canonicalize();
    y.canonicalize();
    z.canonicalize();
    CHECK(o.leq(x, x));
    if (o.leq(x, y) && o.leq(y, x)) CHECK(x == y);
    if (o.leq(x, y) && o.leq(y, z)) CHECK(o.leq(x, z));
    CHECK(b.leq(x, y) == o.leq(y, x));
    CHECK(o.down_set(x) == b.up_set(x));
    if (o.criticals_between(std::min(x, y), std::max(x, y)) > 0) {
      CHECK_FALSE(o.leq(x, y));
      CHECK_FALSE(o.leq(y, x));
    }
    // Reparameterizing onto a shifted copy preserves the order.
    std::vector<Critical> moved = o.criticals();
    for (auto& c : moved) c.pos = c.pos * 3 + 1;
    const Orientation o2(moved, o.empty_direction());
    CHECK(o2.leq(reparameterize(o, o2, x), reparameterize(o, o2, y)) == o.leq(x, y));
  }
}
