#include "common.hpp"

#include "aquiver/errors.hpp"

using namespace aquiver;
using namespace aquiver::testing;

TEST_CASE("from_bars: empty barcode is the zero representation") {
  const TameRep z = from_bars(sink0_source1(), BarMultiset{});
  CHECK(z.grid().empty());
  CHECK(z.is_zero());
  CHECK(z.dims() == std::vector<std::size_t>{0});
}

TEST_CASE("from_bars: a closed bar over the descending orientation") {
  const TameRep v = module(Orientation::descending(), "[0,1]");
  CHECK(v.grid() == std::vector<Rational>{0, 1});
  CHECK(v.dims() == std::vector<std::size_t>{0, 1, 1, 1, 0});
  for (std::size_t j = 0; j < v.junction_count(); ++j) CHECK(v.direction(j) == MapDirection::down);
  CHECK(v.maps()[1].is_identity());
  CHECK(v.maps()[2].is_identity());
  CHECK(v.maps()[0].rows() == 0);
  CHECK(v.maps()[3].cols() == 0);
}

TEST_CASE("from_bars: overlapping bars") {
  const TameRep v = from_bars(Orientation::descending(), bars({"[0,2)", "[1,3)"}));
  CHECK(dim_at(v, q("3/2")) == 2);
  CHECK(dim_at(v, q("1/2")) == 1);
  CHECK(dim_at(v, 2) == 1);
  CHECK(dim_at(v, 3) == 0);
}

TEST_CASE("from_bars adds critical points inside the hull to the grid") {
  const TameRep v = module(sink0_source1(), "[-1,2]");
  CHECK(v.grid() == std::vector<Rational>{-1, 0, 1, 2});
  CHECK(v.direction(0) == MapDirection::up);    // (-inf,-1) -> {-1}, reversed below the sink
  CHECK(v.direction(4) == MapDirection::down);  // (0,1) <- {1}
}

TEST_CASE("constructor validation") {
  const Orientation o = sink0_source1();
  CHECK_THROWS_AS(TameRep(o, {Rational(-1), Rational(2)}, {0, 1, 1, 1, 0},
                          {Matrix(0, 1, Field::rationals()), Matrix(1, 1, Field::rationals()),
                           Matrix(1, 1, Field::rationals()), Matrix(1, 0, Field::rationals())},
                          Field::rationals()),
                  InputError);
  CHECK_THROWS_AS(TameRep(Orientation::descending(), {Rational(0)}, {1, 1, 1},
                          {Matrix(2, 1, Field::rationals()), Matrix(1, 1, Field::rationals())}, Field::rationals()),
                  InputError);
}

TEST_CASE("scramble") {
  const Orientation o = sink0_source1();
  CHECK(scramble(TameRep::zero(o), 7) == TameRep::zero(o));
  const TameRep v = from_bars(o, bars({"[-1,2)", "(0,1]", "(0,1]"}));
  CHECK(scramble(v, 3) == scramble(v, 3));
  CHECK(scramble(v, 3).dims() == v.dims());
  std::vector<Matrix> ids;
  for (auto d : v.dims()) ids.push_back(Matrix::identity(d, v.field()));
  CHECK(change_basis(v, ids) == v);
}

TEST_CASE("restrict") {
  const Orientation o = Orientation::descending();
  const TameRep v = module(o, "[0,2)");
  CHECK(restrict(v, Interval::whole_line()) == v);
  CHECK(decompose(restrict(v, iv("[1,3)"))) == bars({"[1,2)"}));
  CHECK(restrict(v, iv("[5,6]")).is_zero());
  Rng rng(21);
  for (int n = 0; n < 50; ++n) {
    const Orientation r = random_orientation(rng, 3);
    const TameRep w = scramble(from_bars(r, random_bars(rng, 5, 2)), rng());
    const Interval j = random_interval(rng);
    const TameRep x = restrict(w, j);
    for (int k = -12; k <= 16; ++k) {
      const Rational p = ratio(k, 4);
      CHECK(dim_at(x, p) == (j.contains(p) ? dim_at(w, p) : 0));
    }
  }
}

TEST_CASE("direct_sum") {
  const Orientation o = sink0_source1();
  const TameRep a = module(o, "[0,1)");
  const TameRep b = module(o, "(-1,3]");
  CHECK(decompose(direct_sum(a, TameRep::zero(o))) == decompose(a));
  const TameRep s = direct_sum(a, b);
  for (int k = -8; k <= 16; ++k) CHECK(dim_at(s, ratio(k, 4)) == dim_at(a, ratio(k, 4)) + dim_at(b, ratio(k, 4)));
  CHECK_THROWS_AS(direct_sum(a, module(reverse(o), "[0,1)")), InputError);
}

TEST_CASE("dual") {
  const Orientation o = sink0_source1();
  const TameRep v = scramble(from_bars(o, bars({"[-1,2)", "(0,1]", "{0}"})), 9);
  const TameRep d = dual(v);
  CHECK(d.orientation() == reverse(o));
  CHECK(d.dims() == v.dims());
  CHECK(dual(TameRep::zero(o)) == TameRep::zero(reverse(o)));
  CHECK(iso(dual(d), v));
  CHECK(decompose(d) == decompose(v));
}

TEST_CASE("dim_at") {
  CHECK(dim_at(TameRep::zero(Orientation::descending()), 5) == 0);
  CHECK(dim_at(module(Orientation::descending(), "[0,1]"), q("1/2")) == 1);
}
