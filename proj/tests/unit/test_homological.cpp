#include "common.hpp"

#include "aquiver/errors.hpp"
#include "aquiver/morphism.hpp"

using namespace aquiver;
using namespace aquiver::testing;

namespace {

ProjectiveLabel pl(LabelForm f, long at) { return {f, ExtReal(at)}; }

}  // namespace

TEST_CASE("hom_dim") {
  const Orientation d = Orientation::descending();
  CHECK(hom_dim(d, iv("[0,1)"), iv("[0,1)")) == 1);
  CHECK(hom_dim(d, iv("[0,1)"), iv("[2,3)")) == 0);
  CHECK(hom_dim(d, iv("[0,2)"), iv("[1,3)")) == 1);
  CHECK(hom_dim(d, iv("[1,3)"), iv("[0,2)")) == 0);
  Rng rng(31);
  for (int n = 0; n < 200; ++n) {
    const Orientation o = random_orientation(rng, 3);
    const Interval i = random_interval(rng);
    CHECK(hom_dim(o, i, i) == 1);
    CHECK(hom_dim(o, i, random_interval(rng)) <= 1);
  }
}

TEST_CASE("hom_space_dim") {
  const Orientation o = sink0_source1();
  const TameRep m = module(o, "(-1,1]");
  CHECK(hom_space_dim(m, TameRep::zero(o)) == 0);
  CHECK(hom_space_dim(direct_sum(m, m), m) == 2);
  CHECK_THROWS_AS(hom_space_dim(m, module(reverse(o), "(-1,1]")), InputError);
  Rng rng(32);
  for (int n = 0; n < 30; ++n) {
    const Orientation r = random_orientation(rng, 3);
    const BarMultiset a = random_bars(rng, 3, 2);
    const BarMultiset b = random_bars(rng, 3, 2);
    std::size_t expected = 0;
    for (const auto& [i, mi] : a) {
      for (const auto& [j, mj] : b) expected += mi * mj * hom_dim(r, i, j);
    }
    CHECK(hom_space_dim(scramble(from_bars(r, a), rng()), scramble(from_bars(r, b), rng())) == expected);
  }
}

TEST_CASE("classify_projective") {
  const Orientation o = sink0_source1();
  CHECK(classify_projective(o, iv("[0,+inf)")) == pl(LabelForm::point, 1));
  CHECK(classify_projective(o, iv("[0,1)")) == pl(LabelForm::open_right, 1));
  CHECK_FALSE(classify_projective(o, iv("(0,1/2]")).has_value());
  CHECK(classify_projective(o, iv("{0}")) == pl(LabelForm::point, 0));
  CHECK(classify_projective(o, iv("(-inf,0]")) == ProjectiveLabel{LabelForm::point, ExtReal::neg_inf()});
  const Orientation d = Orientation::descending();
  CHECK(classify_projective(d, iv("(-inf,2]")) == pl(LabelForm::point, 2));
  CHECK(classify_projective(d, iv("(-inf,2)")) == pl(LabelForm::open_right, 2));
  CHECK_FALSE(classify_projective(d, iv("[0,2]")).has_value());
}

TEST_CASE("realize inverts classify_projective") {
  Rng rng(33);
  for (int n = 0; n < 200; ++n) {
    const Orientation o = random_orientation(rng, 3);
    const ProjectiveLabel l = random_projective(rng, o);
    CHECK(classify_projective(o, realize(o, l)) == l);
  }
  CHECK_THROWS_AS(realize(sink0_source1(), pl(LabelForm::open_right, 0)), InputError);
}

TEST_CASE("classify_injective") {
  const Orientation d = Orientation::descending();
  CHECK(classify_injective(d, iv("[0,+inf)")) == InjectiveLabel{LabelForm::point, ExtReal(0)});
  CHECK_FALSE(classify_injective(d, iv("(-inf,0]")).has_value());
  Rng rng(34);
  for (int n = 0; n < 200; ++n) {
    const Orientation o = random_orientation(rng, 3);
    const Interval i = random_interval(rng);
    const auto inj = classify_injective(o, i);
    const auto proj = classify_projective(reverse(o), i);
    CHECK(inj.has_value() == proj.has_value());
    if (inj && proj) {
      CHECK(inj->form == proj->form);
      CHECK(inj->at == proj->at);
    }
  }
}

TEST_CASE("format_label") {
  CHECK(format_label(pl(LabelForm::point, 1)) == "P_1");
  CHECK(format_label(pl(LabelForm::open_right, 1)) == "P_{1)}");
  CHECK(format_label(pl(LabelForm::open_left, 1)) == "P_{(1}");
  CHECK(format_label(ProjectiveLabel{LabelForm::point, ExtReal(q("1/2"))}) == "P_{1/2}");
  CHECK(format_label(InjectiveLabel{LabelForm::point, ExtReal::pos_inf()}) == "I_{+inf}");
}

TEST_CASE("is_projective_rep") {
  const Orientation o = sink0_source1();
  CHECK(is_projective_rep(module(o, "(-inf,0]")));
  CHECK(is_projective_rep(module(Orientation::descending(), "(-inf,3]")));
  CHECK_FALSE(is_projective_rep(module(o, "(0,1/2]")));
  CHECK(is_projective_rep(TameRep::zero(o)));
  CHECK(is_projective_rep(scramble(from_bars(o, bars({"[0,1)", "[0,+inf)", "{0}"})), 2)));
  CHECK_FALSE(is_projective_rep(from_bars(o, bars({"[0,1)", "[1/2,1)"}))));
}

TEST_CASE("projectivity criterion agrees with classification") {
  Rng rng(35);
  std::size_t decided = 0;
  for (int n = 0; n < 100; ++n) {
    const Orientation o = random_orientation(rng, 3);
    const auto segs = o.segments_touching(uniform(rng, -2, 3));
    const Segment s = segs.front();
    const ExtReal lo = s.lo.is_finite() ? s.lo : ExtReal(-3);
    const ExtReal hi = s.hi.is_finite() ? s.hi : ExtReal(4);
    const Interval window(lo, hi, true, true);
    BarMultiset b;
    const int count = uniform(rng, 1, 3);
    for (int k = 0; k < count; ++k) b.add(random_subinterval(rng, window));
    const TameRep v = scramble(from_bars(o, b), rng());
    if (const auto c = projectivity_criterion(v)) {
      ++decided;
      CHECK(*c == is_projective_rep(v));
    }
  }
  CHECK(decided > 50);
}

TEST_CASE("image_filtration") {
  const Orientation d = Orientation::descending();
  const Segment s = d.segment(0);
  CHECK(image_filtration(TameRep::zero(d), s, 0).empty());
  const FiltrationReport one = image_filtration(module(d, "[0,2]"), s, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == FiltrationStep{1, iv("[0,2]")});

  const TameRep v = scramble(from_bars(d, bars({"[0,+inf)", "[0,2]", "[0,1)"})), 12);
  const FiltrationReport chain = image_filtration(v, s, 0);
  REQUIRE(chain.size() == 3);
  CHECK(chain[0] == FiltrationStep{3, iv("[0,1)")});
  CHECK(chain[1] == FiltrationStep{2, iv("[0,2]")});
  CHECK(chain[2] == FiltrationStep{1, iv("[0,+inf)")});

  CHECK_THROWS_AS(image_filtration(module(d, "[0,2]"), s, 1), InputError);
  CHECK_THROWS_AS(image_filtration(module(d, "[0,2]"), s, 5), InputError);
}

TEST_CASE("proj_presentation examples") {
  const Orientation d = Orientation::descending();
  const ProjPresentation a = proj_presentation(d, iv("[0,1)"));
  CHECK(a.p0 == std::vector<ProjectiveLabel>{pl(LabelForm::open_right, 1)});
  CHECK(a.p1 == std::vector<ProjectiveLabel>{pl(LabelForm::open_right, 0)});

  const ProjPresentation b = proj_presentation(sink0_source1(), iv("[0,1/2)"));
  CHECK(b.p1.empty());
  CHECK(b.p0 == std::vector<ProjectiveLabel>{ProjectiveLabel{LabelForm::open_right, ExtReal(q("1/2"))}});

  const ProjPresentation c = proj_presentation(sink0_source1(), iv("(-inf,0]"));
  CHECK(c.p1.empty());
  CHECK(c.p0.size() == 1);
}

TEST_CASE("proj_presentation: injective, cokernel, pointwise dimensions") {
  Rng rng(36);
  for (int n = 0; n < 150; ++n) {
    const Orientation o = random_orientation(rng, 3);
    const Interval i = random_interval(rng);
    const Field f = n % 2 == 0 ? Field::rationals() : Field::prime(3);
    const ProjPresentation p = proj_presentation(o, i, f);
    CHECK(is_valid(p.map));
    CHECK(is_cellwise_injective(p.map));
    BarMultiset expected;
    expected.add(i);
    CHECK(decompose(cokernel(p.map)) == expected);
    for (const auto& l : p.p0) CHECK(classify_projective(o, realize(o, l)) == l);
    for (const auto& l : p.p1) CHECK(classify_projective(o, realize(o, l)) == l);
  }
}

TEST_CASE("ext_dim") {
  const Orientation d = Orientation::descending();
  CHECK(ext_dim(d, iv("[0,1)"), iv("(-inf,0)")) == 1);
  CHECK(ext_dim(d, iv("(-inf,1]"), iv("[0,2)")) == 0);
  const Orientation o = sink0_source1();
  Rng rng(37);
  for (int n = 0; n < 100; ++n) {
    const Interval w = random_interval(rng);
    CHECK(ext_dim(o, realize(o, random_projective(rng, o)), w) == 0);
    CHECK(ext_dim(o, random_interval(rng), w) <= 1);
  }
  // {0 sink, 1 source, 2 sink}: supports two segments apart.
  const Orientation z({{Rational(0), CriticalKind::sink}, {Rational(1), CriticalKind::source},
                       {Rational(2), CriticalKind::sink}});
  CHECK(ext_dim(z, iv("(-2,-1)"), iv("(5/2,3)")) == 0);
  CHECK(ext_dim(z, iv("(5/2,3)"), iv("(-2,-1)")) == 0);
}

TEST_CASE("kernel_of_projective_map") {
  const Orientation o = sink0_source1();
  const TameRep p = realize_sum(o, {pl(LabelForm::point, 1), pl(LabelForm::open_right, 1)});
  CHECK(iso(kernel_of_projective_map(zero_morphism(p, p)), p));
  CHECK(kernel_of_projective_map(identity_morphism(p)).is_zero());
  Morphism broken = identity_morphism(p);
  const std::size_t c = p.cell_of(q("1/2"));
  broken.components[c] = Matrix(p.dims()[c], p.dims()[c], p.field());
  CHECK_THROWS_AS(kernel_of_projective_map(broken), InputError);
  Rng rng(38);
  for (int n = 0; n < 40; ++n) {
    const Orientation r = random_orientation(rng, 3);
    std::vector<ProjectiveLabel> src, dst;
    for (int k = 0; k < 3; ++k) {
      src.push_back(random_projective(rng, r));
      dst.push_back(random_projective(rng, r));
    }
    const TameRep a = realize_sum(r, src);
    const TameRep b = realize_sum(r, dst);
    Morphism f = zero_morphism(a, b);
    for (const auto& h : hom_basis(a, b)) f = f + scaled(h, Rational(uniform(rng, -1, 1)));
    CHECK(is_projective_rep(kernel_of_projective_map(f)));
  }
}

TEST_CASE("field independence of dimension counts") {
  Rng rng(39);
  for (int n = 0; n < 60; ++n) {
    const Orientation o = random_orientation(rng, 3);
    BarMultiset a, b;
    a.add(random_interval(rng));
    b.add(random_interval(rng));
    const std::size_t over_q = hom_space_dim(from_bars(o, a), from_bars(o, b));
    CHECK(hom_space_dim(from_bars(o, a, Field::prime(2)), from_bars(o, b, Field::prime(2))) == over_q);
    CHECK(hom_space_dim(from_bars(o, a, Field::prime(7)), from_bars(o, b, Field::prime(7))) == over_q);
  }
}
