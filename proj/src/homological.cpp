#include "aquiver/homological.hpp"

#include <algorithm>

#include "aquiver/decompose.hpp"
#include "aquiver/errors.hpp"

namespace aquiver {

namespace {

std::optional<Interval> realize_down(const Orientation& o, LabelForm form, const ExtReal& at) {
  if (!at.is_finite()) {
    if (form != LabelForm::point) return std::nullopt;
    return o.down_set_at_infinity(at.is_pos_inf());
  }
  const Rational& a = at.value();
  const Interval d = o.down_set(a);
  switch (form) {
    case LabelForm::point:
      return d;
    case LabelForm::open_right:
      return intersect(d, Interval::open(ExtReal::neg_inf(), a));
    case LabelForm::open_left:
      return intersect(d, Interval::open(a, ExtReal::pos_inf()));
  }
  return std::nullopt;
}

std::string label_text(char prefix, LabelForm form, const ExtReal& at) {
  return format_label(prefix, form, format_ext_real(at));
}

bool nonempty_meet(const std::optional<Interval>& a, const Interval& b) {
  return a && intersect(*a, b).has_value();
}

// Candidate label positions for a support: its endpoints and the sinks and
// sources inside it.
std::vector<ExtReal> label_positions(const Orientation& o, const Interval& i) {
  std::vector<ExtReal> out{i.lo()};
  for (const auto& c : o.criticals()) {
    if (i.contains(c.pos)) out.emplace_back(c.pos);
  }
  out.push_back(i.hi());
  return out;
}

int form_rank(LabelForm f) {
  switch (f) {
    case LabelForm::open_right:
      return 0;
    case LabelForm::point:
      return 1;
    case LabelForm::open_left:
      return 2;
  }
  return 0;
}

bool label_less(const ProjectiveLabel& a, const ProjectiveLabel& b) {
  if (a.at != b.at) return a.at < b.at;
  return form_rank(a.form) < form_rank(b.form);
}

}  // namespace

Interval realize(const Orientation& o, const ProjectiveLabel& p) {
  auto r = realize_down(o, p.form, p.at);
  if (!r) throw InputError(label_text('P', p.form, p.at) + " is zero for this orientation");
  return *r;
}

Interval realize(const Orientation& o, const InjectiveLabel& i) {
  auto r = realize_down(reverse(o), i.form, i.at);
  if (!r) throw InputError(label_text('I', i.form, i.at) + " is zero for this orientation");
  return *r;
}

std::string format_label(char prefix, LabelForm form, const std::string& at) {
  std::string out{prefix, '_'};
  switch (form) {
    case LabelForm::point:
      return out + (at.size() == 1 ? at : "{" + at + "}");
    case LabelForm::open_right:
      return out + "{" + at + ")}";
    case LabelForm::open_left:
      return out + "{(" + at + "}";
  }
  return out;
}

std::string format_label(const ProjectiveLabel& p) { return label_text('P', p.form, p.at); }
std::string format_label(const InjectiveLabel& i) { return label_text('I', i.form, i.at); }

std::optional<ProjectiveLabel> classify_projective(const Orientation& o, const Interval& i) {
  for (const auto& at : label_positions(o, i)) {
    for (auto form : {LabelForm::point, LabelForm::open_right, LabelForm::open_left}) {
      auto r = realize_down(o, form, at);
      if (r && *r == i) return ProjectiveLabel{form, at};
    }
  }
  return std::nullopt;
}

std::optional<InjectiveLabel> classify_injective(const Orientation& o, const Interval& i) {
  auto p = classify_projective(reverse(o), i);
  if (!p) return std::nullopt;
  return InjectiveLabel{p->form, p->at};
}

std::size_t hom_dim(const Orientation& o, const Interval& i, const Interval& j) {
  BarMultiset a;
  a.add(i);
  BarMultiset b;
  b.add(j);
  const std::size_t d = hom_space_dim(from_bars(o, a), from_bars(o, b));
  if (d > 1) {
    throw InternalError("Hom(" + format_interval(i) + ", " + format_interval(j) + ") has dimension " +
                        std::to_string(d));
  }
  return d;
}

std::optional<bool> projectivity_criterion(const TameRep& v) {
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < v.cell_count(); ++c) {
    if (v.dims()[c] > 0) support.push_back(c);
  }
  if (support.empty()) return true;
  const Orientation& o = v.orientation();
  for (const Segment& seg : o.segments_touching(sample_point(v.cell_interval(support.front())))) {
    const Interval closed(seg.lo, seg.hi, seg.lo.is_finite(), seg.hi.is_finite());
    const bool sink_low = seg.sense == Sense::same;
    const ExtReal& sink = sink_low ? seg.lo : seg.hi;
    const ExtReal& source = sink_low ? seg.hi : seg.lo;
    bool fits = true;
    for (std::size_t c : support) {
      const Interval cell = v.cell_interval(c);
      if (!closed.contains(cell) || (source.is_finite() && cell.contains(source.value()))) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;

    std::size_t cell;
    if (sink.is_finite()) {
      cell = v.cell_of(sink.value());
    } else {
      cell = sink.is_neg_inf() ? 0 : v.cell_count() - 1;
    }
    const std::size_t far = sink_low ? support.back() : support.front();
    Matrix composite = Matrix::identity(v.dims()[cell], v.field());
    while (cell != far) {
      const std::size_t next = sink_low ? cell + 1 : cell - 1;
      const std::size_t junction = std::min(cell, next);
      if (v.junction_source(junction) != next) throw InternalError("map does not point towards the sink");
      composite = composite * v.maps()[junction];
      if (linalg::rank(composite) != v.dims()[next]) return false;
      cell = next;
    }
    return true;
  }
  return std::nullopt;
}

bool is_projective_rep(const TameRep& v) {
  bool all = true;
  for (const auto& [bar, mult] : decompose(v)) {
    if (!classify_projective(v.orientation(), bar)) {
      all = false;
      break;
    }
  }
  if (auto direct = projectivity_criterion(v); direct && *direct != all) {
    throw InternalError("projectivity criterion disagrees with the decomposition");
  }
  return all;
}

FiltrationReport image_filtration(const TameRep& v, const Segment& segment, const Rational& b) {
  if (v.is_zero()) return {};
  const bool rightwards = segment.sense == Sense::same;
  const std::optional<Interval> side =
      rightwards ? Interval::make(b, segment.hi, true, segment.hi.is_finite())
                 : Interval::make(segment.lo, b, segment.lo.is_finite(), true);
  if (!side || !side->contains(b)) throw InputError(format_rational(b) + " is not in the segment");
  if (dim_at(v, b) == 0) throw InputError(format_rational(b) + " is not in the support");
  for (std::size_t c = 0; c < v.cell_count(); ++c) {
    if (v.dims()[c] > 0 && !side->contains(v.cell_interval(c))) {
      throw InputError(format_rational(b) + " is not the minimum of the support");
    }
  }

  // Rank of the image of each cell in V(b), walking away from b.
  const std::size_t start = v.cell_of(b);
  std::vector<std::pair<std::size_t, std::size_t>> ranks{{start, v.dims()[start]}};
  Matrix composite = Matrix::identity(v.dims()[start], v.field());
  std::size_t cell = start;
  while (rightwards ? cell + 1 < v.cell_count() : cell > 0) {
    const std::size_t next = rightwards ? cell + 1 : cell - 1;
    const std::size_t junction = std::min(cell, next);
    composite = composite * v.maps()[junction];
    const std::size_t r = linalg::rank(composite);
    if (r == 0) break;
    ranks.emplace_back(next, r);
    cell = next;
  }

  const auto& grid = v.grid();
  auto far_end = [&](std::size_t c) -> std::pair<ExtReal, bool> {
    if (c % 2 == 1) return {grid[(c - 1) / 2], true};
    if (rightwards) return {c / 2 == grid.size() ? ExtReal::pos_inf() : ExtReal(grid[c / 2]), false};
    return {c == 0 ? ExtReal::neg_inf() : ExtReal(grid[c / 2 - 1]), false};
  };

  FiltrationReport out;
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    const std::size_t r = ranks[k].second;
    if (k + 1 < ranks.size() && ranks[k + 1].second == r) continue;
    auto [end, closed] = far_end(ranks[k].first);
    Interval support = rightwards ? Interval(b, end, true, closed) : Interval(end, b, closed, true);
    out.push_back({r, support});
  }
  return out;
}

TameRep realize_sum(const Orientation& o, const std::vector<ProjectiveLabel>& labels, Field field) {
  TameRep sum = TameRep::zero(o, field);
  for (const auto& l : labels) {
    BarMultiset bars;
    bars.add(realize(o, l));
    sum = direct_sum(sum, from_bars(o, bars, field));
  }
  return sum;
}

ProjPresentation proj_presentation(const Orientation& o, const Interval& i, Field field) {
  if (auto label = classify_projective(o, i)) {
    std::vector<ProjectiveLabel> p0{*label};
    TameRep target = realize_sum(o, p0, field);
    return {{}, p0, zero_morphism(TameRep::zero(o, field), target)};
  }

  std::vector<ProjectiveLabel> p0;
  std::vector<ProjectiveLabel> p1;
  auto nonzero = [&](LabelForm f, const ExtReal& at) { return realize_down(o, f, at).has_value(); };

  if (i.is_point()) {
    const Rational& a = i.lo().value();
    p0.push_back({LabelForm::point, a});
    if (nonzero(LabelForm::open_right, a)) p1.push_back({LabelForm::open_right, a});
    if (nonzero(LabelForm::open_left, a)) p1.push_back({LabelForm::open_left, a});
  } else {
    for (const auto& c : o.criticals()) {
      if (!(i.lo() < ExtReal(c.pos) && ExtReal(c.pos) < i.hi())) continue;
      (c.kind == CriticalKind::source ? p0 : p1).push_back({LabelForm::point, c.pos});
    }
    // Lower end, then upper end; the forms swap sides between them.
    for (bool upper : {false, true}) {
      const ExtReal& e = upper ? i.hi() : i.lo();
      const bool inside = upper ? i.hi_closed() : i.lo_closed();
      const LabelForm toward = upper ? LabelForm::open_right : LabelForm::open_left;
      const LabelForm away = upper ? LabelForm::open_left : LabelForm::open_right;
      if (!e.is_finite()) {
        if (nonempty_meet(o.down_set_at_infinity(e.is_pos_inf()), i)) p0.push_back({LabelForm::point, e});
        continue;
      }
      const Rational& a = e.value();
      if (!inside) {
        if (nonempty_meet(o.down_set(a), i)) p0.push_back({toward, a});
        if (nonempty_meet(o.up_set(a), i)) p1.push_back({LabelForm::point, a});
      } else {
        auto meet = intersect(o.down_set(a), i);
        if (meet && !meet->is_point()) p0.push_back({LabelForm::point, a});
        if (nonzero(away, a)) p1.push_back({away, a});
      }
    }
  }
  std::sort(p0.begin(), p0.end(), label_less);
  std::sort(p1.begin(), p1.end(), label_less);

  auto [src, tgt] = on_common_grid(realize_sum(o, p1, field), realize_sum(o, p0, field));
  std::vector<Interval> s0;
  std::vector<Interval> s1;
  for (const auto& l : p0) s0.push_back(realize(o, l));
  for (const auto& l : p1) s1.push_back(realize(o, l));

  // Each P_1 summand maps to its nearest P_0 neighbours: +1 to the left,
  // -1 to the right.
  std::vector<std::vector<int>> sign(p0.size(), std::vector<int>(p1.size(), 0));
  for (std::size_t q = 0; q < p1.size(); ++q) {
    std::optional<std::size_t> left;
    std::optional<std::size_t> right;
    for (std::size_t p = 0; p < p0.size(); ++p) {
      if (label_less(p0[p], p1[q])) {
        left = p;
      } else if (!right) {
        right = p;
      }
    }
    if (left && hom_dim(o, s1[q], s0[*left]) == 1) sign[*left][q] = 1;
    if (right && hom_dim(o, s1[q], s0[*right]) == 1) sign[*right][q] = -1;
  }

  std::vector<Matrix> comps;
  for (std::size_t c = 0; c < src.cell_count(); ++c) {
    const Interval cell = src.cell_interval(c);
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    for (std::size_t p = 0; p < s0.size(); ++p) {
      if (s0[p].contains(cell)) rows.push_back(p);
    }
    for (std::size_t q = 0; q < s1.size(); ++q) {
      if (s1[q].contains(cell)) cols.push_back(q);
    }
    Matrix m(rows.size(), cols.size(), field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t k = 0; k < cols.size(); ++k) m.set(r, k, Rational(sign[rows[r]][cols[k]]));
    }
    comps.push_back(std::move(m));
  }
  Morphism map{std::move(src), std::move(tgt), std::move(comps)};
  if (!is_valid(map)) throw InternalError("presentation of " + format_interval(i) + " does not commute");
  return {std::move(p1), std::move(p0), std::move(map)};
}

std::size_t ext_dim(const Orientation& o, const Interval& v, const Interval& w) {
  const ProjPresentation pres = proj_presentation(o, v);
  if (pres.p1.empty()) return 0;
  BarMultiset wb;
  wb.add(w);
  const TameRep mw = from_bars(o, wb);
  const std::size_t hom1 = hom_space_dim(pres.map.source, mw);
  const std::vector<Morphism> basis = hom_basis(pres.map.target, mw);
  std::size_t image_rank = 0;
  if (!basis.empty()) {
    Matrix stacked = flatten(compose(basis.front(), pres.map));
    for (std::size_t k = 1; k < basis.size(); ++k) {
      stacked = linalg::hstack(stacked, flatten(compose(basis[k], pres.map)));
    }
    image_rank = linalg::rank(stacked);
  }
  const std::size_t d = hom1 - image_rank;
  if (d > 1) {
    throw InternalError("Ext(" + format_interval(v) + ", " + format_interval(w) + ") has dimension " +
                        std::to_string(d));
  }
  return d;
}

TameRep kernel_of_projective_map(const Morphism& f) {
  if (!is_valid(f)) throw InputError("not a morphism: shapes or commuting squares fail");
  TameRep k = kernel(f);
  if (!is_projective_rep(k)) throw InternalError("kernel of a map between projectives is not projective");
  return k;
}

}  // namespace aquiver
