#include "aquiver/ar.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "aquiver/decompose.hpp"
#include "aquiver/errors.hpp"
#include "aquiver/homological.hpp"

namespace aquiver {

namespace {

TameRep interval_rep(const Orientation& o, const Interval& i, Field field) {
  BarMultiset b;
  b.add(i);
  return from_bars(o, b, field);
}

// Segment sense when the closed interval [a, b] avoids all sinks and sources.
std::optional<Sense> open_segment_sense(const Orientation& o, const Rational& a, const Rational& b) {
  if (o.criticals_between(a, b) > 0 || o.is_critical(a) || o.is_critical(b)) return std::nullopt;
  return o.segment_index(a).sense;
}

ARSequence build(const Orientation& o, const Interval& left, const Interval& m1, const Interval& m2,
                 const Interval& right, Field field) {
  const std::vector<Rational> grid{left.lo().value(), left.hi().value()};
  const TameRep u = with_grid(interval_rep(o, left, field), grid);
  const TameRep v = with_grid(direct_sum(interval_rep(o, m1, field), interval_rep(o, m2, field)), grid);
  const TameRep w = with_grid(interval_rep(o, right, field), grid);
  std::vector<Matrix> fc;
  std::vector<Matrix> gc;
  for (std::size_t c = 0; c < v.cell_count(); ++c) {
    const Interval cell = v.cell_interval(c);
    std::vector<int> mid;
    if (m1.contains(cell)) mid.push_back(1);
    if (m2.contains(cell)) mid.push_back(-1);
    Matrix f(mid.size(), u.dims()[c], field);
    Matrix g(w.dims()[c], mid.size(), field);
    for (std::size_t k = 0; k < mid.size(); ++k) {
      if (u.dims()[c] == 1) f.set(k, 0, Rational(1));
      if (w.dims()[c] == 1) g.set(0, k, Rational(mid[k]));
    }
    fc.push_back(std::move(f));
    gc.push_back(std::move(g));
  }
  ShortSequence maps{make_morphism(u, v, std::move(fc)), make_morphism(v, w, std::move(gc))};
  return {left, {m1, m2}, right, std::move(maps)};
}

// Whether `target` is in the span of `vectors` (all flattened on one grid).
bool in_span(const std::vector<Matrix>& vectors, const Matrix& target) {
  if (vectors.empty()) return target.is_zero();
  Matrix a = vectors.front();
  for (std::size_t k = 1; k < vectors.size(); ++k) a = linalg::hstack(a, vectors[k]);
  return linalg::solve(a, target).has_value();
}

std::vector<Rational> union_grid(std::initializer_list<const TameRep*> reps) {
  std::vector<Rational> g;
  for (const auto* r : reps) g.insert(g.end(), r->grid().begin(), r->grid().end());
  return g;
}

// Does every map X -> W factor through g : V -> W?
bool factors_through_g(const Morphism& g, const TameRep& x) {
  const std::vector<Morphism> targets = hom_basis(x, g.target);
  if (targets.empty()) return true;
  const std::vector<Rational> grid = union_grid({&x, &g.source, &g.target});
  std::vector<Matrix> reachable;
  for (const auto& t : hom_basis(x, g.source)) reachable.push_back(flatten(with_grid(compose(g, t), grid)));
  for (const auto& h : targets) {
    if (!in_span(reachable, flatten(with_grid(h, grid)))) return false;
  }
  return true;
}

// Does every map U -> X factor through f : U -> V?
bool factors_through_f(const Morphism& f, const TameRep& x) {
  const std::vector<Morphism> targets = hom_basis(f.source, x);
  if (targets.empty()) return true;
  const std::vector<Rational> grid = union_grid({&x, &f.source, &f.target});
  std::vector<Matrix> reachable;
  for (const auto& t : hom_basis(f.target, x)) reachable.push_back(flatten(with_grid(compose(t, f), grid)));
  for (const auto& h : targets) {
    if (!in_span(reachable, flatten(with_grid(h, grid)))) return false;
  }
  return true;
}

// Is the identity of `id_of` in the span of the maps `candidates`?
bool identity_reachable(const std::vector<Morphism>& candidates, const TameRep& id_of) {
  const Morphism id = identity_morphism(id_of);
  std::vector<Rational> grid = id_of.grid();
  for (const auto& c : candidates) grid.insert(grid.end(), c.source.grid().begin(), c.source.grid().end());
  std::vector<Matrix> vecs;
  for (const auto& c : candidates) vecs.push_back(flatten(with_grid(c, grid)));
  return in_span(vecs, flatten(with_grid(id, grid)));
}

}  // namespace

std::string status_name(ARStatus s) {
  switch (s) {
    case ARStatus::exists:
      return "Exists";
    case ARStatus::proven_nonexistent:
      return "ProvenNonexistent";
    case ARStatus::out_of_paper_scope:
      return "OutOfPaperScope";
  }
  return "";
}

ARAnswer ar_ending_at(const Orientation& o, const Interval& w, Field field) {
  if (w.is_point()) {
    if (o.is_critical(w.lo().value())) return {ARStatus::out_of_paper_scope, std::nullopt};
    return {ARStatus::proven_nonexistent, std::nullopt};
  }
  if (!w.is_bounded()) return {ARStatus::out_of_paper_scope, std::nullopt};
  const Rational& a = w.lo().value();
  const Rational& b = w.hi().value();
  const auto sense = open_segment_sense(o, a, b);
  if (!sense) return {ARStatus::out_of_paper_scope, std::nullopt};
  if (*sense == Sense::same && !w.lo_closed() && w.hi_closed()) {
    return {ARStatus::exists, build(o, Interval::closed_open(a, b), Interval::closed(a, b),
                                    Interval::open(a, b), w, field)};
  }
  if (*sense == Sense::reversed && w.lo_closed() && !w.hi_closed()) {
    return {ARStatus::exists, build(o, Interval::open_closed(a, b), Interval::open(a, b),
                                    Interval::closed(a, b), w, field)};
  }
  return {ARStatus::out_of_paper_scope, std::nullopt};
}

ARAnswer ar_starting_at(const Orientation& o, const Interval& u, Field field) {
  if (u.is_point()) {
    if (o.is_critical(u.lo().value())) return {ARStatus::out_of_paper_scope, std::nullopt};
    return {ARStatus::proven_nonexistent, std::nullopt};
  }
  if (!u.is_bounded()) return {ARStatus::out_of_paper_scope, std::nullopt};
  const Rational& a = u.lo().value();
  const Rational& b = u.hi().value();
  const auto sense = open_segment_sense(o, a, b);
  if (!sense) return {ARStatus::out_of_paper_scope, std::nullopt};
  if (*sense == Sense::same && u.lo_closed() && !u.hi_closed()) {
    return ar_ending_at(o, Interval::open_closed(a, b), field);
  }
  if (*sense == Sense::reversed && !u.lo_closed() && u.hi_closed()) {
    return ar_ending_at(o, Interval::closed_open(a, b), field);
  }
  return {ARStatus::out_of_paper_scope, std::nullopt};
}

AlmostSplitReport check_almost_split(const ShortSequence& seq, const std::vector<Interval>& probes,
                                     unsigned threads) {
  AlmostSplitReport rep;
  const Morphism& f = seq.f;
  const Morphism& g = seq.g;
  if (!is_valid(f) || !is_valid(g)) return rep;

  const Morphism gf = compose(g, f);
  bool exact = is_zero(gf) && is_cellwise_injective(f) && is_cellwise_surjective(g);
  if (exact) {
    const Morphism ff = with_grid(f, g.source.grid());
    const Morphism gg = with_grid(g, f.source.grid());
    for (std::size_t c = 0; c < ff.components.size() && exact; ++c) {
      exact = linalg::rank(ff.components[c]) + linalg::rank(gg.components[c]) == ff.target.dims()[c];
    }
  }
  rep.exact = exact;

  std::vector<Morphism> retractions;
  for (const auto& r : hom_basis(f.target, f.source)) retractions.push_back(compose(r, f));
  std::vector<Morphism> sections;
  for (const auto& s : hom_basis(g.target, g.source)) sections.push_back(compose(g, s));
  rep.not_split = !identity_reachable(retractions, f.source) && !identity_reachable(sections, g.target);

  rep.ends_indecomposable = is_indecomposable(f.source) && is_indecomposable(g.target);

  const BarMultiset left_bars = decompose(f.source);
  const BarMultiset right_bars = decompose(g.target);
  const Orientation& o = f.source.orientation();
  const Field field = f.source.field();

  struct ProbeResult {
    bool used = false;
    bool left = true;
    bool right = true;
  };
  std::vector<ProbeResult> results(probes.size());
  auto run = [&](std::size_t k) {
    BarMultiset xb;
    xb.add(probes[k]);
    const TameRep x = from_bars(o, xb, field);
    ProbeResult r;
    if (!(xb == right_bars) && hom_space_dim(x, g.target) > 0) {
      r.used = true;
      r.right = factors_through_g(g, x);
    }
    if (!(xb == left_bars) && hom_space_dim(f.source, x) > 0) {
      r.used = true;
      r.left = factors_through_f(f, x);
    }
    results[k] = r;
  };
  threads = std::max(1u, threads);
  if (threads == 1 || probes.size() < 2) {
    for (std::size_t k = 0; k < probes.size(); ++k) run(k);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t k = t; k < probes.size(); k += threads) run(k);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& r : results) {
    if (r.used) ++rep.probes_used;
    rep.left_factorizations = rep.left_factorizations && r.left;
    rep.right_factorizations = rep.right_factorizations && r.right;
  }
  return rep;
}

bool verify_almost_split(const ARSequence& seq, const std::vector<Interval>& probes, unsigned threads) {
  return check_almost_split(seq.maps, probes, threads).ok();
}

std::vector<Interval> standard_probe_family(const Orientation& o, const ARSequence& seq, std::size_t count) {
  const Rational a = seq.left.lo().value();
  const Rational b = seq.left.hi().value();
  std::set<Rational> pts{a - 1, a, (a + b) / 2, b, b + 1};
  for (const auto& c : o.criticals()) {
    if (a - 2 <= c.pos && c.pos <= b + 2) pts.insert(c.pos);
  }
  std::vector<ExtReal> ends{ExtReal::neg_inf()};
  for (const auto& p : pts) ends.emplace_back(p);
  ends.push_back(ExtReal::pos_inf());

  std::vector<Interval> all;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i; j < ends.size(); ++j) {
      for (int mask = 0; mask < 4; ++mask) {
        if (auto iv = Interval::make(ends[i], ends[j], mask & 1, mask & 2)) {
          if (std::find(all.begin(), all.end(), *iv) == all.end()) all.push_back(*iv);
        }
      }
    }
  }
  const TameRep& u = seq.maps.f.source;
  const TameRep& w = seq.maps.g.target;
  std::vector<Interval> relevant;
  std::vector<Interval> rest;
  for (const auto& iv : all) {
    BarMultiset xb;
    xb.add(iv);
    const TameRep x = from_bars(o, xb, u.field());
    (hom_space_dim(x, w) > 0 || hom_space_dim(u, x) > 0 ? relevant : rest).push_back(iv);
  }
  relevant.insert(relevant.end(), rest.begin(), rest.end());
  if (relevant.size() > count) relevant.erase(relevant.begin() + static_cast<std::ptrdiff_t>(count), relevant.end());
  return relevant;
}

}  // namespace aquiver
