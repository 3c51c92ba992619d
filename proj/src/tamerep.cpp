#include "aquiver/tamerep.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "aquiver/errors.hpp"

namespace aquiver {

namespace {

std::size_t source_cell(MapDirection d, std::size_t junction) {
  return d == MapDirection::down ? junction + 1 : junction;
}

std::size_t target_cell(MapDirection d, std::size_t junction) {
  return d == MapDirection::down ? junction : junction + 1;
}

std::vector<Rational> sorted_unique(std::vector<Rational> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Adds the sinks and sources that fall inside the hull of pts.
std::vector<Rational> close_grid(const Orientation& o, std::vector<Rational> pts) {
  pts = sorted_unique(std::move(pts));
  if (pts.empty()) return pts;
  const Rational lo = pts.front();
  const Rational hi = pts.back();
  for (const auto& c : o.criticals()) {
    if (lo <= c.pos && c.pos <= hi) pts.push_back(c.pos);
  }
  return sorted_unique(std::move(pts));
}

}  // namespace

Interval cell_interval(const std::vector<Rational>& grid, std::size_t cell) {
  const std::size_t m = grid.size();
  if (cell > 2 * m) throw InputError("cell index out of range");
  if (cell % 2 == 1) return Interval::point(grid[(cell - 1) / 2]);
  const std::size_t i = cell / 2;
  ExtReal lo = i == 0 ? ExtReal::neg_inf() : ExtReal(grid[i - 1]);
  ExtReal hi = i == m ? ExtReal::pos_inf() : ExtReal(grid[i]);
  return Interval::open(lo, hi);
}

std::vector<MapDirection> junction_directions(const Orientation& o, const std::vector<Rational>& grid) {
  std::vector<MapDirection> dirs;
  dirs.reserve(2 * grid.size());
  for (std::size_t j = 0; j < 2 * grid.size(); ++j) {
    const Sense s = j % 2 == 0 ? o.sense_below(grid[j / 2]) : o.sense_above(grid[(j - 1) / 2]);
    dirs.push_back(s == Sense::same ? MapDirection::down : MapDirection::up);
  }
  return dirs;
}

TameRep::TameRep(Orientation orientation, std::vector<Rational> grid, std::vector<std::size_t> dims,
                 std::vector<Matrix> maps, Field field)
    : orientation_(std::move(orientation)),
      grid_(std::move(grid)),
      dims_(std::move(dims)),
      maps_(std::move(maps)),
      field_(field) {
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    if (grid_[i - 1] >= grid_[i]) throw InputError("grid must be strictly increasing");
  }
  if (!grid_.empty()) {
    for (const auto& c : orientation_.criticals()) {
      if (grid_.front() <= c.pos && c.pos <= grid_.back() &&
          !std::binary_search(grid_.begin(), grid_.end(), c.pos)) {
        throw InputError("sink/source " + format_rational(c.pos) + " inside the grid hull is not a grid point");
      }
    }
  }
  if (dims_.size() != 2 * grid_.size() + 1) {
    throw InputError("expected " + std::to_string(2 * grid_.size() + 1) + " cell dimensions, got " +
                     std::to_string(dims_.size()));
  }
  if (maps_.size() != 2 * grid_.size()) {
    throw InputError("expected " + std::to_string(2 * grid_.size()) + " junction maps, got " +
                     std::to_string(maps_.size()));
  }
  directions_ = junction_directions(orientation_, grid_);
  for (std::size_t j = 0; j < maps_.size(); ++j) {
    const Matrix& m = maps_[j];
    if (!(m.field() == field_)) throw InputError("junction map over the wrong field");
    const std::size_t rows = dims_[target_cell(directions_[j], j)];
    const std::size_t cols = dims_[source_cell(directions_[j], j)];
    if (m.rows() != rows || m.cols() != cols) {
      throw InputError("junction " + std::to_string(j) + " map has shape " + std::to_string(m.rows()) +
                       "x" + std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                       std::to_string(cols));
    }
  }
}

TameRep TameRep::zero(Orientation orientation, Field field) {
  return TameRep(std::move(orientation), {}, {0}, {}, field);
}

std::size_t TameRep::junction_source(std::size_t junction) const {
  return source_cell(directions_[junction], junction);
}

std::size_t TameRep::junction_target(std::size_t junction) const {
  return target_cell(directions_[junction], junction);
}

std::size_t TameRep::cell_of(const Rational& x) const {
  const auto it = std::lower_bound(grid_.begin(), grid_.end(), x);
  const auto k = static_cast<std::size_t>(it - grid_.begin());
  if (it != grid_.end() && *it == x) return 2 * k + 1;
  return 2 * k;
}

Interval TameRep::cell_interval(std::size_t cell) const { return aquiver::cell_interval(grid_, cell); }

std::size_t TameRep::total_dim() const {
  std::size_t n = 0;
  for (auto d : dims_) n += d;
  return n;
}

bool TameRep::is_zero() const { return total_dim() == 0; }

bool operator==(const TameRep& a, const TameRep& b) {
  return a.orientation_ == b.orientation_ && a.field_ == b.field_ && a.grid_ == b.grid_ &&
         a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

TameRep from_bars(const Orientation& o, const BarMultiset& bars, Field field) {
  std::vector<Rational> pts;
  for (const auto& [bar, mult] : bars) {
    if (bar.lo().is_finite()) pts.push_back(bar.lo().value());
    if (bar.hi().is_finite()) pts.push_back(bar.hi().value());
  }
  std::vector<Rational> grid = close_grid(o, std::move(pts));
  const std::size_t cells = 2 * grid.size() + 1;

  // For every cell, the list of bar copies (by global index) alive there.
  std::vector<std::vector<std::size_t>> alive(cells);
  std::size_t copy = 0;
  for (const auto& [bar, mult] : bars) {
    for (std::size_t c = 0; c < cells; ++c) {
      if (bar.contains(cell_interval(grid, c))) {
        for (std::size_t k = 0; k < mult; ++k) alive[c].push_back(copy + k);
      }
    }
    copy += mult;
  }

  std::vector<std::size_t> dims(cells);
  for (std::size_t c = 0; c < cells; ++c) dims[c] = alive[c].size();
  const auto dirs = junction_directions(o, grid);
  std::vector<Matrix> maps;
  for (std::size_t j = 0; j + 1 < cells; ++j) {
    const std::size_t s = source_cell(dirs[j], j);
    const std::size_t t = target_cell(dirs[j], j);
    Matrix m(dims[t], dims[s], field);
    for (std::size_t col = 0; col < alive[s].size(); ++col) {
      const auto& tgt = alive[t];
      auto it = std::find(tgt.begin(), tgt.end(), alive[s][col]);
      if (it != tgt.end()) m.set(static_cast<std::size_t>(it - tgt.begin()), col, Rational(1));
    }
    maps.push_back(std::move(m));
  }
  return TameRep(o, std::move(grid), std::move(dims), std::move(maps), field);
}

TameRep with_grid(const TameRep& v, const std::vector<Rational>& points) {
  std::vector<Rational> all = v.grid();
  all.insert(all.end(), points.begin(), points.end());
  std::vector<Rational> grid = close_grid(v.orientation(), std::move(all));
  if (grid == v.grid()) return v;

  const std::size_t cells = 2 * grid.size() + 1;
  std::vector<std::size_t> old_cell(cells);
  std::vector<std::size_t> dims(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    const Interval iv = cell_interval(grid, c);
    old_cell[c] = v.cell_of(sample_point(iv));
    dims[c] = v.dims()[old_cell[c]];
  }
  std::vector<Matrix> maps;
  for (std::size_t j = 0; j + 1 < cells; ++j) {
    const std::size_t a = old_cell[j];
    const std::size_t b = old_cell[j + 1];
    if (a == b) {
      maps.push_back(Matrix::identity(dims[j], v.field()));
    } else {
      // a and b are adjacent old cells joined by old junction min(a, b).
      maps.push_back(v.maps()[std::min(a, b)]);
    }
  }
  return TameRep(v.orientation(), std::move(grid), std::move(dims), std::move(maps), v.field());
}

std::pair<TameRep, TameRep> on_common_grid(const TameRep& a, const TameRep& b) {
  if (!(a.orientation() == b.orientation())) throw InputError("representations over different orientations");
  if (!(a.field() == b.field())) throw InputError("representations over different fields");
  return {with_grid(a, b.grid()), with_grid(b, a.grid())};
}

TameRep change_basis(const TameRep& v, const std::vector<Matrix>& basis) {
  if (basis.size() != v.cell_count()) throw InputError("one basis matrix per cell expected");
  std::vector<Matrix> inverses;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (basis[c].rows() != v.dims()[c] || basis[c].cols() != v.dims()[c]) {
      throw InputError("basis change has the wrong shape at cell " + std::to_string(c));
    }
    auto inv = linalg::inverse(basis[c]);
    if (!inv) throw InputError("basis change is not invertible at cell " + std::to_string(c));
    inverses.push_back(std::move(*inv));
  }
  std::vector<Matrix> maps;
  for (std::size_t j = 0; j < v.junction_count(); ++j) {
    maps.push_back(basis[v.junction_target(j)] * v.maps()[j] * inverses[v.junction_source(j)]);
  }
  return TameRep(v.orientation(), v.grid(), v.dims(), std::move(maps), v.field());
}

TameRep scramble(const TameRep& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Matrix> basis;
  for (auto d : v.dims()) basis.push_back(linalg::random_invertible(d, v.field(), rng));
  return change_basis(v, basis);
}

TameRep restrict(const TameRep& v, const Interval& j) {
  std::vector<Rational> pts;
  if (j.lo().is_finite()) pts.push_back(j.lo().value());
  if (j.hi().is_finite()) pts.push_back(j.hi().value());
  const TameRep r = with_grid(v, pts);
  std::vector<bool> keep(r.cell_count());
  std::vector<std::size_t> dims(r.cell_count());
  for (std::size_t c = 0; c < r.cell_count(); ++c) {
    keep[c] = j.contains(r.cell_interval(c));
    dims[c] = keep[c] ? r.dims()[c] : 0;
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < r.junction_count(); ++k) {
    const std::size_t s = r.junction_source(k);
    const std::size_t t = r.junction_target(k);
    if (keep[s] && keep[t]) {
      maps.push_back(r.maps()[k]);
    } else {
      maps.emplace_back(dims[t], dims[s], r.field());
    }
  }
  return TameRep(r.orientation(), r.grid(), std::move(dims), std::move(maps), r.field());
}

TameRep direct_sum(const TameRep& a, const TameRep& b) {
  auto [x, y] = on_common_grid(a, b);
  std::vector<std::size_t> dims(x.cell_count());
  for (std::size_t c = 0; c < dims.size(); ++c) dims[c] = x.dims()[c] + y.dims()[c];
  std::vector<Matrix> maps;
  for (std::size_t j = 0; j < x.junction_count(); ++j) {
    const Matrix& p = x.maps()[j];
    const Matrix& q = y.maps()[j];
    Matrix m(p.rows() + q.rows(), p.cols() + q.cols(), x.field());
    for (std::size_t r = 0; r < p.rows(); ++r) {
      for (std::size_t c = 0; c < p.cols(); ++c) m.set(r, c, p(r, c));
    }
    for (std::size_t r = 0; r < q.rows(); ++r) {
      for (std::size_t c = 0; c < q.cols(); ++c) m.set(p.rows() + r, p.cols() + c, q(r, c));
    }
    maps.push_back(std::move(m));
  }
  return TameRep(x.orientation(), x.grid(), std::move(dims), std::move(maps), x.field());
}

TameRep dual(const TameRep& v) {
  std::vector<Matrix> maps;
  for (const auto& m : v.maps()) maps.push_back(m.transpose());
  return TameRep(reverse(v.orientation()), v.grid(), v.dims(), std::move(maps), v.field());
}

std::size_t dim_at(const TameRep& v, const Rational& x) { return v.dims()[v.cell_of(x)]; }

}  // namespace aquiver
