#pragma once

#include <cstdint>
#include <vector>

#include "aquiver/interval.hpp"
#include "aquiver/linalg.hpp"
#include "aquiver/orientation.hpp"

namespace aquiver {

/// Which way the structure map across a junction points: towards the cell
/// with the lower index (`down`) or the higher one (`up`).
enum class MapDirection { down, up };

/// A finitely generated representation, stored as exact data on the cells
/// cut out by a finite grid c_1 < ... < c_m:
///
///   cell 0 = (-inf, c_1), cell 1 = {c_1}, cell 2 = (c_1, c_2), ...,
///   cell 2m = (c_m, +inf).
///
/// The representation is constant on each cell (all internal maps are
/// identities). Junction j joins cells j and j+1; its map points in the
/// direction the orientation dictates there, so a `down` map has shape
/// dims[j] x dims[j+1] and an `up` map dims[j+1] x dims[j].
///
/// Every sink or source lying in [c_1, c_m] must be a grid point. Sinks and
/// sources outside the hull may sit inside an unbounded cell; the space is
/// then constant across them.
class TameRep {
 public:
  /// Validates everything listed above; throws InputError on violations.
  TameRep(Orientation orientation, std::vector<Rational> grid, std::vector<std::size_t> dims,
          std::vector<Matrix> maps, Field field);

  static TameRep zero(Orientation orientation, Field field = Field::rationals());

  const Orientation& orientation() const { return orientation_; }
  const std::vector<Rational>& grid() const { return grid_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<Matrix>& maps() const { return maps_; }
  const Field& field() const { return field_; }

  std::size_t cell_count() const { return dims_.size(); }
  std::size_t junction_count() const { return maps_.size(); }
  MapDirection direction(std::size_t junction) const { return directions_[junction]; }
  /// Cell index the junction map starts from / ends at.
  std::size_t junction_source(std::size_t junction) const;
  std::size_t junction_target(std::size_t junction) const;

  std::size_t cell_of(const Rational& x) const;
  Interval cell_interval(std::size_t cell) const;
  std::size_t total_dim() const;
  bool is_zero() const;

  friend bool operator==(const TameRep& a, const TameRep& b);

 private:
  Orientation orientation_;
  std::vector<Rational> grid_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
  std::vector<MapDirection> directions_;
  Field field_;
};

/// Map directions for every junction of `grid` under `o`.
std::vector<MapDirection> junction_directions(const Orientation& o, const std::vector<Rational>& grid);

/// The interval covered by a cell of the given grid.
Interval cell_interval(const std::vector<Rational>& grid, std::size_t cell);

/// Canonical realisation of a direct sum of interval modules: each copy of a
/// bar contributes one basis vector on the cells it covers, and junction maps
/// are 0/1 matrices carrying a bar's vector to itself.
TameRep from_bars(const Orientation& o, const BarMultiset& bars, Field field = Field::rationals());

/// The same representation on a finer grid. `points` are added along with any
/// sinks or sources inside the new hull.
TameRep with_grid(const TameRep& v, const std::vector<Rational>& points);

/// Both representations on the union of their grids. Throws InputError when
/// orientations or fields differ.
std::pair<TameRep, TameRep> on_common_grid(const TameRep& a, const TameRep& b);

/// Applies the cellwise isomorphisms `basis[j]`: each map M from cell s to
/// cell t becomes basis[t] * M * basis[s]^-1.
TameRep change_basis(const TameRep& v, const std::vector<Matrix>& basis);

/// change_basis with random invertible matrices drawn from `seed`.
TameRep scramble(const TameRep& v, std::uint64_t seed);

/// V_J: unchanged on J, zero elsewhere.
TameRep restrict(const TameRep& v, const Interval& j);

TameRep direct_sum(const TameRep& a, const TameRep& b);

/// The dual representation over the opposite orientation: same grid and
/// dimensions, every map transposed.
TameRep dual(const TameRep& v);

std::size_t dim_at(const TameRep& v, const Rational& x);

}  // namespace aquiver
