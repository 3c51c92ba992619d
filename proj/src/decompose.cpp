#include "aquiver/decompose.hpp"

#include <algorithm>
#include <numeric>

#include "aquiver/errors.hpp"

namespace aquiver {

namespace {

// A bar alive at the current cell. Keys order the permitted basis changes:
// a column may absorb multiples of columns whose key is not larger.
struct Track {
  std::size_t birth;
  long key;
};

struct CellBar {
  std::size_t birth;
  std::size_t death;
};

Interval cell_bar_interval(const std::vector<Rational>& grid, const CellBar& b) {
  ExtReal lo;
  ExtReal hi;
  bool lo_closed;
  bool hi_closed;
  if (b.birth % 2 == 1) {
    lo = grid[(b.birth - 1) / 2];
    lo_closed = true;
  } else {
    lo = b.birth == 0 ? ExtReal::neg_inf() : ExtReal(grid[b.birth / 2 - 1]);
    lo_closed = false;
  }
  if (b.death % 2 == 1) {
    hi = grid[(b.death - 1) / 2];
    hi_closed = true;
  } else {
    hi = b.death == 2 * grid.size() ? ExtReal::pos_inf() : ExtReal(grid[b.death / 2]);
    hi_closed = false;
  }
  return Interval(lo, hi, lo_closed, hi_closed);
}

Matrix columns(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix out(m.rows(), idx.size(), m.field());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) out.set(r, c, m(r, idx[c]));
  }
  return out;
}

class Reducer {
 public:
  explicit Reducer(const TameRep& v) : v_(v), basis_(Matrix::identity(v.dims()[0], v.field())) {
    for (std::size_t i = 0; i < v.dims()[0]; ++i) alive_.push_back({0, 0});
  }

  std::vector<CellBar> run() {
    for (std::size_t k = 0; k < v_.junction_count(); ++k) {
      if (v_.direction(k) == MapDirection::up) {
        forward(k);
      } else {
        backward(k);
      }
    }
    const std::size_t last = v_.cell_count() - 1;
    for (const auto& t : alive_) finished_.push_back({t.birth, last});
    return finished_;
  }

 private:
  std::vector<std::size_t> key_order() const {
    std::vector<std::size_t> order(alive_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return alive_[a].key < alive_[b].key; });
    return order;
  }

  // V_k -> V_{k+1}. A column dies when its image lies in the span of the
  // images of columns with smaller or equal key processed before it.
  void forward(std::size_t k) {
    const Field field = v_.field();
    const Matrix images = v_.maps()[k] * basis_;
    const std::size_t next_dim = v_.dims()[k + 1];
    std::vector<Track> next;
    std::vector<std::size_t> survivors;
    Matrix span(next_dim, 0, field);
    std::size_t span_rank = 0;
    for (std::size_t i : key_order()) {
      Matrix candidate = linalg::hstack(span, images.column(i));
      const std::size_t r = linalg::rank(candidate);
      if (r == span_rank) {
        finished_.push_back({alive_[i].birth, k});
      } else {
        span = std::move(candidate);
        span_rank = r;
        survivors.push_back(i);
        next.push_back(alive_[i]);
      }
    }
    // Complete the surviving images to a basis; the new vectors are born here.
    const Matrix full = linalg::hstack(span, Matrix::identity(next_dim, field));
    const auto pivots = linalg::rref(full).pivots;
    Matrix new_basis = span;
    for (std::size_t p : pivots) {
      if (p < span.cols()) continue;
      new_basis = linalg::hstack(new_basis, full.column(p));
      next.push_back({k + 1, static_cast<long>(k + 1)});
    }
    basis_ = std::move(new_basis);
    alive_ = std::move(next);
  }

  // V_{k+1} -> V_k. The image is spanned by vectors whose leading coordinate
  // (by key) is distinct; those columns continue, the rest die at k.
  void backward(std::size_t k) {
    const Field field = v_.field();
    const Matrix& g = v_.maps()[k];  // dims[k] x dims[k+1]
    const Matrix image = linalg::column_space_basis(g);
    const std::size_t d = alive_.size();
    std::vector<Track> next;
    Matrix new_basis(v_.dims()[k + 1], 0, field);
    if (image.cols() > 0) {
      auto coords = linalg::solve(basis_, image);
      if (!coords) throw InternalError("basis does not span the cell");
      // Coordinates ordered by decreasing key, so each echelon row starts at
      // its highest-key entry.
      std::vector<std::size_t> order = key_order();
      std::reverse(order.begin(), order.end());
      const Matrix rows = columns(coords->x.transpose(), order);
      const linalg::Echelon ech = linalg::rref(rows);
      std::vector<bool> pivot(d, false);
      for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        const std::size_t col = order[ech.pivots[r]];
        pivot[col] = true;
        Matrix y(d, 1, field);
        for (std::size_t c = 0; c < d; ++c) y.set(order[c], 0, ech.reduced(r, c));
        auto pre = linalg::solve(g, basis_ * y);
        if (!pre) throw InternalError("image vector has no preimage");
        new_basis = linalg::hstack(new_basis, pre->x);
        next.push_back(alive_[col]);
      }
      for (std::size_t i = 0; i < d; ++i) {
        if (!pivot[i]) finished_.push_back({alive_[i].birth, k});
      }
    } else {
      for (const auto& t : alive_) finished_.push_back({t.birth, k});
    }
    const Matrix ker = linalg::kernel_basis(g);
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      new_basis = linalg::hstack(new_basis, ker.column(c));
      next.push_back({k + 1, -static_cast<long>(k + 1)});
    }
    basis_ = std::move(new_basis);
    alive_ = std::move(next);
  }

  const TameRep& v_;
  Matrix basis_;
  std::vector<Track> alive_;
  std::vector<CellBar> finished_;
};

}  // namespace

BarMultiset decompose(const TameRep& v) {
  BarMultiset out;
  for (const auto& b : Reducer(v).run()) out.add(cell_bar_interval(v.grid(), b));
  return out;
}

std::size_t multiplicity(const TameRep& v, const Interval& i) { return decompose(v).multiplicity(i); }

bool iso(const TameRep& a, const TameRep& b) {
  if (!(a.orientation() == b.orientation())) throw InputError("representations over different orientations");
  return decompose(a) == decompose(b);
}

bool looks_like_interval_module(const TameRep& v) {
  std::size_t first = v.cell_count();
  std::size_t last = 0;
  for (std::size_t c = 0; c < v.cell_count(); ++c) {
    if (v.dims()[c] > 1) return false;
    if (v.dims()[c] == 1) {
      first = std::min(first, c);
      last = c;
    }
  }
  if (first == v.cell_count()) return false;
  for (std::size_t c = first; c <= last; ++c) {
    if (v.dims()[c] == 0) return false;
  }
  for (std::size_t j = first; j < last; ++j) {
    if (v.maps()[j].is_zero()) return false;
  }
  return true;
}

bool is_indecomposable(const TameRep& v) {
  const bool by_bars = decompose(v).total() == 1;
  if (by_bars != looks_like_interval_module(v)) {
    throw InternalError("decomposition disagrees with the interval-module criterion");
  }
  return by_bars;
}

}  // namespace aquiver
