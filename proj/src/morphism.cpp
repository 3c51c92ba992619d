#include "aquiver/morphism.hpp"

#include "aquiver/errors.hpp"

namespace aquiver {

namespace {

Morphism unify(const Morphism& f, const std::vector<Rational>& grid) { return with_grid(f, grid); }

// Layout of the unknowns of a cellwise map v -> w: one row-major block per cell.
struct HomSystem {
  std::vector<std::size_t> offsets;
  std::size_t unknowns = 0;
  Matrix constraints;
};

HomSystem hom_system(const TameRep& v, const TameRep& w) {
  const Field field = v.field();
  HomSystem sys{{}, 0, Matrix(0, 0, field)};
  for (std::size_t c = 0; c < v.cell_count(); ++c) {
    sys.offsets.push_back(sys.unknowns);
    sys.unknowns += w.dims()[c] * v.dims()[c];
  }
  std::size_t equations = 0;
  for (std::size_t j = 0; j < v.junction_count(); ++j) {
    equations += w.dims()[v.junction_target(j)] * v.dims()[v.junction_source(j)];
  }
  Matrix a(equations, sys.unknowns, field);
  std::size_t row = 0;
  for (std::size_t j = 0; j < v.junction_count(); ++j) {
    const std::size_t s = v.junction_source(j);
    const std::size_t t = v.junction_target(j);
    const Matrix& wm = w.maps()[j];  // dw_t x dw_s
    const Matrix& vm = v.maps()[j];  // dv_t x dv_s
    const std::size_t dvs = v.dims()[s];
    const std::size_t dvt = v.dims()[t];
    const std::size_t dws = w.dims()[s];
    const std::size_t dwt = w.dims()[t];
    // wm * F_s - F_t * vm = 0, entry (r, c) for r < dw_t, c < dv_s.
    for (std::size_t r = 0; r < dwt; ++r) {
      for (std::size_t c = 0; c < dvs; ++c, ++row) {
        for (std::size_t k = 0; k < dws; ++k) {
          if (sgn(wm(r, k)) == 0) continue;
          const std::size_t col = sys.offsets[s] + k * dvs + c;
          a.set(row, col, field.add(a(row, col), wm(r, k)));
        }
        for (std::size_t k = 0; k < dvt; ++k) {
          if (sgn(vm(k, c)) == 0) continue;
          const std::size_t col = sys.offsets[t] + r * dvt + k;
          a.set(row, col, field.sub(a(row, col), vm(k, c)));
        }
      }
    }
  }
  sys.constraints = std::move(a);
  return sys;
}

}  // namespace

bool is_valid(const Morphism& f) {
  const TameRep& v = f.source;
  const TameRep& w = f.target;
  if (!(v.orientation() == w.orientation()) || !(v.field() == w.field()) || v.grid() != w.grid()) return false;
  if (f.components.size() != v.cell_count()) return false;
  for (std::size_t c = 0; c < v.cell_count(); ++c) {
    const Matrix& m = f.components[c];
    if (m.rows() != w.dims()[c] || m.cols() != v.dims()[c] || !(m.field() == v.field())) return false;
  }
  for (std::size_t j = 0; j < v.junction_count(); ++j) {
    const std::size_t s = v.junction_source(j);
    const std::size_t t = v.junction_target(j);
    if (!(w.maps()[j] * f.components[s] == f.components[t] * v.maps()[j])) return false;
  }
  return true;
}

Morphism make_morphism(const TameRep& source, const TameRep& target, std::vector<Matrix> components) {
  if (source.grid() != target.grid()) throw InputError("morphism source and target must share a grid");
  Morphism f{source, target, std::move(components)};
  if (!is_valid(f)) throw InputError("not a morphism: shapes or commuting squares fail");
  return f;
}

Morphism with_grid(const Morphism& f, const std::vector<Rational>& points) {
  TameRep v = with_grid(f.source, points);
  if (v.grid() == f.source.grid()) return f;
  TameRep w = with_grid(f.target, points);
  std::vector<Matrix> comps;
  for (std::size_t c = 0; c < v.cell_count(); ++c) {
    const Interval iv = v.cell_interval(c);
    comps.push_back(f.components[f.source.cell_of(sample_point(iv))]);
  }
  return Morphism{std::move(v), std::move(w), std::move(comps)};
}

Morphism zero_morphism(const TameRep& source, const TameRep& target) {
  auto [v, w] = on_common_grid(source, target);
  std::vector<Matrix> comps;
  for (std::size_t c = 0; c < v.cell_count(); ++c) comps.emplace_back(w.dims()[c], v.dims()[c], v.field());
  return Morphism{std::move(v), std::move(w), std::move(comps)};
}

Morphism identity_morphism(const TameRep& v) {
  std::vector<Matrix> comps;
  for (auto d : v.dims()) comps.push_back(Matrix::identity(d, v.field()));
  return Morphism{v, v, std::move(comps)};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  std::vector<Rational> grid = f.source.grid();
  grid.insert(grid.end(), g.source.grid().begin(), g.source.grid().end());
  const Morphism ff = unify(f, grid);
  const Morphism gg = unify(g, grid);
  if (ff.target.dims() != gg.source.dims()) throw InputError("cannot compose: middle representations differ");
  std::vector<Matrix> comps;
  for (std::size_t c = 0; c < ff.components.size(); ++c) comps.push_back(gg.components[c] * ff.components[c]);
  return Morphism{ff.source, gg.target, std::move(comps)};
}

Morphism operator+(const Morphism& a, const Morphism& b) {
  std::vector<Rational> grid = a.source.grid();
  grid.insert(grid.end(), b.source.grid().begin(), b.source.grid().end());
  const Morphism x = unify(a, grid);
  const Morphism y = unify(b, grid);
  std::vector<Matrix> comps;
  for (std::size_t c = 0; c < x.components.size(); ++c) comps.push_back(x.components[c] + y.components[c]);
  return Morphism{x.source, x.target, std::move(comps)};
}

Morphism scaled(const Morphism& f, const Rational& s) {
  Morphism g = f;
  for (auto& m : g.components) m = m.scaled(s);
  return g;
}

std::vector<Morphism> hom_basis(const TameRep& v0, const TameRep& w0) {
  auto [v, w] = on_common_grid(v0, w0);
  const HomSystem sys = hom_system(v, w);
  const Matrix k = linalg::kernel_basis(sys.constraints);
  std::vector<Morphism> basis;
  for (std::size_t b = 0; b < k.cols(); ++b) {
    std::vector<Matrix> comps;
    for (std::size_t c = 0; c < v.cell_count(); ++c) {
      Matrix m(w.dims()[c], v.dims()[c], v.field());
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t q = 0; q < m.cols(); ++q) m.set(r, q, k(sys.offsets[c] + r * m.cols() + q, b));
      }
      comps.push_back(std::move(m));
    }
    basis.push_back(Morphism{v, w, std::move(comps)});
  }
  return basis;
}

std::size_t hom_space_dim(const TameRep& v0, const TameRep& w0) {
  auto [v, w] = on_common_grid(v0, w0);
  const HomSystem sys = hom_system(v, w);
  return sys.unknowns - linalg::rank(sys.constraints);
}

TameRep kernel(const Morphism& f) {
  const TameRep& v = f.source;
  std::vector<Matrix> bases;
  std::vector<std::size_t> dims;
  for (const auto& m : f.components) {
    bases.push_back(linalg::kernel_basis(m));
    dims.push_back(bases.back().cols());
  }
  std::vector<Matrix> maps;
  for (std::size_t j = 0; j < v.junction_count(); ++j) {
    const std::size_t s = v.junction_source(j);
    const std::size_t t = v.junction_target(j);
    auto sol = linalg::solve(bases[t], v.maps()[j] * bases[s]);
    if (!sol) throw InternalError("kernel is not a subrepresentation");
    maps.push_back(std::move(sol->x));
  }
  return TameRep(v.orientation(), v.grid(), std::move(dims), std::move(maps), v.field());
}

TameRep cokernel(const Morphism& f) {
  const TameRep& w = f.target;
  std::vector<Matrix> quotients;  // rows span the annihilator of the image
  std::vector<std::size_t> dims;
  for (const auto& m : f.components) {
    quotients.push_back(linalg::kernel_basis(m.transpose()).transpose());
    dims.push_back(quotients.back().rows());
  }
  std::vector<Matrix> maps;
  for (std::size_t j = 0; j < w.junction_count(); ++j) {
    const std::size_t s = w.junction_source(j);
    const std::size_t t = w.junction_target(j);
    auto sol = linalg::solve(quotients[s].transpose(), (quotients[t] * w.maps()[j]).transpose());
    if (!sol) throw InternalError("image is not a subrepresentation");
    maps.push_back(sol->x.transpose());
  }
  return TameRep(w.orientation(), w.grid(), std::move(dims), std::move(maps), w.field());
}

bool is_cellwise_injective(const Morphism& f) {
  for (const auto& m : f.components) {
    if (linalg::rank(m) != m.cols()) return false;
  }
  return true;
}

bool is_cellwise_surjective(const Morphism& f) {
  for (const auto& m : f.components) {
    if (linalg::rank(m) != m.rows()) return false;
  }
  return true;
}

bool is_zero(const Morphism& f) {
  for (const auto& m : f.components) {
    if (!m.is_zero()) return false;
  }
  return true;
}

Matrix flatten(const Morphism& f) {
  std::vector<Rational> entries;
  for (const auto& m : f.components) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(m(r, c));
    }
  }
  return Matrix::column_vector(entries, f.source.field());
}

}  // namespace aquiver
