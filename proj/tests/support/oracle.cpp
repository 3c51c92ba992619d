#include "oracle.hpp"

#include "aquiver/morphism.hpp"

namespace aquiver::testing {

namespace {

// The subrepresentation spanned cellwise by the columns of `bases`.
TameRep subrep(const TameRep& v, const std::vector<Matrix>& bases) {
  std::vector<std::size_t> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  std::vector<Matrix> maps;
  for (std::size_t j = 0; j < v.junction_count(); ++j) {
    const std::size_t s = v.junction_source(j);
    const std::size_t t = v.junction_target(j);
    auto sol = linalg::solve(bases[t], v.maps()[j] * bases[s]);
    if (!sol) throw OracleError("Fitting piece is not a subrepresentation");
    maps.push_back(sol->x);
  }
  return TameRep(v.orientation(), v.grid(), std::move(dims), std::move(maps), v.field());
}

Interval support_interval(const TameRep& v) {
  std::size_t first = v.cell_count();
  std::size_t last = 0;
  for (std::size_t c = 0; c < v.cell_count(); ++c) {
    if (v.dims()[c] > 1) throw OracleError("piece with a one-dimensional End has a cell of dimension > 1");
    if (v.dims()[c] == 1) {
      if (first == v.cell_count()) first = c;
      last = c;
    }
  }
  for (std::size_t c = first; c <= last; ++c) {
    if (v.dims()[c] == 0) throw OracleError("piece with a one-dimensional End has disconnected support");
  }
  const Interval a = v.cell_interval(first);
  const Interval b = v.cell_interval(last);
  return Interval(a.lo(), b.hi(), a.lo_closed(), b.hi_closed());
}

void run(const TameRep& v, BarMultiset& out) {
  if (v.is_zero()) return;
  const std::vector<Morphism> end = hom_basis(v, v);
  if (end.size() == 1) {
    out.add(support_interval(v));
    return;
  }
  const std::size_t r = end.size();
  if (r > 40) throw OracleError("endomorphism algebra too large to search");
  std::size_t n = 0;
  for (auto d : v.dims()) n = std::max(n, d);
  const std::uint64_t count = std::uint64_t{1} << r;
  const std::uint64_t mask = count - 1;
  // Visit every nonzero element once, in an order that mixes low and high bits.
  const std::uint64_t step = 0x9E3779B97F4A7C15ull | 1u;
  for (std::uint64_t t = 1; t < count; ++t) {
    const std::uint64_t code = (t * step) & mask;
    if (code == 0) continue;
    std::vector<Matrix> phi;
    for (std::size_t c = 0; c < v.cell_count(); ++c) phi.emplace_back(v.dims()[c], v.dims()[c], v.field());
    for (std::size_t k = 0; k < r; ++k) {
      if ((code >> k & 1u) == 0) continue;
      for (std::size_t c = 0; c < v.cell_count(); ++c) phi[c] = phi[c] + end[k].components[c];
    }
    std::vector<Matrix> power = phi;
    for (std::size_t e = 1; e < n; ++e) {
      for (std::size_t c = 0; c < v.cell_count(); ++c) power[c] = power[c] * phi[c];
    }
    std::size_t image_total = 0;
    for (const auto& m : power) image_total += linalg::rank(m);
    if (image_total == 0 || image_total == v.total_dim()) continue;
    std::vector<Matrix> images;
    std::vector<Matrix> kernels;
    for (const auto& m : power) {
      images.push_back(linalg::column_space_basis(m));
      kernels.push_back(linalg::kernel_basis(m));
    }
    run(subrep(v, images), out);
    run(subrep(v, kernels), out);
    return;
  }
  throw OracleError("decomposable-looking representation without a splitting idempotent");
}

}  // namespace

BarMultiset brute_force_decompose(const TameRep& v) {
  BarMultiset out;
  run(v, out);
  return out;
}

}  // namespace aquiver::testing
