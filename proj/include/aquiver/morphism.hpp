#pragma once

#include <vector>

#include "aquiver/tamerep.hpp"

namespace aquiver {

/// A morphism of representations given cellwise. Source and target share one
/// grid; components[j] has shape target.dims()[j] x source.dims()[j].
struct Morphism {
  TameRep source;
  TameRep target;
  std::vector<Matrix> components;
};

/// Checks shapes and that every junction square commutes.
bool is_valid(const Morphism& f);

/// Refines source and target to a common grid and validates; throws
/// InputError if the data is not a morphism.
Morphism make_morphism(const TameRep& source, const TameRep& target, std::vector<Matrix> components);

/// The morphism on a finer grid.
Morphism with_grid(const Morphism& f, const std::vector<Rational>& points);

Morphism zero_morphism(const TameRep& source, const TameRep& target);
Morphism identity_morphism(const TameRep& v);

/// g after f. The grids are unified first.
Morphism compose(const Morphism& g, const Morphism& f);

Morphism operator+(const Morphism& a, const Morphism& b);
Morphism scaled(const Morphism& f, const Rational& s);

/// A basis of Hom(v, w), all on the common grid of v and w.
std::vector<Morphism> hom_basis(const TameRep& v, const TameRep& w);

/// dim Hom(v, w) without building the basis.
std::size_t hom_space_dim(const TameRep& v, const TameRep& w);

/// Cellwise kernel and cokernel representations.
TameRep kernel(const Morphism& f);
TameRep cokernel(const Morphism& f);

bool is_cellwise_injective(const Morphism& f);
bool is_cellwise_surjective(const Morphism& f);
bool is_zero(const Morphism& f);

/// Concatenation of all component entries, cell by cell and row-major; the
/// coordinates of f inside the space of cellwise linear maps.
Matrix flatten(const Morphism& f);

}  // namespace aquiver
