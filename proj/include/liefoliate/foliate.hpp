#pragma once

// Classification data for hyperpolar homogeneous foliations F_{Phi,V}:
// orthogonal subsets Phi of the simple roots, the hyperbolic spaces F_alpha
// H^{n_alpha} attached to them, and one representative per
// (diagram-automorphism orbit of Phi, dim V).

#include "liefoliate/parabolic.hpp"

#include <string_view>
#include <vector>

namespace liefoliate {

enum class DivisionAlgebra { R, C, H, O };

std::string_view to_string(DivisionAlgebra a);
/// Real dimension of the algebra: 1, 2, 4, 8.
int real_dimension(DivisionAlgebra a);

struct HyperbolicFactor {
  int alpha_index{0};
  DivisionAlgebra algebra{DivisionAlgebra::R};
  int n{0};  // dimension over the algebra
  int real_dim{0};
  bool operator==(const HyperbolicFactor&) const = default;
};

/// Independent sets of the diagram (including the empty set), ordered by
/// size and then lexicographically.
std::vector<PhiSubset> orthogonal_subsets(const DynkinDiagram& dd);

HyperbolicFactor hyperbolic_factor(const SymmetricSpace& space, int alpha_index);

struct FoliationClass {
  int rank{0};
  PhiSubset phi;                  // canonical (smallest) member of the orbit
  std::vector<PhiSubset> orbit;   // all members, sorted
  int dim_V{0};
  std::vector<HyperbolicFactor> factors;
  int dim_N{0};
  int leaf_dim{0};
  int codim{0};
  bool trivial{false};

  bool operator==(const FoliationClass&) const = default;
};

/// Orbits of the orthogonal subsets under diagram automorphisms; each orbit
/// sorted, orbits ordered by their smallest member.
std::vector<std::vector<PhiSubset>> orthogonal_subset_orbits(const DynkinDiagram& dd);

/// Classes ordered by (r_Phi, Phi, dim_V). The codim-0 class is dropped
/// unless include_trivial is set.
std::vector<FoliationClass> enumerate_foliations(const SymmetricSpace& space, bool include_trivial = false);

/// r_Phi + (r - r_Phi - dim_V).
int foliation_codimension(const FoliationClass& fc);

}  // namespace liefoliate
