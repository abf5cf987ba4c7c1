#include "liefoliate/foliate.hpp"

#include "liefoliate/errors.hpp"

#include <algorithm>
#include <functional>

namespace liefoliate {

std::string_view to_string(DivisionAlgebra a) {
  switch (a) {
    case DivisionAlgebra::R: return "R";
    case DivisionAlgebra::C: return "C";
    case DivisionAlgebra::H: return "H";
    case DivisionAlgebra::O: return "O";
  }
  return "?";
}

int real_dimension(DivisionAlgebra a) {
  switch (a) {
    case DivisionAlgebra::R: return 1;
    case DivisionAlgebra::C: return 2;
    case DivisionAlgebra::H: return 4;
    case DivisionAlgebra::O: return 8;
  }
  return 0;
}

std::vector<PhiSubset> orthogonal_subsets(const DynkinDiagram& dd) {
  const int r = dd.rank;
  std::vector<PhiSubset> out;
  std::vector<int> current;
  // Branch on each vertex in order; a vertex may join only if it is not
  // adjacent to anything already chosen.
  std::function<void(int)> grow = [&](int v) {
    if (v > r) {
      out.emplace_back(current, r);
      return;
    }
    grow(v + 1);
    if (std::none_of(current.begin(), current.end(), [&](int u) { return dd.adjacent(u, v); })) {
      current.push_back(v);
      grow(v + 1);
      current.pop_back();
    }
  };
  grow(1);
  std::sort(out.begin(), out.end(), [](const PhiSubset& a, const PhiSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
  });
  return out;
}

HyperbolicFactor hyperbolic_factor(const SymmetricSpace& space, int alpha_index) {
  if (alpha_index < 1 || alpha_index > space.rank())
    throw DomainError("simple-root index " + std::to_string(alpha_index) + " outside 1.." +
                      std::to_string(space.rank()));
  const auto& rs = space.roots();
  const Root& alpha = rs.simple[static_cast<std::size_t>(alpha_index - 1)];
  const int m = space.multiplicity(alpha);

  HyperbolicFactor h;
  h.alpha_index = alpha_index;
  const Root twice = alpha.doubled();
  if (!rs.contains(twice)) {
    h.algebra = DivisionAlgebra::R;
    h.n = m + 1;
  } else {
    switch (space.multiplicity(twice)) {
      case 1:
        h.algebra = DivisionAlgebra::C;
        h.n = m / 2 + 1;
        break;
      case 3:
        h.algebra = DivisionAlgebra::H;
        h.n = m / 4 + 1;
        break;
      case 7:
        h.algebra = DivisionAlgebra::O;
        h.n = 2;
        break;
      default: throw DomainError(space.descriptor().name + ": m_2alpha must be 1, 3 or 7");
    }
  }
  h.real_dim = h.n * real_dimension(h.algebra);
  return h;
}

std::vector<std::vector<PhiSubset>> orthogonal_subset_orbits(const DynkinDiagram& dd) {
  const auto autos = diagram_automorphisms(dd);
  std::vector<std::vector<PhiSubset>> orbits;
  std::vector<PhiSubset> assigned;
  for (const auto& phi : orthogonal_subsets(dd)) {
    if (std::find(assigned.begin(), assigned.end(), phi) != assigned.end()) continue;
    std::vector<PhiSubset> orbit;
    for (const auto& perm : autos) {
      auto img = apply(perm, phi);
      if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(std::move(img));
    }
    std::sort(orbit.begin(), orbit.end());
    assigned.insert(assigned.end(), orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    const auto& pa = a.front();
    const auto& pb = b.front();
    if (pa.size() != pb.size()) return pa.size() < pb.size();
    return pa.indices() < pb.indices();
  });
  return orbits;
}

std::vector<FoliationClass> enumerate_foliations(const SymmetricSpace& space, bool include_trivial) {
  const int r = space.rank();
  const int dim_m = space.dimension();
  std::vector<FoliationClass> out;
  for (const auto& orbit : orthogonal_subset_orbits(space.diagram())) {
    const PhiSubset& phi = orbit.front();
    std::vector<HyperbolicFactor> factors;
    int hyperbolic_leaf = 0;
    for (int a : phi.indices()) {
      factors.push_back(hyperbolic_factor(space, a));
      hyperbolic_leaf += factors.back().real_dim - 1;
    }
    const int dim_n = parabolic_data(space, phi).dim_n_phi;
    for (int dim_v = 0; dim_v <= r - phi.size(); ++dim_v) {
      FoliationClass fc;
      fc.rank = r;
      fc.phi = phi;
      fc.orbit = orbit;
      fc.dim_V = dim_v;
      fc.factors = factors;
      fc.dim_N = dim_n;
      fc.leaf_dim = hyperbolic_leaf + dim_v + dim_n;
      fc.codim = dim_m - fc.leaf_dim;
      fc.trivial = fc.codim == 0;
      if (fc.codim != foliation_codimension(fc))
        throw std::logic_error("enumerate_foliations: leaf dimension inconsistent for " + space.descriptor().name);
      if (fc.trivial && !include_trivial) continue;
      out.push_back(std::move(fc));
    }
  }
  return out;
}

int foliation_codimension(const FoliationClass& fc) {
  const int r_phi = fc.phi.size();
  return r_phi + (fc.rank - r_phi - fc.dim_V);
}

}  // namespace liefoliate
