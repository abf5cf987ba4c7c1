#include "liefoliate/parabolic.hpp"

#include "liefoliate/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

namespace liefoliate {

PhiSubset::PhiSubset(std::vector<int> indices, int rank) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw DomainError("simple-root index repeated in Phi");
  for (int i : indices_)
    if (i < 1 || i > rank)
      throw DomainError("simple-root index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
}

bool PhiSubset::contains(int i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

std::vector<PhiSubset> all_phi_subsets(int rank) {
  std::vector<PhiSubset> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) idx.push_back(i + 1);
    out.emplace_back(std::move(idx), rank);
  }
  std::sort(out.begin(), out.end(), [](const PhiSubset& a, const PhiSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
  });
  return out;
}

std::string to_string(const PhiSubset& phi) {
  std::ostringstream os;
  for (std::size_t k = 0; k < phi.indices().size(); ++k) os << (k ? "," : "") << phi.indices()[k];
  return os.str();
}

PhiSubset parse_phi(std::string_view text, int rank) {
  std::vector<int> idx;
  if (text.empty() || text == "none" || text == "{}") return PhiSubset({}, rank);
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const auto part = text.substr(start, comma - start);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size())
      throw DomainError("cannot parse simple-root index '" + std::string(part) + "'");
    idx.push_back(v);
    start = comma + 1;
  }
  return PhiSubset(std::move(idx), rank);
}

RootSubsystem root_subsystem(const SymmetricSpace& space, const PhiSubset& phi) {
  const auto& rs = space.roots();
  if (phi.indices().size() > rs.simple.size() ||
      (!phi.empty() && phi.indices().back() > rs.rank))
    throw DomainError("Phi does not fit the rank of " + space.descriptor().name);
  RootSubsystem out;
  if (phi.empty()) return out;

  std::vector<RationalVector> basis;
  for (int i : phi.indices()) basis.push_back(rs.simple[static_cast<std::size_t>(i - 1)].coords());
  for (const auto& r : rs.positive) {
    if (!solve_in_span(basis, r.coords())) continue;
    out.positive.push_back(r);
    out.roots.push_back(r);
    out.roots.push_back(-r);
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

ParabolicData parabolic_data(const SymmetricSpace& space, const PhiSubset& phi) {
  ParabolicData d;
  d.sigma_phi = root_subsystem(space, phi);
  const int r = space.rank();
  d.dim_a_phi = r - phi.size();
  d.dim_a_upper_phi = phi.size();

  int sum_pos = 0;  // sum of m over Sigma^+
  for (const auto& lam : space.roots().positive) sum_pos += space.multiplicity(lam);
  int sum_phi_pos = 0;  // sum over Sigma_Phi^+
  for (const auto& lam : d.sigma_phi.positive) sum_phi_pos += space.multiplicity(lam);
  d.dim_n_phi = sum_pos - sum_phi_pos;

  if (const auto g0 = space.dim_g0()) {
    const int k0 = *space.descriptor().dim_k0;
    d.dim_l_phi = *g0 + 2 * sum_phi_pos;
    d.dim_m_phi = *d.dim_l_phi - d.dim_a_phi;
    d.dim_q_phi = *d.dim_l_phi + d.dim_n_phi;
    d.dim_k_phi = k0 + sum_phi_pos;
    // z_Phi lies in k_0; only the case k_0 = 0 is determined without more data.
    if (k0 == 0) {
      d.dim_z_phi = 0;
      d.dim_g_phi = *d.dim_m_phi;
    }
  }
  return d;
}

std::vector<std::vector<int>> diagram_components(const DynkinDiagram& dd, const PhiSubset& phi) {
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (int start : phi.indices()) {
    if (seen.count(start)) continue;
    std::vector<int> comp;
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : phi.indices())
        if (!seen.count(w) && dd.adjacent(v, w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<BoundaryFactor> boundary_components(const SymmetricSpace& space, const PhiSubset& phi) {
  std::vector<BoundaryFactor> out;
  const auto& dd = space.diagram();
  for (const auto& comp : diagram_components(dd, phi)) {
    const PhiSubset sub(comp, space.rank());
    BoundaryFactor f;
    f.component_indices = comp;
    f.rank = static_cast<int>(comp.size());
    f.dim = f.rank;
    bool unit_mults = true;
    for (const auto& lam : root_subsystem(space, sub).positive) {
      const int m = space.multiplicity(lam);
      f.dim += m;
      unit_mults = unit_mults && m == 1;
    }
    // A-type: simply laced, no double circle, path-shaped.
    bool a_type = true;
    for (int v : comp) {
      if (dd.vertices[static_cast<std::size_t>(v - 1)].double_circle) a_type = false;
      int degree = 0;
      for (int w : comp) {
        const int l = dd.lines(v, w);
        if (l > 1) a_type = false;
        if (l > 0) ++degree;
      }
      if (degree > 2) a_type = false;
    }
    if (a_type && unit_mults) {
      const int s1 = f.rank + 1;
      const std::string sub_s = s1 < 10 ? std::to_string(s1) : "{" + std::to_string(s1) + "}";
      f.name = "SL_" + sub_s + "(R)/SO_" + sub_s;
    } else {
      f.name = "unnamed rank-" + std::to_string(f.rank) + " factor";
    }
    out.push_back(std::move(f));
  }
  return out;
}

HorosphericalData horospherical(const SymmetricSpace& space, const PhiSubset& phi) {
  HorosphericalData h;
  h.factors = boundary_components(space, phi);
  for (const auto& f : h.factors) h.dim_Fs += f.dim;
  h.dim_euclidean = space.rank() - phi.size();
  h.dim_N = parabolic_data(space, phi).dim_n_phi;
  return h;
}

PhiSubset apply(const VertexPermutation& perm, const PhiSubset& phi) {
  std::vector<int> img;
  for (int i : phi.indices()) img.push_back(perm.at(static_cast<std::size_t>(i - 1)));
  return PhiSubset(std::move(img), static_cast<int>(perm.size()));
}

}  // namespace liefoliate
