#pragma once

// Parabolic subalgebras q_Phi = m_Phi + a_Phi + n_Phi attached to subsets Phi
// of the simple roots, and the horospherical decomposition
// M = F_Phi^s x E^{r - r_Phi} x N_Phi they induce.

#include "liefoliate/spacecat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liefoliate {

/// Sorted set of 1-based simple-root indices.
class PhiSubset {
 public:
  PhiSubset() = default;
  /// Validates against the rank; duplicates are rejected.
  PhiSubset(std::vector<int> indices, int rank);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool contains(int i) const;
  bool empty() const { return indices_.empty(); }

  auto operator<=>(const PhiSubset&) const = default;

 private:
  std::vector<int> indices_;
};

/// Every subset of {1..r}, ordered by size then lexicographically.
std::vector<PhiSubset> all_phi_subsets(int rank);
/// "1,3" style rendering; "" for the empty set.
std::string to_string(const PhiSubset& phi);
/// Parses "1,3"; an empty string (or "none") is the empty set.
PhiSubset parse_phi(std::string_view text, int rank);

struct RootSubsystem {
  std::vector<Root> roots;     // Sigma_Phi, sorted
  std::vector<Root> positive;  // Sigma_Phi^+ in the order of Sigma^+
  bool operator==(const RootSubsystem&) const = default;
};

/// Sigma intersected with the rational span of {alpha_i : i in Phi}.
RootSubsystem root_subsystem(const SymmetricSpace& space, const PhiSubset& phi);

struct ParabolicData {
  RootSubsystem sigma_phi;
  int dim_a_phi{0};        // r - r_Phi
  int dim_a_upper_phi{0};  // dim a^Phi = r_Phi
  int dim_n_phi{0};
  // The following need dim k_0 and are unavailable otherwise.
  std::optional<int> dim_l_phi;
  std::optional<int> dim_m_phi;
  std::optional<int> dim_q_phi;
  std::optional<int> dim_k_phi;
  std::optional<int> dim_z_phi;
  std::optional<int> dim_g_phi;

  bool operator==(const ParabolicData&) const = default;
};

ParabolicData parabolic_data(const SymmetricSpace& space, const PhiSubset& phi);

struct BoundaryFactor {
  std::vector<int> component_indices;
  int rank{0};
  std::string name;
  int dim{0};
  bool operator==(const BoundaryFactor&) const = default;
};

struct HorosphericalData {
  std::vector<BoundaryFactor> factors;
  int dim_Fs{0};
  int dim_euclidean{0};
  int dim_N{0};
  bool operator==(const HorosphericalData&) const = default;
};

/// Connected components of Phi in the Dynkin diagram, each sorted, ordered by
/// smallest index.
std::vector<std::vector<int>> diagram_components(const DynkinDiagram& dd, const PhiSubset& phi);

std::vector<BoundaryFactor> boundary_components(const SymmetricSpace& space, const PhiSubset& phi);
HorosphericalData horospherical(const SymmetricSpace& space, const PhiSubset& phi);

/// Applies a diagram automorphism to Phi.
PhiSubset apply(const VertexPermutation& perm, const PhiSubset& phi);

}  // namespace liefoliate
