#pragma once

// Catalog of irreducible Riemannian symmetric spaces of noncompact type,
// keyed by restricted root system, with simple-root multiplicities and the
// resulting dimension calculus.

#include "liefoliate/rootsys.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace liefoliate {

/// Multiplicity as an affine function coef_n * n + constant of the
/// catalog parameter n.
struct MultPattern {
  int coef_n{0};
  int constant{0};
  int eval(int n) const { return coef_n * n + constant; }
  bool operator==(const MultPattern&) const = default;
};

/// One line of the catalog. Templates contain {expr} groups in r and n.
struct CatalogRecord {
  std::string key_template;      // ASCII, e.g. "SL{r+1}"
  std::string display_template;  // e.g. "SL_{r+1}(R)/SO_{r+1}"
  Family family{Family::A};
  int fixed_rank{0};  // 0 when the rank is a parameter
  int min_rank{1};
  std::optional<int> min_n;  // set when the entry has an extra parameter n
  std::vector<int> fixed_mults;
  std::optional<MultPattern> body, last, last_double;
  std::optional<int> dim_k0;
  std::string note;
};

const std::vector<CatalogRecord>& catalog_records();

struct SpaceDescriptor {
  std::string name;  // display name, e.g. "SL_5(R)/SO_5"
  std::string key;   // shell-safe name, e.g. "SL5"
  Family family{Family::A};
  int rank{0};
  std::optional<int> n;
  /// m_{alpha_i}; for BC the last entry is m_{alpha_r}.
  std::vector<int> simple_mults;
  /// m_{2 alpha_r} for BC entries.
  std::optional<int> double_mult;
  /// dim k_0 = dim Z_k(a) where sourced (split entries); unavailable otherwise.
  std::optional<int> dim_k0;
  std::string note;

  bool operator==(const SpaceDescriptor&) const = default;
};

SpaceDescriptor instantiate(const CatalogRecord& rec, int rank, std::optional<int> n = {});

/// Looks a space up by ASCII key ("SL5", "SOo(5,2)", "F4(-20)") or by
/// display name ("SL_5(R)/SO_5"). A display template with free r / n
/// ("Sp_{r,r}/Sp_r Sp_r") is accepted when rank / n are supplied.
/// Throws DomainError listing the valid names when nothing matches.
SpaceDescriptor catalog_lookup(std::string_view name, std::optional<int> rank = {},
                               std::optional<int> n = {});

/// Every catalog instance with rank <= max_rank and parameter n <= max_n.
std::vector<SpaceDescriptor> catalog_instances(int max_rank, int max_n);

/// A catalog space bundled with its root system, diagram and the extension
/// of the simple-root multiplicities to all of Sigma (constant on length
/// classes, which are the Weyl orbits).
class SymmetricSpace {
 public:
  explicit SymmetricSpace(SpaceDescriptor desc);

  const SpaceDescriptor& descriptor() const { return desc_; }
  const RootSystem& roots() const { return roots_; }
  const DynkinDiagram& diagram() const { return diagram_; }
  int rank() const { return desc_.rank; }

  /// (squared length, multiplicity) per length class, ascending by length.
  const std::vector<std::pair<Rational, int>>& multiplicity_classes() const { return classes_; }

  /// Throws DomainError when r is not a root.
  int multiplicity(const Root& r) const;
  int dimension() const { return dimension_; }
  /// dim g_0 = dim k_0 + r when k_0 is known.
  std::optional<int> dim_g0() const;
  /// True for SL_{r+1}(R)/SO_{r+1}.
  bool is_real_special_linear() const;

 private:
  SpaceDescriptor desc_;
  RootSystem roots_;
  DynkinDiagram diagram_;
  std::vector<std::pair<Rational, int>> classes_;
  int dimension_{0};
};

int root_multiplicity(const SymmetricSpace& space, const Root& r);
/// r + sum of multiplicities over Sigma^+.
int space_dimension(const SymmetricSpace& space);

}  // namespace liefoliate
