#pragma once

// Restricted root systems of the irreducible symmetric spaces of noncompact
// type: the reduced families A_r, B_r, C_r, D_r, E_6, E_7, E_8, F_4, G_2 and
// the non-reduced family BC_r, together with their simple roots, Weyl
// reflections, Dynkin diagrams and diagram automorphisms.
//
// Roots are stored exactly. Every coordinate is kept multiplied by two so
// that the half-integer vectors of the E-series become odd integers.

#include "liefoliate/exact.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace liefoliate {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2, BC };

std::string_view to_string(Family f);
/// Accepts "A", "B", ..., "E6", "F4", "G2", "BC" (case-insensitive).
Family parse_family(std::string_view text);

/// Valid rank interval [lo, hi] of a family; hi is 0 for unbounded families.
std::pair<int, int> valid_rank_range(Family f);
/// True for E6/E7/E8/F4/G2, whose rank is determined by the family.
bool has_fixed_rank(Family f);

class Root {
 public:
  /// Coordinates already multiplied by two. Throws on the zero vector.
  explicit Root(std::vector<int> scaled_coords);
  /// Integer coordinates (not scaled).
  static Root from_integers(std::span<const int> coords);

  std::span<const int> scaled() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  /// Exact rational coordinates.
  RationalVector coords() const;

  Root operator-() const;
  Root doubled() const;

  auto operator<=>(const Root&) const = default;
  bool operator==(const Root&) const = default;

 private:
  std::vector<int> coords_;
};

std::string to_string(const Root& r);

/// Euclidean pairing of ambient coordinates.
Rational inner(const Root& lambda, const Root& mu);

/// Weyl reflection s_lambda(x) = x - 2 <x,lambda>/<lambda,lambda> lambda.
/// Throws DomainError when the image leaves the half-integer lattice or is zero.
Root reflect(const Root& lambda, const Root& x);

struct RootSystem {
  Family family{Family::A};
  int rank{0};
  int ambient_dim{0};
  std::vector<Root> roots;     // all of Sigma, sorted
  std::vector<Root> positive;  // Sigma^+ in listing order
  std::vector<Root> simple;    // alpha_1 ... alpha_r

  bool contains(const Root& r) const;
  bool is_positive(const Root& r) const;
  /// Squared lengths of the roots, ascending and without repetition.
  std::vector<Rational> length_classes() const;

  bool operator==(const RootSystem&) const = default;
};

RootSystem build_root_system(Family f, int rank);

/// Coefficients of r over the simple roots, or nullopt if r is outside
/// their span.
std::optional<RationalVector> simple_coefficients(const RootSystem& rs, const Root& r);

// ---------------------------------------------------------------------------
// Dynkin diagrams

struct DynkinVertex {
  int index{0};  // 1-based simple-root index
  bool double_circle{false};
  bool operator==(const DynkinVertex&) const = default;
};

enum class Arrow { none, i_to_j, j_to_i };

struct DynkinEdge {
  int i{0}, j{0};  // 1-based, i < j
  int lines{0};
  Arrow arrow{Arrow::none};
  bool operator==(const DynkinEdge&) const = default;
};

struct DynkinDiagram {
  Family family{Family::A};
  int rank{0};
  std::vector<DynkinVertex> vertices;
  std::vector<DynkinEdge> edges;
  /// Rendering note carried into exports (BC_r draws a double-headed arrow).
  std::string figure_note;

  /// Number of lines between vertices i and j (1-based); 0 when unconnected.
  int lines(int i, int j) const;
  /// Arrow between i and j seen from i: +1 if it points i -> j, -1 if j -> i.
  int arrow_direction(int i, int j) const;
  bool adjacent(int i, int j) const { return lines(i, j) > 0; }

  bool operator==(const DynkinDiagram&) const = default;
};

DynkinDiagram dynkin_diagram(const RootSystem& rs);

/// perm[i-1] is the image of vertex i (both 1-based).
using VertexPermutation = std::vector<int>;

/// All decoration-, edge- and arrow-preserving vertex permutations, identity
/// first, the rest in lexicographic order.
std::vector<VertexPermutation> diagram_automorphisms(const DynkinDiagram& dd);

}  // namespace liefoliate
