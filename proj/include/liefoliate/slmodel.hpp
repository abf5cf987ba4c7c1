#pragma once

// Matrix model of g = sl_{r+1}(R) and M = SL_{r+1}(R)/SO_{r+1}.
//
// Conventions:
//  * theta(X) = -X^T, k = skew-symmetric, p = symmetric traceless,
//    a = traceless diagonal, n = strictly upper triangular.
//  * The fixed basis of sl_{r+1} lists E_ij (i != j) in row-major order,
//    followed by H_i = E_ii - E_{i+1,i+1}, i = 1..r. Killing forms are
//    computed from ad-matrices over this basis.
//  * Subspace residuals are Frobenius norms after orthonormalizing the basis
//    in the trace form tr(X Y^T), which is a positive multiple of
//    -B(X, theta Y).

#include "liefoliate/parabolic.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace liefoliate::sl {

using Matrix = Eigen::MatrixXd;

/// Tolerance for identities that are exact in principle and evaluated on
/// small integer-entry data.
inline constexpr double kTauAlg = 1e-12;
/// Tolerance for factorization round trips on random matrices.
inline constexpr double kTauNum = 1e-10;

enum class AlgebraTag { g, k, p, a, n, q_phi, s_phi_v };

std::string_view to_string(AlgebraTag t);

/// Square traceless matrix with an optional membership claim. The claim is
/// validated on construction (within kTauAlg) and DomainError is thrown when
/// it does not hold.
class MatrixElement {
 public:
  explicit MatrixElement(Matrix entries, std::optional<AlgebraTag> tag = std::nullopt);

  const Matrix& entries() const { return entries_; }
  std::optional<AlgebraTag> tag() const { return tag_; }
  int size() const { return static_cast<int>(entries_.rows()); }

 private:
  Matrix entries_;
  std::optional<AlgebraTag> tag_;
};

/// E_ij of size n (1-based indices).
Matrix unit(int n, int i, int j);

// ---------------------------------------------------------------------------
// Lie algebra structure

MatrixElement bracket(const MatrixElement& x, const MatrixElement& y);
Matrix bracket(const Matrix& x, const Matrix& y);

/// Basis of sl_{r+1} in the documented order.
std::vector<Matrix> sl_basis(int rank);
/// Coordinates of a traceless matrix in sl_basis(rank).
Eigen::VectorXd sl_coordinates(const Matrix& x);
/// Matrix of ad(X) on sl_basis.
Matrix ad_matrix(const Matrix& x);

/// B(X,Y) = tr(ad X ad Y), via explicit ad-matrices.
double killing_form(const MatrixElement& x, const MatrixElement& y);
double killing_form(const Matrix& x, const Matrix& y);

struct CartanParts {
  Matrix k_part;  // (X - X^T)/2
  Matrix p_part;  // (X + X^T)/2
};

CartanParts cartan_split(const MatrixElement& x);
Matrix cartan_involution(const Matrix& x);

/// Component of X in g_0 (root == nullopt) or in a root space g_lambda.
struct RootComponent {
  std::optional<Root> root;  // e_i - e_j in the A_r ambient coordinates
  Matrix component;
};

/// Nonzero components of X, the diagonal (g_0 = a) first and then the root
/// spaces in row-major order of (i, j).
std::vector<RootComponent> restricted_root_decompose(const MatrixElement& x);

/// Largest violation of [H, C] = lambda(H) C over the basis H_i of a.
double root_component_defect(const RootComponent& c);

// ---------------------------------------------------------------------------
// Group level

struct IwasawaFactors {
  Matrix k;  // orthogonal, det 1
  Matrix a;  // positive diagonal, det 1
  Matrix n;  // unit upper triangular
};

/// g = k a n via re-orthogonalized Gram-Schmidt on the columns of g.
/// Throws DomainError unless |det g - 1| <= kTauNum and the columns are
/// numerically independent.
IwasawaFactors iwasawa_group(const Matrix& g);
Matrix reassemble(const IwasawaFactors& f);

// ---------------------------------------------------------------------------
// Subspaces

struct Subspace {
  std::vector<Matrix> basis;
  std::string label;
};

/// Throws DomainError when the basis is empty-size-mismatched or linearly
/// dependent.
Subspace make_subspace(std::vector<Matrix> basis, std::string label);
int subspace_dim(const Subspace& s);

/// Orthonormal basis (trace form) of span(vectors); rank-deficient
/// directions are dropped.
std::vector<Matrix> orthonormalize(std::span<const Matrix> vectors);

struct LieTripleResult {
  bool holds{false};
  double residual{0.0};
};

/// Checks [[X,Y],Z] in span(S) for all basis triples. Basis elements must be
/// symmetric (inside p).
LieTripleResult is_lie_triple(const Subspace& s);

/// Largest component of [X,Y] outside span(S) over basis pairs.
double bracket_closure_residual(const Subspace& s);

// Standard subspaces of sl_{r+1} for a subset Phi of simple roots.
Subspace cartan_subspace(int rank);                          // a
Subspace nilradical(int rank);                               // n
Subspace k_subspace(int rank);                               // k
Subspace p_subspace(int rank);                               // p
Subspace a_phi(int rank, const PhiSubset& phi);              // a_Phi = cap ker alpha
Subspace a_upper_phi(int rank, const PhiSubset& phi);        // a^Phi
Subspace n_phi(int rank, const PhiSubset& phi);              // n_Phi
Subspace p_phi(int rank, const PhiSubset& phi);              // a + sum p_lambda
Subspace p_phi_s(int rank, const PhiSubset& phi);            // a^Phi + sum p_lambda
/// q_Phi realized as block upper-triangular traceless matrices, blocks from
/// the connected components of Phi.
Subspace q_phi_blocks(int rank, const PhiSubset& phi);

/// Block sizes of the block decomposition attached to Phi (sum = r + 1).
std::vector<int> block_sizes(int rank, const PhiSubset& phi);

/// s_{Phi,V} = (a^Phi + V + n) minus ell_Phi, inside a + n. Phi must be
/// orthogonal; V is spanned by the first dim_V vectors of an orthonormal
/// basis of a_Phi. ell_choice, when given, holds one nonzero vector of
/// g_alpha per alpha in Phi (in index order); the default is E_{i,i+1}.
Subspace build_s_phi_v(int rank, const PhiSubset& phi, int dim_v,
                       std::span<const Matrix> ell_choice = {});
/// As above; the space must be SL_{r+1}(R)/SO_{r+1}.
Subspace build_s_phi_v(const SymmetricSpace& space, const PhiSubset& phi, int dim_v,
                       std::span<const Matrix> ell_choice = {});

// ---------------------------------------------------------------------------
// SL_2(R) acting on the upper half-plane

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2d;

Complex moebius(const Matrix2& g, Complex z);
Matrix2 k_element(double s);  // [[cos s, sin s], [-sin s, cos s]]
Matrix2 a_element(double t);  // diag(e^t, e^-t)
Matrix2 n_element(double u);  // [[1, u], [0, 1]]

// ---------------------------------------------------------------------------
// Sampling

/// Entries i.i.d. standard normal, rescaled to det 1 (the first row is negated
/// when the determinant is negative). Deterministic for a given engine state.
template <class Engine>
Matrix random_sl(int rank, Engine& engine);

/// Random traceless matrix with i.i.d. standard normal entries.
template <class Engine>
Matrix random_traceless(int rank, Engine& engine);

}  // namespace liefoliate::sl

#include "liefoliate/detail/slmodel_random.hpp"
