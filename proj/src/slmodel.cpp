#include "liefoliate/slmodel.hpp"

#include "liefoliate/errors.hpp"
#include "liefoliate/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace liefoliate::sl {

namespace {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double frob_inner(const Matrix& a, const Matrix& b) { return (a.array() * b.array()).sum(); }

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw DomainError(std::string(what) + ": expected a square matrix of size >= 2");
}

void require_traceless(const Matrix& m, const char* what) {
  require_square(m, what);
  if (std::abs(m.trace()) > kTauAlg * std::max(1.0, max_abs(m)))
    throw DomainError(std::string(what) + ": matrix is not traceless");
}

Matrix h_basis(int n, int i) {  // E_ii - E_{i+1,i+1}, 1-based
  Matrix h = Matrix::Zero(n, n);
  h(i - 1, i - 1) = 1.0;
  h(i, i) = -1.0;
  return h;
}

// Block id (0-based) of each row index 1..r+1.
std::vector<int> block_ids(int rank, const PhiSubset& phi) {
  std::vector<int> id(static_cast<std::size_t>(rank) + 1, 0);
  for (int i = 1; i <= rank; ++i)
    id[static_cast<std::size_t>(i)] = id[static_cast<std::size_t>(i - 1)] + (phi.contains(i) ? 0 : 1);
  return id;
}

void check_phi(int rank, const PhiSubset& phi) {
  if (!phi.empty() && phi.indices().back() > rank)
    throw DomainError("Phi index exceeds rank " + std::to_string(rank));
}

}  // namespace

std::string_view to_string(AlgebraTag t) {
  switch (t) {
    case AlgebraTag::g: return "g";
    case AlgebraTag::k: return "k";
    case AlgebraTag::p: return "p";
    case AlgebraTag::a: return "a";
    case AlgebraTag::n: return "n";
    case AlgebraTag::q_phi: return "q_phi";
    case AlgebraTag::s_phi_v: return "s_phi_v";
  }
  return "?";
}

MatrixElement::MatrixElement(Matrix entries, std::optional<AlgebraTag> tag)
    : entries_(std::move(entries)), tag_(tag) {
  require_traceless(entries_, "MatrixElement");
  if (!tag_) return;
  const double tol = kTauAlg * std::max(1.0, max_abs(entries_));
  const Matrix& x = entries_;
  const int n = size();
  bool ok = true;
  switch (*tag_) {
    case AlgebraTag::k: ok = max_abs(x + x.transpose()) <= tol; break;
    case AlgebraTag::p: ok = max_abs(x - x.transpose()) <= tol; break;
    case AlgebraTag::a:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && std::abs(x(i, j)) > tol) ok = false;
      break;
    case AlgebraTag::n:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
          if (std::abs(x(i, j)) > tol) ok = false;
      break;
    default: break;
  }
  if (!ok) throw DomainError("MatrixElement: matrix is not in " + std::string(to_string(*tag_)));
}

Matrix unit(int n, int i, int j) {
  Matrix e = Matrix::Zero(n, n);
  e(i - 1, j - 1) = 1.0;
  return e;
}

// ---------------------------------------------------------------------------

Matrix bracket(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw DomainError("bracket: size mismatch");
  return x * y - y * x;
}

MatrixElement bracket(const MatrixElement& x, const MatrixElement& y) {
  return MatrixElement(bracket(x.entries(), y.entries()), AlgebraTag::g);
}

std::vector<Matrix> sl_basis(int rank) {
  const int n = rank + 1;
  std::vector<Matrix> b;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) b.push_back(unit(n, i, j));
  for (int i = 1; i <= rank; ++i) b.push_back(h_basis(n, i));
  return b;
}

Eigen::VectorXd sl_coordinates(const Matrix& x) {
  require_square(x, "sl_coordinates");
  const int n = static_cast<int>(x.rows());
  Eigen::VectorXd c(n * n - 1);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) c(k++) = x(i, j);
  // diag(d) = sum_i c_i (e_i - e_{i+1}) with c_i = d_1 + ... + d_i
  double running = 0.0;
  for (int i = 0; i < n - 1; ++i) {
    running += x(i, i);
    c(k++) = running;
  }
  return c;
}

Matrix ad_matrix(const Matrix& x) {
  require_square(x, "ad_matrix");
  const auto basis = sl_basis(static_cast<int>(x.rows()) - 1);
  const auto d = static_cast<Eigen::Index>(basis.size());
  Matrix ad(d, d);
  for (Eigen::Index k = 0; k < d; ++k) ad.col(k) = sl_coordinates(bracket(x, basis[static_cast<std::size_t>(k)]));
  return ad;
}

double killing_form(const Matrix& x, const Matrix& y) {
  require_traceless(x, "killing_form");
  require_traceless(y, "killing_form");
  if (x.rows() != y.rows()) throw DomainError("killing_form: size mismatch");
  const Matrix ax = ad_matrix(x);
  const Matrix ay = ad_matrix(y);
  // tr(AB) = sum_ij A_ij B_ji
  return (ax.array() * ay.transpose().array()).sum();
}

double killing_form(const MatrixElement& x, const MatrixElement& y) {
  return killing_form(x.entries(), y.entries());
}

Matrix cartan_involution(const Matrix& x) { return -x.transpose(); }

CartanParts cartan_split(const MatrixElement& x) {
  const Matrix& m = x.entries();
  return {(m - m.transpose()) / 2.0, (m + m.transpose()) / 2.0};
}

std::vector<RootComponent> restricted_root_decompose(const MatrixElement& x) {
  const Matrix& m = x.entries();
  const int n = x.size();
  std::vector<RootComponent> out;
  const Matrix diag = m.diagonal().asDiagonal();
  if ((diag.array() != 0.0).any()) out.push_back({std::nullopt, diag});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || m(i, j) == 0.0) continue;
      std::vector<int> coords(static_cast<std::size_t>(n), 0);
      coords[static_cast<std::size_t>(i)] = 2;
      coords[static_cast<std::size_t>(j)] = -2;
      Matrix c = Matrix::Zero(n, n);
      c(i, j) = m(i, j);
      out.push_back({Root(std::move(coords)), std::move(c)});
    }
  return out;
}

double root_component_defect(const RootComponent& c) {
  const int n = static_cast<int>(c.component.rows());
  double worst = 0.0;
  for (int k = 1; k < n; ++k) {
    const Matrix h = h_basis(n, k);
    double value = 0.0;  // lambda(H) = sum_i lambda_i h_ii
    if (c.root)
      for (int i = 0; i < n; ++i) value += c.root->scaled()[static_cast<std::size_t>(i)] / 2.0 * h(i, i);
    worst = std::max(worst, max_abs(bracket(h, c.component) - value * c.component));
  }
  return worst;
}

// ---------------------------------------------------------------------------

IwasawaFactors iwasawa_group(const Matrix& g) {
  require_square(g, "iwasawa_group");
  const double det = g.determinant();
  if (!(std::abs(det - 1.0) <= kTauNum))
    throw DomainError("iwasawa_group: det(g) = " + std::to_string(det) + " is not 1");
  const int n = static_cast<int>(g.rows());

  Matrix q = Matrix::Zero(n, n);
  Matrix r = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd v = g.col(j);
    const double original = v.norm();
    // Two Gram-Schmidt passes keep the columns orthogonal to working precision.
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < j; ++i) {
        const double c = q.col(i).dot(v);
        r(i, j) += c;
        v -= c * q.col(i);
      }
    const double len = v.norm();
    if (!(len > 1e-14 * std::max(1.0, original)))
      throw DomainError("iwasawa_group: columns are numerically dependent");
    r(j, j) = len;
    q.col(j) = v / len;
  }

  IwasawaFactors f;
  f.k = std::move(q);
  f.a = r.diagonal().asDiagonal();
  f.n = Matrix::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) f.n(i, j) = r(i, j) / r(i, i);
  return f;
}

Matrix reassemble(const IwasawaFactors& f) { return f.k * f.a * f.n; }

// ---------------------------------------------------------------------------

std::vector<Matrix> orthonormalize(std::span<const Matrix> vectors) {
  std::vector<Matrix> q;
  for (const auto& v0 : vectors) {
    Matrix v = v0;
    const double original = std::sqrt(frob_inner(v0, v0));
    if (original == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : q) v -= frob_inner(b, v) * b;
    const double len = std::sqrt(frob_inner(v, v));
    if (len <= 1e-10 * original) continue;
    q.push_back(v / len);
  }
  return q;
}

Subspace make_subspace(std::vector<Matrix> basis, std::string label) {
  for (const auto& b : basis) {
    require_square(b, "make_subspace");
    if (b.rows() != basis.front().rows()) throw DomainError("make_subspace: basis sizes differ");
  }
  if (orthonormalize(basis).size() != basis.size())
    throw DomainError("make_subspace: basis of '" + label + "' is linearly dependent");
  return Subspace{std::move(basis), std::move(label)};
}

int subspace_dim(const Subspace& s) { return static_cast<int>(s.basis.size()); }

LieTripleResult is_lie_triple(const Subspace& s) {
  for (const auto& b : s.basis) {
    require_square(b, "is_lie_triple");
    if (max_abs(b - b.transpose()) > kTauAlg * std::max(1.0, max_abs(b)))
      throw DomainError("is_lie_triple: basis element of '" + s.label + "' is not symmetric");
  }
  const auto q = orthonormalize(s.basis);
  const double residual = kernels::omp::triple_residual(q);
  return {residual <= kTauAlg, residual};
}

double bracket_closure_residual(const Subspace& s) {
  return kernels::omp::pair_residual(orthonormalize(s.basis));
}

// ---------------------------------------------------------------------------

Subspace cartan_subspace(int rank) {
  std::vector<Matrix> b;
  for (int i = 1; i <= rank; ++i) b.push_back(h_basis(rank + 1, i));
  return make_subspace(std::move(b), "a");
}

Subspace nilradical(int rank) {
  const int n = rank + 1;
  std::vector<Matrix> b;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) b.push_back(unit(n, i, j));
  return make_subspace(std::move(b), "n");
}

Subspace k_subspace(int rank) {
  const int n = rank + 1;
  std::vector<Matrix> b;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) b.push_back(unit(n, i, j) - unit(n, j, i));
  return make_subspace(std::move(b), "k");
}

Subspace p_subspace(int rank) {
  const int n = rank + 1;
  std::vector<Matrix> b = cartan_subspace(rank).basis;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) b.push_back(unit(n, i, j) + unit(n, j, i));
  return make_subspace(std::move(b), "p");
}

Subspace a_upper_phi(int rank, const PhiSubset& phi) {
  check_phi(rank, phi);
  std::vector<Matrix> b;
  for (int i : phi.indices()) b.push_back(h_basis(rank + 1, i));
  return make_subspace(std::move(b), "a^Phi");
}

Subspace a_phi(int rank, const PhiSubset& phi) {
  // Orthonormalize a^Phi followed by a; whatever survives past a^Phi spans
  // the orthogonal complement, which is the common kernel of Phi.
  std::vector<Matrix> seq = a_upper_phi(rank, phi).basis;
  const auto full = cartan_subspace(rank).basis;
  seq.insert(seq.end(), full.begin(), full.end());
  const auto q = orthonormalize(seq);
  std::vector<Matrix> b(q.begin() + phi.size(), q.end());
  return make_subspace(std::move(b), "a_Phi");
}

std::vector<int> block_sizes(int rank, const PhiSubset& phi) {
  check_phi(rank, phi);
  std::vector<int> sizes;
  const auto id = block_ids(rank, phi);
  for (int b : id) {
    if (static_cast<int>(sizes.size()) <= b) sizes.push_back(0);
    ++sizes[static_cast<std::size_t>(b)];
  }
  return sizes;
}

Subspace n_phi(int rank, const PhiSubset& phi) {
  check_phi(rank, phi);
  const int n = rank + 1;
  const auto id = block_ids(rank, phi);
  std::vector<Matrix> b;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (id[static_cast<std::size_t>(i - 1)] != id[static_cast<std::size_t>(j - 1)]) b.push_back(unit(n, i, j));
  return make_subspace(std::move(b), "n_Phi");
}

namespace {

std::vector<Matrix> p_lambda_block(int rank, const PhiSubset& phi) {
  const int n = rank + 1;
  const auto id = block_ids(rank, phi);
  std::vector<Matrix> b;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (id[static_cast<std::size_t>(i - 1)] == id[static_cast<std::size_t>(j - 1)])
        b.push_back(unit(n, i, j) + unit(n, j, i));
  return b;
}

}  // namespace

Subspace p_phi(int rank, const PhiSubset& phi) {
  check_phi(rank, phi);
  auto b = cartan_subspace(rank).basis;
  auto extra = p_lambda_block(rank, phi);
  b.insert(b.end(), extra.begin(), extra.end());
  return make_subspace(std::move(b), "p_Phi");
}

Subspace p_phi_s(int rank, const PhiSubset& phi) {
  auto b = a_upper_phi(rank, phi).basis;
  auto extra = p_lambda_block(rank, phi);
  b.insert(b.end(), extra.begin(), extra.end());
  return make_subspace(std::move(b), "p_Phi^s");
}

Subspace q_phi_blocks(int rank, const PhiSubset& phi) {
  check_phi(rank, phi);
  const int n = rank + 1;
  const auto id = block_ids(rank, phi);
  auto b = cartan_subspace(rank).basis;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && id[static_cast<std::size_t>(i - 1)] <= id[static_cast<std::size_t>(j - 1)])
        b.push_back(unit(n, i, j));
  return make_subspace(std::move(b), "q_Phi");
}

Subspace build_s_phi_v(int rank, const PhiSubset& phi, int dim_v, std::span<const Matrix> ell_choice) {
  check_phi(rank, phi);
  for (int i : phi.indices())
    if (phi.contains(i + 1))
      throw DomainError("build_s_phi_v: Phi is not orthogonal (alpha_" + std::to_string(i) + " and alpha_" +
                        std::to_string(i + 1) + " are adjacent)");
  if (dim_v < 0 || dim_v > rank - phi.size())
    throw DomainError("build_s_phi_v: dim V = " + std::to_string(dim_v) + " outside 0.." +
                      std::to_string(rank - phi.size()));
  const int n = rank + 1;

  std::vector<Matrix> ell;
  if (ell_choice.empty()) {
    for (int i : phi.indices()) ell.push_back(unit(n, i, i + 1));
  } else {
    if (static_cast<int>(ell_choice.size()) != phi.size())
      throw DomainError("build_s_phi_v: need one ell vector per root in Phi");
    for (std::size_t k = 0; k < ell_choice.size(); ++k) {
      const int i = phi.indices()[k];
      const Matrix& l = ell_choice[k];
      if (l.rows() != n || l.cols() != n) throw DomainError("build_s_phi_v: ell vector has wrong size");
      Matrix rest = l;
      rest(i - 1, i) = 0.0;
      if (l(i - 1, i) == 0.0 || max_abs(rest) > kTauAlg * std::abs(l(i - 1, i)))
        throw DomainError("build_s_phi_v: ell vector is not a nonzero element of g_alpha_" + std::to_string(i));
      ell.push_back(l);
    }
  }

  std::vector<Matrix> basis = a_upper_phi(rank, phi).basis;
  const auto v_full = a_phi(rank, phi).basis;
  basis.insert(basis.end(), v_full.begin(), v_full.begin() + dim_v);

  // n minus ell_Phi: orthonormalize ell followed by n and keep what lies
  // beyond ell.
  std::vector<Matrix> seq = ell;
  const auto nb = nilradical(rank).basis;
  seq.insert(seq.end(), nb.begin(), nb.end());
  const auto q = orthonormalize(seq);
  basis.insert(basis.end(), q.begin() + static_cast<std::ptrdiff_t>(ell.size()), q.end());

  return make_subspace(std::move(basis), "s_{Phi,V}");
}

Subspace build_s_phi_v(const SymmetricSpace& space, const PhiSubset& phi, int dim_v,
                       std::span<const Matrix> ell_choice) {
  if (!space.is_real_special_linear())
    throw DomainError("build_s_phi_v: matrix model available only for SL_{r+1}(R)/SO_{r+1}, not " +
                      space.descriptor().name);
  return build_s_phi_v(space.rank(), phi, dim_v, ell_choice);
}

// ---------------------------------------------------------------------------

Complex moebius(const Matrix2& g, Complex z) {
  if (!(std::abs(g.determinant() - 1.0) <= kTauNum)) throw DomainError("moebius: det g must be 1");
  if (!(z.imag() > 0.0)) throw DomainError("moebius: z must lie in the upper half-plane");
  return (g(0, 0) * z + g(0, 1)) / (g(1, 0) * z + g(1, 1));
}

Matrix2 k_element(double s) {
  Matrix2 m;
  m << std::cos(s), std::sin(s), -std::sin(s), std::cos(s);
  return m;
}

Matrix2 a_element(double t) {
  Matrix2 m;
  m << std::exp(t), 0.0, 0.0, std::exp(-t);
  return m;
}

Matrix2 n_element(double u) {
  Matrix2 m;
  m << 1.0, u, 0.0, 1.0;
  return m;
}

}  // namespace liefoliate::sl
