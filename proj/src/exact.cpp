#include "liefoliate/exact.hpp"

#include <stdexcept>
#include <utility>

namespace liefoliate {

namespace {

// Row-reduces m in place and returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(std::vector<RationalVector>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == Rational(0)) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational p = m[row][col];
    for (auto& x : m[row]) x /= p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == Rational(0)) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return 0;
  auto m = vectors;
  return static_cast<int>(row_reduce(m, m.front().size()).size());
}

std::optional<RationalVector> solve_in_span(const std::vector<RationalVector>& basis,
                                            const RationalVector& target) {
  const std::size_t k = basis.size();
  const std::size_t dim = target.size();
  if (k == 0) {
    for (const auto& x : target)
      if (x != Rational(0)) return std::nullopt;
    return RationalVector{};
  }
  for (const auto& b : basis)
    if (b.size() != dim) throw std::invalid_argument("solve_in_span: dimension mismatch");

  // Augmented system: one row per ambient coordinate, columns = basis | target.
  std::vector<RationalVector> m(dim, RationalVector(k + 1));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = target[i];
  }
  const auto pivots = row_reduce(m, k + 1);
  const bool inconsistent = !pivots.empty() && pivots.back() == k;
  if (pivots.size() - (inconsistent ? 1 : 0) != k)
    throw std::invalid_argument("solve_in_span: basis is linearly dependent");
  if (inconsistent) return std::nullopt;

  RationalVector coeffs(k);
  for (std::size_t row = 0; row < k; ++row) coeffs[pivots[row]] = m[row][k];
  return coeffs;
}

}  // namespace liefoliate
