#include "liefoliate/kernels.hpp"

#include "liefoliate/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liefoliate::kernels {

double residual_outside(const sl::Matrix& v, std::span<const sl::Matrix> q) {
  sl::Matrix rest = v;
  for (const auto& b : q) rest -= (b.array() * rest.array()).sum() * b;
  return rest.norm();
}

namespace ref {

std::vector<double> killing_batch(std::span<const sl::Matrix> xs, std::span<const sl::Matrix> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("killing_batch: batch sizes differ");
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = sl::killing_form(xs[i], ys[i]);
  return out;
}

std::vector<IwasawaOutcome> iwasawa_batch(std::span<const sl::Matrix> gs) {
  std::vector<IwasawaOutcome> out(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    try {
      out[i].factors = sl::iwasawa_group(gs[i]);
      out[i].reconstruction_error = (gs[i] - sl::reassemble(out[i].factors)).cwiseAbs().maxCoeff();
      out[i].ok = true;
    } catch (const DomainError&) {
      out[i].ok = false;
    }
  }
  return out;
}

ClosureCount weyl_closure(const RootSystem& rs) {
  ClosureCount c;
  for (const auto& lambda : rs.roots)
    for (const auto& mu : rs.roots) {
      ++c.pairs_checked;
      try {
        if (!rs.contains(reflect(lambda, mu))) ++c.failures;
      } catch (const DomainError&) {
        ++c.failures;
      }
    }
  return c;
}

double triple_residual(std::span<const sl::Matrix> q) {
  double worst = 0.0;
  for (const auto& x : q)
    for (const auto& y : q) {
      const sl::Matrix xy = x * y - y * x;
      for (const auto& z : q) worst = std::max(worst, residual_outside(xy * z - z * xy, q));
    }
  return worst;
}

double pair_residual(std::span<const sl::Matrix> q) {
  double worst = 0.0;
  for (const auto& x : q)
    for (const auto& y : q) worst = std::max(worst, residual_outside(x * y - y * x, q));
  return worst;
}

}  // namespace ref
}  // namespace liefoliate::kernels
