#include "liefoliate/kernels.hpp"

#include "liefoliate/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace liefoliate::kernels::omp {

// Loops run over signed indices for OpenMP. Exceptions must not escape a
// parallel region, so every per-item failure is recorded in place.

std::vector<double> killing_batch(std::span<const sl::Matrix> xs, std::span<const sl::Matrix> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("killing_batch: batch sizes differ");
  const auto n = static_cast<long>(xs.size());
  std::vector<double> out(xs.size());
  std::vector<char> failed(xs.size(), 0);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = sl::killing_form(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]);
    } catch (...) {
      failed[static_cast<std::size_t>(i)] = 1;
    }
  }
  for (std::size_t i = 0; i < failed.size(); ++i)
    if (failed[i]) throw DomainError("killing_batch: sample " + std::to_string(i) + " is not a traceless pair");
  return out;
}

std::vector<IwasawaOutcome> iwasawa_batch(std::span<const sl::Matrix> gs) {
  const auto n = static_cast<long>(gs.size());
  std::vector<IwasawaOutcome> out(gs.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k].factors = sl::iwasawa_group(gs[k]);
      out[k].reconstruction_error = (gs[k] - sl::reassemble(out[k].factors)).cwiseAbs().maxCoeff();
      out[k].ok = true;
    } catch (...) {
      out[k].ok = false;
    }
  }
  return out;
}

ClosureCount weyl_closure(const RootSystem& rs) {
  const auto n = static_cast<long>(rs.roots.size());
  std::size_t failures = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures)
  for (long a = 0; a < n; ++a) {
    const Root& lambda = rs.roots[static_cast<std::size_t>(a)];
    for (const auto& mu : rs.roots) {
      try {
        if (!rs.contains(reflect(lambda, mu))) ++failures;
      } catch (...) {
        ++failures;
      }
    }
  }
  return {static_cast<std::size_t>(n * n), failures};
}

double triple_residual(std::span<const sl::Matrix> q) {
  const auto n = static_cast<long>(q.size());
  double worst = 0.0;
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(max : worst)
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const auto& x = q[static_cast<std::size_t>(i)];
      const auto& y = q[static_cast<std::size_t>(j)];
      const sl::Matrix xy = x * y - y * x;
      for (const auto& z : q) worst = std::max(worst, residual_outside(xy * z - z * xy, q));
    }
  return worst;
}

double pair_residual(std::span<const sl::Matrix> q) {
  const auto n = static_cast<long>(q.size());
  double worst = 0.0;
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(max : worst)
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const auto& x = q[static_cast<std::size_t>(i)];
      const auto& y = q[static_cast<std::size_t>(j)];
      worst = std::max(worst, residual_outside(x * y - y * x, q));
    }
  return worst;
}

}  // namespace liefoliate::kernels::omp
