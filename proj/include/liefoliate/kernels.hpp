#pragma once

// Batch kernels behind the property checks. Each kernel exists twice: a
// serial reference (kernels::ref) and an OpenMP version (kernels::omp) that
// must produce the same values. The library calls the OpenMP versions; the
// reference versions are kept for the tests and the benchmark.

#include "liefoliate/rootsys.hpp"
#include "liefoliate/slmodel.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace liefoliate::kernels {

struct ClosureCount {
  std::size_t pairs_checked{0};
  std::size_t failures{0};
  bool operator==(const ClosureCount&) const = default;
};

/// Per-sample Iwasawa outcome; a failed factorization leaves `ok` false.
struct IwasawaOutcome {
  sl::IwasawaFactors factors;
  bool ok{false};
  double reconstruction_error{0.0};  // max-norm of g - k a n
};

// killing_batch:   B(xs[i], ys[i]) for every i.
// iwasawa_batch:   factorization of every sample, with its round-trip error.
// weyl_closure:    s_lambda(mu) in Sigma for all lambda, mu in Sigma.
// triple_residual: max over triples of |[[q_i,q_j],q_k] outside span(q)|.
// pair_residual:   max over pairs of |[q_i,q_j] outside span(q)|.
// The residual kernels expect q orthonormal in the trace form.

namespace ref {
std::vector<double> killing_batch(std::span<const sl::Matrix> xs, std::span<const sl::Matrix> ys);
std::vector<IwasawaOutcome> iwasawa_batch(std::span<const sl::Matrix> gs);
ClosureCount weyl_closure(const RootSystem& rs);
double triple_residual(std::span<const sl::Matrix> q);
double pair_residual(std::span<const sl::Matrix> q);
}  // namespace ref

namespace omp {
std::vector<double> killing_batch(std::span<const sl::Matrix> xs, std::span<const sl::Matrix> ys);
std::vector<IwasawaOutcome> iwasawa_batch(std::span<const sl::Matrix> gs);
ClosureCount weyl_closure(const RootSystem& rs);
double triple_residual(std::span<const sl::Matrix> q);
double pair_residual(std::span<const sl::Matrix> q);
}  // namespace omp

/// Frobenius norm of the part of v orthogonal to the orthonormal family q.
double residual_outside(const sl::Matrix& v, std::span<const sl::Matrix> q);

}  // namespace liefoliate::kernels
