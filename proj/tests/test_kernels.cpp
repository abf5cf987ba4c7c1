#include "doctest.h"

#include "liefoliate/kernels.hpp"

#include <random>

using namespace liefoliate;

TEST_CASE("reference and OpenMP kernels agree") {
  std::mt19937_64 eng(42);
  for (int r = 1; r <= 5; ++r) {
    std::vector<sl::Matrix> xs, ys, gs;
    for (int i = 0; i < 30; ++i) {
      xs.push_back(sl::random_traceless(r, eng));
      ys.push_back(sl::random_traceless(r, eng));
      gs.push_back(sl::random_sl(r, eng));
    }
    CHECK(kernels::ref::killing_batch(xs, ys) == kernels::omp::killing_batch(xs, ys));

    const auto a = kernels::ref::iwasawa_batch(gs), b = kernels::omp::iwasawa_batch(gs);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].ok == b[i].ok);
      CHECK(a[i].reconstruction_error == b[i].reconstruction_error);
      CHECK(a[i].factors.k == b[i].factors.k);
      CHECK(a[i].factors.a == b[i].factors.a);
      CHECK(a[i].factors.n == b[i].factors.n);
    }

    const auto q = sl::orthonormalize(sl::p_subspace(r).basis);
    CHECK(kernels::ref::triple_residual(q) == kernels::omp::triple_residual(q));
    CHECK(kernels::ref::pair_residual(q) == kernels::omp::pair_residual(q));
  }
  for (auto f : {Family::A, Family::C, Family::BC, Family::F4, Family::G2}) {
    const auto rs = build_root_system(f, has_fixed_rank(f) ? valid_rank_range(f).first : 3);
    const auto a = kernels::ref::weyl_closure(rs), b = kernels::omp::weyl_closure(rs);
    CHECK(a == b);
    CHECK(a.failures == 0);
    CHECK(a.pairs_checked == rs.roots.size() * rs.roots.size());
  }
}

TEST_CASE("failures are reported per item") {
  std::vector<sl::Matrix> gs{sl::Matrix::Identity(2, 2), 2 * sl::Matrix::Identity(2, 2)};
  for (const auto& out : {kernels::ref::iwasawa_batch(gs), kernels::omp::iwasawa_batch(gs)}) {
    CHECK(out[0].ok);
    CHECK_FALSE(out[1].ok);
  }
  std::vector<sl::Matrix> xs{sl::unit(2, 1, 1)}, ys{sl::unit(2, 1, 2)};
  CHECK_THROWS(kernels::ref::killing_batch(xs, ys));
  CHECK_THROWS(kernels::omp::killing_batch(xs, ys));
}

TEST_CASE("residual outside an orthonormal family") {
  const std::vector<sl::Matrix> q{sl::unit(2, 1, 2)};
  CHECK(kernels::residual_outside(3 * sl::unit(2, 1, 2), q) == 0.0);
  CHECK(kernels::residual_outside(sl::unit(2, 2, 1), q) == 1.0);
}
