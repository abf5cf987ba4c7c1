#pragma once

#include <cmath>
#include <random>

namespace liefoliate::sl {

template <class Engine>
Matrix random_sl(int rank, Engine& engine) {
  const int n = rank + 1;
  std::normal_distribution<double> normal(0.0, 1.0);
  while (true) {
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = normal(engine);
    double det = g.determinant();
    if (std::abs(det) < 1e-3) continue;  // too close to singular, redraw
    if (det < 0) {
      g.row(0) *= -1.0;
      det = -det;
    }
    g *= std::pow(det, -1.0 / n);
    return g;
  }
}

template <class Engine>
Matrix random_traceless(int rank, Engine& engine) {
  const int n = rank + 1;
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = normal(engine);
  x.diagonal().array() -= x.trace() / n;
  return x;
}

}  // namespace liefoliate::sl
