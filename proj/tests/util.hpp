#pragma once

#include "liefoliate/rootsys.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace testutil {

// Root from plain integer coordinates.
inline liefoliate::Root R(std::vector<int> c) { return liefoliate::Root::from_integers(c); }
// Root from coordinates already doubled (for half-integer vectors).
inline liefoliate::Root R2(std::vector<int> c) { return liefoliate::Root(std::move(c)); }

// Set of scaled coordinate vectors.
using VecSet = std::set<std::vector<int>>;

inline VecSet as_set(const std::vector<liefoliate::Root>& roots) {
  VecSet s;
  for (const auto& r : roots) s.emplace(r.scaled().begin(), r.scaled().end());
  return s;
}

inline std::vector<int> unit2(int dim, int i, int sign = 1) {  // 2 * sign * e_i, 1-based
  std::vector<int> v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(i - 1)] = 2 * sign;
  return v;
}

inline std::vector<int> add(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace testutil
