#include "doctest.h"
#include "util.hpp"

#include "liefoliate/errors.hpp"
#include "liefoliate/foliate.hpp"

#include <set>

using namespace liefoliate;

namespace {

long fibonacci(int n) {
  long a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    const long c = a + b;
    a = b;
    b = c;
  }
  return a;
}

std::size_t brute_force_independent_sets(const DynkinDiagram& dd) {
  std::size_t count = 0;
  for (unsigned mask = 0; mask < (1u << dd.rank); ++mask) {
    bool ok = true;
    for (int i = 1; i <= dd.rank && ok; ++i)
      for (int j = i + 1; j <= dd.rank && ok; ++j)
        if ((mask >> (i - 1) & 1) && (mask >> (j - 1) & 1) && dd.adjacent(i, j)) ok = false;
    count += ok;
  }
  return count;
}

SymmetricSpace space(const std::string& key) { return SymmetricSpace(catalog_lookup(key)); }

}  // namespace

TEST_CASE("orthogonal subsets") {
  for (int r = 1; r <= 12; ++r) {
    const auto dd = dynkin_diagram(build_root_system(Family::A, r));
    CHECK(orthogonal_subsets(dd).size() == std::size_t(fibonacci(r + 2)));
    if (r <= 6) CHECK(orthogonal_subsets(dd).size() == brute_force_independent_sets(dd));
  }
  const auto a1 = orthogonal_subsets(dynkin_diagram(build_root_system(Family::A, 1)));
  REQUIRE(a1.size() == 2);
  CHECK(a1[0].empty());
  CHECK(a1[1].indices() == std::vector<int>{1});
  CHECK(orthogonal_subsets(dynkin_diagram(build_root_system(Family::A, 4))).size() == 8);
  for (auto f : {Family::D, Family::E6, Family::E7, Family::E8, Family::F4}) {
    const auto dd = dynkin_diagram(build_root_system(f, valid_rank_range(f).first + (f == Family::D ? 2 : 0)));
    CHECK(orthogonal_subsets(dd).size() == brute_force_independent_sets(dd));
  }
}

TEST_CASE("hyperbolic factors") {
  const auto sl5 = space("SL5");
  for (int a = 1; a <= 4; ++a) {
    const auto h = hyperbolic_factor(sl5, a);
    CHECK(h.algebra == DivisionAlgebra::R);
    CHECK(h.n == 2);
    CHECK(h.real_dim == 2);
  }
  const auto o = hyperbolic_factor(space("F4(-20)"), 1);
  CHECK(o.algebra == DivisionAlgebra::O);
  CHECK(o.n == 2);
  CHECK(o.real_dim == 16);
  for (int n = 1; n <= 3; ++n) {
    const auto h = hyperbolic_factor(space("SU(" + std::to_string(2 + n) + ",2)"), 2);
    CHECK(h.algebra == DivisionAlgebra::C);
    CHECK(h.n == n + 1);
  }
  CHECK(hyperbolic_factor(space("Sp(3,1)"), 1).algebra == DivisionAlgebra::H);
  CHECK_THROWS_AS(hyperbolic_factor(sl5, 5), DomainError);
}

TEST_CASE("rank-one spaces: the factor is the whole space and there are two classes") {
  for (const auto& d : catalog_instances(1, 5)) {
    if (d.rank != 1) continue;
    CAPTURE(d.key);
    const SymmetricSpace s(d);
    CHECK(hyperbolic_factor(s, 1).real_dim == s.dimension());
    const auto classes = enumerate_foliations(s);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].phi.empty());
    CHECK(classes[0].dim_V == 0);
    CHECK(classes[0].codim == 1);
    CHECK(classes[1].phi.indices() == std::vector<int>{1});
    CHECK(classes[1].dim_V == 0);
    CHECK(classes[1].codim == 1);
  }
}

TEST_CASE("SL5 classes") {
  const auto s = space("SL5");
  const auto orbits = orthogonal_subset_orbits(s.diagram());
  REQUIRE(orbits.size() == 5);
  std::vector<std::vector<int>> reps;
  for (const auto& o : orbits) reps.push_back(o.front().indices());
  CHECK(reps == std::vector<std::vector<int>>{{}, {1}, {2}, {1, 3}, {1, 4}});

  const auto all = enumerate_foliations(s, true);
  CHECK(all.size() == 19);
  CHECK(enumerate_foliations(s).size() == 18);
  int trivial = 0;
  for (const auto& c : all) {
    if (c.trivial) {
      ++trivial;
      CHECK(c.phi.empty());
      CHECK(c.dim_V == 4);
    }
  }
  CHECK(trivial == 1);

  std::vector<std::pair<std::vector<int>, int>> codim_one;
  for (const auto& c : all)
    if (c.codim == 1) codim_one.emplace_back(c.phi.indices(), c.dim_V);
  CHECK(codim_one == std::vector<std::pair<std::vector<int>, int>>{{{}, 3}, {{1}, 3}, {{2}, 3}});

  for (const auto& c : all)
    if (c.phi.indices() == std::vector<int>{1, 3} && c.dim_V == 1) {
      CHECK(c.leaf_dim == 11);
      CHECK(c.codim == 3);
    }
}

TEST_CASE("codimension formula") {
  FoliationClass fc;
  fc.rank = 4;
  fc.dim_V = 4;
  CHECK(foliation_codimension(fc) == 0);
  fc.dim_V = 0;
  CHECK(foliation_codimension(fc) == 4);
  fc.phi = PhiSubset({1, 3}, 4);
  fc.dim_V = 1;
  CHECK(foliation_codimension(fc) == 3);
}

TEST_CASE("enumeration invariants across the catalog") {
  for (const auto& d : catalog_instances(5, 3)) {
    CAPTURE(d.key);
    const SymmetricSpace s(d);
    const auto subsets = orthogonal_subsets(s.diagram());
    const auto orbits = orthogonal_subset_orbits(s.diagram());
    std::size_t total = 0;
    std::set<PhiSubset> seen;
    for (const auto& o : orbits) {
      total += o.size();
      for (const auto& phi : o) CHECK(seen.insert(phi).second);
    }
    CHECK(total == subsets.size());
    for (const auto& phi : subsets) CHECK(seen.count(phi) == 1);
    for (const auto& c : enumerate_foliations(s, true)) {
      CHECK(c.codim + c.leaf_dim == s.dimension());
      CHECK(c.codim == foliation_codimension(c));
      CHECK(c.trivial == (c.phi.empty() && c.dim_V == s.rank()));
      for (int i : c.phi.indices())
        for (int j : c.phi.indices()) CHECK_FALSE(s.diagram().adjacent(i, j));
    }
  }
}
