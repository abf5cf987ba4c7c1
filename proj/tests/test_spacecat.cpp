#include "doctest.h"
#include "util.hpp"

#include "liefoliate/errors.hpp"
#include "liefoliate/spacecat.hpp"

#include <map>

using namespace liefoliate;
using namespace testutil;

namespace {

// dim G - dim K from the standard dimension formulas of the classical and
// exceptional groups, independent of the root data.
int group_quotient_dim(const SpaceDescriptor& d) {
  const std::string& k = d.key;
  const int r = d.rank;
  const int n = d.n.value_or(0);
  auto sq = [](int x) { return x * x; };
  auto so = [](int x) { return x * (x - 1) / 2; };
  auto sp = [](int x) { return x * (2 * x + 1); };
  if (k.rfind("SLC", 0) == 0) return sq(r + 1) - 1;
  if (k.rfind("SLH", 0) == 0) return 4 * sq(r + 1) - 1 - sp(r + 1);
  if (k.rfind("SL", 0) == 0) return sq(r + 1) - 1 - so(r + 1);
  if (k.rfind("SOC", 0) == 0) {
    const int m = d.family == Family::B ? 2 * r + 1 : 2 * r;
    return so(m);
  }
  if (k.rfind("SOH", 0) == 0) {
    const int m = d.family == Family::BC ? 2 * r + 1 : 2 * r;  // SO*(2m)/U(m)
    return m * (m - 1);
  }
  if (k.rfind("SpR", 0) == 0) return r * (r + 1);
  if (k.rfind("SpC", 0) == 0) return sp(r);
  static const std::map<std::string, int> exceptional{
      {"E6(6)", 42},  {"E6(2)", 40},  {"E6(-14)", 32}, {"E6(-26)", 26}, {"E6C", 78},
      {"E7(7)", 70},  {"E7(-5)", 64}, {"E7(-25)", 54}, {"E7C", 133},    {"E8(8)", 128},
      {"E8(-24)", 112}, {"E8C", 248}, {"F4(4)", 28},   {"F4(-20)", 16}, {"F4C", 52},
      {"G2(2)", 8},   {"G2C", 14}};
  if (auto it = exceptional.find(k); it != exceptional.end()) return it->second;
  // Indefinite groups: SO(p,q) pq, SU(p,q) 2pq, Sp(p,q) 4pq.
  int p = 0, q = 0;
  if (k.rfind("SOo(", 0) == 0 || k.rfind("SU(", 0) == 0 || k.rfind("Sp(", 0) == 0) {
    const auto open = k.find('('), comma = k.find(','), close = k.find(')');
    p = std::stoi(k.substr(open + 1, comma - open - 1));
    q = std::stoi(k.substr(comma + 1, close - comma - 1));
    (void)n;
    if (k[1] == 'O') return p * q;
    if (k[1] == 'U') return 2 * p * q;
    return 4 * p * q;
  }
  return -1;
}

}  // namespace

TEST_CASE("catalog lookups by key and display name") {
  const auto sl5 = catalog_lookup("SL_5(R)/SO_5");
  CHECK(sl5.family == Family::A);
  CHECK(sl5.rank == 4);
  CHECK(sl5.simple_mults == std::vector<int>{1, 1, 1, 1});
  CHECK(catalog_lookup("SL5") == sl5);

  const auto sprr = catalog_lookup("Sp_{r,r}/Sp_r Sp_r", 2);
  CHECK(sprr.family == Family::C);
  CHECK(sprr.rank == 2);
  CHECK(sprr.simple_mults == std::vector<int>{4, 3});

  const auto f4 = catalog_lookup("F_4^{-20}/Spin_9");
  CHECK(f4.family == Family::BC);
  CHECK(f4.rank == 1);
  CHECK(f4.simple_mults == std::vector<int>{8});
  CHECK(f4.double_mult == 7);
  CHECK(catalog_lookup("F4(-20)") == f4);

  CHECK(catalog_lookup("SOo(5,2)").family == Family::B);
  CHECK(catalog_lookup("SOo(5,2)").simple_mults == std::vector<int>{1, 3});
}

TEST_CASE("unknown names are rejected with the list of valid names") {
  try {
    catalog_lookup("XYZ");
    FAIL("expected rejection");
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("SL{r+1}") != std::string::npos);
    CHECK(msg.find("F4(-20)") != std::string::npos);
  }
  CHECK_THROWS_AS(catalog_lookup("SL1"), DomainError);
}

TEST_CASE("root multiplicities") {
  const SymmetricSpace sl5(catalog_lookup("SL5"));
  CHECK(root_multiplicity(sl5, R({1, 0, -1, 0, 0})) == 1);
  CHECK_THROWS_AS(sl5.multiplicity(R({1, 1, 0, 0, 0})), DomainError);

  for (int n = 1; n <= 3; ++n) {
    const SymmetricSpace so(catalog_lookup("SOo(" + std::to_string(3 + n) + ",3)"));
    CHECK(so.multiplicity(R({0, 1, 0})) == n);
    CHECK(so.multiplicity(R({1, -1, 0})) == 1);
  }
  const SymmetricSpace su(catalog_lookup("SU(5,2)"));
  CHECK(su.multiplicity(R({2, 0})) == 1);
  CHECK(su.multiplicity(R({0, 1})) == 6);
  CHECK(su.multiplicity(R({1, -1})) == 2);
}

TEST_CASE("dimensions") {
  CHECK(SymmetricSpace(catalog_lookup("SL5")).dimension() == 14);
  for (int n = 2; n <= 6; ++n) {
    CHECK(SymmetricSpace(catalog_lookup("SU(" + std::to_string(n) + ",1)")).dimension() == 2 * n);
    CHECK(SymmetricSpace(catalog_lookup("SOo(" + std::to_string(n + 1) + ",1)")).dimension() == n + 1);
  }
}

TEST_CASE("every catalog dimension equals dim G - dim K") {
  for (const auto& d : catalog_instances(6, 4)) {
    CAPTURE(d.key);
    const int expected = group_quotient_dim(d);
    REQUIRE(expected > 0);
    const SymmetricSpace s(d);
    CHECK(s.dimension() == expected);
    CHECK(space_dimension(s) == expected);
    CHECK(s.dimension() > s.rank());
  }
}

TEST_CASE("descriptor invariants and Weyl invariance") {
  for (const auto& d : catalog_instances(5, 3)) {
    CAPTURE(d.key);
    CHECK(static_cast<int>(d.simple_mults.size()) == d.rank);
    for (int m : d.simple_mults) CHECK(m >= 1);
    CHECK(d.double_mult.has_value() == (d.family == Family::BC));
    if (d.double_mult) CHECK((*d.double_mult == 1 || *d.double_mult == 3 || *d.double_mult == 7));
    const SymmetricSpace s(d);
    for (const auto& a : s.roots().roots)
      for (const auto& b : s.roots().roots) CHECK(s.multiplicity(reflect(a, b)) == s.multiplicity(b));
    if (d.dim_k0 == 0) {
      CHECK(s.dimension() == s.rank() + static_cast<int>(s.roots().positive.size()));
      for (const auto& a : s.roots().roots) CHECK(s.multiplicity(a) == 1);
    }
  }
}

TEST_CASE("the complex SL entry is stored with the corrected name") {
  const auto d = catalog_lookup("SLC3");
  CHECK(d.name == "SL_3(C)/SU_3");
  CHECK_FALSE(d.note.empty());
}

TEST_CASE("split entries carry dim k0 = 0, others leave it unavailable") {
  for (const auto& d : catalog_instances(4, 3)) {
    CAPTURE(d.key);
    bool all_one = std::all_of(d.simple_mults.begin(), d.simple_mults.end(), [](int m) { return m == 1; }) &&
                   !d.double_mult;
    if (d.dim_k0) {
      CHECK(*d.dim_k0 == 0);
      CHECK(all_one);
    }
  }
  CHECK(catalog_lookup("SL4").dim_k0 == 0);
  CHECK_FALSE(catalog_lookup("SLC4").dim_k0.has_value());
}
