#include "doctest.h"

#include "liefoliate/export.hpp"

#include <random>

using namespace liefoliate;

namespace {

template <class T>
T round_trip(const T& x) {
  return json::parse(json(x).dump()).get<T>();
}

}  // namespace

TEST_CASE("JSON round trip of every record type") {
  for (auto f : {Family::A, Family::B, Family::C, Family::D, Family::E6, Family::E7, Family::E8, Family::F4,
                 Family::G2, Family::BC}) {
    const int r = has_fixed_rank(f) ? valid_rank_range(f).first : valid_rank_range(f).first + 2;
    const auto rs = build_root_system(f, r);
    CHECK(round_trip(rs) == rs);
    const auto dd = dynkin_diagram(rs);
    CHECK(round_trip(dd) == dd);
  }
  for (const auto& d : catalog_instances(4, 3)) {
    CAPTURE(d.key);
    CHECK(round_trip(d) == d);
    const SymmetricSpace s(d);
    for (const auto& phi : all_phi_subsets(s.rank())) {
      CHECK(round_trip(phi) == phi);
      const auto p = parabolic_data(s, phi);
      CHECK(round_trip(p) == p);
      const auto h = horospherical(s, phi);
      CHECK(round_trip(h) == h);
    }
    for (const auto& c : enumerate_foliations(s, true)) CHECK(round_trip(c) == c);
  }
  std::mt19937_64 eng(1);
  for (int r = 1; r <= 4; ++r) {
    const auto f = sl::iwasawa_group(sl::random_sl(r, eng));
    const auto g = round_trip(f);
    CHECK(g.k == f.k);
    CHECK(g.a == f.a);
    CHECK(g.n == f.n);
  }
}

TEST_CASE("JSON shapes") {
  const auto rs = build_root_system(Family::E8, 8);
  const json j = rs;
  CHECK(j["coordinate_scale"] == 2);
  CHECK(j["roots"].size() == 240);
  for (const auto& v : j["roots"])
    for (const auto& x : v) CHECK(x.is_number_integer());

  const json bc = catalog_lookup("SU(5,2)");
  CHECK(bc["last_mult_pair"] == json::array({6, 1}));
  const json unavailable = parabolic_data(SymmetricSpace(catalog_lookup("SU(5,2)")), PhiSubset());
  CHECK(unavailable["dim_q_phi"].is_null());
  CHECK(unavailable["dim_n_phi"] == 18);  // 2+2 + 6+6 + 1+1

  const json diagram = dynkin_diagram(build_root_system(Family::BC, 2));
  CHECK(diagram["vertices"][1]["double_circle"] == true);
  CHECK_FALSE(diagram["figure_note"].get<std::string>().empty());
}

TEST_CASE("DOT export") {
  const auto f4 = to_dot(dynkin_diagram(build_root_system(Family::F4, 4)));
  CHECK(f4.find("a1 -- a2 [label=\"1\"]") != std::string::npos);
  CHECK(f4.find("a2 -- a3 [label=\"2\", dir=forward]") != std::string::npos);
  CHECK(f4.find("a3 -- a4 [label=\"1\"]") != std::string::npos);
  CHECK(f4.find("peripheries") == std::string::npos);
  const auto bc = to_dot(dynkin_diagram(build_root_system(Family::BC, 3)));
  CHECK(bc.find("a3 [xlabel=\"3\", peripheries=2]") != std::string::npos);
  const auto g2 = to_dot(dynkin_diagram(build_root_system(Family::G2, 2)));
  CHECK(g2.find("a1 -- a2 [label=\"3\", dir=back]") != std::string::npos);
}

TEST_CASE("tables") {
  const SymmetricSpace s(catalog_lookup("SL5"));
  const PhiSubset phi({1, 3}, 4);
  const auto t = table(s.descriptor(), phi, parabolic_data(s, phi));
  CHECK(t.find("dim q_Phi      16") != std::string::npos);
  const auto h = table(s.descriptor(), phi, horospherical(s, phi));
  CHECK(h.find("= 14") != std::string::npos);
  CHECK(table(enumerate_foliations(s)).find("RH^2") != std::string::npos);
}
