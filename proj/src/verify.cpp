#include "liefoliate/verify.hpp"

#include "liefoliate/errors.hpp"
#include "liefoliate/foliate.hpp"
#include "liefoliate/kernels.hpp"
#include "liefoliate/slmodel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace liefoliate {

namespace {

struct Check {
  std::string name;
  std::function<std::string(std::mt19937_64&)> run;  // empty string on success
};

std::vector<std::pair<Family, int>> constructible(int max_classical) {
  std::vector<std::pair<Family, int>> out;
  for (auto f : {Family::A, Family::B, Family::C, Family::D, Family::BC}) {
    for (int r = valid_rank_range(f).first; r <= max_classical; ++r) out.emplace_back(f, r);
  }
  for (auto f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2})
    out.emplace_back(f, valid_rank_range(f).first);
  return out;
}

std::string label(Family f, int r) { return std::string(to_string(f)) + std::to_string(r); }

std::vector<Check> rootsys_checks() {
  return {
      {"weyl closure",
       [](std::mt19937_64&) {
         for (auto [f, r] : constructible(8)) {
           const auto c = kernels::omp::weyl_closure(build_root_system(f, r));
           if (c.failures) return label(f, r) + ": " + std::to_string(c.failures) + " reflections leave Sigma";
         }
         return std::string();
       }},
      {"uniform-sign simple expansion",
       [](std::mt19937_64&) {
         for (auto [f, r] : constructible(8)) {
           const auto rs = build_root_system(f, r);
           for (const auto& root : rs.roots) {
             const auto c = simple_coefficients(rs, root);
             if (!c) return label(f, r) + ": " + to_string(root) + " outside the simple span";
             bool all_nonneg = true, all_nonpos = true;
             for (const auto& x : *c) {
               if (x.denominator() != 1) return label(f, r) + ": non-integral coefficient for " + to_string(root);
               all_nonneg = all_nonneg && x.numerator() >= 0;
               all_nonpos = all_nonpos && x.numerator() <= 0;
             }
             if (!(all_nonneg || all_nonpos)) return label(f, r) + ": mixed signs for " + to_string(root);
             if (all_nonneg != rs.is_positive(root)) return label(f, r) + ": sign disagrees with Sigma+ for " + to_string(root);
           }
         }
         return std::string();
       }},
      {"diagram automorphisms preserve the diagram",
       [](std::mt19937_64&) {
         for (auto [f, r] : constructible(8)) {
           const auto dd = dynkin_diagram(build_root_system(f, r));
           for (const auto& p : diagram_automorphisms(dd))
             for (int i = 1; i <= r; ++i)
               for (int j = 1; j <= r; ++j) {
                 const int pi = p[static_cast<std::size_t>(i - 1)], pj = p[static_cast<std::size_t>(j - 1)];
                 if (dd.lines(i, j) != dd.lines(pi, pj) ||
                     (i != j && dd.lines(i, j) && dd.arrow_direction(i, j) != dd.arrow_direction(pi, pj)))
                   return label(f, r) + ": automorphism breaks an edge";
               }
         }
         return std::string();
       }},
  };
}

std::vector<Check> spacecat_checks() {
  return {
      {"dimension equals rank plus multiplicities",
       [](std::mt19937_64&) {
         for (const auto& d : catalog_instances(6, 4)) {
           const SymmetricSpace s(d);
           int sum = s.rank();
           for (const auto& r : s.roots().positive) sum += s.multiplicity(r);
           if (sum != s.dimension()) return d.key + ": dimension mismatch";
         }
         return std::string();
       }},
      {"multiplicities are Weyl invariant",
       [](std::mt19937_64&) {
         for (const auto& d : catalog_instances(5, 3)) {
           const SymmetricSpace s(d);
           for (const auto& a : s.roots().roots)
             for (const auto& b : s.roots().roots)
               if (s.multiplicity(reflect(a, b)) != s.multiplicity(b)) return d.key + ": reflection changes m";
         }
         return std::string();
       }},
  };
}

std::vector<Check> parabolic_checks() {
  return {
      {"horospherical dimension conservation",
       [](std::mt19937_64&) {
         for (const auto& d : catalog_instances(5, 3)) {
           const SymmetricSpace s(d);
           for (const auto& phi : all_phi_subsets(s.rank())) {
             const auto h = horospherical(s, phi);
             if (h.dim_Fs + h.dim_euclidean + h.dim_N != s.dimension())
               return d.key + " Phi={" + to_string(phi) + "}: dimensions do not add up";
           }
         }
         return std::string();
       }},
      {"parabolic dimension matches block matrices",
       [](std::mt19937_64&) {
         for (int r = 1; r <= 5; ++r) {
           const SymmetricSpace s(catalog_lookup("SL" + std::to_string(r + 1)));
           for (const auto& phi : all_phi_subsets(r)) {
             const auto q = parabolic_data(s, phi).dim_q_phi;
             if (!q || *q != sl::subspace_dim(sl::q_phi_blocks(r, phi)))
               return "SL" + std::to_string(r + 1) + " Phi={" + to_string(phi) + "}: dim q_Phi differs";
           }
         }
         return std::string();
       }},
  };
}

std::vector<Check> foliate_checks() {
  return {
      {"codimension formula",
       [](std::mt19937_64&) {
         for (const auto& d : catalog_instances(5, 3)) {
           const SymmetricSpace s(d);
           for (const auto& c : enumerate_foliations(s, true))
             if (c.codim != foliation_codimension(c) || c.leaf_dim + c.codim != s.dimension())
               return d.key + ": codimension mismatch";
         }
         return std::string();
       }},
      {"rank-one spaces carry two nontrivial classes",
       [](std::mt19937_64&) {
         for (const auto& d : catalog_instances(1, 4)) {
           if (d.rank != 1) continue;
           const auto n = enumerate_foliations(SymmetricSpace(d)).size();
           if (n != 2) return d.key + ": " + std::to_string(n) + " classes";
         }
         return std::string();
       }},
  };
}

std::vector<Check> slmodel_checks() {
  return {
      {"Killing form closed form",
       [](std::mt19937_64& eng) {
         for (int r = 1; r <= 6; ++r) {
           std::vector<sl::Matrix> xs, ys;
           for (int i = 0; i < 20; ++i) {
             xs.push_back(sl::random_traceless(r, eng));
             ys.push_back(sl::random_traceless(r, eng));
           }
           const auto b = kernels::omp::killing_batch(xs, ys);
           for (std::size_t i = 0; i < b.size(); ++i)
             if (std::abs(b[i] - 2.0 * (r + 1) * (xs[i] * ys[i]).trace()) >= 1e-9)
               return "r=" + std::to_string(r) + ": closed form violated";
         }
         return std::string();
       }},
      {"Iwasawa round trip",
       [](std::mt19937_64& eng) {
         for (int r = 1; r <= 6; ++r) {
           std::vector<sl::Matrix> gs;
           for (int i = 0; i < 200; ++i) gs.push_back(sl::random_sl(r, eng));
           for (const auto& o : kernels::omp::iwasawa_batch(gs))
             if (!o.ok || o.reconstruction_error >= sl::kTauNum)
               return "r=" + std::to_string(r) + ": round trip error too large";
         }
         return std::string();
       }},
      {"Lie triple systems p_Phi, p_Phi^s, a_Phi",
       [](std::mt19937_64&) {
         for (int r = 1; r <= 4; ++r)
           for (const auto& phi : all_phi_subsets(r))
             for (const auto& s : {sl::p_phi(r, phi), sl::p_phi_s(r, phi), sl::a_phi(r, phi)}) {
               if (s.basis.empty()) continue;
               if (!sl::is_lie_triple(s).holds) return s.label + " Phi={" + to_string(phi) + "} fails";
             }
         return std::string();
       }},
      {"foliation subalgebras are closed",
       [](std::mt19937_64&) {
         for (int r = 1; r <= 4; ++r) {
           const SymmetricSpace s(catalog_lookup("SL" + std::to_string(r + 1)));
           for (const auto& c : enumerate_foliations(s, true)) {
             const auto sub = sl::build_s_phi_v(s, c.phi, c.dim_V);
             if (sl::subspace_dim(sub) != s.dimension() - c.codim)
               return "SL" + std::to_string(r + 1) + ": dimension of s_{Phi,V} differs";
             if (sl::bracket_closure_residual(sub) > sl::kTauAlg)
               return "SL" + std::to_string(r + 1) + ": s_{Phi,V} not closed";
           }
         }
         return std::string();
       }},
  };
}

std::vector<Check> checks_for(std::string_view suite) {
  if (suite == "rootsys") return rootsys_checks();
  if (suite == "spacecat") return spacecat_checks();
  if (suite == "parabolic") return parabolic_checks();
  if (suite == "foliate") return foliate_checks();
  if (suite == "slmodel") return slmodel_checks();
  throw DomainError("unknown suite '" + std::string(suite) + "'");
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"rootsys", "spacecat", "parabolic", "foliate", "slmodel", "all"};
  return names;
}

std::vector<CheckResult> run_verify(std::string_view suite, std::uint64_t seed) {
  std::vector<std::string> names;
  if (suite == "all")
    names.assign(verify_suites().begin(), verify_suites().end() - 1);
  else
    names.emplace_back(suite);

  std::vector<CheckResult> out;
  for (const auto& name : names) {
    for (auto& check : checks_for(name)) {
      std::mt19937_64 eng(seed);
      CheckResult res{name, check.name, false, ""};
      try {
        res.detail = check.run(eng);
        res.passed = res.detail.empty();
      } catch (const std::exception& e) {
        res.detail = std::string("exception: ") + e.what();
      }
      out.push_back(std::move(res));
    }
  }
  return out;
}

}  // namespace liefoliate
