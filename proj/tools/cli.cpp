#include "cli.hpp"

#include "liefoliate/errors.hpp"
#include "liefoliate/export.hpp"
#include "liefoliate/kernels.hpp"
#include "liefoliate/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

namespace liefoliate::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240917;

constexpr const char* kNamingHelp = R"(Space names use a flattened ASCII form of the catalog names:
  SL5 = SL_5(R)/SO_5, SLC4 = SL_4(C)/SU_4, SLH3 = SL_3(H)/Sp_3,
  SOo(5,2) = SO^o_{5,2}/SO_5 SO_2, SU(3,1), Sp(2,1), SOC7 = SO_7(C)/SO_7,
  SpR3 = Sp_3(R)/U_3, SpC3, SOH5 = SO_5(H)/U_5, E6(6), E6C, E7(-25),
  F4(-20), G2(2), G2C, ...
Display names such as "SL_5(R)/SO_5" are accepted too; a name with free
parameters (e.g. "Sp_{r,r}/Sp_r Sp_r") needs --rank (and --n).
`catalog list` prints every key.)";

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("LIEFOLIATE_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(s, &used);
      if (used == std::string(s).size()) return v;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("LIEFOLIATE_SEED", "must be a non-negative integer");
  }
  return kDefaultSeed;
}

json parse_json_arg(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw CLI::ValidationError(what, std::string("malformed JSON: ") + e.what());
  }
}

sl::Matrix parse_matrix(const json& j) {
  try {
    return j.get<sl::Matrix>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("matrix entries must be numbers: ") + e.what());
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

struct SpaceArgs {
  std::string name;
  std::optional<int> rank, n;
};

void add_space_options(CLI::App* cmd, SpaceArgs& s) {
  cmd->add_option("--space", s.name, "catalog space (see --help for the naming scheme)")->required();
  cmd->add_option("--rank", s.rank, "rank, for names with a free rank");
  cmd->add_option("--n", s.n, "second parameter, for names that have one");
}

SymmetricSpace load_space(const SpaceArgs& s) { return SymmetricSpace(catalog_lookup(s.name, s.rank, s.n)); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted root systems, parabolic data and hyperpolar homogeneous foliations of "
               "symmetric spaces of noncompact type.",
               "liefoliate"};
  app.footer(kNamingHelp);
  app.require_subcommand(1, 1);

  std::string format = "table";
  const auto formats = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember(std::move(allowed)));
  };

  std::function<void()> action;

  // rootsys ------------------------------------------------------------------
  auto* rootsys = app.add_subcommand("rootsys", "root systems and Dynkin diagrams");
  rootsys->require_subcommand(1, 1);
  std::string family;
  std::optional<int> rs_rank;
  auto family_opts = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "A B C D E6 E7 E8 F4 G2 BC")->required();
    cmd->add_option("--rank", rs_rank, "rank (implied for E6 E7 E8 F4 G2)");
  };
  auto resolve_rank = [&](Family f) {
    if (rs_rank) return *rs_rank;
    if (has_fixed_rank(f)) return valid_rank_range(f).first;
    throw DomainError("--rank is required for family " + std::string(to_string(f)));
  };
  auto* rs_show = rootsys->add_subcommand("show", "roots, positive roots and simple roots");
  family_opts(rs_show);
  formats(rs_show, {"table", "json"});
  rs_show->callback([&] {
    action = [&] {
      const Family f = parse_family(family);
      const auto rs = build_root_system(f, resolve_rank(f));
      if (format == "json") out << json(rs).dump(2) << "\n";
      else out << table(rs);
    };
  });
  auto* rs_dynkin = rootsys->add_subcommand("dynkin", "Dynkin diagram");
  family_opts(rs_dynkin);
  formats(rs_dynkin, {"table", "json", "dot"});
  rs_dynkin->callback([&] {
    action = [&] {
      const Family f = parse_family(family);
      const auto dd = dynkin_diagram(build_root_system(f, resolve_rank(f)));
      if (format == "json") out << json(dd).dump(2) << "\n";
      else if (format == "dot") out << to_dot(dd);
      else out << table(dd);
    };
  });

  // catalog -------------------------------------------------------------------
  auto* catalog = app.add_subcommand("catalog", "catalog of symmetric spaces");
  catalog->require_subcommand(1, 1);
  auto* cat_list = catalog->add_subcommand("list", "list catalog instances");
  int max_rank = 4, max_n = 3;
  cat_list->add_option("--max-rank", max_rank, "largest rank listed")->check(CLI::Range(1, 40));
  cat_list->add_option("--max-n", max_n, "largest second parameter listed")->check(CLI::Range(1, 40));
  formats(cat_list, {"table", "json"});
  cat_list->callback([&] {
    action = [&] {
      const auto all = catalog_instances(max_rank, max_n);
      if (format == "json") out << json(all).dump(2) << "\n";
      else out << table(all);
    };
  });

  // parabolic / horospherical -------------------------------------------------
  SpaceArgs space_args;
  std::string phi_text;
  auto* parabolic = app.add_subcommand("parabolic", "parabolic subalgebra dimensions for a subset Phi");
  add_space_options(parabolic, space_args);
  parabolic->add_option("--phi", phi_text, "simple-root indices, e.g. 1,3 (empty for none)");
  formats(parabolic, {"table", "json"});
  parabolic->callback([&] {
    action = [&] {
      const auto s = load_space(space_args);
      const auto phi = parse_phi(phi_text, s.rank());
      const auto d = parabolic_data(s, phi);
      if (format == "json")
        out << json{{"space", s.descriptor().key}, {"phi", phi}, {"parabolic", d}}.dump(2) << "\n";
      else
        out << table(s.descriptor(), phi, d);
    };
  });
  auto* horo = app.add_subcommand("horospherical", "horospherical decomposition for a subset Phi");
  add_space_options(horo, space_args);
  horo->add_option("--phi", phi_text, "simple-root indices, e.g. 1,3 (empty for none)");
  formats(horo, {"table", "json"});
  horo->callback([&] {
    action = [&] {
      const auto s = load_space(space_args);
      const auto phi = parse_phi(phi_text, s.rank());
      const auto h = horospherical(s, phi);
      if (format == "json")
        out << json{{"space", s.descriptor().key}, {"phi", phi}, {"horospherical", h}, {"dim_M", s.dimension()}}.dump(2)
            << "\n";
      else
        out << table(s.descriptor(), phi, h);
    };
  });

  // foliations ----------------------------------------------------------------
  auto* foliations = app.add_subcommand("foliations", "hyperpolar homogeneous foliations");
  foliations->require_subcommand(1, 1);
  auto* fol_enum = foliations->add_subcommand("enumerate", "one representative per (Phi orbit, dim V)");
  add_space_options(fol_enum, space_args);
  bool include_trivial = false;
  std::optional<int> codim;
  fol_enum->add_flag("--include-trivial", include_trivial, "keep the codimension-0 class");
  fol_enum->add_option("--codim", codim, "only classes of this codimension")->check(CLI::NonNegativeNumber);
  formats(fol_enum, {"table", "json"});
  fol_enum->callback([&] {
    action = [&] {
      const auto s = load_space(space_args);
      auto classes = enumerate_foliations(s, include_trivial);
      if (codim)
        std::erase_if(classes, [&](const FoliationClass& c) { return c.codim != *codim; });
      if (format == "json") out << json(classes).dump(2) << "\n";
      else out << s.descriptor().name << ", dim " << s.dimension() << "\n" << table(classes);
    };
  });

  // slmodel -------------------------------------------------------------------
  auto* slmodel = app.add_subcommand("slmodel", "matrix model of SL_{r+1}(R)/SO_{r+1}");
  slmodel->require_subcommand(1, 1);
  std::optional<int> sl_rank;
  std::string matrix_text, x_text, y_text, basis_text;

  auto* iw = slmodel->add_subcommand("iwasawa", "factor g = k a n");
  iw->add_option("--rank", sl_rank, "rank r (g is (r+1)x(r+1))");
  iw->add_option("--matrix", matrix_text, "g as a JSON array of rows")->required();
  iw->callback([&] {
    action = [&] {
      const auto g = parse_matrix(parse_json_arg(matrix_text, "--matrix"));
      if (sl_rank && g.rows() != *sl_rank + 1)
        throw DomainError("matrix size " + std::to_string(g.rows()) + " does not match rank " + std::to_string(*sl_rank));
      const auto f = sl::iwasawa_group(g);
      json j = f;
      j["reconstruction_error"] = (g - sl::reassemble(f)).cwiseAbs().maxCoeff();
      out << j.dump(2) << "\n";
    };
  });

  int samples = 100;
  auto* kill = slmodel->add_subcommand("killing", "Killing form B(X,Y) = tr(ad X ad Y)");
  kill->add_option("--x", x_text, "X as a JSON array of rows");
  kill->add_option("--y", y_text, "Y as a JSON array of rows");
  kill->add_option("--rank", sl_rank, "rank for the random comparison with 2(r+1) tr(XY)");
  kill->add_option("--samples", samples, "number of random pairs")->check(CLI::Range(1, 100000));
  kill->callback([&] {
    action = [&] {
      if (!x_text.empty() || !y_text.empty()) {
        if (x_text.empty() || y_text.empty()) throw CLI::ValidationError("killing", "--x and --y go together");
        const auto x = parse_matrix(parse_json_arg(x_text, "--x"));
        const auto y = parse_matrix(parse_json_arg(y_text, "--y"));
        out << json{{"B", sl::killing_form(x, y)}, {"trace_form", (x * y).trace()}}.dump(2) << "\n";
        return;
      }
      if (!sl_rank) throw CLI::ValidationError("killing", "give --x/--y or --rank");
      if (*sl_rank < 1) throw DomainError("rank must be at least 1");
      std::mt19937_64 eng(seed_from_env());
      std::vector<sl::Matrix> xs, ys;
      for (int i = 0; i < samples; ++i) {
        xs.push_back(sl::random_traceless(*sl_rank, eng));
        ys.push_back(sl::random_traceless(*sl_rank, eng));
      }
      const auto b = kernels::omp::killing_batch(xs, ys);
      double worst = 0.0, largest = 0.0;
      for (std::size_t i = 0; i < b.size(); ++i) {
        worst = std::max(worst, std::abs(b[i] - 2.0 * (*sl_rank + 1) * (xs[i] * ys[i]).trace()));
        largest = std::max(largest, std::abs(b[i]));
      }
      out << json{{"rank", *sl_rank}, {"samples", samples}, {"max_deviation", worst}, {"max_abs_B", largest}}.dump(2)
          << "\n";
    };
  });

  auto* triple = slmodel->add_subcommand("check-lie-triple", "test [[X,Y],Z] in span(S)");
  triple->add_option("--basis", basis_text, "JSON list of symmetric traceless matrices")->required();
  triple->callback([&] {
    action = [&] {
      const auto j = parse_json_arg(basis_text, "--basis");
      if (!j.is_array() || j.empty()) throw DomainError("--basis must be a non-empty list of matrices");
      std::vector<sl::Matrix> basis;
      for (const auto& m : j) basis.push_back(parse_matrix(m));
      const auto res = sl::is_lie_triple(sl::make_subspace(std::move(basis), "S"));
      out << json{{"holds", res.holds}, {"residual", res.residual}}.dump(2) << "\n";
    };
  });

  std::string orbit;
  std::string base_text = "0,1";
  auto* half = slmodel->add_subcommand("halfplane", "orbit points of K, A or N in the upper half-plane");
  half->add_option("--orbit", orbit, "K, A or N")->required()->check(CLI::IsMember({"K", "A", "N"}));
  half->add_option("--samples", samples, "number of points")->check(CLI::Range(2, 100000));
  half->add_option("--base", base_text, "base point x,y with y > 0 (default 0,1, i.e. z = i)");
  std::string half_format = "json";
  half->add_option("--format", half_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  half->callback([&] {
    action = [&] {
      double bx = 0, by = 0;
      char comma = 0;
      std::istringstream is(base_text);
      if (!(is >> bx >> comma >> by) || comma != ',' || !is.eof())
        throw CLI::ValidationError("--base", "expected x,y");
      const sl::Complex z0(bx, by);
      // K is parametrized over [0, pi), A and N over [-3, 3].
      const double lo = orbit == "K" ? 0.0 : -3.0;
      const double hi = orbit == "K" ? std::numbers::pi : 3.0;
      std::vector<std::array<double, 3>> pts;
      for (int i = 0; i < samples; ++i) {
        const double t = orbit == "K" ? lo + (hi - lo) * i / samples : lo + (hi - lo) * i / (samples - 1);
        const sl::Matrix2 g = orbit == "K" ? sl::k_element(t) : orbit == "A" ? sl::a_element(t) : sl::n_element(t);
        const auto z = sl::moebius(g, z0);
        pts.push_back({t, z.real(), z.imag()});
      }
      if (half_format == "csv") {
        out << "t,x,y\n";
        for (const auto& p : pts) out << fmt(p[0]) << "," << fmt(p[1]) << "," << fmt(p[2]) << "\n";
      } else {
        json j{{"orbit", orbit}, {"base", {bx, by}}, {"points", json::array()}};
        for (const auto& p : pts) j["points"].push_back({{"t", p[0]}, {"x", p[1]}, {"y", p[2]}});
        out << j.dump(2) << "\n";
      }
    };
  });

  // verify --------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run the invariant suite; exit 0 iff every check passes");
  std::string suite = "all";
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(verify_suites()));
  bool verify_json = false;
  verify->add_flag("--json", verify_json, "emit JSON instead of text");
  bool verify_ok = true;
  verify->callback([&] {
    action = [&] {
      const auto results = run_verify(suite, seed_from_env());
      json j = json::array();
      for (const auto& r : results) {
        verify_ok = verify_ok && r.passed;
        if (verify_json)
          j.push_back({{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        else
          out << (r.passed ? "PASS  " : "FAIL  ") << r.suite << ": " << r.name
              << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
      }
      if (verify_json) out << j.dump(2) << "\n";
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (action) action();
  } catch (const CLI::Error& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return verify_ok ? 0 : 1;
}

}  // namespace liefoliate::cli
