#include "liefoliate/export.hpp"

#include "liefoliate/errors.hpp"

#include <iomanip>
#include <sstream>

namespace liefoliate {

namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  if (!j.contains(key) || j.at(key).is_null()) {
    v.reset();
    return;
  }
  v = j.at(key).get<T>();
}

std::string_view arrow_name(Arrow a) {
  switch (a) {
    case Arrow::none: return "none";
    case Arrow::i_to_j: return "i_to_j";
    case Arrow::j_to_i: return "j_to_i";
  }
  return "none";
}

Arrow parse_arrow(const std::string& s) {
  if (s == "none") return Arrow::none;
  if (s == "i_to_j") return Arrow::i_to_j;
  if (s == "j_to_i") return Arrow::j_to_i;
  throw DomainError("unknown arrow '" + s + "'");
}

DivisionAlgebra parse_algebra(const std::string& s) {
  for (auto a : {DivisionAlgebra::R, DivisionAlgebra::C, DivisionAlgebra::H, DivisionAlgebra::O})
    if (to_string(a) == s) return a;
  throw DomainError("unknown division algebra '" + s + "'");
}

std::string phi_label(const PhiSubset& phi) {
  return "{" + to_string(phi) + "}";
}

}  // namespace

void to_json(json& j, Family f) { j = std::string(to_string(f)); }
void from_json(const json& j, Family& f) { f = parse_family(j.get<std::string>()); }

void to_json(json& j, const Root& r) { j = std::vector<int>(r.scaled().begin(), r.scaled().end()); }

void to_json(json& j, const RootSystem& rs) {
  j = json{{"family", rs.family},     {"rank", rs.rank},         {"ambient_dim", rs.ambient_dim},
           {"coordinate_scale", 2},   {"roots", rs.roots},       {"positive", rs.positive},
           {"simple", rs.simple}};
}

void from_json(const json& j, RootSystem& rs) {
  j.at("family").get_to(rs.family);
  j.at("rank").get_to(rs.rank);
  j.at("ambient_dim").get_to(rs.ambient_dim);
  rs.roots = j.at("roots").get<std::vector<Root>>();
  rs.positive = j.at("positive").get<std::vector<Root>>();
  rs.simple = j.at("simple").get<std::vector<Root>>();
}

void to_json(json& j, const DynkinVertex& v) { j = json{{"index", v.index}, {"double_circle", v.double_circle}}; }
void from_json(const json& j, DynkinVertex& v) {
  j.at("index").get_to(v.index);
  j.at("double_circle").get_to(v.double_circle);
}

void to_json(json& j, const DynkinEdge& e) {
  j = json{{"i", e.i}, {"j", e.j}, {"lines", e.lines}, {"arrow", std::string(arrow_name(e.arrow))}};
}
void from_json(const json& j, DynkinEdge& e) {
  j.at("i").get_to(e.i);
  j.at("j").get_to(e.j);
  j.at("lines").get_to(e.lines);
  e.arrow = parse_arrow(j.at("arrow").get<std::string>());
}

void to_json(json& j, const DynkinDiagram& d) {
  j = json{{"family", d.family},
           {"rank", d.rank},
           {"vertices", d.vertices},
           {"edges", d.edges},
           {"figure_note", d.figure_note}};
}
void from_json(const json& j, DynkinDiagram& d) {
  j.at("family").get_to(d.family);
  j.at("rank").get_to(d.rank);
  d.vertices = j.at("vertices").get<std::vector<DynkinVertex>>();
  d.edges = j.at("edges").get<std::vector<DynkinEdge>>();
  j.at("figure_note").get_to(d.figure_note);
}

void to_json(json& j, const SpaceDescriptor& d) {
  j = json{{"name", d.name}, {"key", d.key}, {"family", d.family}, {"rank", d.rank}};
  put_optional(j, "n", d.n);
  j["simple_mults"] = d.simple_mults;
  // For BC the last simple root carries the pair (m_alpha, m_2alpha).
  if (d.double_mult) j["last_mult_pair"] = {d.simple_mults.back(), *d.double_mult};
  put_optional(j, "double_mult", d.double_mult);
  put_optional(j, "dim_k0", d.dim_k0);
  j["note"] = d.note;
}
void from_json(const json& j, SpaceDescriptor& d) {
  j.at("name").get_to(d.name);
  j.at("key").get_to(d.key);
  j.at("family").get_to(d.family);
  j.at("rank").get_to(d.rank);
  get_optional(j, "n", d.n);
  d.simple_mults = j.at("simple_mults").get<std::vector<int>>();
  get_optional(j, "double_mult", d.double_mult);
  get_optional(j, "dim_k0", d.dim_k0);
  j.at("note").get_to(d.note);
}

void to_json(json& j, const PhiSubset& p) { j = p.indices(); }
void from_json(const json& j, PhiSubset& p) { p = PhiSubset(j.get<std::vector<int>>(), 64); }

void to_json(json& j, const RootSubsystem& s) { j = json{{"roots", s.roots}, {"positive", s.positive}}; }
void from_json(const json& j, RootSubsystem& s) {
  s.roots = j.at("roots").get<std::vector<Root>>();
  s.positive = j.at("positive").get<std::vector<Root>>();
}

void to_json(json& j, const ParabolicData& d) {
  j = json{{"sigma_phi", d.sigma_phi},
           {"dim_a_phi", d.dim_a_phi},
           {"dim_a_upper_phi", d.dim_a_upper_phi},
           {"dim_n_phi", d.dim_n_phi}};
  put_optional(j, "dim_l_phi", d.dim_l_phi);
  put_optional(j, "dim_m_phi", d.dim_m_phi);
  put_optional(j, "dim_q_phi", d.dim_q_phi);
  put_optional(j, "dim_k_phi", d.dim_k_phi);
  put_optional(j, "dim_z_phi", d.dim_z_phi);
  put_optional(j, "dim_g_phi", d.dim_g_phi);
}
void from_json(const json& j, ParabolicData& d) {
  j.at("sigma_phi").get_to(d.sigma_phi);
  j.at("dim_a_phi").get_to(d.dim_a_phi);
  j.at("dim_a_upper_phi").get_to(d.dim_a_upper_phi);
  j.at("dim_n_phi").get_to(d.dim_n_phi);
  get_optional(j, "dim_l_phi", d.dim_l_phi);
  get_optional(j, "dim_m_phi", d.dim_m_phi);
  get_optional(j, "dim_q_phi", d.dim_q_phi);
  get_optional(j, "dim_k_phi", d.dim_k_phi);
  get_optional(j, "dim_z_phi", d.dim_z_phi);
  get_optional(j, "dim_g_phi", d.dim_g_phi);
}

void to_json(json& j, const BoundaryFactor& b) {
  j = json{{"component", b.component_indices}, {"rank", b.rank}, {"name", b.name}, {"dim", b.dim}};
}
void from_json(const json& j, BoundaryFactor& b) {
  b.component_indices = j.at("component").get<std::vector<int>>();
  j.at("rank").get_to(b.rank);
  j.at("name").get_to(b.name);
  j.at("dim").get_to(b.dim);
}

void to_json(json& j, const HorosphericalData& h) {
  j = json{{"factors", h.factors},
           {"dim_Fs", h.dim_Fs},
           {"dim_euclidean", h.dim_euclidean},
           {"dim_N", h.dim_N},
           {"dim_total", h.dim_Fs + h.dim_euclidean + h.dim_N}};
}
void from_json(const json& j, HorosphericalData& h) {
  h.factors = j.at("factors").get<std::vector<BoundaryFactor>>();
  j.at("dim_Fs").get_to(h.dim_Fs);
  j.at("dim_euclidean").get_to(h.dim_euclidean);
  j.at("dim_N").get_to(h.dim_N);
}

void to_json(json& j, const HyperbolicFactor& h) {
  j = json{{"alpha", h.alpha_index},
           {"algebra", std::string(to_string(h.algebra))},
           {"n", h.n},
           {"real_dim", h.real_dim}};
}
void from_json(const json& j, HyperbolicFactor& h) {
  j.at("alpha").get_to(h.alpha_index);
  h.algebra = parse_algebra(j.at("algebra").get<std::string>());
  j.at("n").get_to(h.n);
  j.at("real_dim").get_to(h.real_dim);
}

void to_json(json& j, const FoliationClass& f) {
  j = json{{"rank", f.rank},     {"phi", f.phi},           {"orbit", f.orbit},
           {"dim_V", f.dim_V},   {"factors", f.factors},   {"dim_N", f.dim_N},
           {"leaf_dim", f.leaf_dim}, {"codim", f.codim},  {"trivial", f.trivial},
           {"status", "representative, uniqueness unverified"}};
}
void from_json(const json& j, FoliationClass& f) {
  j.at("rank").get_to(f.rank);
  j.at("phi").get_to(f.phi);
  f.orbit = j.at("orbit").get<std::vector<PhiSubset>>();
  j.at("dim_V").get_to(f.dim_V);
  f.factors = j.at("factors").get<std::vector<HyperbolicFactor>>();
  j.at("dim_N").get_to(f.dim_N);
  j.at("leaf_dim").get_to(f.leaf_dim);
  j.at("codim").get_to(f.codim);
  j.at("trivial").get_to(f.trivial);
}

namespace sl {

void to_json(json& j, const IwasawaFactors& f) { j = json{{"k", f.k}, {"a", f.a}, {"n", f.n}}; }
void from_json(const json& j, IwasawaFactors& f) {
  j.at("k").get_to(f.k);
  j.at("a").get_to(f.a);
  j.at("n").get_to(f.n);
}

}  // namespace sl

// ---------------------------------------------------------------------------

std::string to_dot(const DynkinDiagram& d) {
  std::ostringstream os;
  os << "graph dynkin_" << to_string(d.family);
  if (!has_fixed_rank(d.family)) os << d.rank;
  os << " {\n";
  if (!d.figure_note.empty()) os << "  // " << d.figure_note << "\n";
  os << "  rankdir=LR;\n  node [shape=circle, label=\"\"];\n";
  for (const auto& v : d.vertices) {
    os << "  a" << v.index << " [xlabel=\"" << v.index << "\"";
    if (v.double_circle) os << ", peripheries=2";
    os << "];\n";
  }
  for (const auto& e : d.edges) {
    os << "  a" << e.i << " -- a" << e.j << " [label=\"" << e.lines << "\"";
    if (e.arrow == Arrow::i_to_j) os << ", dir=forward";
    if (e.arrow == Arrow::j_to_i) os << ", dir=back";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string table(const RootSystem& rs) {
  std::ostringstream os;
  os << "family " << to_string(rs.family) << ", rank " << rs.rank << ", |Sigma| = " << rs.roots.size()
     << ", |Sigma+| = " << rs.positive.size() << "\n";
  for (std::size_t i = 0; i < rs.simple.size(); ++i)
    os << "alpha_" << i + 1 << " = " << to_string(rs.simple[i]) << "\n";
  os << "positive roots:\n";
  for (const auto& r : rs.positive) os << "  " << to_string(r) << "\n";
  return os.str();
}

std::string table(const DynkinDiagram& d) {
  std::ostringstream os;
  os << "Dynkin diagram " << to_string(d.family) << d.rank << "\n";
  for (const auto& v : d.vertices) os << "  vertex " << v.index << (v.double_circle ? " (double circle)" : "") << "\n";
  for (const auto& e : d.edges) {
    os << "  " << e.i << " - " << e.j << "  lines " << e.lines;
    if (e.arrow == Arrow::i_to_j) os << "  arrow " << e.i << " -> " << e.j;
    if (e.arrow == Arrow::j_to_i) os << "  arrow " << e.j << " -> " << e.i;
    os << "\n";
  }
  if (!d.figure_note.empty()) os << "  note: " << d.figure_note << "\n";
  return os.str();
}

std::string table(const std::vector<SpaceDescriptor>& spaces) {
  std::ostringstream os;
  os << std::left << std::setw(14) << "key" << std::setw(30) << "name" << std::setw(8) << "type"
     << "multiplicities\n";
  for (const auto& s : spaces) {
    std::ostringstream type, mults;
    type << to_string(s.family) << s.rank;
    for (std::size_t i = 0; i < s.simple_mults.size(); ++i) mults << (i ? "," : "") << s.simple_mults[i];
    if (s.double_mult) mults << " (2a:" << *s.double_mult << ")";
    os << std::setw(14) << s.key << std::setw(30) << s.name << std::setw(8) << type.str() << mults.str() << "\n";
  }
  return os.str();
}

std::string table(const SpaceDescriptor& space, const PhiSubset& phi, const ParabolicData& d) {
  std::ostringstream os;
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
  os << space.name << ", Phi = " << phi_label(phi) << "\n"
     << "  |Sigma_Phi+|   " << d.sigma_phi.positive.size() << "\n"
     << "  dim a_Phi      " << d.dim_a_phi << "\n"
     << "  dim a^Phi      " << d.dim_a_upper_phi << "\n"
     << "  dim n_Phi      " << d.dim_n_phi << "\n"
     << "  dim l_Phi      " << opt(d.dim_l_phi) << "\n"
     << "  dim m_Phi      " << opt(d.dim_m_phi) << "\n"
     << "  dim q_Phi      " << opt(d.dim_q_phi) << "\n"
     << "  dim k_Phi      " << opt(d.dim_k_phi) << "\n"
     << "  dim z_Phi      " << opt(d.dim_z_phi) << "\n"
     << "  dim g_Phi      " << opt(d.dim_g_phi) << "\n";
  return os.str();
}

std::string table(const SpaceDescriptor& space, const PhiSubset& phi, const HorosphericalData& h) {
  std::ostringstream os;
  os << space.name << ", Phi = " << phi_label(phi) << "\n";
  for (const auto& f : h.factors) {
    os << "  factor {";
    for (std::size_t i = 0; i < f.component_indices.size(); ++i) os << (i ? "," : "") << f.component_indices[i];
    os << "}  rank " << f.rank << "  dim " << f.dim << "  " << f.name << "\n";
  }
  os << "  dim F_Phi^s " << h.dim_Fs << " + dim E " << h.dim_euclidean << " + dim N_Phi " << h.dim_N << " = "
     << h.dim_Fs + h.dim_euclidean + h.dim_N << "\n";
  return os.str();
}

std::string table(const std::vector<FoliationClass>& classes) {
  std::ostringstream os;
  os << "one representative per (Phi orbit, dim V); uniqueness unverified\n";
  os << std::left << std::setw(12) << "Phi" << std::setw(8) << "dim V" << std::setw(10) << "leaf dim"
     << std::setw(8) << "codim" << "hyperbolic factors\n";
  for (const auto& c : classes) {
    std::ostringstream fs;
    for (std::size_t i = 0; i < c.factors.size(); ++i) {
      const auto& f = c.factors[i];
      fs << (i ? " x " : "") << to_string(f.algebra) << "H^" << f.n;
    }
    os << std::setw(12) << phi_label(c.phi) << std::setw(8) << c.dim_V << std::setw(10) << c.leaf_dim
       << std::setw(8) << c.codim << fs.str() << "\n";
  }
  return os.str();
}

}  // namespace liefoliate

void nlohmann::adl_serializer<Eigen::MatrixXd>::to_json(json& j, const Eigen::MatrixXd& m) {
  j = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    j.push_back(std::move(row));
  }
}

void nlohmann::adl_serializer<Eigen::MatrixXd>::from_json(const json& j, Eigen::MatrixXd& m) {
  if (!j.is_array() || j.empty()) throw liefoliate::DomainError("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  m.resize(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw liefoliate::DomainError("matrix rows must have equal length");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = row.at(static_cast<std::size_t>(k)).get<double>();
  }
}

