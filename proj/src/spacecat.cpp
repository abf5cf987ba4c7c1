#include "liefoliate/spacecat.hpp"

#include "liefoliate/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace liefoliate {

namespace detail {
extern const std::string_view kCatalogJson;
}

namespace {

constexpr int kSearchBound = 40;

MultPattern pattern_from(const nlohmann::json& j) {
  return MultPattern{j.at(0).get<int>(), j.at(1).get<int>()};
}

std::vector<CatalogRecord> load_catalog() {
  const auto doc = nlohmann::json::parse(detail::kCatalogJson);
  std::vector<CatalogRecord> out;
  for (const auto& j : doc.at("spaces")) {
    CatalogRecord rec;
    rec.key_template = j.at("key").get<std::string>();
    rec.display_template = j.at("display").get<std::string>();
    rec.family = parse_family(j.at("family").get<std::string>());
    const auto& rank = j.at("rank");
    if (rank.contains("fixed")) {
      rec.fixed_rank = rank.at("fixed").get<int>();
      rec.min_rank = rec.fixed_rank;
    } else {
      rec.min_rank = rank.at("min").get<int>();
    }
    if (j.contains("n")) rec.min_n = j.at("n").at("min").get<int>();
    const auto& m = j.at("mults");
    if (m.contains("list")) rec.fixed_mults = m.at("list").get<std::vector<int>>();
    if (m.contains("body")) rec.body = pattern_from(m.at("body"));
    if (m.contains("last")) rec.last = pattern_from(m.at("last"));
    if (m.contains("last_double")) rec.last_double = pattern_from(m.at("last_double"));
    if (j.contains("dim_k0")) rec.dim_k0 = j.at("dim_k0").get<int>();
    if (j.contains("note")) rec.note = j.at("note").get<std::string>();
    out.push_back(std::move(rec));
  }
  return out;
}

// Evaluates an affine expression such as "2r+1", "r+n", "-26".
std::optional<int> eval_affine(std::string_view expr, int r, std::optional<int> n) {
  int total = 0;
  std::size_t i = 0;
  bool any = false;
  while (i < expr.size()) {
    int sign = 1;
    if (expr[i] == '+' || expr[i] == '-') {
      sign = expr[i] == '-' ? -1 : 1;
      ++i;
    }
    int coef = 0;
    bool has_digits = false;
    while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
      coef = coef * 10 + (expr[i] - '0');
      has_digits = true;
      ++i;
    }
    if (i < expr.size() && (expr[i] == 'r' || expr[i] == 'n')) {
      if (expr[i] == 'n' && !n) return std::nullopt;
      const int v = expr[i] == 'r' ? r : *n;
      total += sign * (has_digits ? coef : 1) * v;
      ++i;
    } else if (has_digits) {
      total += sign * coef;
    } else {
      return std::nullopt;
    }
    any = true;
  }
  if (!any) return std::nullopt;
  return total;
}

// Substitutes every {a,b,...} group. Braces are kept in display names unless
// the group renders to a single character; key names never keep braces.
std::string render(std::string_view tmpl, int r, std::optional<int> n, bool keep_braces) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] != '{') {
      out.push_back(tmpl[i++]);
      continue;
    }
    const std::size_t close = tmpl.find('}', i);
    const std::string_view group = tmpl.substr(i + 1, close - i - 1);
    std::string rendered;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = group.find(',', start);
      const auto part = group.substr(start, comma == std::string_view::npos ? group.npos : comma - start);
      const auto v = eval_affine(part, r, n);
      rendered += v ? std::to_string(*v) : std::string(part);
      if (comma == std::string_view::npos) break;
      rendered.push_back(',');
      start = comma + 1;
    }
    if (keep_braces && rendered.size() > 1)
      out += "{" + rendered + "}";
    else
      out += rendered;
    i = close + 1;
  }
  return out;
}

// Drops braces around single characters: "Sp_{r} Sp_{r}" -> "Sp_r Sp_r".
std::string normalize_template(std::string_view tmpl) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] == '{' && i + 2 < tmpl.size() && tmpl[i + 2] == '}') {
      out.push_back(tmpl[i + 1]);
      i += 2;
    } else {
      out.push_back(tmpl[i]);
    }
  }
  return out;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

const std::vector<CatalogRecord>& catalog_records() {
  static const std::vector<CatalogRecord> records = load_catalog();
  return records;
}

SpaceDescriptor instantiate(const CatalogRecord& rec, int rank, std::optional<int> n) {
  if (rec.fixed_rank != 0 && rank != rec.fixed_rank)
    throw DomainError(rec.display_template + " has fixed rank " + std::to_string(rec.fixed_rank));
  if (rank < rec.min_rank)
    throw DomainError(rec.display_template + " requires r >= " + std::to_string(rec.min_rank));
  if (rec.min_n && (!n || *n < *rec.min_n))
    throw DomainError(rec.display_template + " requires n >= " + std::to_string(*rec.min_n));
  if (!rec.min_n) n.reset();
  const int nv = n.value_or(0);

  SpaceDescriptor d;
  d.name = render(rec.display_template, rank, n, true);
  d.key = render(rec.key_template, rank, n, false);
  d.family = rec.family;
  d.rank = rank;
  d.n = n;
  if (!rec.fixed_mults.empty()) {
    d.simple_mults = rec.fixed_mults;
  } else {
    for (int i = 1; i <= rank; ++i) {
      const bool is_last = i == rank && rec.last;
      d.simple_mults.push_back(is_last ? rec.last->eval(nv) : rec.body->eval(nv));
    }
  }
  if (rec.last_double) d.double_mult = rec.last_double->eval(nv);
  d.dim_k0 = rec.dim_k0;
  d.note = rec.note;

  if (static_cast<int>(d.simple_mults.size()) != rank)
    throw std::logic_error("catalog entry " + rec.key_template + " has a malformed multiplicity list");
  for (int m : d.simple_mults)
    if (m < 1) throw std::logic_error("catalog entry " + rec.key_template + " yields multiplicity < 1");
  if (d.double_mult && *d.double_mult != 1 && *d.double_mult != 3 && *d.double_mult != 7)
    throw std::logic_error("catalog entry " + rec.key_template + " has m_2alpha outside {1,3,7}");
  return d;
}

SpaceDescriptor catalog_lookup(std::string_view name, std::optional<int> rank, std::optional<int> n) {
  const std::string wanted = strip_spaces(name);
  std::vector<SpaceDescriptor> hits;

  for (const auto& rec : catalog_records()) {
    // Unbound template with explicit parameters.
    if (strip_spaces(normalize_template(rec.display_template)) == wanted ||
        strip_spaces(rec.display_template) == wanted || rec.key_template == wanted) {
      const bool needs_rank = rec.fixed_rank == 0;
      if ((needs_rank && !rank) || (rec.min_n && !n))
        throw DomainError("'" + std::string(name) + "' needs " +
                          (needs_rank && !rank ? "a rank r" : "a parameter n"));
      hits.push_back(instantiate(rec, needs_rank ? *rank : rec.fixed_rank, n));
      continue;
    }
    const int r_lo = rec.fixed_rank ? rec.fixed_rank : rec.min_rank;
    const int r_hi = rec.fixed_rank ? rec.fixed_rank : kSearchBound;
    const int n_lo = rec.min_n.value_or(0);
    const int n_hi = rec.min_n ? kSearchBound : 0;
    for (int r = r_lo; r <= r_hi; ++r) {
      if (rank && *rank != r) continue;
      for (int nv = n_lo; nv <= n_hi; ++nv) {
        if (rec.min_n && n && *n != nv) continue;
        const std::optional<int> np = rec.min_n ? std::optional<int>(nv) : std::nullopt;
        if (render(rec.key_template, r, np, false) == wanted ||
            strip_spaces(render(rec.display_template, r, np, true)) == wanted)
          hits.push_back(instantiate(rec, r, np));
      }
    }
  }

  if (hits.empty()) {
    std::ostringstream os;
    os << "unknown symmetric space '" << name << "'; valid names:";
    for (const auto& rec : catalog_records())
      os << "\n  " << rec.key_template << "  (" << rec.display_template << ")";
    throw DomainError(os.str());
  }
  if (hits.size() > 1 && std::any_of(hits.begin() + 1, hits.end(),
                                     [&](const auto& h) { return !(h == hits.front()); }))
    throw DomainError("ambiguous symmetric space name '" + std::string(name) + "'");
  return hits.front();
}

std::vector<SpaceDescriptor> catalog_instances(int max_rank, int max_n) {
  std::vector<SpaceDescriptor> out;
  for (const auto& rec : catalog_records()) {
    const int r_lo = rec.fixed_rank ? rec.fixed_rank : rec.min_rank;
    const int r_hi = rec.fixed_rank ? rec.fixed_rank : max_rank;
    for (int r = r_lo; r <= r_hi; ++r) {
      if (!rec.min_n) {
        out.push_back(instantiate(rec, r));
        continue;
      }
      for (int nv = *rec.min_n; nv <= std::max(max_n, *rec.min_n); ++nv)
        out.push_back(instantiate(rec, r, nv));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SymmetricSpace::SymmetricSpace(SpaceDescriptor desc)
    : desc_(std::move(desc)),
      roots_(build_root_system(desc_.family, desc_.rank)),
      diagram_(dynkin_diagram(roots_)) {
  auto assign = [&](const Rational& len, int m) {
    for (auto& [l, mult] : classes_) {
      if (l != len) continue;
      if (mult != m)
        throw DomainError(desc_.name + ": simple roots of equal length carry different multiplicities");
      return;
    }
    classes_.emplace_back(len, m);
  };
  for (int i = 0; i < desc_.rank; ++i) {
    const Root& a = roots_.simple[static_cast<std::size_t>(i)];
    assign(inner(a, a), desc_.simple_mults[static_cast<std::size_t>(i)]);
  }
  if (desc_.double_mult) {
    if (desc_.family != Family::BC) throw DomainError(desc_.name + ": m_2alpha given for a reduced family");
    const Root d = roots_.simple.back().doubled();
    assign(inner(d, d), *desc_.double_mult);
  } else if (desc_.family == Family::BC) {
    throw DomainError(desc_.name + ": BC entry without m_2alpha");
  }
  std::sort(classes_.begin(), classes_.end());
  if (classes_.size() != roots_.length_classes().size())
    throw DomainError(desc_.name + ": multiplicities do not cover every root length");

  dimension_ = desc_.rank;
  for (const auto& r : roots_.positive) dimension_ += multiplicity(r);
}

int SymmetricSpace::multiplicity(const Root& r) const {
  if (r.dim() != static_cast<std::size_t>(roots_.ambient_dim) || !roots_.contains(r))
    throw DomainError(to_string(r) + " is not a root of " + desc_.name);
  const Rational len = inner(r, r);
  for (const auto& [l, m] : classes_)
    if (l == len) return m;
  throw std::logic_error("multiplicity: missing length class");
}

std::optional<int> SymmetricSpace::dim_g0() const {
  if (!desc_.dim_k0) return std::nullopt;
  return *desc_.dim_k0 + desc_.rank;
}

bool SymmetricSpace::is_real_special_linear() const {
  return desc_.family == Family::A && desc_.key == "SL" + std::to_string(desc_.rank + 1);
}

int root_multiplicity(const SymmetricSpace& space, const Root& r) { return space.multiplicity(r); }

int space_dimension(const SymmetricSpace& space) { return space.dimension(); }

}  // namespace liefoliate
