#include "liefoliate/rootsys.hpp"

#include "liefoliate/errors.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace liefoliate {

namespace {

constexpr int kScale = 2;

std::int64_t dot_scaled(std::span<const int> a, std::span<const int> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::int64_t{a[i]} * b[i];
  return s;
}

// Builder for scaled coordinate vectors; indices are 1-based like e_i.
class Vec {
 public:
  explicit Vec(int dim) : c_(static_cast<std::size_t>(dim), 0) {}
  Vec& e(int i, int coeff = 1) {
    c_[static_cast<std::size_t>(i - 1)] += kScale * coeff;
    return *this;
  }
  // Adds (sign/2) e_i, i.e. a raw scaled unit.
  Vec& half(int i, int sign) {
    c_[static_cast<std::size_t>(i - 1)] += sign;
    return *this;
  }
  Root root() const { return Root(c_); }

 private:
  std::vector<int> c_;
};

void add_pm_pairs(std::vector<Root>& out, int dim, int upto) {
  // e_i - e_j, e_i + e_j for i < j <= upto
  for (int i = 1; i <= upto; ++i)
    for (int j = i + 1; j <= upto; ++j) {
      out.push_back(Vec(dim).e(i).e(j, -1).root());
      out.push_back(Vec(dim).e(i).e(j).root());
    }
}

void add_pm_pairs_descending(std::vector<Root>& out, int dim, int upto) {
  // e_i +- e_j for i > j, listed with i increasing
  for (int i = 2; i <= upto; ++i)
    for (int j = 1; j < i; ++j) {
      out.push_back(Vec(dim).e(i).e(j).root());
      out.push_back(Vec(dim).e(i).e(j, -1).root());
    }
}

// (1/2)(fixed tail + sum_{i<=free} (-1)^{n(i)} e_i) where the number of minus
// signs among the free coordinates has the requested parity.
void add_half_spin(std::vector<Root>& out, int free, bool odd_minus,
                   const std::function<void(Vec&)>& tail) {
  for (unsigned mask = 0; mask < (1u << free); ++mask) {
    const int minus = std::popcount(mask);
    if ((minus % 2 == 1) != odd_minus) continue;
    Vec v(8);
    for (int i = 1; i <= free; ++i) v.half(i, (mask >> (i - 1)) & 1u ? -1 : 1);
    tail(v);
    out.push_back(v.root());
  }
}

void e_series_simple(std::vector<Root>& simple, int rank) {
  Vec a1(8);
  a1.half(1, 1);
  for (int i = 2; i <= 7; ++i) a1.half(i, -1);
  a1.half(8, 1);
  simple.push_back(a1.root());
  simple.push_back(Vec(8).e(1).e(2).root());
  for (int i = 3; i <= rank; ++i) simple.push_back(Vec(8).e(i - 1).e(i - 2, -1).root());
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::BC: return "BC";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  std::string up;
  for (char c : text) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E6, Family::E7, Family::E8,
                   Family::F4, Family::G2, Family::BC})
    if (up == to_string(f)) return f;
  throw DomainError("unknown root system family '" + std::string(text) +
                    "' (expected one of A, B, C, D, E6, E7, E8, F4, G2, BC)");
}

std::pair<int, int> valid_rank_range(Family f) {
  switch (f) {
    case Family::A: return {1, 0};
    case Family::B: return {2, 0};
    case Family::C: return {2, 0};
    case Family::D: return {3, 0};
    case Family::E6: return {6, 6};
    case Family::E7: return {7, 7};
    case Family::E8: return {8, 8};
    case Family::F4: return {4, 4};
    case Family::G2: return {2, 2};
    case Family::BC: return {1, 0};
  }
  return {1, 0};
}

bool has_fixed_rank(Family f) { return valid_rank_range(f).second != 0; }

// ---------------------------------------------------------------------------

Root::Root(std::vector<int> scaled_coords) : coords_(std::move(scaled_coords)) {
  if (std::all_of(coords_.begin(), coords_.end(), [](int x) { return x == 0; }))
    throw DomainError("a root cannot be the zero vector");
}

Root Root::from_integers(std::span<const int> coords) {
  std::vector<int> c(coords.begin(), coords.end());
  for (auto& x : c) x *= kScale;
  return Root(std::move(c));
}

RationalVector Root::coords() const {
  RationalVector v;
  v.reserve(coords_.size());
  for (int x : coords_) v.emplace_back(x, kScale);
  return v;
}

Root Root::operator-() const {
  auto c = coords_;
  for (auto& x : c) x = -x;
  return Root(std::move(c));
}

Root Root::doubled() const {
  auto c = coords_;
  for (auto& x : c) x *= 2;
  return Root(std::move(c));
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (i) os << ',';
    const Rational q(r.scaled()[i], kScale);
    os << q.numerator();
    if (q.denominator() != 1) os << '/' << q.denominator();
  }
  os << ')';
  return os.str();
}

Rational inner(const Root& lambda, const Root& mu) {
  if (lambda.dim() != mu.dim())
    throw DomainError("inner: ambient dimensions differ (" + std::to_string(lambda.dim()) + " vs " +
                      std::to_string(mu.dim()) + ")");
  return Rational(dot_scaled(lambda.scaled(), mu.scaled()), kScale * kScale);
}

Root reflect(const Root& lambda, const Root& x) {
  if (lambda.dim() != x.dim()) throw DomainError("reflect: ambient dimensions differ");
  const Rational c(2 * dot_scaled(x.scaled(), lambda.scaled()),
                   dot_scaled(lambda.scaled(), lambda.scaled()));
  std::vector<int> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const Rational v = Rational(x.scaled()[i]) - c * lambda.scaled()[i];
    if (v.denominator() != 1) throw DomainError("reflect: image leaves the half-integer lattice");
    out[i] = static_cast<int>(v.numerator());
  }
  return Root(std::move(out));
}

// ---------------------------------------------------------------------------

bool RootSystem::contains(const Root& r) const {
  return std::binary_search(roots.begin(), roots.end(), r);
}

bool RootSystem::is_positive(const Root& r) const {
  return std::find(positive.begin(), positive.end(), r) != positive.end();
}

std::vector<Rational> RootSystem::length_classes() const {
  std::vector<Rational> out;
  for (const auto& r : positive) out.push_back(inner(r, r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RootSystem build_root_system(Family f, int rank) {
  const auto [lo, hi] = valid_rank_range(f);
  if (rank < lo || (hi != 0 && rank > hi)) {
    std::string range = hi == 0 ? ("r >= " + std::to_string(lo))
                        : lo == hi ? ("r = " + std::to_string(lo))
                                   : (std::to_string(lo) + " <= r <= " + std::to_string(hi));
    throw DomainError("invalid rank " + std::to_string(rank) + " for family " +
                      std::string(to_string(f)) + ": valid range is " + range);
  }

  RootSystem rs;
  rs.family = f;
  rs.rank = rank;
  auto& pos = rs.positive;
  auto& simple = rs.simple;

  switch (f) {
    case Family::A: {
      const int d = rank + 1;
      rs.ambient_dim = d;
      for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) pos.push_back(Vec(d).e(i).e(j, -1).root());
      for (int i = 1; i <= rank; ++i) simple.push_back(Vec(d).e(i).e(i + 1, -1).root());
      break;
    }
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::BC: {
      const int d = rank;
      rs.ambient_dim = d;
      add_pm_pairs(pos, d, d);
      if (f == Family::B || f == Family::BC)
        for (int i = 1; i <= d; ++i) pos.push_back(Vec(d).e(i).root());
      if (f == Family::C || f == Family::BC)
        for (int i = 1; i <= d; ++i) pos.push_back(Vec(d).e(i, 2).root());
      for (int i = 1; i < rank; ++i) simple.push_back(Vec(d).e(i).e(i + 1, -1).root());
      switch (f) {
        case Family::B:
        case Family::BC: simple.push_back(Vec(d).e(rank).root()); break;
        case Family::C: simple.push_back(Vec(d).e(rank, 2).root()); break;
        default: simple.push_back(Vec(d).e(rank - 1).e(rank).root()); break;
      }
      break;
    }
    case Family::E6: {
      rs.ambient_dim = 8;
      add_pm_pairs_descending(pos, 8, 5);
      add_half_spin(pos, 5, false, [](Vec& v) { v.half(6, -1).half(7, -1).half(8, 1); });
      e_series_simple(simple, 6);
      break;
    }
    case Family::E7: {
      rs.ambient_dim = 8;
      add_pm_pairs_descending(pos, 8, 6);
      pos.push_back(Vec(8).e(8).e(7, -1).root());
      add_half_spin(pos, 6, true, [](Vec& v) { v.half(7, -1).half(8, 1); });
      e_series_simple(simple, 7);
      break;
    }
    case Family::E8: {
      rs.ambient_dim = 8;
      add_pm_pairs_descending(pos, 8, 8);
      add_half_spin(pos, 7, false, [](Vec& v) { v.half(8, 1); });
      e_series_simple(simple, 8);
      break;
    }
    case Family::F4: {
      rs.ambient_dim = 4;
      add_pm_pairs(pos, 4, 4);
      for (int i = 1; i <= 4; ++i) pos.push_back(Vec(4).e(i).root());
      for (unsigned mask = 0; mask < 8; ++mask) {
        Vec v(4);
        v.half(1, 1);
        for (int i = 2; i <= 4; ++i) v.half(i, (mask >> (i - 2)) & 1u ? -1 : 1);
        pos.push_back(v.root());
      }
      simple.push_back(Vec(4).e(2).e(3, -1).root());
      simple.push_back(Vec(4).e(3).e(4, -1).root());
      simple.push_back(Vec(4).e(4).root());
      simple.push_back(Vec(4).half(1, 1).half(2, -1).half(3, -1).half(4, -1).root());
      break;
    }
    case Family::G2: {
      rs.ambient_dim = 3;
      const std::vector<std::vector<int>> listed = {{1, -1, 0}, {-2, 1, 1}, {-1, 0, 1},
                                                    {0, -1, 1}, {1, -2, 1}, {-1, -1, 2}};
      for (const auto& v : listed) pos.push_back(Root::from_integers(v));
      simple.push_back(pos[0]);
      simple.push_back(pos[1]);
      break;
    }
  }

  rs.roots = pos;
  for (const auto& r : pos) rs.roots.push_back(-r);
  std::sort(rs.roots.begin(), rs.roots.end());
  return rs;
}

std::optional<RationalVector> simple_coefficients(const RootSystem& rs, const Root& r) {
  std::vector<RationalVector> basis;
  basis.reserve(rs.simple.size());
  for (const auto& a : rs.simple) basis.push_back(a.coords());
  return solve_in_span(basis, r.coords());
}

// ---------------------------------------------------------------------------

int DynkinDiagram::lines(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& e : edges)
    if (e.i == i && e.j == j) return e.lines;
  return 0;
}

int DynkinDiagram::arrow_direction(int i, int j) const {
  const bool swapped = i > j;
  if (swapped) std::swap(i, j);
  for (const auto& e : edges) {
    if (e.i != i || e.j != j) continue;
    int d = e.arrow == Arrow::i_to_j ? 1 : e.arrow == Arrow::j_to_i ? -1 : 0;
    return swapped ? -d : d;
  }
  return 0;
}

DynkinDiagram dynkin_diagram(const RootSystem& rs) {
  DynkinDiagram dd;
  dd.family = rs.family;
  dd.rank = rs.rank;
  for (int i = 1; i <= rs.rank; ++i) {
    const Root& a = rs.simple[static_cast<std::size_t>(i - 1)];
    dd.vertices.push_back({i, rs.contains(a.doubled())});
  }
  for (int i = 1; i <= rs.rank; ++i) {
    for (int j = i + 1; j <= rs.rank; ++j) {
      const Root& a = rs.simple[static_cast<std::size_t>(i - 1)];
      const Root& b = rs.simple[static_cast<std::size_t>(j - 1)];
      // 4 cos^2 of the angle between a and b
      const Rational ab = inner(a, b);
      const Rational q = 4 * ab * ab / (inner(a, a) * inner(b, b));
      if (q.denominator() != 1 || q.numerator() > 3)
        throw std::logic_error("dynkin_diagram: simple roots with non-crystallographic angle");
      const int lines = static_cast<int>(q.numerator());
      if (lines == 0) continue;
      Arrow arrow = Arrow::none;
      if (inner(a, a) > inner(b, b)) arrow = Arrow::i_to_j;
      else if (inner(b, b) > inner(a, a)) arrow = Arrow::j_to_i;
      dd.edges.push_back({i, j, lines, arrow});
    }
  }
  if (rs.family == Family::BC)
    dd.figure_note =
        "last edge drawn with a double-headed arrow; vertex r stands for (alpha_r, 2 alpha_r)";
  return dd;
}

std::vector<VertexPermutation> diagram_automorphisms(const DynkinDiagram& dd) {
  const int r = dd.rank;
  std::vector<VertexPermutation> out;
  VertexPermutation perm(static_cast<std::size_t>(r), 0);
  std::vector<bool> used(static_cast<std::size_t>(r) + 1, false);

  // Vertices are assigned in order; every new assignment is checked against
  // all earlier ones, so a completed assignment is an automorphism.
  std::function<void(int)> extend = [&](int v) {
    if (v > r) {
      out.push_back(perm);
      return;
    }
    for (int img = 1; img <= r; ++img) {
      if (used[static_cast<std::size_t>(img)]) continue;
      if (dd.vertices[static_cast<std::size_t>(v - 1)].double_circle !=
          dd.vertices[static_cast<std::size_t>(img - 1)].double_circle)
        continue;
      bool ok = true;
      for (int u = 1; u < v && ok; ++u) {
        const int pu = perm[static_cast<std::size_t>(u - 1)];
        ok = dd.lines(u, v) == dd.lines(pu, img) &&
             dd.arrow_direction(u, v) == dd.arrow_direction(pu, img);
      }
      if (!ok) continue;
      perm[static_cast<std::size_t>(v - 1)] = img;
      used[static_cast<std::size_t>(img)] = true;
      extend(v + 1);
      used[static_cast<std::size_t>(img)] = false;
    }
  };
  extend(1);
  return out;
}

}  // namespace liefoliate
