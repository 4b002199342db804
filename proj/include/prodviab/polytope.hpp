#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "prodviab/core.hpp"
#include "prodviab/linalg.hpp"
#include "prodviab/lp.hpp"

namespace prodviab {

/// normal . x >= rhs, or = rhs when equality is set. Coordinates are (p, q).
struct HRow {
  Vector normal;
  Rational rhs;
  bool equality = false;
  std::string label;
};

struct HPolytope {
  std::size_t ell_c = 0;
  std::size_t ell_p = 0;
  std::vector<HRow> rows;

  [[nodiscard]] auto dim() const -> std::size_t { return ell_c + ell_p; }
  [[nodiscard]] auto contains(std::span<const Rational> x) const -> bool {
    for (const auto& r : rows) {
      const Rational v = dot(r.normal, x);
      if (r.equality ? v != r.rhs : v < r.rhs) return false;
    }
    return true;
  }
};

struct VPolytope {
  std::vector<Vector> vertices;
  std::vector<Vector> rays;
  std::vector<std::size_t> redundant_rows;  // rows tight at no vertex
};

/// Income rows, the simplex equality, p >= 0 and q >= 0.
[[nodiscard]] inline auto delta_prime_hrep(const ZMatrix& z, const std::vector<std::string>& labels = {}) -> HPolytope {
  HPolytope h{z.ell_c(), z.ell_p(), {}};
  const std::size_t ell = z.size();
  auto name = [&](std::size_t k) { return k < labels.size() ? labels[k] : std::to_string(k); };
  for (std::size_t k = 0; k < ell; ++k) h.rows.push_back({z.entries().row_vector(k), Rational(0), false, "I_" + name(k) + " >= 0"});
  Vector simplex(ell);
  for (std::size_t j = 0; j < z.ell_c(); ++j) simplex[j] = 1;
  h.rows.push_back({std::move(simplex), Rational(1), true, "sum p = 1"});
  for (std::size_t j = 0; j < ell; ++j) {
    Vector e(ell);
    e[j] = 1;
    h.rows.push_back({std::move(e), Rational(0), false,
                      (j < z.ell_c() ? "p_" : "q_") + name(j) + " >= 0"});
  }
  return h;
}

[[nodiscard]] inline auto delta_prime_hrep(const ProductionSystem& sys) -> HPolytope {
  return delta_prime_hrep(sys.z(), sys.labels());
}

inline constexpr std::size_t kMaxVertexEnumerationDim = 8;

namespace detail {

/// Calls f on every k-subset of {0..n-1}, in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(std::as_const(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void scale_to_unit_lead(Vector& v) {
  for (const auto& c : v)
    if (!c.is_zero()) {
      const Rational s = c.abs();
      for (auto& x : v) x /= s;
      return;
    }
}

[[nodiscard]] inline auto h_lp(const HPolytope& h, Vector objective) -> LinearProgram {
  LinearProgram lp;
  lp.objective = std::move(objective);
  lp.bounds.assign(h.dim(), VariableBounds{});
  for (const auto& r : h.rows) lp.add(r.normal, r.equality ? Relation::Eq : Relation::Ge, r.rhs);
  return lp;
}

}  // namespace detail

/// Exhaustive tight-set enumeration with exact solves; rays from one-dimensional null spaces.
[[nodiscard]] inline auto enumerate_vertices(const HPolytope& h) -> VPolytope {
  const std::size_t n = h.dim();
  if (n > kMaxVertexEnumerationDim) throw Error(ErrorCode::DimensionTooLarge, "vertex enumeration limited to dimension 8");
  std::vector<std::size_t> eq, ineq;
  for (std::size_t i = 0; i < h.rows.size(); ++i) (h.rows[i].equality ? eq : ineq).push_back(i);
  Matrix eqm(eq.size(), n);
  for (std::size_t i = 0; i < eq.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) eqm(i, j) = h.rows[eq[i]].normal[j];
  const std::size_t eq_rank = rank(eqm);

  VPolytope v;
  auto tight_matrix = [&](const std::vector<std::size_t>& pick) {
    Matrix m(eq.size() + pick.size(), n);
    Vector b(eq.size() + pick.size());
    std::size_t r = 0;
    for (auto i : eq) {
      for (std::size_t j = 0; j < n; ++j) m(r, j) = h.rows[i].normal[j];
      b[r++] = h.rows[i].rhs;
    }
    for (auto s : pick) {
      const auto& row = h.rows[ineq[s]];
      for (std::size_t j = 0; j < n; ++j) m(r, j) = row.normal[j];
      b[r++] = row.rhs;
    }
    return std::make_pair(std::move(m), std::move(b));
  };

  if (n >= eq_rank) {
    detail::for_each_subset(ineq.size(), n - eq_rank, [&](const std::vector<std::size_t>& pick) {
      auto [m, b] = tight_matrix(pick);
      if (rank(m) != n) return;
      Matrix aug(m.rows(), n + 1);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
      }
      const auto piv = rref(aug);
      if (!piv.empty() && piv.back() == n) return;  // inconsistent
      Vector x(n);
      for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, n);
      if (!h.contains(x)) return;
      if (std::find(v.vertices.begin(), v.vertices.end(), x) == v.vertices.end()) v.vertices.push_back(std::move(x));
    });
    if (!v.vertices.empty() && n >= eq_rank + 1) {
      detail::for_each_subset(ineq.size(), n - eq_rank - 1, [&](const std::vector<std::size_t>& pick) {
        auto [m, b] = tight_matrix(pick);
        const auto ns = null_space(m);
        if (ns.size() != 1) return;
        for (int sign : {1, -1}) {
          Vector d = ns.front();
          for (auto& c : d) c *= Rational(sign);
          bool in_cone = true;
          for (const auto& r : h.rows) {
            const Rational s = dot(r.normal, d);
            if (r.equality ? !s.is_zero() : s.is_negative()) {
              in_cone = false;
              break;
            }
          }
          if (!in_cone) continue;
          detail::scale_to_unit_lead(d);
          if (std::find(v.rays.begin(), v.rays.end(), d) == v.rays.end()) v.rays.push_back(std::move(d));
        }
      });
    }
  }
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    bool tight = false;
    for (const auto& x : v.vertices)
      if (dot(h.rows[i].normal, x) == h.rows[i].rhs) {
        tight = true;
        break;
      }
    if (!tight) v.redundant_rows.push_back(i);
  }
  return v;
}

[[nodiscard]] inline auto is_empty(const HPolytope& h) -> bool {
  return solve(detail::h_lp(h, Vector(h.dim()))).status == LpStatus::Infeasible;
}

/// Recession cone is {0}: max and min of every coordinate over the cone cut by the unit box are zero.
/// An empty set counts as bounded.
[[nodiscard]] inline auto is_bounded(const HPolytope& h) -> bool {
  if (is_empty(h)) return true;
  const std::size_t n = h.dim();
  LinearProgram lp;
  lp.objective.assign(n, Rational(0));
  lp.bounds.assign(n, VariableBounds{Rational(-1), Rational(1)});
  for (const auto& r : h.rows) lp.add(r.normal, r.equality ? Relation::Eq : Relation::Ge, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (int sign : {1, -1}) {
      lp.objective.assign(n, Rational(0));
      lp.objective[j] = sign;
      const auto out = solve(lp);
      if (out.status == LpStatus::Optimal && out.objective_value.is_positive()) return false;
    }
  return true;
}

struct InteriorPoint {
  PriceSystem price;
  Rational slack;
};

/// Maximizes the smallest slack over inequality rows, slack capped at 1; nullopt when the set is empty.
[[nodiscard]] inline auto interior_point(const HPolytope& h) -> std::optional<InteriorPoint> {
  const std::size_t n = h.dim();
  LinearProgram lp;
  lp.objective.assign(n + 1, Rational(0));
  lp.objective[n] = 1;
  lp.bounds.assign(n + 1, VariableBounds{});
  lp.bounds[n].upper = Rational(1);
  for (const auto& r : h.rows) {
    Vector row = r.normal;
    row.push_back(r.equality ? 0 : -1);
    lp.add(std::move(row), r.equality ? Relation::Eq : Relation::Ge, r.rhs);
  }
  const auto out = solve(lp);
  if (out.status != LpStatus::Optimal || out.objective_value.is_negative()) return std::nullopt;
  Vector x(out.primal.begin(), out.primal.begin() + static_cast<std::ptrdiff_t>(n));
  PriceSystem ps;
  for (std::size_t j = 0; j < n; ++j) (j < h.ell_c ? ps.p : ps.q).push_back(x[j]);
  return InteriorPoint{std::move(ps), out.objective_value};
}

/// V inside H exactly; support functions of H and conv(V) + cone(R) agree on the given directions.
[[nodiscard]] inline auto round_trip_agrees(const HPolytope& h, const VPolytope& v, const std::vector<Vector>& directions)
    -> bool {
  for (const auto& x : v.vertices)
    if (!h.contains(x)) return false;
  for (const auto& d : v.rays)
    for (const auto& r : h.rows) {
      const Rational s = dot(r.normal, d);
      if (r.equality ? !s.is_zero() : s.is_negative()) return false;
    }
  for (const auto& c : directions) {
    const auto out = solve(detail::h_lp(h, c));
    bool v_unbounded = false;
    for (const auto& d : v.rays)
      if (dot(c, d).is_positive()) v_unbounded = true;
    if (out.status == LpStatus::Infeasible) {
      if (!v.vertices.empty()) return false;
      continue;
    }
    if (v.vertices.empty()) return false;
    if (out.status == LpStatus::Unbounded) {
      if (!v_unbounded) return false;
      continue;
    }
    if (v_unbounded) return false;
    Rational best = dot(c, v.vertices.front());
    for (const auto& x : v.vertices) best = std::max(best, dot(c, x));
    if (best != out.objective_value) return false;
  }
  return true;
}

/// Unit directions, row normals and `extra` seeded random integer directions.
[[nodiscard]] inline auto round_trip_directions(const HPolytope& h, std::uint64_t seed, std::size_t extra)
    -> std::vector<Vector> {
  const std::size_t n = h.dim();
  std::vector<Vector> dirs;
  for (std::size_t j = 0; j < n; ++j)
    for (int s : {1, -1}) {
      Vector e(n);
      e[j] = s;
      dirs.push_back(std::move(e));
    }
  for (const auto& r : h.rows) {
    dirs.push_back(r.normal);
    Vector neg = r.normal;
    for (auto& c : neg) c = -c;
    dirs.push_back(std::move(neg));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < extra; ++k) {
    Vector d(n);
    for (auto& c : d) c = static_cast<std::int64_t>(rng() % 21) - 10;
    dirs.push_back(std::move(d));
  }
  return dirs;
}

struct Segment {
  std::string label;
  Rational x1, y1, x2, y2;  // x = q, y = p
};

struct Region2d {
  std::vector<Segment> segments;
  std::vector<std::pair<Rational, Rational>> vertices;  // (q, p)
  std::vector<std::pair<Rational, Rational>> rays;
};

namespace detail {

/// "q", "-q", "3q", "q/2", "-3q/4".
[[nodiscard]] inline auto q_term(const Rational& s) -> std::string {
  const Rational a = s.abs();
  std::string out;
  const std::string num = mpz_class(a.numerator()).get_str();
  const std::string den = mpz_class(a.denominator()).get_str();
  out = (num == "1" ? std::string() : num) + "q" + (den == "1" ? std::string() : "/" + den);
  return out;
}

/// Line a p + b q + c = 0 written as "p = ..." when a != 0, else "q = ...".
[[nodiscard]] inline auto line_label(const Rational& a, const Rational& b, const Rational& c) -> std::string {
  if (a.is_zero()) return "q = " + (-c / b).str();
  const Rational slope = -b / a;
  const Rational icpt = -c / a;
  if (slope.is_zero()) return "p = " + icpt.str();
  std::string rhs;
  if (icpt.is_zero()) {
    rhs = (slope.is_negative() ? "-" : "") + q_term(slope);
  } else {
    rhs = icpt.str() + (slope.is_negative() ? " - " : " + ") + q_term(slope);
  }
  return "p = " + rhs;
}

}  // namespace detail

/// Region of Delta' in the (q, p) plane for ell_c = 2, ell_p = 1, with p = p_1 and p_2 = 1 - p.
[[nodiscard]] inline auto project_2d(const ZMatrix& z) -> Region2d {
  if (z.ell_c() != 2 || z.ell_p() != 1) throw Error(ErrorCode::WrongShape, "2-D export needs two consumption goods and one intermediate");
  // Lines a p + b q + c >= 0 in coordinates (q, p).
  struct Line {
    Rational a, b, c;
    std::string label;
  };
  std::vector<Line> lines;
  for (std::size_t k = 0; k < 3; ++k) {
    const Rational a = z(k, 0) - z(k, 1);
    const Rational b = z(k, 2);
    const Rational c = z(k, 1);
    if (a.is_zero() && b.is_zero()) continue;
    lines.push_back({a, b, c, detail::line_label(a, b, c)});
  }
  lines.push_back({1, 0, 0, "p = 0"});
  lines.push_back({-1, 0, 1, "p = 1"});
  lines.push_back({0, 1, 0, "q = 0"});

  HPolytope h{1, 1, {}};
  for (const auto& l : lines) h.rows.push_back({Vector{l.a, l.b}, -l.c, false, l.label});
  // Enumerate on the (p, q) pair directly; HPolytope coordinates here are (p, q).
  const auto v = enumerate_vertices(h);
  Region2d region;
  for (const auto& x : v.vertices) region.vertices.emplace_back(x[1], x[0]);
  for (const auto& d : v.rays) region.rays.emplace_back(d[1], d[0]);
  std::sort(region.vertices.begin(), region.vertices.end());

  for (const auto& l : lines) {
    std::vector<std::pair<Rational, Rational>> on;
    for (const auto& [q, p] : region.vertices)
      if (l.a * p + l.b * q + l.c == 0) on.emplace_back(q, p);
    if (on.size() < 2) continue;
    std::sort(on.begin(), on.end(), [](const auto& u, const auto& w) {
      return u.first != w.first ? u.first < w.first : u.second < w.second;
    });
    Segment s{l.label, on.front().first, on.front().second, on.back().first, on.back().second};
    bool dup = false;
    for (const auto& o : region.segments)
      if (o.x1 == s.x1 && o.y1 == s.y1 && o.x2 == s.x2 && o.y2 == s.y2) dup = true;
    if (!dup) region.segments.push_back(std::move(s));
  }
  return region;
}

[[nodiscard]] inline auto project_2d(const ProductionSystem& sys) -> Region2d { return project_2d(sys.z()); }

}  // namespace prodviab
