#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prodviab/error.hpp"
#include "prodviab/rational.hpp"

namespace prodviab {

enum class Relation { Le, Eq, Ge };

struct Constraint {
  Vector coeffs;
  Relation rel = Relation::Ge;
  Rational rhs;
};

struct VariableBounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

/// maximize objective . x subject to constraints and per-variable bounds.
struct LinearProgram {
  Vector objective;
  std::vector<Constraint> constraints;
  std::vector<VariableBounds> bounds;

  LinearProgram() = default;
  /// n variables, zero objective, every variable >= 0.
  explicit LinearProgram(std::size_t n) : objective(n), bounds(n, VariableBounds{Rational(0), std::nullopt}) {}

  [[nodiscard]] auto num_vars() const -> std::size_t { return objective.size(); }
  void add(Vector coeffs, Relation rel, Rational rhs) { constraints.push_back({std::move(coeffs), rel, std::move(rhs)}); }
  void add_ge(Vector coeffs, Rational rhs) { add(std::move(coeffs), Relation::Ge, std::move(rhs)); }
  void add_le(Vector coeffs, Rational rhs) { add(std::move(coeffs), Relation::Le, std::move(rhs)); }
  void add_eq(Vector coeffs, Rational rhs) { add(std::move(coeffs), Relation::Eq, std::move(rhs)); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

[[nodiscard]] constexpr auto to_string(LpStatus s) -> std::string_view {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

/// Multiplier convention: y_i >= 0 on Ge rows, y_i <= 0 on Le rows, free on Eq rows;
/// lower/upper multipliers are >= 0.
///   Infeasible: sum_i y_i a_i + lam_lo - lam_up = 0 and sum_i y_i b_i + lam_lo.l - lam_up.u > 0.
///   Optimal:    c + sum_i y_i a_i + lam_lo - lam_up = 0 and c.x* = -(sum_i y_i b_i + lam_lo.l - lam_up.u).
///   Unbounded:  primal is feasible and ray is a recession direction with c.ray > 0.
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Vector primal;
  Rational objective_value;
  Vector row_multipliers;
  Vector lower_multipliers;
  Vector upper_multipliers;
  Vector ray;
};

namespace detail {

[[nodiscard]] inline auto bounds_for(const LinearProgram& lp, std::size_t j) -> VariableBounds {
  return j < lp.bounds.size() ? lp.bounds[j] : VariableBounds{};
}

[[nodiscard]] inline auto check_dims(const LinearProgram& lp) -> bool {
  if (!lp.bounds.empty() && lp.bounds.size() != lp.num_vars()) return false;
  for (const auto& c : lp.constraints)
    if (c.coeffs.size() != lp.num_vars()) return false;
  return true;
}

/// Fills bound multipliers from v = (c) + sum y a using the smallest admissible pair.
[[nodiscard]] inline auto fill_bound_multipliers(const LinearProgram& lp, const Vector& v, LpOutcome& out) -> bool {
  const std::size_t n = lp.num_vars();
  out.lower_multipliers.assign(n, Rational(0));
  out.upper_multipliers.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    const auto b = bounds_for(lp, j);
    if (v[j].is_negative()) {
      if (!b.lower) return false;
      out.lower_multipliers[j] = -v[j];
    } else if (v[j].is_positive()) {
      if (!b.upper) return false;
      out.upper_multipliers[j] = v[j];
    }
  }
  return true;
}

class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp) {}

  auto run() -> LpOutcome {
    const std::size_t n = lp_.num_vars();
    for (std::size_t j = 0; j < n; ++j) {
      const auto b = bounds_for(lp_, j);
      if (b.lower && b.upper && *b.lower > *b.upper) return crossed_bounds(j);
    }
    build();
    // Phase I: maximize minus the sum of artificials.
    std::vector<Rational> cost(cols_);
    for (std::size_t r = 0; r < rows_; ++r) cost[art_begin_ + r] = -1;
    iterate(cost);
    Rational phase1 = value(cost);
    if (phase1.is_negative()) return infeasible(cost);
    drive_out_artificials();

    std::vector<Rational> cost2(cols_);
    for (std::size_t k = 0; k < zmap_.size(); ++k)
      if (zmap_[k].second > 0)
        cost2[k] = lp_.objective[zmap_[k].first];
      else
        cost2[k] = -lp_.objective[zmap_[k].first];
    auto entering_unbounded = iterate(cost2);
    if (entering_unbounded) return unbounded(*entering_unbounded);
    return optimal(cost2);
  }

 private:
  const LinearProgram& lp_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;  // structural + slack + artificial
  std::size_t art_begin_ = 0;
  std::vector<std::pair<std::size_t, int>> zmap_;  // z column -> (x index, +1/-1)
  Vector x0_;
  std::vector<std::vector<Rational>> t_;  // rows_ x (cols_ + 1), last column rhs
  std::vector<std::size_t> basis_;
  std::vector<int> nu_;                       // row negation sign
  std::vector<std::optional<std::size_t>> origin_;  // row -> original constraint (nullopt: bound row)

  void build() {
    const std::size_t n = lp_.num_vars();
    x0_.assign(n, Rational(0));
    std::vector<std::pair<std::size_t, Rational>> bound_rows;  // z column, width
    for (std::size_t j = 0; j < n; ++j) {
      const auto b = bounds_for(lp_, j);
      if (b.lower) {
        x0_[j] = *b.lower;
        zmap_.emplace_back(j, 1);
        if (b.upper) bound_rows.emplace_back(zmap_.size() - 1, *b.upper - *b.lower);
      } else if (b.upper) {
        x0_[j] = *b.upper;
        zmap_.emplace_back(j, -1);
      } else {
        zmap_.emplace_back(j, 1);
        zmap_.emplace_back(j, -1);
      }
    }
    const std::size_t nz = zmap_.size();
    struct Row {
      std::vector<Rational> coeffs;
      int slack = 0;
      Rational rhs;
      std::optional<std::size_t> origin;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < lp_.constraints.size(); ++i) {
      const auto& c = lp_.constraints[i];
      Row r;
      r.coeffs.resize(nz);
      for (std::size_t k = 0; k < nz; ++k) r.coeffs[k] = c.coeffs[zmap_[k].first] * Rational(zmap_[k].second);
      r.rhs = c.rhs - dot(c.coeffs, x0_);
      r.slack = c.rel == Relation::Le ? 1 : (c.rel == Relation::Ge ? -1 : 0);
      r.origin = i;
      rows.push_back(std::move(r));
    }
    for (auto& [k, width] : bound_rows) {
      Row r;
      r.coeffs.resize(nz);
      r.coeffs[k] = 1;
      r.slack = 1;
      r.rhs = width;
      rows.push_back(std::move(r));
    }
    rows_ = rows.size();
    std::size_t nslack = 0;
    for (const auto& r : rows) nslack += r.slack != 0 ? 1 : 0;
    art_begin_ = nz + nslack;
    cols_ = art_begin_ + rows_;
    t_.assign(rows_, std::vector<Rational>(cols_ + 1));
    basis_.resize(rows_);
    nu_.resize(rows_);
    origin_.resize(rows_);
    std::size_t s = nz;
    for (std::size_t r = 0; r < rows_; ++r) {
      const int nu = rows[r].rhs.is_negative() ? -1 : 1;
      const Rational f(nu);
      for (std::size_t k = 0; k < nz; ++k) t_[r][k] = rows[r].coeffs[k] * f;
      if (rows[r].slack != 0) t_[r][s++] = Rational(rows[r].slack * nu);
      t_[r][art_begin_ + r] = 1;
      t_[r][cols_] = rows[r].rhs * f;
      basis_[r] = art_begin_ + r;
      nu_[r] = nu;
      origin_[r] = rows[r].origin;
    }
  }

  [[nodiscard]] auto value(const std::vector<Rational>& cost) const -> Rational {
    Rational v;
    for (std::size_t r = 0; r < rows_; ++r) v.add_mul(cost[basis_[r]], t_[r][cols_]);
    return v;
  }

  [[nodiscard]] auto reduced_cost(const std::vector<Rational>& cost, std::size_t j) const -> Rational {
    Rational d = cost[j];
    for (std::size_t r = 0; r < rows_; ++r)
      if (!t_[r][j].is_zero()) d.sub_mul(cost[basis_[r]], t_[r][j]);
    return d;
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = Rational(1) / t_[pr][pc];
    for (auto& v : t_[pr]) v *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr || t_[r][pc].is_zero()) continue;
      const Rational f = t_[r][pc];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (!t_[pr][j].is_zero()) t_[r][j].sub_mul(f, t_[pr][j]);
    }
    basis_[pr] = pc;
  }

  /// Bland's rule. Returns the entering column if the objective is unbounded.
  auto iterate(const std::vector<Rational>& cost) -> std::optional<std::size_t> {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (reduced_cost(cost, j).is_positive()) {
          enter = j;
          break;
        }
      }
      if (!enter) return std::nullopt;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (!t_[r][*enter].is_positive()) continue;
        Rational ratio = t_[r][cols_] / t_[r][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (!leave) return enter;
      pivot(*leave, *enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < art_begin_) continue;
      for (std::size_t j = 0; j < art_begin_; ++j)
        if (!t_[r][j].is_zero()) {
          pivot(r, j);
          break;
        }
    }
  }

  /// pi = c_B B^-1, read from the artificial columns.
  [[nodiscard]] auto duals(const std::vector<Rational>& cost) const -> Vector {
    Vector pi(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t k = 0; k < rows_; ++k) pi[k].add_mul(cb, t_[r][art_begin_ + k]);
    }
    return pi;
  }

  [[nodiscard]] auto row_multipliers(const Vector& pi) const -> Vector {
    Vector y(lp_.constraints.size());
    for (std::size_t r = 0; r < rows_; ++r)
      if (origin_[r]) y[*origin_[r]] = -pi[r] * Rational(nu_[r]);
    return y;
  }

  [[nodiscard]] auto current_x() const -> Vector {
    Vector z(art_begin_);
    for (std::size_t r = 0; r < rows_; ++r)
      if (basis_[r] < art_begin_) z[basis_[r]] = t_[r][cols_];
    Vector x = x0_;
    for (std::size_t k = 0; k < zmap_.size(); ++k)
      if (!z[k].is_zero()) x[zmap_[k].first] += z[k] * Rational(zmap_[k].second);
    return x;
  }

  [[nodiscard]] auto y_times_a(const Vector& y) const -> Vector {
    Vector v(lp_.num_vars());
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i].is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j].add_mul(y[i], lp_.constraints[i].coeffs[j]);
    }
    return v;
  }

  auto crossed_bounds(std::size_t j) -> LpOutcome {
    LpOutcome out;
    out.status = LpStatus::Infeasible;
    out.row_multipliers.assign(lp_.constraints.size(), Rational(0));
    out.lower_multipliers.assign(lp_.num_vars(), Rational(0));
    out.upper_multipliers.assign(lp_.num_vars(), Rational(0));
    out.lower_multipliers[j] = 1;
    out.upper_multipliers[j] = 1;
    return out;
  }

  auto infeasible(const std::vector<Rational>& cost) -> LpOutcome {
    LpOutcome out;
    out.status = LpStatus::Infeasible;
    out.row_multipliers = row_multipliers(duals(cost));
    const Vector v = y_times_a(out.row_multipliers);
    if (!fill_bound_multipliers(lp_, v, out)) throw Error(ErrorCode::InternalError, "Farkas certificate needs a missing bound");
    return out;
  }

  auto optimal(const std::vector<Rational>& cost) -> LpOutcome {
    LpOutcome out;
    out.status = LpStatus::Optimal;
    out.primal = current_x();
    out.objective_value = dot(lp_.objective, out.primal);
    out.row_multipliers = row_multipliers(duals(cost));
    Vector v = y_times_a(out.row_multipliers);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += lp_.objective[j];
    if (!fill_bound_multipliers(lp_, v, out)) throw Error(ErrorCode::InternalError, "dual certificate needs a missing bound");
    return out;
  }

  auto unbounded(std::size_t enter) -> LpOutcome {
    LpOutcome out;
    out.status = LpStatus::Unbounded;
    out.primal = current_x();
    out.objective_value = dot(lp_.objective, out.primal);
    Vector w(art_begin_);
    w[enter] = 1;
    for (std::size_t r = 0; r < rows_; ++r)
      if (basis_[r] < art_begin_) w[basis_[r]] = -t_[r][enter];
    out.ray.assign(lp_.num_vars(), Rational(0));
    for (std::size_t k = 0; k < zmap_.size(); ++k)
      if (!w[k].is_zero()) out.ray[zmap_[k].first] += w[k] * Rational(zmap_[k].second);
    return out;
  }
};

}  // namespace detail

/// Re-checks an outcome's primal point and certificate exactly.
[[nodiscard]] inline auto verify_outcome(const LinearProgram& lp, const LpOutcome& out) -> bool {
  if (!detail::check_dims(lp)) return false;
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.constraints.size();

  auto primal_ok = [&](const Vector& x) {
    if (x.size() != n) return false;
    for (const auto& c : lp.constraints) {
      const Rational ax = dot(c.coeffs, x);
      if (c.rel == Relation::Le && ax > c.rhs) return false;
      if (c.rel == Relation::Ge && ax < c.rhs) return false;
      if (c.rel == Relation::Eq && ax != c.rhs) return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto b = detail::bounds_for(lp, j);
      if (b.lower && x[j] < *b.lower) return false;
      if (b.upper && x[j] > *b.upper) return false;
    }
    return true;
  };

  // Returns sum y a + lam_lo - lam_up and the scalar sum y b + lam_lo.l - lam_up.u.
  auto combine = [&](Vector& v, Rational& s) {
    if (out.row_multipliers.size() != m || out.lower_multipliers.size() != n || out.upper_multipliers.size() != n)
      return false;
    v.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      const auto& y = out.row_multipliers[i];
      const auto rel = lp.constraints[i].rel;
      if (rel == Relation::Ge && y.is_negative()) return false;
      if (rel == Relation::Le && y.is_positive()) return false;
      for (std::size_t j = 0; j < n; ++j) v[j].add_mul(y, lp.constraints[i].coeffs[j]);
      s.add_mul(y, lp.constraints[i].rhs);
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto b = detail::bounds_for(lp, j);
      const auto& lo = out.lower_multipliers[j];
      const auto& up = out.upper_multipliers[j];
      if (lo.is_negative() || up.is_negative()) return false;
      if (!lo.is_zero()) {
        if (!b.lower) return false;
        v[j] += lo;
        s.add_mul(lo, *b.lower);
      }
      if (!up.is_zero()) {
        if (!b.upper) return false;
        v[j] -= up;
        s.sub_mul(up, *b.upper);
      }
    }
    return true;
  };

  switch (out.status) {
    case LpStatus::Infeasible: {
      Vector v;
      Rational s;
      if (!combine(v, s)) return false;
      for (const auto& x : v)
        if (!x.is_zero()) return false;
      return s.is_positive();
    }
    case LpStatus::Optimal: {
      if (!primal_ok(out.primal)) return false;
      if (dot(lp.objective, out.primal) != out.objective_value) return false;
      Vector v;
      Rational s;
      if (!combine(v, s)) return false;
      for (std::size_t j = 0; j < n; ++j)
        if (v[j] + lp.objective[j] != 0) return false;
      return out.objective_value == -s;
    }
    case LpStatus::Unbounded: {
      if (!primal_ok(out.primal) || out.ray.size() != n) return false;
      if (!dot(lp.objective, out.ray).is_positive()) return false;
      for (const auto& c : lp.constraints) {
        const Rational ad = dot(c.coeffs, out.ray);
        if (c.rel == Relation::Le && ad.is_positive()) return false;
        if (c.rel == Relation::Ge && ad.is_negative()) return false;
        if (c.rel == Relation::Eq && !ad.is_zero()) return false;
      }
      for (std::size_t j = 0; j < n; ++j) {
        const auto b = detail::bounds_for(lp, j);
        if (b.lower && out.ray[j].is_negative()) return false;
        if (b.upper && out.ray[j].is_positive()) return false;
      }
      return true;
    }
  }
  return false;
}

/// Exact two-phase simplex with Bland's rule. The outcome is verified before return.
[[nodiscard]] inline auto solve(const LinearProgram& lp) -> LpOutcome {
  if (!detail::check_dims(lp)) throw Error(ErrorCode::DimensionMismatch, "linear program dimensions");
  LpOutcome out = detail::Simplex(lp).run();
  if (!verify_outcome(lp, out))
    throw Error(ErrorCode::InternalError, std::string("LP certificate failed to verify, status ") +
                                              std::string(to_string(out.status)));
  return out;
}

/// coeffs . x >= rhs
struct Inequality {
  Vector coeffs;
  Rational rhs;
  friend auto operator==(const Inequality&, const Inequality&) -> bool = default;
};

struct FmOptions {
  std::size_t row_budget = 20000;
  bool lp_redundancy = false;
};

namespace detail {

/// Scales so the first nonzero coefficient has magnitude 1; all-zero rows keep their rhs.
inline void normalize(Inequality& row) {
  for (const auto& c : row.coeffs) {
    if (c.is_zero()) continue;
    const Rational s = c.abs();
    for (auto& v : row.coeffs) v /= s;
    row.rhs /= s;
    return;
  }
}

/// Drops rows implied by the others; returns false, leaving rows untouched, when the system is infeasible.
[[nodiscard]] inline auto remove_lp_redundant(std::vector<Inequality>& rows) -> bool {
  if (rows.empty()) return true;
  {
    LinearProgram all(rows.front().coeffs.size());
    all.bounds.assign(rows.front().coeffs.size(), VariableBounds{});
    for (const auto& r : rows) all.add_ge(r.coeffs, r.rhs);
    if (solve(all).status == LpStatus::Infeasible) return false;
  }
  for (std::size_t i = 0; i < rows.size();) {
    const std::size_t n = rows[i].coeffs.size();
    LinearProgram lp;
    lp.objective.resize(n);
    for (std::size_t j = 0; j < n; ++j) lp.objective[j] = -rows[i].coeffs[j];
    lp.bounds.assign(n, VariableBounds{});
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != i) lp.add_ge(rows[k].coeffs, rows[k].rhs);
    const auto out = solve(lp);
    const bool redundant = out.status == LpStatus::Infeasible ||
                           (out.status == LpStatus::Optimal && -out.objective_value >= rows[i].rhs);
    if (redundant)
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return true;
}

}  // namespace detail

/// Projects {x : rows} onto the first num_kept coordinates by eliminating the rest,
/// last variable first. A contradiction is returned as the single row 0 >= 1.
/// Each row keeps the minimal sets of original rows it can be derived from; after t
/// eliminations a derivation using more than t + 1 originals is discarded (Chernikov's
/// rule), and a row goes only when every derivation has been discarded.
[[nodiscard]] inline auto fourier_motzkin_eliminate(std::vector<Inequality> rows, std::size_t num_kept,
                                                    const FmOptions& opts = {}) -> std::vector<Inequality> {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().coeffs.size();
  for (const auto& r : rows)
    if (r.coeffs.size() != n) throw Error(ErrorCode::DimensionMismatch, "inequality lengths differ");
  if (num_kept > n) throw Error(ErrorCode::DimensionMismatch, "num_kept exceeds dimension");

  using Origin = std::vector<bool>;
  struct Tracked {
    Inequality row;
    std::vector<Origin> origins;
  };
  auto weight = [](const Origin& o) { return static_cast<std::size_t>(std::count(o.begin(), o.end(), true)); };
  auto subset = [](const Origin& a, const Origin& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] && !b[k]) return false;
    return true;
  };
  auto minimal = [&](std::vector<Origin> in) {
    std::sort(in.begin(), in.end(), [&](const Origin& a, const Origin& b) { return weight(a) < weight(b); });
    std::vector<Origin> out;
    for (auto& o : in)
      if (std::none_of(out.begin(), out.end(), [&](const Origin& k) { return subset(k, o); })) out.push_back(std::move(o));
    return out;
  };
  auto contradiction = [&] { return std::vector<Inequality>{{Vector(num_kept), Rational(1)}}; };
  // Normalizes, drops trivial rows, keeps the tightest of identical left-hand sides and
  // pools the derivations of identical rows.
  auto tidy = [&](std::vector<Tracked>& in) {
    std::vector<Tracked> out;
    for (auto& t : in) {
      detail::normalize(t.row);
      if (std::all_of(t.row.coeffs.begin(), t.row.coeffs.end(), [](const Rational& c) { return c.is_zero(); })) {
        if (t.row.rhs.is_positive()) return false;
        continue;
      }
      auto same = std::find_if(out.begin(), out.end(), [&](const Tracked& o) { return o.row.coeffs == t.row.coeffs; });
      if (same == out.end()) {
        out.push_back(std::move(t));
      } else if (t.row.rhs > same->row.rhs) {
        *same = std::move(t);
      } else if (t.row.rhs == same->row.rhs) {
        auto pooled = std::move(same->origins);
        pooled.insert(pooled.end(), t.origins.begin(), t.origins.end());
        same->origins = minimal(std::move(pooled));
      }
    }
    in = std::move(out);
    return true;
  };

  std::vector<Tracked> cur;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Origin o(rows.size());
    o[i] = true;
    cur.push_back({std::move(rows[i]), {std::move(o)}});
  }
  if (!tidy(cur)) return contradiction();
  std::size_t eliminated = 0;
  for (std::size_t j = n; j-- > num_kept;) {
    std::vector<Tracked> pos, neg, next;
    for (auto& t : cur) {
      if (t.row.coeffs[j].is_positive())
        pos.push_back(std::move(t));
      else if (t.row.coeffs[j].is_negative())
        neg.push_back(std::move(t));
      else
        next.push_back(std::move(t));
    }
    ++eliminated;
    for (const auto& P : pos)
      for (const auto& N : neg) {
        std::vector<Origin> origins;
        for (const auto& a : P.origins)
          for (const auto& b : N.origins) {
            Origin o(a.size());
            for (std::size_t k = 0; k < o.size(); ++k) o[k] = a[k] || b[k];
            if (weight(o) <= eliminated + 1) origins.push_back(std::move(o));
          }
        if (origins.empty()) continue;
        if (next.size() >= opts.row_budget) throw Error(ErrorCode::BudgetExceeded, "Fourier-Motzkin row budget exceeded");
        const Rational a = -N.row.coeffs[j];
        const Rational b = P.row.coeffs[j];
        Inequality c;
        c.coeffs.resize(n);
        for (std::size_t k = 0; k < n; ++k) c.coeffs[k] = a * P.row.coeffs[k] + b * N.row.coeffs[k];
        c.coeffs[j] = 0;
        c.rhs = a * P.row.rhs + b * N.row.rhs;
        next.push_back({std::move(c), minimal(std::move(origins))});
      }
    if (!tidy(next)) return contradiction();
    if (opts.lp_redundancy) {
      std::vector<Inequality> plain;
      for (auto& t : next) plain.push_back(t.row);
      if (!detail::remove_lp_redundant(plain)) return contradiction();
      std::vector<Tracked> kept;
      for (auto& t : next)
        if (std::find(plain.begin(), plain.end(), t.row) != plain.end()) kept.push_back(std::move(t));
      next = std::move(kept);
    }
    cur = std::move(next);
  }
  std::vector<Inequality> out;
  for (auto& t : cur) {
    t.row.coeffs.resize(num_kept);
    out.push_back(std::move(t.row));
  }
  return out;
}

}  // namespace prodviab
