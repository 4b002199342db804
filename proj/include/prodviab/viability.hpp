#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prodviab/core.hpp"
#include "prodviab/criteria.hpp"
#include "prodviab/lp.hpp"
#include "prodviab/structure.hpp"

namespace prodviab {

struct WeakViabilityResult {
  bool weakly_viable = false;
  std::optional<PriceSystem> witness;
};

/// Feasibility of {(p, q) in simplex x R+^ell_p : Z (p, q) >= 0}.
[[nodiscard]] inline auto is_weakly_viable(const ZMatrix& z) -> WeakViabilityResult {
  const std::size_t ell = z.size();
  LinearProgram lp(ell);
  for (std::size_t i = 0; i < ell; ++i) lp.add_ge(z.entries().row_vector(i), 0);
  Vector simplex(ell);
  for (std::size_t j = 0; j < z.ell_c(); ++j) simplex[j] = 1;
  lp.add_eq(std::move(simplex), 1);
  const auto out = solve(lp);
  if (out.status == LpStatus::Infeasible) return {};
  auto w = PriceSystem::normalized(out.primal, z.ell_c());
  if (!all_nonnegative(incomes(z, w))) throw Error(ErrorCode::InternalError, "weak viability witness failed");
  return {true, std::move(w)};
}

[[nodiscard]] inline auto is_weakly_viable(const ProductionSystem& sys) -> WeakViabilityResult {
  return is_weakly_viable(sys.z());
}

/// u >= 0, sum u = 1, u^T Z <= 0: no price gives every profession positive income.
[[nodiscard]] inline auto verify_non_viability_certificate(const ZMatrix& z, std::span<const Rational> u) -> bool {
  if (u.size() != z.size() || !all_nonnegative(u) || sum(u) != 1) return false;
  for (const auto& v : left_multiply(u, z.entries()))
    if (v.is_positive()) return false;
  return true;
}

struct MaxMinSlack {
  Rational t;
  PriceSystem price;
  Vector row_duals;
};

/// maximize t s.t. Z (p, q) >= t 1, sum p = 1, (p, q) >= 0, t <= 1.
[[nodiscard]] inline auto max_min_income(const ZMatrix& z) -> MaxMinSlack {
  const std::size_t ell = z.size();
  LinearProgram lp(ell + 1);
  lp.objective[ell] = 1;
  lp.bounds[ell] = VariableBounds{std::nullopt, Rational(1)};
  for (std::size_t i = 0; i < ell; ++i) {
    Vector row = z.entries().row_vector(i);
    row.push_back(-1);
    lp.add_ge(std::move(row), 0);
  }
  Vector simplex(ell + 1);
  for (std::size_t j = 0; j < z.ell_c(); ++j) simplex[j] = 1;
  lp.add_eq(std::move(simplex), 1);
  const auto out = solve(lp);
  if (out.status != LpStatus::Optimal) throw Error(ErrorCode::InternalError, "max-min income LP not optimal");
  Vector x(out.primal.begin(), out.primal.begin() + static_cast<std::ptrdiff_t>(ell));
  Vector y(out.row_multipliers.begin(), out.row_multipliers.begin() + static_cast<std::ptrdiff_t>(ell));
  return {out.objective_value, PriceSystem::normalized(x, z.ell_c()), std::move(y)};
}

struct ViabilityResult {
  bool viable = false;
  Rational t_star;
  std::optional<PriceSystem> witness;
  std::optional<Vector> non_viability_certificate;
  Vector leading_minors;
  bool hawkins_simon = false;
  std::optional<PqddCertificate> pqdd;
};

/// Max-min income LP, cross-checked against the Hawkins-Simon minors and a p.q.d.d. search.
[[nodiscard]] inline auto is_viable(const ZMatrix& z) -> ViabilityResult {
  ViabilityResult r;
  auto mm = max_min_income(z);
  r.t_star = mm.t;
  r.viable = mm.t.is_positive();
  r.leading_minors = leading_principal_minors(z.entries());
  r.hawkins_simon = hawkins_simon(z.entries());
  r.pqdd = find_pqdd(z.entries());
  if (r.hawkins_simon != r.viable || r.pqdd.has_value() != r.viable)
    throw Error(ErrorCode::CriteriaDisagreement,
                "LP viability " + std::to_string(r.viable) + ", Hawkins-Simon " + std::to_string(r.hawkins_simon) +
                    ", p.q.d.d. " + std::to_string(r.pqdd.has_value()));
  if (r.viable) {
    const auto inc = incomes(z, mm.price);
    if (!all_positive(inc) || !all_positive(mm.price.p) || !all_positive(mm.price.q))
      throw Error(ErrorCode::InternalError, "viable witness is not strictly positive");
    r.witness = std::move(mm.price);
  } else {
    if (!verify_non_viability_certificate(z, mm.row_duals))
      throw Error(ErrorCode::InternalError, "non-viability certificate failed to verify");
    r.non_viability_certificate = std::move(mm.row_duals);
  }
  return r;
}

[[nodiscard]] inline auto is_viable(const ProductionSystem& sys) -> ViabilityResult { return is_viable(sys.z()); }

struct EliminationStage {
  Matrix z;
  Vector c;
};

struct AcyclicPriceResult {
  PriceSystem price;
  Vector x;  // Z x = c before normalization
  std::vector<EliminationStage> trace;  // Z^0 = Z, ..., Z^{ell-1}
};

/// Forward elimination in natural order, back substitution, normalization.
[[nodiscard]] inline auto viable_price_acyclic_trace(const ZMatrix& zm, Vector c) -> AcyclicPriceResult {
  const Matrix& z = zm.entries();
  const std::size_t ell = z.rows();
  if (!is_acyclic(z).acyclic) throw Error(ErrorCode::NotAcyclic, "constructive pricing requires an acyclic system");
  if (c.empty()) c.assign(ell, Rational(1));
  if (c.size() != ell) throw Error(ErrorCode::DimensionMismatch, "c must have ell entries");
  if (!all_positive(c)) throw Error(ErrorCode::InvalidArgument, "c must be strictly positive");

  AcyclicPriceResult res;
  res.trace.push_back({z, c});
  for (std::size_t k = 0; k + 1 < ell; ++k) {
    EliminationStage next = res.trace.back();
    const auto& prev = res.trace.back();
    const Rational& pivot = prev.z(k, k);
    for (std::size_t i = k + 1; i < ell; ++i) {
      if (prev.z(i, k).is_zero()) continue;
      const Rational f = prev.z(i, k) / pivot;
      for (std::size_t j = 0; j < ell; ++j) next.z(i, j).sub_mul(f, prev.z(k, j));
      next.c[i].sub_mul(f, prev.c[k]);
    }
    for (std::size_t i = 0; i < ell; ++i) {
      if (next.z(i, i) != z(i, i)) throw Error(ErrorCode::InternalError, "elimination changed a diagonal entry");
      if (next.c[i] < prev.c[i]) throw Error(ErrorCode::InternalError, "elimination decreased c");
    }
    if (!ZMatrix::is_z_plus(next.z)) throw Error(ErrorCode::InternalError, "elimination left class Z+");
    res.trace.push_back(std::move(next));
  }
  const auto& last = res.trace.back();
  Vector x(ell);
  for (std::size_t k = ell; k-- > 0;) {
    Rational r = last.c[k];
    for (std::size_t h = k + 1; h < ell; ++h) r.sub_mul(last.z(k, h), x[h]);
    x[k] = r / last.z(k, k);
  }
  if (multiply(z, x) != c) throw Error(ErrorCode::InternalError, "back substitution does not solve Z x = c");
  if (!all_positive(x)) throw Error(ErrorCode::InternalError, "constructed price is not strictly positive");
  res.price = PriceSystem::normalized(x, zm.ell_c());
  if (!all_positive(incomes(zm, res.price))) throw Error(ErrorCode::InternalError, "constructed price not viable");
  res.x = std::move(x);
  return res;
}

[[nodiscard]] inline auto viable_price_acyclic(const ProductionSystem& sys, Vector c = {}) -> PriceSystem {
  return viable_price_acyclic_trace(sys.z(), std::move(c)).price;
}

struct VertexCheck {
  std::size_t vertex = 0;        // consumption good k, p = e_k
  std::optional<Vector> q;       // feasible intermediate prices
  std::optional<Vector> farkas;  // u >= 0, sum u = 1, u^T Z_q <= 0, u^T Z_{.,k} < 0
};

struct WcvResult {
  bool wcv = false;
  std::vector<VertexCheck> vertices;
  std::optional<std::size_t> failing_vertex;
  std::optional<bool> fm_verdict;
};

namespace detail {

[[nodiscard]] inline auto vertex_lp(const ZMatrix& z, std::size_t k) -> LinearProgram {
  const std::size_t ec = z.ell_c();
  LinearProgram lp(z.ell_p());
  for (std::size_t i = 0; i < z.size(); ++i) {
    Vector row(z.ell_p());
    for (std::size_t m = 0; m < z.ell_p(); ++m) row[m] = z(i, ec + m);
    lp.add_ge(std::move(row), -z(i, k));
  }
  return lp;
}

}  // namespace detail

/// Income of every profession at p = e_k as an affine function of q: entry [i] = (constant, coefficients).
[[nodiscard]] inline auto vertex_incomes(const ZMatrix& z, std::size_t k) -> std::vector<std::pair<Rational, Vector>> {
  std::vector<std::pair<Rational, Vector>> out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Vector coeffs(z.ell_p());
    for (std::size_t m = 0; m < z.ell_p(); ++m) coeffs[m] = z(i, z.ell_c() + m);
    out.emplace_back(z(i, k), std::move(coeffs));
  }
  return out;
}

[[nodiscard]] inline auto verify_vertex_farkas(const ZMatrix& z, std::size_t k, std::span<const Rational> u) -> bool {
  if (u.size() != z.size() || !all_nonnegative(u) || sum(u) != 1) return false;
  const Vector uz = left_multiply(u, z.entries());
  for (std::size_t m = 0; m < z.ell_p(); ++m)
    if (uz[z.ell_c() + m].is_positive()) return false;
  return uz[k].is_negative();
}

/// Range of q_m over the feasible set at vertex k; nullopt upper means unbounded.
[[nodiscard]] inline auto vertex_q_range(const ZMatrix& z, std::size_t k, std::size_t m)
    -> std::optional<std::pair<Rational, std::optional<Rational>>> {
  auto lp = detail::vertex_lp(z, k);
  lp.objective[m] = -1;
  const auto lo = solve(lp);
  if (lo.status == LpStatus::Infeasible) return std::nullopt;
  lp.objective[m] = 1;
  const auto hi = solve(lp);
  std::optional<Rational> upper;
  if (hi.status == LpStatus::Optimal) upper = hi.objective_value;
  return std::make_pair(-lo.objective_value, upper);
}

/// Projection of {(p, q) : q >= 0, Z (p, q) >= 0} onto p contains the simplex.
[[nodiscard]] inline auto wcv_by_projection(const ZMatrix& z, const FmOptions& opts = {}) -> bool {
  const std::size_t ell = z.size();
  std::vector<Inequality> rows;
  for (std::size_t i = 0; i < ell; ++i) rows.push_back({z.entries().row_vector(i), Rational(0)});
  for (std::size_t m = 0; m < z.ell_p(); ++m) {
    Vector e(ell);
    e[z.ell_c() + m] = 1;
    rows.push_back({std::move(e), Rational(0)});
  }
  const auto proj = fourier_motzkin_eliminate(std::move(rows), z.ell_c(), opts);
  for (const auto& r : proj) {
    Rational lowest = r.coeffs.front();
    for (const auto& g : r.coeffs) lowest = std::min(lowest, g);
    if (lowest < r.rhs) return false;
  }
  return true;
}

inline constexpr std::size_t kFmOracleMaxIntermediates = 6;

/// Per-vertex feasibility, with the projection oracle when ell_p <= 6.
[[nodiscard]] inline auto is_wcv(const ZMatrix& z, bool fm_oracle = true) -> WcvResult {
  WcvResult r;
  r.wcv = true;
  for (std::size_t k = 0; k < z.ell_c(); ++k) {
    VertexCheck vc;
    vc.vertex = k;
    const auto lp = detail::vertex_lp(z, k);
    const auto out = solve(lp);
    if (out.status == LpStatus::Infeasible) {
      Vector u = out.row_multipliers;
      const Rational s = sum(u);
      for (auto& v : u) v /= s;
      if (!verify_vertex_farkas(z, k, u)) throw Error(ErrorCode::InternalError, "vertex Farkas vector failed");
      vc.farkas = std::move(u);
      if (!r.failing_vertex) r.failing_vertex = k;
      r.wcv = false;
    } else {
      vc.q = out.primal;
    }
    r.vertices.push_back(std::move(vc));
  }
  if (fm_oracle && z.ell_p() <= kFmOracleMaxIntermediates) {
    try {
      r.fm_verdict = wcv_by_projection(z);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      return r;
    }
    if (*r.fm_verdict != r.wcv)
      throw Error(ErrorCode::OracleDisagreement, "vertex method and Fourier-Motzkin projection disagree on WCV");
  }
  return r;
}

[[nodiscard]] inline auto is_wcv(const ProductionSystem& sys, bool fm_oracle = true) -> WcvResult {
  return is_wcv(sys.z(), fm_oracle);
}

[[nodiscard]] inline auto is_cv(const ProductionSystem& sys, bool fm_oracle = true) -> bool {
  return is_viable(sys).viable && is_wcv(sys, fm_oracle).wcv;
}

/// Unknown flags skip the edges that mention them.
struct PropertyFlags {
  std::optional<bool> acyclic, coherent, wv, v, wcv, cv, rip, wrip;
};

/// Names of the lattice edges violated by the flags.
[[nodiscard]] inline auto verify_implications(const PropertyFlags& f) -> std::vector<std::string> {
  std::vector<std::string> failed;
  auto implies = [&](const char* name, std::optional<bool> a, std::optional<bool> b) {
    if (a && b && *a && !*b) failed.emplace_back(name);
  };
  auto implies2 = [&](const char* name, std::optional<bool> a1, std::optional<bool> a2, std::optional<bool> b) {
    if (a1 && a2 && b && *a1 && *a2 && !*b) failed.emplace_back(name);
  };
  auto iff_and = [&](const char* name, std::optional<bool> a, std::optional<bool> b1, std::optional<bool> b2) {
    if (a && b1 && b2 && *a != (*b1 && *b2)) failed.emplace_back(name);
  };
  implies("acyclic=>coherent", f.acyclic, f.coherent);
  implies("acyclic=>v", f.acyclic, f.v);
  implies("v=>coherent", f.v, f.coherent);
  implies("v=>wv", f.v, f.wv);
  iff_and("v<=>(wv&coherent)", f.v, f.wv, f.coherent);
  implies("cv=>v", f.cv, f.v);
  implies("cv=>wcv", f.cv, f.wcv);
  iff_and("cv<=>(v&wcv)", f.cv, f.v, f.wcv);
  iff_and("cv<=>(wcv&coherent)", f.cv, f.wcv, f.coherent);
  implies("rip=>wcv", f.rip, f.wcv);
  implies("wcv=>wrip", f.wcv, f.wrip);
  implies("rip=>wrip", f.rip, f.wrip);
  implies2("(acyclic&rip)=>cv", f.acyclic, f.rip, f.cv);
  implies("wcv=>wv", f.wcv, f.wv);
  return failed;
}

struct ClassifyOptions {
  std::uint64_t cc_budget = 1000000;
  bool fm_oracle = true;
};

enum class CycleSearch { NotRun, Found, NotFound, BudgetExceeded };

[[nodiscard]] constexpr auto to_string(CycleSearch s) -> std::string_view {
  switch (s) {
    case CycleSearch::NotRun: return "not-run";
    case CycleSearch::Found: return "found";
    case CycleSearch::NotFound: return "not-found";
    case CycleSearch::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

struct ClassificationReport {
  bool acyclic = false, coherent = false, wv = false, v = false, wcv = false, cv = false, rip = false, wrip = false;
  AcyclicityResult acyclicity;
  Rational determinant;
  Vector leading_minors;
  Vector net_output;
  CycleSearch cycle_search = CycleSearch::NotRun;
  std::optional<ConversionCycle> conversion_cycle;
  WeakViabilityResult weak;
  ViabilityResult viability;
  WcvResult wcv_detail;
  std::vector<std::string> warnings;

  [[nodiscard]] auto flags() const -> PropertyFlags { return {acyclic, coherent, wv, v, wcv, cv, rip, wrip}; }
};

/// Runs every decider and checks the implication lattice.
[[nodiscard]] inline auto classify(const ProductionSystem& sys, const ClassifyOptions& opts = {}) -> ClassificationReport {
  ClassificationReport r;
  r.net_output = sys.net_output();
  r.acyclicity = is_acyclic(sys);
  r.acyclic = r.acyclicity.acyclic;
  r.determinant = determinant(sys.z());
  r.coherent = !r.determinant.is_zero();
  if (!r.coherent) {
    try {
      r.conversion_cycle = find_conversion_cycle(sys, opts.cc_budget);
      r.cycle_search = r.conversion_cycle ? CycleSearch::Found : CycleSearch::NotFound;
      if (!r.conversion_cycle)
        r.warnings.push_back("det Z = 0 but no conversion cycle exists within the population bounds");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      r.cycle_search = CycleSearch::BudgetExceeded;
      r.warnings.push_back("conversion-cycle search skipped: budget exceeded");
    }
  }
  r.weak = is_weakly_viable(sys);
  r.wv = r.weak.weakly_viable;
  r.viability = is_viable(sys);
  r.v = r.viability.viable;
  r.leading_minors = r.viability.leading_minors;
  r.wcv_detail = is_wcv(sys, opts.fm_oracle);
  r.wcv = r.wcv_detail.wcv;
  if (opts.fm_oracle && sys.ell_p() <= kFmOracleMaxIntermediates && !r.wcv_detail.fm_verdict)
    r.warnings.push_back("Fourier-Motzkin cross-check skipped: row budget exceeded");
  r.cv = r.v && r.wcv;
  r.rip = satisfies_rip(sys);
  r.wrip = satisfies_wrip(sys);
  const auto failed = verify_implications(r.flags());
  if (!failed.empty()) {
    std::string msg = "lattice violated:";
    for (const auto& e : failed) msg += " " + e;
    throw Error(ErrorCode::ImplicationViolation, msg);
  }
  return r;
}

}  // namespace prodviab
