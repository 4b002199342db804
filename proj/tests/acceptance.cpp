// One line per acceptance criterion; exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "prodviab/crosscheck.hpp"
#include "prodviab/polytope.hpp"
#include "prodviab/viability.hpp"

using namespace prodviab;

namespace {

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

auto seconds_since(Clock::time_point t0) -> double {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

auto has_segment(const Region2d& r, const std::string& label) -> bool {
  for (const auto& s : r.segments)
    if (s.label == label) return true;
  return false;
}

auto has_vertex(const Region2d& r, const Rational& q, const Rational& p) -> bool {
  return std::find(r.vertices.begin(), r.vertices.end(), std::make_pair(q, p)) != r.vertices.end();
}

void criterion_1(Check& c) {
  const auto t0 = Clock::now();
  const auto r = classify(fixtures::xyi(fixtures::three_good_cycle(4, 2)));
  const double dt = seconds_since(t0);
  c.expect(!r.acyclic, "acyclic should be false");
  c.expect(r.acyclicity.cycle && r.acyclicity.cycle->product == Rational(6), "cycle product 6");
  c.expect(r.coherent && r.determinant == Rational(10), "det 10");
  c.expect(r.v, "viable");
  c.expect(dt < 1.0, "runtime " + std::to_string(dt) + " s");
}

void criterion_2(Check& c) {
  const auto sys = fixtures::swap_loop_system();
  const auto r = classify(sys);
  c.expect(!r.coherent, "coherent should be false");
  c.expect(r.conversion_cycle && r.conversion_cycle->n == std::vector<std::int64_t>{0, 1, 1, 0}, "conversion cycle (0,1,1,0)");
  c.expect(r.wv && r.weak.witness, "wv");
  if (r.weak.witness) {
    const auto& w = *r.weak.witness;
    c.expect(w.q[0] == w.q[1] && w.p[0] >= w.q[2], "witness shape q_A = q_B, p >= q_C");
    c.expect(all_nonnegative(incomes(sys, w)), "witness incomes >= 0");
  }
  c.expect(!r.v, "v should be false");
  c.expect(r.rip && r.wcv && !r.cv, "rip, wcv, not cv");
  const auto h = delta_prime_hrep(sys);
  c.expect(!is_bounded(h) && !enumerate_vertices(h).rays.empty(), "Delta' unbounded with a ray");
}

void criterion_3(Check& c) {
  const auto sys = fixtures::xyi(fixtures::shared_intermediate(2, 1, Rational(1, 2), Rational(1, 4)));
  const auto r = classify(sys);
  c.expect(r.v && r.cv, "v and cv");
  const auto inc = incomes(sys, PriceSystem::make({Rational(1, 2), Rational(1, 2)}, {Rational(1, 2)}));
  c.expect(inc == Vector{Rational(1, 2), Rational(3, 8), Rational(5, 8)}, "witness incomes (1/2, 3/8, 5/8)");
  const auto reg = project_2d(sys);
  c.expect(has_segment(reg, "p = q/2") && has_segment(reg, "p = 1 - q/4"), "boundary lines");
  c.expect(has_vertex(reg, Rational(4, 3), Rational(2, 3)), "apex q = 4/3");
}

void criterion_4(Check& c) {
  const auto sys = fixtures::cyclic_viable_system();
  const auto r = classify(sys);
  c.expect(!r.acyclic, "acyclic should be false");
  c.expect(r.coherent && r.determinant == Rational(3), "det 3");
  c.expect(r.v, "viable");
  const auto inc = incomes(sys, PriceSystem::make({Rational(1, 2), Rational(1, 2)}, {Rational(3, 4)}));
  c.expect(inc == Vector{Rational(1, 4), Rational(1, 2), Rational(1, 4)}, "witness incomes (1/4, 1/2, 1/4)");
  c.expect(verify_pqdd_columns(sys.z().entries(), Vector{1, 1, Rational(3, 2)}), "column weights d = (1, 1, 3/2)");
  const auto d = find_pqdd(sys.z().entries());
  c.expect(d && (verify_pqdd_rows(sys.z().entries(), d->d) || verify_pqdd_columns(sys.z().entries(), d->d)),
           "find_pqdd certificate");
}

void criterion_5(Check& c) {
  const auto sys = fixtures::xyi(fixtures::consumption_input_chain(1, 1));
  const auto r = classify(sys);
  c.expect(r.v && !r.wcv && !r.wrip && !r.cv, "v, not wcv, not wrip, not cv");
  c.expect(r.wcv_detail.failing_vertex == std::optional<std::size_t>(0), "failing vertex p = (1, 0)");
  const auto iy = vertex_incomes(sys.z(), 0)[1];
  c.expect(iy.first == Rational(-1) && iy.second == Vector{-1}, "I_Y = -1 - q");
  const auto reg = project_2d(sys);
  c.expect(has_vertex(reg, Rational(1, 2), Rational(1, 4)), "apex at q = 1/2");
  c.expect(has_vertex(reg, Rational(0), Rational(1, 2)), "p-intercept 1/2");
}

void criterion_6(Check& c) {
  const auto sys = fixtures::xyi(fixtures::intermediate_uses_consumption(1, 1));
  const auto r = classify(sys);
  c.expect(r.cv && !r.rip && r.wrip, "cv, not rip, wrip");
  const auto x = vertex_q_range(sys.z(), 0, 0);
  c.expect(x && x->first == Rational(1) && x->second == std::optional<Rational>(Rational(2)), "q in [1, 2] at p = (1, 0)");
  const auto y = vertex_q_range(sys.z(), 1, 0);
  c.expect(y && y->first == Rational(0) && y->second == std::optional<Rational>(Rational(0)), "q = 0 at p = (0, 1)");
  for (const Rational& q : {Rational(1), Rational(3, 2), Rational(2)})
    c.expect(all_nonnegative(incomes(sys, PriceSystem::make({1, 0}, {q}))), "q = " + q.str() + " feasible at X");
  c.expect(all_nonnegative(incomes(sys, PriceSystem::make({0, 1}, {0}))), "q = 0 feasible at Y");
}

void criterion_7(Check& c) {
  Rng rng(20260701);
  RandomZConfig cfg;
  cfg.ell_max = 6;
  std::size_t positives = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    cfg.density = 0.15 + 0.1 * static_cast<double>(i % 7);
    const auto a = random_z_plus(cfg, rng);
    const auto v = lemma_verdicts(a, &rng, i < 100 ? 5 : 0);
    positives += v.positive_image;
    if (auto d = lemma_disagreement(v)) c.expect(false, "matrix " + std::to_string(i) + ": " + *d);
    // Independent minors by cofactor expansion.
    if (v.hawkins_simon != all_positive(oracle::leading_minors(a)))
      c.expect(false, "matrix " + std::to_string(i) + ": minors differ from cofactor oracle");
  }
  c.expect(positives > 100 && positives < 900, "both verdicts represented (" + std::to_string(positives) + " positive)");
}

struct SuiteSystem {
  ProductionSystem sys;
  ClassificationReport report;
};

auto lattice_suite() -> std::vector<SuiteSystem>& {
  static std::vector<SuiteSystem> suite;
  return suite;
}

void criterion_8(Check& c) {
  auto& suite = lattice_suite();
  for (std::size_t i = 0; i < 1000; ++i) {
    const auto cand = generate_system(crosscheck_config(8, i, 6));
    auto vr = validate_system(cand);
    if (!vr.ok()) {
      c.expect(false, "system " + std::to_string(i) + " invalid");
      continue;
    }
    try {
      auto r = classify(*vr.system, {1000000, false});
      for (const auto& e : verify_implications(r.flags())) c.expect(false, "system " + std::to_string(i) + ": " + e);
      suite.push_back({*vr.system, std::move(r)});
    } catch (const Error& e) {
      c.expect(false, "system " + std::to_string(i) + ": " + e.what());
    }
  }
}

void criterion_9(Check& c) {
  GeneratorConfig cfg;
  cfg.structure = Structure::Dag;
  cfg.ell_c_min = 1;
  cfg.ell_c_max = 3;
  cfg.ell_p_min = 0;
  cfg.ell_p_max = 3;
  for (std::uint64_t s = 0; s < 250; ++s) {
    cfg.seed = 900 + s;
    cfg.density = 0.2 + 0.1 * static_cast<double>(s % 8);
    const auto sys = make_system(generate_system(cfg));
    const std::string tag = "seed " + std::to_string(cfg.seed);
    try {
      const auto r = viable_price_acyclic_trace(sys.z(), {});
      const Vector ones(sys.ell(), Rational(1));
      c.expect(multiply(sys.z().entries(), r.x) == ones, tag + ": Z x = c");
      c.expect(all_positive(incomes(sys, r.price)), tag + ": incomes > 0");
      for (std::size_t k = 0; k < r.trace.size(); ++k) {
        const auto& st = r.trace[k];
        c.expect(ZMatrix::is_z_plus(st.z), tag + ": stage not Z+");
        for (std::size_t i = 0; i < sys.ell(); ++i) {
          c.expect(st.z(i, i) == sys.z()(i, i), tag + ": diagonal changed");
          if (k > 0) c.expect(st.c[i] >= r.trace[k - 1].c[i], tag + ": c decreased");
        }
      }
    } catch (const Error& e) {
      c.expect(false, tag + ": " + e.what());
    }
  }
}

void criterion_10(Check& c) {
  std::size_t yes = 0, checked = 0;
  for (std::size_t i = 0; i < 400; ++i) {
    const auto sys = make_system(generate_system(crosscheck_config(10, i, 5)));
    if (sys.ell_p() > 3) continue;
    ++checked;
    const bool vertex = is_wcv(sys.z(), false).wcv;
    const bool fm = wcv_by_projection(sys.z());
    yes += vertex;
    if (vertex != fm) c.expect(false, "system " + std::to_string(i) + " disagrees");
  }
  c.expect(checked >= 300, std::to_string(checked) + " systems checked");
  c.expect(yes > 0, "some systems are WCV");
}

void criterion_11(Check& c) {
  for (std::size_t i = 0; i < lattice_suite().size(); ++i) {
    const auto& [sys, r] = lattice_suite()[i];
    const std::string tag = "system " + std::to_string(i);
    const auto h = delta_prime_hrep(sys);
    if (r.coherent) c.expect(is_bounded(h), tag + ": coherent but unbounded");
    if (r.coherent && r.wv && r.v) {
      const auto ip = interior_point(h);
      c.expect(ip && all_positive(incomes(sys, ip->price)), tag + ": interior point incomes");
    }
    if (sys.ell() <= 5) {
      const auto v = enumerate_vertices(h);
      for (const auto& x : v.vertices) c.expect(h.contains(x), tag + ": vertex outside");
      c.expect(round_trip_agrees(h, v, round_trip_directions(h, i, 8)), tag + ": round trip");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"three-good cycle: not acyclic, product 6, det 10, viable", criterion_1},
      {"swap loop: conversion cycle, wv witness, not viable, unbounded", criterion_2},
      {"shared intermediate: viable witness and region boundary", criterion_3},
      {"cyclic viable system: det 3, witness, p.q.d.d. weights", criterion_4},
      {"consumption input chain: wcv fails at X, apex (1/2, 1/4)", criterion_5},
      {"intermediate uses consumption: cv, vertex q ranges", criterion_6},
      {"lemma equivalence on 1000 random Z+ matrices", criterion_7},
      {"implication lattice on 1000 random systems", criterion_8},
      {"constructive pricing on 250 acyclic systems", criterion_9},
      {"vertex vs projection wcv on systems with ell_p <= 3", criterion_10},
      {"polytope boundedness, interior points, round trips", criterion_11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("[%s] %02zu %s (%.2f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), seconds_since(t0));
    for (std::size_t k = 0; k < c.failures.size() && k < 5; ++k) std::printf("       %s\n", c.failures[k].c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
