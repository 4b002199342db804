#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "prodviab/criteria.hpp"
#include "prodviab/document.hpp"
#include "prodviab/generator.hpp"
#include "prodviab/viability.hpp"

namespace prodviab {

struct LemmaVerdicts {
  bool positive_image = false;   // (a)
  bool solvable_unit = false;    // (b), decided on unit vectors
  bool random_y_solved = true;   // (b), every sampled y >= 0 solved
  bool hawkins_simon = false;    // (c)
  bool principal_minors = false; // (d)
  bool pqdd = false;             // (e)
};

/// Evaluates the five equivalent statements on a Z+ matrix. With `mutant`, the first
/// leading minor's sign is flipped before the Hawkins-Simon test.
[[nodiscard]] inline auto lemma_verdicts(const Matrix& a, Rng* rng = nullptr, std::size_t random_ys = 0,
                                         bool mutant = false) -> LemmaVerdicts {
  LemmaVerdicts v;
  v.positive_image = find_positive_image(a).has_value();
  v.solvable_unit = solvable_for_all_nonnegative(a);
  if (rng != nullptr)
    for (std::size_t s = 0; s < random_ys; ++s) {
      Vector y(a.rows());
      for (auto& c : y) c = rng->chance(0.3) ? Rational(0) : rng->positive_rational(6);
      if (!nonnegative_solution(a, y)) v.random_y_solved = false;
    }
  auto minors = leading_principal_minors(a);
  if (mutant && !minors.empty()) minors.front() = -minors.front();
  v.hawkins_simon = all_positive(minors);
  v.principal_minors = all_principal_minors_positive(a);
  v.pqdd = find_pqdd(a).has_value();
  return v;
}

/// Empty when all statements agree; otherwise a description of the disagreement.
[[nodiscard]] inline auto lemma_disagreement(const LemmaVerdicts& v) -> std::optional<std::string> {
  const bool ref = v.positive_image;
  if (v.solvable_unit == ref && v.hawkins_simon == ref && v.principal_minors == ref && v.pqdd == ref &&
      (!ref || v.random_y_solved))
    return std::nullopt;
  return "(a)=" + std::to_string(v.positive_image) + " (b)=" + std::to_string(v.solvable_unit) +
         " (b,random)=" + std::to_string(v.random_y_solved) + " (c)=" + std::to_string(v.hawkins_simon) +
         " (d)=" + std::to_string(v.principal_minors) + " (e)=" + std::to_string(v.pqdd);
}

struct CrosscheckOptions {
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::size_t max_ell = 6;
  std::string dump_dir = "crosscheck-failures";
  bool inject_mutant = false;
};

struct CrosscheckViolation {
  std::size_t index = 0;
  std::string check;
  std::string detail;
  std::string reproducer;
};

struct CrosscheckSummary {
  std::size_t systems = 0;
  std::size_t lemma_checks = 0;
  std::size_t lattice_checks = 0;
  std::size_t wcv_checks = 0;
  std::size_t acyclic_checks = 0;
  std::vector<CrosscheckViolation> violations;
};

[[nodiscard]] inline auto mix_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Toggles drawn per instance: dag one time in three, rip/wrip one in four, planted loops one in five.
[[nodiscard]] inline auto crosscheck_config(std::uint64_t seed, std::size_t index, std::size_t max_ell) -> GeneratorConfig {
  if (max_ell < 1) throw Error(ErrorCode::InvalidArgument, "max-ell must be at least 1");
  Rng rng(mix_seed(seed, index));
  GeneratorConfig cfg;
  cfg.seed = rng.uniform(0, std::numeric_limits<std::uint64_t>::max() - 1);
  const auto ell_c = static_cast<std::size_t>(rng.uniform(1, std::min<std::size_t>(3, max_ell)));
  const auto ell_p = static_cast<std::size_t>(rng.uniform(0, max_ell - ell_c));
  cfg.ell_c_min = cfg.ell_c_max = ell_c;
  cfg.ell_p_min = cfg.ell_p_max = ell_p;
  cfg.density = static_cast<double>(rng.uniform(1, 9)) / 10.0;
  cfg.structure = rng.uniform(0, 2) == 0 ? Structure::Dag : Structure::AllowCycles;
  cfg.rip = rng.uniform(0, 3) == 0;
  cfg.wrip = rng.uniform(0, 3) == 0;
  cfg.closed_loop = cfg.structure == Structure::AllowCycles && ell_p >= 2 && rng.uniform(0, 4) == 0;
  cfg.max_population = static_cast<std::int64_t>(rng.uniform(1, 3));
  return cfg;
}

/// Runs every decider by every method on generated systems and records disagreements.
[[nodiscard]] inline auto run_crosscheck(const CrosscheckOptions& opts) -> CrosscheckSummary {
  CrosscheckSummary s;
  for (std::size_t i = 0; i < opts.count; ++i) {
    const auto cfg = crosscheck_config(opts.seed, i, opts.max_ell);
    const auto cand = generate_system(cfg);
    std::vector<std::pair<std::string, std::string>> bad;
    auto guarded = [&](const char* check, auto&& fn) {
      try {
        fn();
      } catch (const std::exception& e) {
        bad.emplace_back(check, e.what());
      }
    };
    auto vr = validate_system(cand);
    if (!vr.ok()) {
      bad.emplace_back("generator", "generated system failed validation: " + vr.errors.front().message);
    } else {
      const ProductionSystem& sys = *vr.system;
      ++s.systems;
      guarded("lemma", [&] {
        ++s.lemma_checks;
        Rng rng(mix_seed(opts.seed ^ 0x5bd1e995ULL, i));
        const auto v = lemma_verdicts(sys.z().entries(), &rng, 5, opts.inject_mutant);
        if (auto d = lemma_disagreement(v)) bad.emplace_back("lemma", *d);
        const bool lp_v = max_min_income(sys.z()).t.is_positive();
        if (lp_v != v.positive_image) bad.emplace_back("lemma", "simplex LP viability differs from (a)");
      });
      guarded("lattice", [&] {
        ++s.lattice_checks;
        const auto report = classify(sys, {1000000, false});
        const auto failed = verify_implications(report.flags());
        for (const auto& e : failed) bad.emplace_back("lattice", e);
        const auto doc = make_report_document(sys, report);
        const Json j = to_json(doc);
        const auto back = parse_report_document(j);
        if (to_json(back) != j) bad.emplace_back("report", "report does not round-trip");
        for (const auto& e : verify_report(back, sys)) bad.emplace_back("report", "witness failed: " + e);
      });
      if (sys.ell_p() <= kFmOracleMaxIntermediates)
        guarded("wcv", [&] {
          ++s.wcv_checks;
          const bool vertex = is_wcv(sys.z(), false).wcv;
          const bool fm = wcv_by_projection(sys.z());
          if (vertex != fm)
            bad.emplace_back("wcv", "vertex method " + std::to_string(vertex) + ", projection " + std::to_string(fm));
        });
      if (is_acyclic(sys).acyclic)
        guarded("acyclic", [&] {
          ++s.acyclic_checks;
          const auto res = viable_price_acyclic_trace(sys.z(), {});
          if (!all_positive(incomes(sys.z(), res.price))) bad.emplace_back("acyclic", "constructed price not viable");
        });
    }
    if (bad.empty()) continue;
    std::string path;
    try {
      std::filesystem::create_directories(opts.dump_dir);
      path = (std::filesystem::path(opts.dump_dir) / ("reproducer-" + std::to_string(opts.seed) + "-" +
                                                      std::to_string(i) + ".json"))
                 .string();
      write_file(path, system_document(cand).dump(2) + "\n");
    } catch (const std::exception&) {
      path.clear();
    }
    for (auto& [check, detail] : bad) s.violations.push_back({i, check, detail, path});
  }
  return s;
}

}  // namespace prodviab
