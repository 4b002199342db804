#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "prodviab/core.hpp"

namespace prodviab {

enum class Structure { Dag, AllowCycles };

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t ell_c_min = 2, ell_c_max = 3;
  std::size_t ell_p_min = 1, ell_p_max = 3;
  double density = 0.4;
  Structure structure = Structure::AllowCycles;
  bool rip = false;
  bool wrip = false;
  std::int64_t magnitude = 4;       // numerators of Q and y drawn from 1..magnitude
  std::int64_t max_population = 2;  // populations drawn from 1..max_population
  bool closed_loop = false;         // plant an isolated two-intermediate loop (needs ell_p >= 2)

  void check() const {
    if (ell_c_min < 1 || ell_c_min > ell_c_max) throw Error(ErrorCode::InvalidArgument, "bad ell_c range");
    if (ell_p_min > ell_p_max) throw Error(ErrorCode::InvalidArgument, "bad ell_p range");
    if (!(density >= 0.0 && density <= 1.0)) throw Error(ErrorCode::InvalidArgument, "density must lie in [0, 1]");
    if (magnitude < 1) throw Error(ErrorCode::InvalidArgument, "magnitude must be at least 1");
    if (max_population < 1) throw Error(ErrorCode::InvalidArgument, "max_population must be at least 1");
    if (closed_loop && structure == Structure::Dag)
      throw Error(ErrorCode::InvalidArgument, "closed_loop needs allow-cycles");
    if (closed_loop && ell_p_max < 2) throw Error(ErrorCode::InvalidArgument, "closed_loop needs ell_p >= 2");
  }
};

/// Draws built on raw mt19937_64 output, so sequences do not depend on the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  auto uniform(std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return engine_();
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do r = engine_();
    while (r >= limit);
    return lo + r % span;
  }
  auto chance(double p) -> bool { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }
  /// a / b with a in 1..magnitude, b in 1..4.
  auto positive_rational(std::int64_t magnitude) -> Rational {
    const auto a = static_cast<std::int64_t>(uniform(1, static_cast<std::uint64_t>(magnitude)));
    const auto b = static_cast<std::int64_t>(uniform(1, 4));
    return {a, b};
  }
  auto engine() -> std::mt19937_64& { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Draws inputs first, then sets outputs so intermediate columns net to zero and
/// consumption columns keep a positive margin.
[[nodiscard]] inline auto generate_system(const GeneratorConfig& cfg, Rng& rng) -> SystemCandidate {
  cfg.check();
  const std::size_t ell_p_lo = cfg.closed_loop ? std::max<std::size_t>(cfg.ell_p_min, 2) : cfg.ell_p_min;
  const auto ell_c = static_cast<std::size_t>(rng.uniform(cfg.ell_c_min, cfg.ell_c_max));
  const auto ell_p = static_cast<std::size_t>(rng.uniform(ell_p_lo, cfg.ell_p_max));
  const std::size_t ell = ell_c + ell_p;

  SystemCandidate c;
  c.ell_c = ell_c;
  c.ell_p = ell_p;
  for (std::size_t k = 0; k < ell; ++k)
    c.labels.push_back(k < ell_c ? "c" + std::to_string(k + 1) : "i" + std::to_string(k - ell_c + 1));
  for (std::size_t k = 0; k < ell; ++k)
    c.population.push_back(static_cast<std::int64_t>(rng.uniform(1, static_cast<std::uint64_t>(cfg.max_population))));

  // DAG rank: inputs must come from strictly lower rank; the top rank is a consumption good.
  std::vector<std::size_t> rank(ell);
  {
    std::vector<std::size_t> order(ell);
    for (std::size_t k = 0; k < ell; ++k) order[k] = k;
    for (std::size_t i = ell; i > 1; --i) std::swap(order[i - 1], order[rng.uniform(0, i - 1)]);
    auto top = std::find_if(order.begin(), order.end(), [&](std::size_t k) { return k < ell_c; });
    std::iter_swap(top, order.end() - 1);
    for (std::size_t i = 0; i < ell; ++i) rank[order[i]] = i;
  }
  // The planted loop uses the last two intermediates and touches nothing else.
  const std::size_t loop_a = ell - 2, loop_b = ell - 1;
  auto in_loop = [&](std::size_t k) { return cfg.closed_loop && (k == loop_a || k == loop_b); };
  auto allowed = [&](std::size_t m, std::size_t k) {  // m used by k
    if (m == k || in_loop(m) || in_loop(k)) return false;
    if (m < ell_c && cfg.rip) return false;
    if (m < ell_c && k < ell_c && cfg.wrip) return false;
    if (cfg.structure == Structure::Dag && rank[m] >= rank[k]) return false;
    return true;
  };

  std::vector<Vector> y(ell, Vector(ell));
  for (std::size_t k = 0; k < ell; ++k)
    for (std::size_t m = 0; m < ell; ++m)
      if (allowed(m, k) && rng.chance(cfg.density)) y[k][m] = rng.positive_rational(cfg.magnitude);
  for (std::size_t m = ell_c; m < ell; ++m) {
    if (in_loop(m)) continue;
    bool used = false;
    for (std::size_t k = 0; k < ell; ++k) used = used || y[k][m].is_positive();
    if (used) continue;
    std::vector<std::size_t> users;
    for (std::size_t k = 0; k < ell; ++k)
      if (allowed(m, k)) users.push_back(k);
    const std::size_t k = users[rng.uniform(0, users.size() - 1)];
    y[k][m] = rng.positive_rational(cfg.magnitude);
  }
  if (cfg.closed_loop) {
    y[loop_a][loop_b] = rng.positive_rational(cfg.magnitude);
    y[loop_b][loop_a] = rng.positive_rational(cfg.magnitude);
  }

  c.plans.resize(ell);
  for (std::size_t j = 0; j < ell; ++j) {
    Rational used;
    for (std::size_t k = 0; k < ell; ++k) used.add_mul(Rational(c.population[k]), y[k][j]);
    if (j < ell_c) used += rng.positive_rational(cfg.magnitude);
    c.plans[j].output_qty = used / Rational(c.population[j]);
    c.plans[j].inputs = y[j];
  }
  return c;
}

[[nodiscard]] inline auto generate_system(const GeneratorConfig& cfg) -> SystemCandidate {
  Rng rng(cfg.seed);
  return generate_system(cfg, rng);
}

struct RandomZConfig {
  std::size_t ell_min = 1, ell_max = 6;
  double density = 0.5;
  std::int64_t magnitude = 4;
};

/// Random class Z+ square matrix; diagonals are drawn on a scale comparable to row mass
/// so that both viable and non-viable matrices occur.
[[nodiscard]] inline auto random_z_plus(const RandomZConfig& cfg, Rng& rng) -> Matrix {
  const auto n = static_cast<std::size_t>(rng.uniform(cfg.ell_min, cfg.ell_max));
  Matrix z(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mass;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rng.chance(cfg.density)) {
        z(i, j) = -rng.positive_rational(cfg.magnitude);
        mass -= z(i, j);
      }
    const auto pct = static_cast<std::int64_t>(rng.uniform(40, 160));
    z(i, i) = mass.is_zero() ? rng.positive_rational(cfg.magnitude) : mass * Rational(pct, 100);
  }
  return z;
}

}  // namespace prodviab
