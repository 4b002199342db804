#include <gtest/gtest.h>

#include "oracles.hpp"
#include "prodviab/criteria.hpp"
#include "prodviab/generator.hpp"
#include "prodviab/viability.hpp"

using namespace prodviab;

namespace {

auto random_system(std::uint64_t seed) -> ProductionSystem {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.ell_c_min = 1;
  cfg.ell_c_max = 3;
  cfg.ell_p_min = 0;
  cfg.ell_p_max = 3;
  cfg.density = 0.2 + 0.1 * static_cast<double>(seed % 7);
  cfg.structure = seed % 3 == 0 ? Structure::Dag : Structure::AllowCycles;
  cfg.max_population = 3;
  return make_system(generate_system(cfg));
}

auto random_price(const ProductionSystem& sys, Rng& rng) -> PriceSystem {
  Vector x(sys.ell());
  for (auto& v : x) v = rng.positive_rational(5);
  return PriceSystem::normalized(x, sys.ell_c());
}

auto transpose(const Matrix& a) -> Matrix {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

}  // namespace

TEST(Properties, IncomesAreLinearInPrices) {
  Rng rng(1);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto sys = random_system(s);
    const auto a = random_price(sys, rng), b = random_price(sys, rng);
    const Rational t(1, 3);
    PriceSystem mix;
    for (std::size_t i = 0; i < a.p.size(); ++i) mix.p.push_back(t * a.p[i] + (Rational(1) - t) * b.p[i]);
    for (std::size_t i = 0; i < a.q.size(); ++i) mix.q.push_back(t * a.q[i] + (Rational(1) - t) * b.q[i]);
    const auto ia = incomes(sys, a), ib = incomes(sys, b), im = incomes(sys, mix);
    for (std::size_t k = 0; k < sys.ell(); ++k) ASSERT_EQ(im[k], t * ia[k] + (Rational(1) - t) * ib[k]);
  }
}

TEST(Properties, PopulationWeightedRowsGiveNetOutput) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto sys = random_system(s);
    Vector pop;
    for (auto n : sys.population()) pop.emplace_back(n);
    const auto e = left_multiply(pop, sys.z().entries());
    for (std::size_t j = 0; j < sys.ell(); ++j) {
      if (j < sys.ell_c()) {
        ASSERT_EQ(e[j], sys.net_output()[j]);
        ASSERT_TRUE(e[j].is_positive());
      } else {
        ASSERT_TRUE(e[j].is_zero());
      }
    }
  }
}

TEST(Properties, ViabilityIsScaleInvariant) {
  Rng rng(2);
  for (std::uint64_t s = 0; s < 150; ++s) {
    const auto sys = random_system(s);
    const auto r = is_viable(sys);
    if (!r.viable) continue;
    // Scaling every price by a positive constant scales every income by that constant.
    const Rational c = rng.positive_rational(7);
    const auto inc = multiply(sys.z().entries(), r.witness->joined());
    Vector scaled = r.witness->joined();
    for (auto& v : scaled) v *= c;
    const auto inc2 = multiply(sys.z().entries(), scaled);
    for (std::size_t k = 0; k < sys.ell(); ++k) ASSERT_EQ(inc2[k], c * inc[k]);
    ASSERT_EQ(PriceSystem::normalized(scaled, sys.ell_c()), *r.witness);
  }
}

TEST(Properties, RipImpliesWrip) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto sys = random_system(s);
    if (satisfies_rip(sys)) ASSERT_TRUE(satisfies_wrip(sys));
  }
}

TEST(Properties, PqddTransposeInvariance) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_z_plus({}, rng);
    const bool rows = find_pqdd(a).has_value();
    ASSERT_EQ(rows, find_pqdd(transpose(a)).has_value());
    ASSERT_EQ(rows, oracle::every_principal_minor_positive(a));
  }
}

TEST(Properties, ClassificationSatisfiesLattice) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto r = classify(random_system(s));
    ASSERT_TRUE(verify_implications(r.flags()).empty());
    ASSERT_EQ(r.coherent, !oracle::leibniz_det(random_system(s).z().entries()).is_zero());
  }
}

TEST(Properties, WitnessesCheckOut) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto sys = random_system(s);
    const auto r = classify(sys);
    if (r.wv) ASSERT_TRUE(all_nonnegative(incomes(sys, *r.weak.witness)));
    if (r.v) ASSERT_TRUE(all_positive(incomes(sys, *r.viability.witness)));
    if (!r.v) ASSERT_TRUE(verify_non_viability_certificate(sys.z(), *r.viability.non_viability_certificate));
    for (const auto& vc : r.wcv_detail.vertices) {
      if (vc.farkas) ASSERT_TRUE(verify_vertex_farkas(sys.z(), vc.vertex, *vc.farkas));
    }
  }
}
