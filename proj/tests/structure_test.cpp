#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "prodviab/generator.hpp"
#include "prodviab/structure.hpp"

using namespace prodviab;

TEST(Acyclicity, ThreeGoodCycleCertificate) {
  const auto sys = fixtures::xyi(fixtures::three_good_cycle());
  const auto r = is_acyclic(sys);
  ASSERT_FALSE(r.acyclic);
  ASSERT_TRUE(r.cycle.has_value());
  EXPECT_EQ(r.cycle->product, Rational(6));
  EXPECT_EQ(cycle_product(sys, r.cycle->goods), Rational(6));
  const std::vector<std::size_t> ixy{2, 0, 1};
  EXPECT_EQ(cycle_product(sys, ixy), Rational(6));
  const std::vector<std::size_t> xy{0, 1};
  EXPECT_EQ(cycle_product(sys, xy), Rational(0));
}

TEST(Acyclicity, SharedIntermediateIsADag) {
  const auto r = is_acyclic(fixtures::xyi(fixtures::shared_intermediate()));
  ASSERT_TRUE(r.acyclic);
  EXPECT_EQ(r.topological_order.front(), 2u);
  const InputGraph g(fixtures::shared_intermediate());
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_TRUE(g.has_edge(2, 1));
}

TEST(Acyclicity, HomeProduction) {
  const auto r = is_acyclic(Matrix{{1, 0}, {0, 3}});
  EXPECT_TRUE(r.acyclic);
  EXPECT_EQ(InputGraph(Matrix{{1, 0}, {0, 3}}).edge_count(), 0u);
}

TEST(Acyclicity, BadSubsets) {
  const Matrix z = fixtures::three_good_cycle();
  const std::vector<std::size_t> one{0}, dup{0, 0}, out{0, 7};
  EXPECT_THROW((void)cycle_product(z, one), Error);
  EXPECT_THROW((void)cycle_product(z, dup), Error);
  EXPECT_THROW((void)cycle_product(z, out), Error);
}

TEST(Acyclicity, AgreesWithOrderedSubsetEnumeration) {
  Rng rng(23);
  for (int t = 0; t < 400; ++t) {
    RandomZConfig cfg{1, 7, 0.25, 3};
    const Matrix z = random_z_plus(cfg, rng);
    const auto r = is_acyclic(z);
    ASSERT_EQ(r.acyclic, oracle::acyclic_by_enumeration(z)) << "matrix " << t;
    if (r.cycle) {
      ASSERT_TRUE(oracle::ring_product(z, r.cycle->goods).is_positive());
      ASSERT_EQ(r.cycle->product, oracle::ring_product(z, r.cycle->goods));
    } else {
      // Inputs come strictly before their users.
      std::vector<std::size_t> pos(z.rows());
      for (std::size_t i = 0; i < r.topological_order.size(); ++i) pos[r.topological_order[i]] = i;
      for (std::size_t k = 0; k < z.rows(); ++k)
        for (std::size_t m = 0; m < z.rows(); ++m)
          if (z(k, m).is_negative()) ASSERT_LT(pos[m], pos[k]);
      // Triangular after the simultaneous permutation, so the determinant is the product of outputs.
      Rational prod(1);
      for (std::size_t k = 0; k < z.rows(); ++k) prod *= z(k, k);
      ASSERT_EQ(determinant(z), prod);
    }
  }
}

TEST(Coherence, PaperDeterminants) {
  EXPECT_EQ(determinant(fixtures::xyi(fixtures::three_good_cycle()).z()), Rational(10));
  EXPECT_EQ(determinant(fixtures::swap_loop_system().z()), Rational(0));
  EXPECT_EQ(determinant(fixtures::cyclic_viable_system().z()), Rational(3));
  EXPECT_EQ(determinant(fixtures::xyi(fixtures::consumption_input_chain()).z()), Rational(4));
  EXPECT_FALSE(is_coherent(fixtures::swap_loop_system()));
  EXPECT_TRUE(is_coherent(fixtures::xyi(fixtures::three_good_cycle())));
}

TEST(Coherence, DeterminantFormulasAcrossParameters) {
  for (int x = 4; x <= 7; ++x)
    for (int y = 2; y <= 5; ++y)
      EXPECT_EQ(oracle::leibniz_det(fixtures::three_good_cycle(x, y)), Rational(2 * x * y - 6));
  for (int x = 1; x <= 3; ++x)
    for (int y = 1; y <= 3; ++y)
      for (int z = 1; z <= 3; ++z)
        EXPECT_EQ(determinant(fixtures::cyclic_viable(x, y, z)), Rational((y * z + x * z + x * y) * x));
}

TEST(ConversionCycle, SwapLoopWitness) {
  const auto n = find_conversion_cycle(fixtures::swap_loop_system());
  ASSERT_TRUE(n.has_value());
  EXPECT_EQ(n->n, (std::vector<std::int64_t>{0, 1, 1, 0}));
  EXPECT_FALSE(find_conversion_cycle(fixtures::xyi(fixtures::shared_intermediate())).has_value());
  EXPECT_THROW((void)find_conversion_cycle(fixtures::swap_loop_system(), 3), Error);
}

TEST(ConversionCycle, WitnessImpliesSingular) {
  GeneratorConfig cfg;
  cfg.ell_c_min = 1;
  cfg.ell_c_max = 2;
  cfg.ell_p_min = 2;
  cfg.ell_p_max = 3;
  cfg.closed_loop = true;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    cfg.seed = seed;
    const auto sys = make_system(generate_system(cfg));
    if (const auto n = find_conversion_cycle(sys)) {
      EXPECT_TRUE(determinant(sys.z()).is_zero());
      Vector nz(sys.ell());
      for (std::size_t k = 0; k < sys.ell(); ++k)
        for (std::size_t j = 0; j < sys.ell(); ++j) nz[j].add_mul(Rational(n->n[k]), sys.z()(k, j));
      for (const auto& v : nz) EXPECT_TRUE(v.is_zero());
    }
  }
}

TEST(InputProperties, PaperSystems) {
  EXPECT_TRUE(satisfies_rip(fixtures::swap_loop_system()));
  EXPECT_FALSE(satisfies_rip(fixtures::xyi(fixtures::intermediate_uses_consumption())));
  EXPECT_TRUE(satisfies_wrip(fixtures::xyi(fixtures::intermediate_uses_consumption())));
  EXPECT_FALSE(satisfies_wrip(fixtures::xyi(fixtures::consumption_input_chain())));
}

TEST(BlockDecomposition, SwapLoopBlocks) {
  const auto d = block_decompose(fixtures::swap_loop_system());
  EXPECT_EQ(d.qc, (Matrix{{1}}));
  EXPECT_EQ(d.b, (Matrix{{0, 0, -1}}));
  EXPECT_EQ(d.zp, (Matrix{{1, -1, 0}, {-1, 1, 0}, {0, 0, 1}}));
  const auto home = block_decompose(Matrix{{2, 0}, {0, 3}}, 2, 0);
  EXPECT_EQ(home.qc, (Matrix{{2, 0}, {0, 3}}));
  EXPECT_EQ(home.zp.rows(), 0u);
  try {
    (void)block_decompose(fixtures::xyi(fixtures::intermediate_uses_consumption()));
    FAIL() << "expected RipViolated";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RipViolated);
  }
}
