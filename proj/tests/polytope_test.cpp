#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "prodviab/generator.hpp"
#include "prodviab/polytope.hpp"

using namespace prodviab;

namespace {

auto contains_vertex(const VPolytope& v, const Vector& x) -> bool {
  return std::find(v.vertices.begin(), v.vertices.end(), x) != v.vertices.end();
}

auto parallel(const Vector& a, const Vector& b) -> bool {
  std::optional<Rational> f;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    const Rational r = b[i] / a[i];
    if (!r.is_positive() || (f && *f != r)) return false;
    f = r;
  }
  return f.has_value();
}

}  // namespace

TEST(DeltaPrime, RowsAndLabels) {
  const auto h = delta_prime_hrep(fixtures::xyi(fixtures::shared_intermediate()));
  ASSERT_EQ(h.rows.size(), 3u + 1u + 3u);
  EXPECT_EQ(h.rows[0].label, "I_X >= 0");
  EXPECT_TRUE(h.rows[3].equality);
  EXPECT_EQ(h.rows[6].label, "q_I >= 0");
  EXPECT_TRUE(h.contains(Vector{Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
  EXPECT_FALSE(h.contains(Vector{Rational(1, 2), Rational(1, 2), 3}));
}

TEST(DeltaPrime, SharedIntermediateVertices) {
  const auto h = delta_prime_hrep(fixtures::xyi(fixtures::shared_intermediate()));
  EXPECT_FALSE(is_empty(h));
  EXPECT_TRUE(is_bounded(h));
  const auto v = enumerate_vertices(h);
  EXPECT_EQ(v.vertices.size(), 3u);
  EXPECT_TRUE(v.rays.empty());
  EXPECT_TRUE(contains_vertex(v, Vector{1, 0, 0}));
  EXPECT_TRUE(contains_vertex(v, Vector{0, 1, 0}));
  EXPECT_TRUE(contains_vertex(v, Vector{Rational(2, 3), Rational(1, 3), Rational(4, 3)}));
  EXPECT_TRUE(round_trip_agrees(h, v, round_trip_directions(h, 7, 20)));
}

TEST(DeltaPrime, SwapLoopIsUnbounded) {
  const auto h = delta_prime_hrep(fixtures::swap_loop_system());
  EXPECT_FALSE(is_empty(h));
  EXPECT_FALSE(is_bounded(h));
  const auto v = enumerate_vertices(h);
  ASSERT_FALSE(v.rays.empty());
  bool found = false;
  for (const auto& r : v.rays) found = found || parallel(Vector{0, 1, 1, 0}, r);
  EXPECT_TRUE(found);
  EXPECT_TRUE(round_trip_agrees(h, v, round_trip_directions(h, 3, 20)));
}

TEST(DeltaPrime, EmptyWhenNotWeaklyViable) {
  const auto z = ZMatrix::from_matrix(Matrix{{1, -2}, {-2, 1}}, 2);
  const auto h = delta_prime_hrep(z);
  EXPECT_TRUE(is_empty(h));
  EXPECT_TRUE(is_bounded(h));
  EXPECT_TRUE(enumerate_vertices(h).vertices.empty());
  EXPECT_FALSE(interior_point(h).has_value());
}

TEST(DeltaPrime, InteriorPointIsStrictlyViable) {
  const auto sys = fixtures::cyclic_viable_system();
  const auto ip = interior_point(delta_prime_hrep(sys));
  ASSERT_TRUE(ip.has_value());
  EXPECT_GT(ip->slack, Rational(0));
  EXPECT_TRUE(all_positive(incomes(sys, ip->price)));
  // Nonempty but flat: the best slack is zero.
  const auto flat = interior_point(delta_prime_hrep(fixtures::swap_loop_system()));
  ASSERT_TRUE(flat.has_value());
  EXPECT_TRUE(flat->slack.is_zero());
}

TEST(DeltaPrime, RandomRoundTrips) {
  GeneratorConfig cfg;
  cfg.ell_c_min = 1;
  cfg.ell_c_max = 3;
  cfg.ell_p_min = 0;
  cfg.ell_p_max = 2;
  for (std::uint64_t s = 0; s < 60; ++s) {
    cfg.seed = s;
    const auto sys = make_system(generate_system(cfg));
    const auto h = delta_prime_hrep(sys);
    const auto v = enumerate_vertices(h);
    for (const auto& x : v.vertices) ASSERT_TRUE(h.contains(x));
    ASSERT_TRUE(round_trip_agrees(h, v, round_trip_directions(h, s, 10))) << "seed " << s;
  }
}

TEST(Project2d, SharedIntermediateSegments) {
  const auto r = project_2d(fixtures::xyi(fixtures::shared_intermediate()));
  using P = std::pair<Rational, Rational>;
  EXPECT_EQ(r.vertices, (std::vector<P>{{0, 0}, {0, 1}, {Rational(4, 3), Rational(2, 3)}}));
  std::vector<std::string> labels;
  for (const auto& s : r.segments) labels.push_back(s.label);
  EXPECT_NE(std::find(labels.begin(), labels.end(), "p = q/2"), labels.end());
  EXPECT_NE(std::find(labels.begin(), labels.end(), "p = 1 - q/4"), labels.end());
  EXPECT_EQ(r.segments.size(), 3u);
}

TEST(Project2d, ConsumptionInputChainApex) {
  const auto r = project_2d(fixtures::xyi(fixtures::consumption_input_chain()));
  using P = std::pair<Rational, Rational>;
  EXPECT_EQ(r.vertices, (std::vector<P>{{0, 0}, {0, Rational(1, 2)}, {Rational(1, 2), Rational(1, 4)}}));
}

TEST(Project2d, WrongShape) {
  try {
    (void)project_2d(fixtures::swap_loop_system());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongShape);
  }
}
