#include "hlp/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace hlp;

namespace {

const FieldSpec kZ = FieldSpec::integers();

GroupElement z_matrix(Int a, Int b, Int c, Int d) { return GroupElement::make(a, b, c, d, kZ); }

}  // namespace

TEST(GroupElementTest, RejectsBadDeterminant) {
  EXPECT_THROW(z_matrix(1, 1, 1, 1), Error);
  EXPECT_THROW(z_matrix(2, 0, 0, 1), Error);
}

TEST(GroupElementTest, CanonicalSign) {
  EXPECT_EQ(z_matrix(0, 1, -1, 0), z_matrix(0, -1, 1, 0));
  EXPECT_EQ(z_matrix(-1, 0, 0, -1), GroupElement::identity());
  const auto g = z_matrix(-1, 3, 0, -1);
  EXPECT_EQ(g.d(), RingElement{1});
  EXPECT_EQ(g.b(), RingElement{-3});
  const auto f = FieldSpec::real_quadratic(5);
  // c = 1 - w has sigma_1 < 0, so the representative flips
  const RingElement c{1, -1};
  const auto h = GroupElement::make(RingElement{0}, unit_inverse(-c, f), c, RingElement{0}, f);
  EXPECT_GT(embed(h.c(), 0, f), 0.0);
}

TEST(MobiusTest, Examples) {
  const MultiPoint i{{0.0, 1.0}};
  EXPECT_EQ(mobius_apply(GroupElement::identity(), i, kZ), i);
  const auto s = mobius_apply(z_matrix(0, -1, 1, 0), i, kZ);
  EXPECT_NEAR(s[0].x, 0.0, 1e-15);
  EXPECT_NEAR(s[0].y, 1.0, 1e-15);
  const auto t = mobius_apply(z_matrix(1, 1, 0, 1), i, kZ);
  EXPECT_NEAR(t[0].x, 1.0, 1e-15);
  EXPECT_NEAR(t[0].y, 1.0, 1e-15);
}

TEST(UInvariantTest, Examples) {
  EXPECT_EQ(u_invariant({0, 1}, {0, 1}), 0.0);
  EXPECT_DOUBLE_EQ(u_invariant({0, 2}, {0, 1}), 0.125);
  EXPECT_DOUBLE_EQ(u_invariant({1, 1}, {0, 1}), 0.25);
  EXPECT_DOUBLE_EQ(u_invariant({0, 1}, {1, 1}), 0.25);
}

TEST(UInvariantTest, DistanceConversion) {
  EXPECT_EQ(dist_from_u(0.0), 0.0);
  EXPECT_NEAR(u_from_dist(dist_from_u(5.0)), 5.0, 5e-12);
  EXPECT_NEAR(dist_from_u(0.25), 2.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0), 1e-15);
  for (double t = 0.0; t <= 30.0; t += 0.25) {
    EXPECT_NEAR(dist_from_u(u_from_dist(t)), t, 1e-12 * std::max(1.0, t));
  }
  for (double u : {1e-12, 1e-6, 0.3, 1.0, 1e3, 1e6, 1e9, 1e12}) {
    EXPECT_NEAR(u_from_dist(dist_from_u(u)), u, 1e-12 * u);
  }
}

TEST(UInvariantTest, PointPairInvariantUnderRealMatrices) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  std::uniform_real_distribution<double> pos(0.2, 3.0);
  for (int i = 0; i < 1000; ++i) {
    double a = unif(rng), b = unif(rng), c = unif(rng);
    if (std::abs(a) < 0.1) a = 0.1;
    const double d = (1.0 + b * c) / a;
    const Point z{unif(rng), pos(rng)};
    const Point w{unif(rng), pos(rng)};
    const double before = u_invariant(z, w);
    const double after = u_invariant(mobius(a, b, c, d, z), mobius(a, b, c, d, w));
    EXPECT_NEAR(after, before, 1e-9 * std::max(1.0, before));
  }
}

TEST(UInvariantTest, TraceFormAtI) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<Int> coeff(-40, 40);
  const MultiPoint i{{0.0, 1.0}};
  int tested = 0;
  while (tested < 1000) {
    const Int a = coeff(rng), b = coeff(rng), c = coeff(rng);
    if (a == 0 || (1 + b * c) % a != 0) continue;
    const Int d = (1 + b * c) / a;
    const auto g = z_matrix(a, b, c, d);
    const double u = u_invariant(mobius_apply(g, i, kZ)[0], i[0]);
    const double trace_form = static_cast<double>(a * a + b * b + c * c + d * d);
    EXPECT_NEAR(4.0 * u + 2.0, trace_form, 1e-9 * trace_form);
    EXPECT_NEAR(4.0 * u_vector(g, i, kZ)[0] + 2.0, trace_form, 1e-9 * trace_form);
    ++tested;
  }
}

TEST(UVectorTest, MatchesMobiusRoute) {
  const auto f = FieldSpec::real_quadratic(5);
  const MultiPoint z{{0.3, 1.7}, {-0.2, 0.6}};
  const RingElement c{2, 1};
  const RingElement d{1, 1};
  const auto bz = bezout(c, d, f);
  ASSERT_TRUE(bz);
  const auto g = GroupElement::make(bz->a, bz->b, c, d, f);
  const auto gz = mobius_apply(g, z, f);
  const auto u = u_vector(g, z, f);
  for (int j = 0; j < 2; ++j) EXPECT_NEAR(u[static_cast<std::size_t>(j)], u_invariant(gz[j], z[j]), 1e-10);
}

TEST(CdAdmissibleTest, Examples) {
  const MultiPoint i{{0.0, 1.0}};
  EXPECT_TRUE(cd_admissible(RingElement{0}, RingElement{1}, i, {1e-6, 0}, kZ));
  EXPECT_TRUE(cd_admissible(RingElement{0}, RingElement{1}, MultiPoint{{7.0, 0.01}}, {0.0, 0}, kZ));
  EXPECT_FALSE(cd_admissible(RingElement{10}, RingElement{0}, i, {1.0, 0}, kZ));
  EXPECT_TRUE(cd_admissible(RingElement{1}, RingElement{1}, i, {1.0, 0}, kZ));
}

TEST(TIntervalTest, Examples) {
  auto iv = t_interval({0, 0}, {1, 0}, 2.0);
  ASSERT_TRUE(iv);
  EXPECT_DOUBLE_EQ(iv->first, -2.0);
  EXPECT_DOUBLE_EQ(iv->second, 2.0);
  EXPECT_FALSE(t_interval({0, 5}, {1, 0}, 2.0));
  iv = t_interval({3, 0}, {1, 0}, 4.0);
  ASSERT_TRUE(iv);
  EXPECT_DOUBLE_EQ(iv->first, -7.0);
  EXPECT_DOUBLE_EQ(iv->second, 1.0);
  EXPECT_THROW(t_interval({1, 0}, {0, 0}, 1.0), Error);
}

TEST(TIntervalTest, EndpointsSolveQuadratic) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unif(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const Complex w0{unif(rng), unif(rng)};
    const Complex zeta{unif(rng), unif(rng)};
    const double R = std::abs(unif(rng)) * 2;
    const auto iv = t_interval(w0, zeta, R);
    if (!iv) {
      // sample the line densely; nothing may lie inside the disc
      for (double t = -100; t <= 100; t += 0.01) EXPECT_GT(std::abs(w0 + t * zeta), R * (1 - 1e-9));
      continue;
    }
    EXPECT_NEAR(std::abs(w0 + iv->first * zeta), R, 1e-9 * (1 + R));
    EXPECT_NEAR(std::abs(w0 + iv->second * zeta), R, 1e-9 * (1 + R));
  }
}

TEST(EntryBoundTest, DominatesRealizedEntries) {
  // every element found by brute force with u <= V has entries within the bound
  const MultiPoint z{{0.5, 0.8}};
  const double V = 3.0;
  const auto bound = implied_entry_bound(z, {V, 0}, kZ);
  for (Int a = -30; a <= 30; ++a)
    for (Int b = -30; b <= 30; ++b)
      for (Int c = -30; c <= 30; ++c) {
        if (a == 0 || (1 + b * c) % a != 0) continue;
        const Int d = (1 + b * c) / a;
        const auto g = z_matrix(a, b, c, d);
        if (u_vector(g, z, kZ)[0] > V) continue;
        for (Int e : {a, b, c, d}) EXPECT_LE(std::abs(e), bound.coefficient);
      }
}
