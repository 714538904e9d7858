#include "hlp/field.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace hlp;

namespace {

std::vector<FieldSpec> all_fields() {
  std::vector<FieldSpec> out{FieldSpec::integers()};
  for (Int m : FieldSpec::supported_m()) out.push_back(FieldSpec::real_quadratic(m));
  return out;
}

// Independent membership test through long double embeddings; only used on
// small coefficients where rounding cannot flip the comparison.
std::set<std::pair<Int, Int>> brute_force_box(const Reals& bounds, const FieldSpec& f, Int coeff) {
  std::set<std::pair<Int, Int>> out;
  const long double root = std::sqrt(static_cast<long double>(f.m()));
  const Int qmax = f.degree() == 1 ? 0 : coeff;
  for (Int q = -qmax; q <= qmax; ++q) {
    for (Int p = -coeff; p <= coeff; ++p) {
      bool ok = true;
      for (int j = 0; j < f.degree(); ++j) {
        long double w = 0;
        if (f.degree() == 2) {
          const long double sgn = j == 0 ? 1.0L : -1.0L;
          w = f.m() % 4 == 1 ? (1.0L + sgn * root) / 2.0L : sgn * root;
        }
        const long double v = static_cast<long double>(p) + static_cast<long double>(q) * w;
        if (std::fabs(v) > static_cast<long double>(bounds[static_cast<std::size_t>(j)])) ok = false;
      }
      if (ok) out.insert({p, q});
    }
  }
  return out;
}

std::set<std::pair<Int, Int>> as_set(const std::vector<RingElement>& v) {
  std::set<std::pair<Int, Int>> out;
  for (const auto& x : v) out.insert({x.p, x.q});
  return out;
}

}  // namespace

TEST(FieldSpecTest, RejectsUnsupportedM) {
  for (Int m : {6, 7, 10, 1, 0}) {
    try {
      FieldSpec::real_quadratic(m);
      FAIL() << "m=" << m << " accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnsupportedField);
    }
  }
}

TEST(FieldSpecTest, FundamentalUnitsHaveNormPlusMinusOne) {
  for (Int m : FieldSpec::supported_m()) {
    const auto f = FieldSpec::real_quadratic(m);
    EXPECT_TRUE(is_unit(f.fundamental_unit(), f)) << m;
    EXPECT_GT(std::abs(embed(f.fundamental_unit(), 0, f)), 1.0);
    EXPECT_NE(embed(f.fundamental_unit(), 1, f), 0.0);
  }
}

TEST(EmbedTest, Examples) {
  const auto z = FieldSpec::integers();
  EXPECT_EQ(embed(RingElement{0}, z)[0], 0.0);
  const auto f = FieldSpec::real_quadratic(5);
  const auto w = embed(RingElement{0, 1}, f);
  EXPECT_NEAR(w[0], 1.6180339887498949, 1e-15);
  EXPECT_NEAR(w[1], -0.6180339887498949, 1e-15);
  const auto x = embed(RingElement{2, 1}, f);
  EXPECT_NEAR(x[0], 3.6180339887498949, 1e-15);
  EXPECT_NEAR(x[1], 1.3819660112501051, 1e-15);
}

TEST(EmbedTest, RingHomomorphismOnRandomPairs) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Int> coeff(-1000, 1000);
  for (const auto& f : all_fields()) {
    for (int i = 0; i < 1000; ++i) {
      const RingElement x{coeff(rng), f.degree() == 2 ? coeff(rng) : 0};
      const RingElement y{coeff(rng), f.degree() == 2 ? coeff(rng) : 0};
      const auto xy = embed(mul(x, y, f), f);
      const auto ex = embed(x, f);
      const auto ey = embed(y, f);
      for (int j = 0; j < f.degree(); ++j) {
        const auto k = static_cast<std::size_t>(j);
        const double expect = ex[k] * ey[k];
        // cancellation in p + q*w limits the attainable relative accuracy
        const double scale = (std::abs(x.p) + std::abs(x.q) * 3.0) * (std::abs(y.p) + std::abs(y.q) * 3.0);
        EXPECT_NEAR(xy[k], expect, 1e-10 * std::max(std::abs(expect), 1e-3 * scale));
      }
      const Int n = norm(x, f);
      if (f.degree() == 2) EXPECT_NEAR(static_cast<double>(n), ex[0] * ex[1], 1e-9 * (1 + std::abs(ex[0] * ex[1])) + 1e-6);
    }
  }
}

TEST(EmbedTest, ExactComparisonAtTies) {
  const auto f = FieldSpec::real_quadratic(5);
  // sigma_1(1 + 0w) == 1 exactly
  EXPECT_EQ(compare_embedding(RingElement{1, 0}, 0, 1.0, f), 0);
  EXPECT_EQ(compare_embedding(RingElement{0, 1}, 0, 1.6180339887498949, f),
            1.6180339887498949 < (1 + std::sqrt(5.0L)) / 2 ? 1 : -1);
  // w - 1 = 1/w: sigma_1 = 0.618..., sigma_2 = -1.618...
  EXPECT_EQ(embedding_sign(RingElement{-1, 1}, 0, f), 1);
  EXPECT_EQ(embedding_sign(RingElement{-1, 1}, 1, f), -1);
  EXPECT_EQ(embedding_sign(RingElement{0, 0}, 1, f), 0);
  // large coefficients near cancellation: 987 - 610 w has sigma_2 > 0 tiny? (F_16, F_15)
  const RingElement fib{-987, 610};
  const double v = embed(fib, 0, f);
  EXPECT_EQ(compare_embedding(fib, 0, v * 2, f), v > 0 ? -1 : 1);
}

TEST(BezoutTest, IntegerExamples) {
  const auto z = FieldSpec::integers();
  const auto r = bezout(RingElement{3}, RingElement{5}, z);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->a.p * 5 - r->b.p * 3, 1);
  EXPECT_FALSE(bezout(RingElement{2}, RingElement{4}, z).has_value());
  EXPECT_THROW(bezout(RingElement{0}, RingElement{0}, z), Error);
}

TEST(BezoutTest, UnitDivisor) {
  const auto f = FieldSpec::real_quadratic(5);
  const auto r = bezout(RingElement{0, 1}, RingElement{1}, f);
  ASSERT_TRUE(r.has_value());
  const RingElement det = mul(r->a, RingElement{1}, f) - mul(r->b, RingElement{0, 1}, f);
  EXPECT_EQ(det, RingElement{1});
}

TEST(BezoutTest, IdentityHoldsExactlyOnRandomInputs) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Int> coeff(-10000, 10000);
  for (const auto& f : all_fields()) {
    int coprime = 0;
    for (int i = 0; i < 3000; ++i) {
      const RingElement c{coeff(rng), f.degree() == 2 ? coeff(rng) : 0};
      const RingElement d0{coeff(rng), f.degree() == 2 ? coeff(rng) : 0};
      if (c.is_zero() && d0.is_zero()) continue;
      const auto r = bezout(c, d0, f);
      if (!r) continue;
      ++coprime;
      EXPECT_EQ(mul(r->a, d0, f) - mul(r->b, c, f), RingElement{1});
    }
    EXPECT_GT(coprime, 1000) << "m=" << f.m();
  }
}

TEST(BezoutTest, NonCoprimePairsDetected) {
  for (Int m : FieldSpec::supported_m()) {
    const auto f = FieldSpec::real_quadratic(m);
    const RingElement g{3, 1};
    ASSERT_FALSE(is_unit(g, f));
    const RingElement c = mul(g, RingElement{3, -1}, f);
    const RingElement d0 = mul(g, RingElement{-5, 2}, f);
    EXPECT_FALSE(bezout(c, d0, f).has_value()) << m;
  }
}

TEST(EuclidTest, RemainderNormDecreases) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> coeff(-100000, 100000);
  for (Int m : FieldSpec::supported_m()) {
    const auto f = FieldSpec::real_quadratic(m);
    for (int i = 0; i < 20000; ++i) {
      const RingElement x{coeff(rng), coeff(rng)};
      const RingElement y{coeff(rng) / 100, coeff(rng) / 100};
      if (y.is_zero()) continue;
      const auto dm = euclid_divide(x, y, f);
      EXPECT_LT(std::abs(norm(dm.remainder, f)), std::abs(norm(y, f)));
      EXPECT_EQ(dm.remainder + mul(dm.quotient, y, f), x);
    }
  }
}

TEST(RingBoxTest, Examples) {
  const auto z = FieldSpec::integers();
  EXPECT_EQ(as_set(ring_box_elements({2.5, 0}, z)),
            (std::set<std::pair<Int, Int>>{{-2, 0}, {-1, 0}, {0, 0}, {1, 0}, {2, 0}}));
  const auto f = FieldSpec::real_quadratic(5);
  // exhaustive scan over |p|,|q| <= 3
  EXPECT_EQ(as_set(ring_box_elements({1, 1}, f)), brute_force_box({1, 1}, f, 3));
  EXPECT_EQ(as_set(ring_box_elements({1, 1}, f)), (std::set<std::pair<Int, Int>>{{-1, 0}, {0, 0}, {1, 0}}));
  EXPECT_EQ(as_set(ring_box_elements({0.5, 0.5}, f)), brute_force_box({0.5, 0.5}, f, 3));
  EXPECT_EQ(as_set(ring_box_elements({0.5, 0.5}, f)), (std::set<std::pair<Int, Int>>{{0, 0}}));
}

TEST(RingBoxTest, AgreesWithCoefficientScan) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> bound(0.05, 20.0);
  for (const auto& f : all_fields()) {
    for (int i = 0; i < 60; ++i) {
      const Reals b{bound(rng), bound(rng)};
      // |p|,|q| <= (b1 + b2) * max|w| / gap + b covers the box for every supported field
      const auto elems = ring_box_elements(b, f);
      const auto s = as_set(elems);
      EXPECT_EQ(s.size(), elems.size()) << "duplicates";
      EXPECT_EQ(s, brute_force_box(b, f, 60)) << "m=" << f.m() << " b=" << b[0] << "," << b[1];
    }
    // integer and exact half-integer endpoints
    for (double b : {1.0, 2.0, 3.0, 0.5, 4.0}) {
      EXPECT_EQ(as_set(ring_box_elements({b, b}, f)), brute_force_box({b, b}, f, 40));
    }
  }
}

TEST(RingBoxTest, BoundaryIsInclusive) {
  const auto f = FieldSpec::real_quadratic(2);
  // sigma(1 + w) = 1 +- sqrt 2; the box [-(sqrt2 - 1), 1 + sqrt2] is not dyadic,
  // so test with integers: 3 + 2w has sigma_2 = 3 - 2 sqrt2 ~ 0.17
  const auto elems = ring_box_elements({3.0, 3.0}, f);
  EXPECT_NE(std::find(elems.begin(), elems.end(), RingElement{3, 0}), elems.end());
  EXPECT_NE(std::find(elems.begin(), elems.end(), RingElement{-3, 0}), elems.end());
}

TEST(UnitsTest, Examples) {
  EXPECT_EQ(units_in_box({5, 5}, FieldSpec::integers()), (std::vector<RingElement>{RingElement{1}, RingElement{-1}}));
  const auto f = FieldSpec::real_quadratic(5);
  // oracle: eps^k for |k| <= 3
  std::set<std::pair<Int, Int>> expect;
  RingElement u{1};
  const RingElement eps{0, 1};
  RingElement powers[7];
  powers[3] = u;
  for (int k = 1; k <= 3; ++k) powers[3 + k] = mul(powers[2 + k], eps, f);
  const RingElement inv = unit_inverse(eps, f);
  for (int k = 1; k <= 3; ++k) powers[3 - k] = mul(powers[4 - k], inv, f);
  for (const auto& v : powers) {
    for (const auto& s : {v, -v}) {
      const auto e = embed(s, f);
      if (std::abs(e[0]) <= 2 && std::abs(e[1]) <= 2) expect.insert({s.p, s.q});
    }
  }
  EXPECT_EQ(expect.size(), 6u);
  EXPECT_EQ(as_set(units_in_box({2, 2}, f)), expect);
  EXPECT_EQ(as_set(units_in_box({2, 2}, f)),
            (std::set<std::pair<Int, Int>>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, 1}, {1, -1}}));
  EXPECT_EQ(as_set(units_in_box({1, 1}, f)), (std::set<std::pair<Int, Int>>{{1, 0}, {-1, 0}}));
}

TEST(UnitsTest, AllHaveNormPlusMinusOne) {
  for (Int m : FieldSpec::supported_m()) {
    const auto f = FieldSpec::real_quadratic(m);
    const auto units = units_in_box({1e6, 1e6}, f);
    EXPECT_GT(units.size(), 10u);
    for (const auto& u : units) EXPECT_TRUE(is_unit(u, f)) << to_string(u, f);
    // every unit in a box is found by the generic box scan as well
    const auto in_box = ring_box_elements({50, 50}, f);
    std::set<std::pair<Int, Int>> scanned;
    for (const auto& x : in_box) if (is_unit(x, f)) scanned.insert({x.p, x.q});
    EXPECT_EQ(as_set(units_in_box({50, 50}, f)), scanned);
  }
}
