#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "hitchin/git_stability.hpp"

namespace hitchin {
namespace {

Stability classify(std::vector<long long> w) { return torus_classify(WeightProfile(std::move(w))); }

TEST(TorusClassify, GoldenCases) {
  EXPECT_EQ(classify({1, 2}), Stability::Unstable);
  EXPECT_EQ(classify({0}), Stability::StrictlyPolystable);
  EXPECT_EQ(classify({-1, 2}), Stability::Stable);
}

TEST(TorusClassify, InverseSubgroupDirection) {
  EXPECT_EQ(classify({-1, -2}), Stability::Unstable);
  EXPECT_EQ(classify({0, 3}), Stability::StrictlySemistable);
  EXPECT_EQ(classify({0, -3}), Stability::StrictlySemistable);
  EXPECT_EQ(classify({0, 0, 0}), Stability::StrictlyPolystable);
  EXPECT_EQ(classify({1, 0, -2}), Stability::Stable);
}

TEST(TorusClassify, EmptyProfile) {
  try {
    classify({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyProfile);
  }
}

TEST(TorusClassify, ScalingInvarianceAndLattice) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> weight(-4, 4);
  std::uniform_int_distribution<int> length(1, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<long long> w(length(rng));
    for (auto& x : w) x = weight(rng);
    const Stability s = classify(w);
    for (long long c = 2; c <= 7; ++c) {
      std::vector<long long> scaled = w;
      for (auto& x : scaled) x *= c;
      EXPECT_EQ(classify(scaled), s);
    }
    if (is_stable(s)) EXPECT_TRUE(is_polystable(s));
    if (is_polystable(s)) EXPECT_TRUE(is_semistable(s));
    // The negated profile is the same point under the inverse subgroup.
    std::vector<long long> negated = w;
    for (auto& x : negated) x = -x;
    EXPECT_EQ(classify(negated), s);
  }
}

TEST(HmWeight, SingleBlockIsZero) {
  const FiltrationData f{{{5, 0, 2, 1}}, 3, 7, 2};
  EXPECT_EQ(hm_weight(f), 0);
}

TEST(HmWeight, TwoBlockExample) {
  const FiltrationData f{{{1, 1, 1, 0}, {1, -1, 1, 1}}, 10, 5, 2};
  // chi(G_1(5)) = 0 + 4, chi(G_2(5)) = 1 + 4.
  const Integer by_hand = -(Integer(1) * 4 - Integer(1) * 5);
  EXPECT_EQ(by_hand, 1);
  EXPECT_EQ(hm_weight_graded(f), by_hand);
  EXPECT_EQ(hm_weight_filtered(f), Rational(by_hand));
  EXPECT_EQ(hm_weight(f), 1);
}

TEST(HmWeight, LinearInTheWeights) {
  const FiltrationData f{{{2, 3, 1, 2}, {1, 0, 0, 1}, {3, -2, 1, -1}}, 4, 6, 3};
  const Integer base = hm_weight(f);
  for (long long c = 2; c <= 5; ++c) {
    FiltrationData scaled = f;
    for (auto& b : scaled.blocks) b.weight *= c;
    EXPECT_EQ(hm_weight(scaled), base * c);
  }
}

TEST(HmWeight, RejectsInvalidFiltrations) {
  EXPECT_THROW(hm_weight({{{1, 1, 1, 0}, {1, 1, 1, 0}}, 0, 5, 2}), Error);
  EXPECT_THROW(hm_weight({{{1, 2, 1, 0}, {1, -1, 1, 0}}, 0, 5, 2}), Error);
  EXPECT_THROW(hm_weight({{}, 0, 5, 2}), Error);
  try {
    hm_weight({{{1, -1, 1, 0}, {1, 1, 1, 0}}, 0, 5, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidFiltration);
  }
}

TEST(HmWeight, TwoExpressionsAgreeOnRandomFiltrations) {
  std::mt19937_64 rng(28);
  std::uniform_int_distribution<int> blocks(1, 5);
  std::uniform_int_distribution<long long> dim(1, 6);
  std::uniform_int_distribution<long long> gap(1, 4);
  std::uniform_int_distribution<long long> rank(0, 3);
  std::uniform_int_distribution<long long> degree(-6, 6);
  std::uniform_int_distribution<long long> twist(0, 25);
  std::uniform_int_distribution<int> genus(2, 7);
  for (int trial = 0; trial < 1000; ++trial) {
    FiltrationData f;
    f.genus = genus(rng);
    f.m = twist(rng);
    f.n = twist(rng);
    const int s = blocks(rng);
    std::vector<long long> b(s);
    b[0] = 0;
    for (int i = 1; i < s; ++i) b[i] = b[i - 1] - gap(rng);
    for (int i = 0; i < s; ++i) f.blocks.push_back({dim(rng), 0, rank(rng), degree(rng)});
    // a_i = N b_i - sum N_j b_j keeps the order and makes sum N_i a_i vanish.
    const long long big_n = f.total_dim();
    long long shift = 0;
    for (int i = 0; i < s; ++i) shift += f.blocks[i].dim * b[i];
    for (int i = 0; i < s; ++i) f.blocks[i].weight = big_n * b[i] - shift;

    ASSERT_NO_THROW(f.validate());
    const Rational filtered = hm_weight_filtered(f);
    EXPECT_EQ(denominator(filtered), 1);
    EXPECT_EQ(numerator(filtered), hm_weight_graded(f));
    EXPECT_NO_THROW(hm_weight(f));
  }
}

TEST(QuotientSemistability, Examples) {
  const int g = 2;
  const long long n = 5;
  const long long big_n = 9;  // chi(E(5)) for r = 2, d = 1
  ASSERT_EQ(hilbert_poly(2, 1, g, n), big_n);
  EXPECT_FALSE(quotient_semistability_test(hilbert_poly(1, 1, g, n).convert_to<long long>(), 1, 1,
                                           big_n, 2, 1, g, 10));
  EXPECT_TRUE(quotient_semistability_test(hilbert_poly(1, 0, g, n).convert_to<long long>(), 1, 0,
                                          big_n, 2, 1, g, 10));
  EXPECT_TRUE(quotient_semistability_test(big_n, 2, 1, big_n, 2, 1, g, 10));
  // Explicitly: 5 * 19 > 9 * 10 and 4 * 19 <= 9 * 9.
  EXPECT_GT(5 * 19, 9 * 10);
  EXPECT_LE(4 * 19, 9 * 9);
}

TEST(QuotientSemistability, NonPositiveEuler) {
  try {
    quotient_semistability_test(1, 1, -5, 9, 2, 1, 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPositiveEuler);
  }
}

TEST(QuotientSemistability, LargeTwistStabilizesToSlopeComparison) {
  const int g = 3;
  const long long n = 8;
  for (long long r = 2; r <= 4; ++r) {
    for (long long d = -3; d <= 5; ++d) {
      if (std::gcd(r, d) != 1) continue;
      const long long big_n = hilbert_poly(r, d, g, n).convert_to<long long>();
      for (long long rs = 1; rs < r; ++rs) {
        for (long long ds = -4; ds <= 6; ++ds) {
          const long long sub_n = hilbert_poly(rs, ds, g, n).convert_to<long long>();
          if (sub_n <= 0) continue;
          const bool slope_ok = ds * r <= d * rs;
          bool last = false;
          for (long long m = 40; m <= 400; m += 40) {
            last = quotient_semistability_test(sub_n, rs, ds, big_n, r, d, g, m);
          }
          EXPECT_EQ(last, slope_ok) << r << "," << d << " sub " << rs << "," << ds;
          EXPECT_EQ(quotient_semistability_test(sub_n, rs, ds, big_n, r, d, g, 4000), slope_ok);
        }
      }
    }
  }
}

}  // namespace
}  // namespace hitchin
