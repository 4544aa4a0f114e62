#include <random>

#include <gtest/gtest.h>

#include "hitchin/geometry_numerics.hpp"

namespace hitchin {
namespace {

TEST(ModuliDim, Examples) {
  EXPECT_EQ(moduli_dim({2, 1, 2, Group::SL}, Space::VectorBundles), 3);
  EXPECT_EQ(moduli_dim({2, 1, 2, Group::GL}, Space::VectorBundles), 5);
  EXPECT_EQ(moduli_dim({2, 1, 2, Group::SL}, Space::Higgs), 6);
  EXPECT_EQ(moduli_dim({2, 1, 2, Group::GL}, Space::Higgs), 10);
  EXPECT_EQ(moduli_dim({2, 1, 3, Group::PGL}, Space::Higgs), 12);
}

TEST(ModuliDim, PglBundlesUnsupported) {
  try {
    moduli_dim({2, 1, 2, Group::PGL}, Space::VectorBundles);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedCombination);
  }
  EXPECT_THROW(moduli_dim({2, 1, 1, Group::SL}, Space::Higgs), Error);
}

TEST(HitchinBaseDim, Examples) {
  EXPECT_EQ(hitchin_base_dim(2, 2, false), 5);
  EXPECT_EQ(hitchin_base_dim(2, 2, true), 3);
  EXPECT_EQ(hitchin_base_dim(1, 5, false), 5);
  EXPECT_EQ(hitchin_base_dim(1, 5, true), 0);
}

TEST(HitchinBaseDim, IsHalfTheHiggsDimension) {
  for (int r = 1; r <= 6; ++r) {
    for (int g = 2; g <= 10; ++g) {
      EXPECT_EQ(2 * hitchin_base_dim(r, g, false), moduli_dim({r, 1, g, Group::GL}, Space::Higgs));
      EXPECT_EQ(2 * hitchin_base_dim(r, g, true), moduli_dim({r, 1, g, Group::SL}, Space::Higgs));
      EXPECT_EQ(moduli_dim({r, 1, g, Group::PGL}, Space::HitchinBase), hitchin_base_dim(r, g, true));
    }
  }
}

TEST(SpectralNumbers, Examples) {
  EXPECT_EQ(spectral_numbers(2, 2, 1), (SpectralNumbers{4, 5, 3}));
  EXPECT_EQ(spectral_numbers(1, 3, 0), (SpectralNumbers{0, 3, 0}));
  EXPECT_EQ(spectral_numbers(3, 2, 0), (SpectralNumbers{12, 10, 6}));
}

TEST(SpectralNumbers, RiemannHurwitzAndPushforwardDegree) {
  for (int r = 1; r <= 8; ++r) {
    for (int g = 2; g <= 12; ++g) {
      for (long long d = -3; d <= 3; ++d) {
        const SpectralNumbers s = spectral_numbers(r, g, d);
        EXPECT_EQ(2 * s.spectral_genus - 2, r * (2LL * g - 2) + s.ramification_degree);
        // deg pi_* L = deg L + (1 - g(Y)) - r(1 - g) recovers d.
        EXPECT_EQ(s.line_degree_delta + (1 - s.spectral_genus) - r * (1LL - g), d);
      }
    }
  }
}

TEST(HilbertPoly, Examples) {
  EXPECT_EQ(hilbert_poly(2, 1, 2, 3), 5);
  EXPECT_EQ(hilbert_poly(2, 1, 2, 0), -1);
  for (long long r = 1; r <= 5; ++r)
    for (long long d = -4; d <= 4; ++d)
      for (long long n = -10; n <= 10; ++n)
        EXPECT_EQ(hilbert_poly(r, d, 3, n) - hilbert_poly(r, d, 3, n - 1), r);
}

TEST(HnCodimRank2, Examples) {
  EXPECT_EQ(hn_codim_rank2(2, 1), 4);
  EXPECT_EQ(hn_codim_rank2(2, 2), 8);
  EXPECT_EQ(hn_codim_rank2(5, 1), 10);
  EXPECT_THROW(hn_codim_rank2(2, 0), Error);
}

TEST(HNType, RejectsNonDecreasingSlopes) {
  EXPECT_THROW(HNType({{1, 0}, {1, 1}}), Error);
  EXPECT_THROW(HNType({{1, 1}, {1, 1}}), Error);
  EXPECT_THROW(HNType({{2, 1}, {2, 1}}), Error);
  EXPECT_THROW(HNType({}), Error);
  EXPECT_THROW(HNType({{0, 1}}), Error);
  EXPECT_NO_THROW(HNType({{2, 3}, {1, 1}}));
}

TEST(HnLeq, Examples) {
  const HNType semistable = HNType::semistable(2, 1);
  const HNType type10({{1, 1}, {1, 0}});
  const HNType type2m1({{1, 2}, {1, -1}});
  EXPECT_TRUE(hn_leq(semistable, type10));
  EXPECT_TRUE(hn_leq(type10, type2m1));
  EXPECT_FALSE(hn_leq(type2m1, type10));
  EXPECT_THROW(hn_leq(semistable, HNType::semistable(2, 3)), Error);
}

/// All HN types of rank r and degree d with block degrees in [lo, hi].
std::vector<HNType> enumerate_types(int r, long long d, long long lo, long long hi) {
  std::vector<HNType> out;
  std::vector<HNBlock> current;
  auto recurse = [&](auto&& self, int rank_left, long long degree_left) -> void {
    if (rank_left == 0) {
      if (degree_left == 0) {
        try {
          out.emplace_back(current);
        } catch (const Error&) {
        }
      }
      return;
    }
    for (int rank = 1; rank <= rank_left; ++rank)
      for (long long deg = lo; deg <= hi; ++deg) {
        current.push_back({rank, deg});
        self(self, rank_left - rank, degree_left - deg);
        current.pop_back();
      }
  };
  recurse(recurse, r, d);
  return out;
}

TEST(HnLeq, PartialOrderAxioms) {
  for (int r = 2; r <= 4; ++r) {
    const auto types = enumerate_types(r, 1, -3, 4);
    ASSERT_GT(types.size(), 3u);
    for (const auto& a : types) {
      EXPECT_TRUE(hn_leq(a, a));
      EXPECT_TRUE(hn_leq(HNType::semistable(r, 1), a));
      for (const auto& b : types) {
        if (hn_leq(a, b) && hn_leq(b, a)) EXPECT_TRUE(a == b);
        for (const auto& c : types)
          if (hn_leq(a, b) && hn_leq(b, c)) EXPECT_TRUE(hn_leq(a, c));
      }
    }
  }
}

}  // namespace
}  // namespace hitchin
