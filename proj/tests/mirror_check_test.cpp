#include <set>

#include <gtest/gtest.h>

#include "hitchin/mirror_check.hpp"

namespace hitchin {
namespace {

/// a^T J b mod 2 with J written out as a 2g x 2g matrix.
int matrix_pairing(const Gamma2Element& a, const Gamma2Element& b) {
  const int g = a.genus();
  int total = 0;
  for (int i = 0; i < 2 * g; ++i)
    for (int j = 0; j < 2 * g; ++j) {
      const int entry = (j == i + g || i == j + g) ? 1 : 0;
      total += a.bit(i) * entry * b.bit(j);
    }
  return total % 2 == 0 ? 1 : -1;
}

/// Element-by-element average with the signed Prym E-polynomial assembled
/// from Hodge numbers and substituted at (w u, w v).
BivarPoly literal_average(int g, const Gamma2Element& gamma) {
  BivarPoly sum;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * g)); ++bits) {
    const int w = matrix_pairing(gamma, Gamma2Element(g, bits));
    for (int p = 0; p < g; ++p)
      for (int q = 0; q < g; ++q) {
        Integer c = binomial(g - 1, p) * binomial(g - 1, q) * w;
        if ((p + q) % 2 == 1) c = -c;      // E-polynomial sign
        if (w == -1 && (p + q) % 2 == 1) c = -c;  // w^{p+q}
        sum += BivarPoly::monomial(c, p, q);
      }
  }
  return sum.div_exact(pow2(2 * g));
}

TEST(WeilPairing, Examples) {
  const auto zero = Gamma2Element::zero(1);
  const auto a = Gamma2Element::from_bits({1, 0});
  const auto b = Gamma2Element::from_bits({0, 1});
  EXPECT_EQ(weil_pairing(zero, b), 1);
  EXPECT_EQ(weil_pairing(a, b), -1);
  EXPECT_EQ(weil_pairing(a, a), 1);
  EXPECT_THROW(weil_pairing(a, Gamma2Element::zero(2)), Error);
}

TEST(WeilPairing, BilinearAlternatingNondegenerateByExhaustion) {
  for (int g = 1; g <= 3; ++g) {
    const std::uint64_t size = std::uint64_t{1} << (2 * g);
    for (std::uint64_t x = 0; x < size; ++x) {
      const Gamma2Element a(g, x);
      EXPECT_EQ(weil_pairing(a, a), 1);
      bool witnessed = x == 0;
      for (std::uint64_t y = 0; y < size; ++y) {
        const Gamma2Element b(g, y);
        EXPECT_EQ(weil_pairing(a, b), matrix_pairing(a, b));
        if (weil_pairing(a, b) == -1) witnessed = true;
        for (std::uint64_t z = 0; z < size; z += 3) {
          const Gamma2Element c(g, z);
          EXPECT_EQ(weil_pairing(a + c, b), weil_pairing(a, b) * weil_pairing(c, b));
        }
      }
      EXPECT_TRUE(witnessed) << "degenerate at " << a.to_string();
    }
  }
}

TEST(WeilPairing, DualOfCharacterRealizesIt) {
  for (int g = 1; g <= 3; ++g) {
    const std::uint64_t size = std::uint64_t{1} << (2 * g);
    for (std::uint64_t k = 0; k < size; ++k) {
      const Character kappa(g, k);
      const Gamma2Element gamma = weil_dual(kappa);
      EXPECT_EQ(weil_dual_inverse(gamma), kappa);
      for (std::uint64_t x = 0; x < size; ++x)
        EXPECT_EQ(weil_pairing(gamma, Gamma2Element(g, x)), character_value(kappa, Gamma2Element(g, x)));
    }
  }
}

TEST(Gamma2Element, GroupLaw) {
  const auto a = Gamma2Element::from_bits({1, 0, 1, 1});
  EXPECT_TRUE((a + a).is_zero());
  EXPECT_EQ(a + Gamma2Element::zero(2), a);
  EXPECT_EQ(a.to_string(), "1011");
  EXPECT_THROW(Gamma2Element::from_bits({1, 0, 1}), Error);
  EXPECT_THROW(Gamma2Element(1, 4), Error);
}

TEST(EPolyKappaLhs, Examples) {
  const Character kappa(2, 1);
  const BivarPoly expected = BivarPoly::monomial(-1, 4, 3) + BivarPoly::monomial(-1, 3, 4);
  EXPECT_EQ(e_poly_kappa_lhs(2, kappa), expected);
  EXPECT_EQ(e_poly_kappa_lhs(2, kappa).coeff(4, 3), -1);
  EXPECT_EQ(e_poly_kappa_lhs(3, Character(3, 5)).coeff(7, 6), -2);
}

TEST(EPolyKappaLhs, HodgeSumMatchesDisplayedClosedForm) {
  for (int g = 2; g <= 9; ++g) EXPECT_EQ(e_poly_kappa_lhs(g, Character(g, 1)), e_poly_kappa_closed(g)) << g;
}

TEST(EPolyKappaLhs, TrivialCharacterRejected) {
  try {
    e_poly_kappa_lhs(2, Character::zero(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TrivialCharacter);
  }
}

TEST(PrymEPoly, Examples) {
  EXPECT_EQ(prym_e_poly(2).to_string(), "uv + u + v + 1");
  EXPECT_EQ(prym_e_poly(2).coeff(1, 1), 1);
  EXPECT_EQ(prym_e_poly(4).coeff(2, 1), 9);
}

TEST(FermionicShift, Examples) {
  EXPECT_EQ(fermionic_shift(2), 2);
  EXPECT_EQ(fermionic_shift(3), 4);
  EXPECT_EQ(fermionic_shift(10), 18);
  for (int g = 2; g <= 12; ++g) EXPECT_EQ((g - 1) + fermionic_shift(g), 3 * g - 3);
}

TEST(EPolyRhs, GenusTwoEveryElement) {
  const BivarPoly expected = BivarPoly::monomial(-1, 4, 3) + BivarPoly::monomial(-1, 3, 4);
  for (std::uint64_t bits = 1; bits < 16; ++bits) EXPECT_EQ(e_poly_rhs(2, Gamma2Element(2, bits)), expected);
  EXPECT_THROW(e_poly_rhs(2, Gamma2Element::zero(2)), Error);
}

TEST(EPolyRhs, AverageMatchesElementByElementOracle) {
  for (int g = 2; g <= 3; ++g) {
    std::set<std::string> distinct;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << (2 * g)); ++bits) {
      const Gamma2Element gamma(g, bits);
      const BivarPoly average = twisted_prym_average(g, gamma);
      EXPECT_EQ(average, literal_average(g, gamma));
      distinct.insert(average.to_string());
    }
    EXPECT_EQ(distinct.size(), 1u);
  }
}

TEST(MirrorVerify, GenusTwoAndThree) {
  const MirrorReport r2 = mirror_verify(2);
  EXPECT_TRUE(r2.pass);
  EXPECT_EQ(r2.elements_checked, 15u);
  EXPECT_NO_THROW(r2.require_pass());
  const MirrorReport r3 = mirror_verify(3);
  EXPECT_TRUE(r3.pass);
  EXPECT_EQ(r3.elements_checked, 63u);
  EXPECT_EQ(r3.lhs.evaluate(1, 1), r3.rhs_sample.evaluate(1, 1));
}

TEST(MirrorVerify, CorruptedFermionicShiftIsAViolation) {
  MirrorOptions options;
  options.mutation.fermionic_shift = 2 * 2 - 1;
  const MirrorReport report = mirror_verify(2, options);
  EXPECT_FALSE(report.pass);
  ASSERT_TRUE(report.first_violation.has_value());
  try {
    report.require_pass();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IdentityViolation);
  }
}

TEST(MirrorVerify, DegeneratePairingIsAViolation) {
  MirrorOptions options;
  options.mutation.pairing = PairingForm::Degenerate;
  const MirrorReport report = mirror_verify(3, options);
  EXPECT_FALSE(report.pass);
  std::size_t failures = 0;
  for (const auto& c : report.checks) failures += c.pass ? 0 : 1;
  // Exactly the elements supported on the dropped symplectic pair: 2^2 - 1.
  EXPECT_EQ(failures, 3u);
}

TEST(MirrorVerify, SeededSampleIsDistinctAndReproducible) {
  MirrorOptions options;
  options.sample = 20;
  options.seed = 99;
  const MirrorReport a = mirror_verify(4, options);
  const MirrorReport b = mirror_verify(4, options);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.elements_checked, 20u);
  std::set<std::uint64_t> seen;
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    seen.insert(a.checks[i].gamma.mask());
    EXPECT_EQ(a.checks[i].gamma, b.checks[i].gamma);
  }
  EXPECT_EQ(seen.size(), 20u);
}

}  // namespace
}  // namespace hitchin
