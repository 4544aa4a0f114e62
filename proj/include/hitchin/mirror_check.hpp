#pragma once

// Rank-2 topological mirror symmetry, one character at a time. The variant
// E-polynomial of the SL Higgs moduli space (a direct Hodge-number sum) is
// compared with the twisted E-polynomial of the gamma-fixed locus of the PGL
// side (a literal average over the 2-torsion of the Jacobian, weighted by
// the Weil pairing) times the fermionic shift.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "hitchin/exactpoly.hpp"

namespace hitchin {

namespace detail {

/// Element of (Z/2)^{2g} stored as the low 2g bits of a word. Bit i and bit
/// g+i form the i-th symplectic pair.
template <class Tag>
class BinaryVector {
 public:
  static constexpr int kMaxGenus = 31;

  BinaryVector(int genus, std::uint64_t bits) : genus_(genus), bits_(bits) {
    require(genus >= 1 && genus <= kMaxGenus, "binary vector genus out of range");
    require(bits < (std::uint64_t{1} << (2 * genus)), "bits exceed length 2g");
  }

  static BinaryVector from_bits(const std::vector<int>& bits) {
    require(!bits.empty() && bits.size() % 2 == 0, "bit vector length must be 2g > 0",
            ErrorCode::LengthMismatch);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      require(bits[i] == 0 || bits[i] == 1, "bits must be 0 or 1");
      if (bits[i] == 1) mask |= std::uint64_t{1} << i;
    }
    return BinaryVector(static_cast<int>(bits.size() / 2), mask);
  }

  static BinaryVector zero(int genus) { return BinaryVector(genus, 0); }

  int genus() const noexcept { return genus_; }
  int length() const noexcept { return 2 * genus_; }
  std::uint64_t mask() const noexcept { return bits_; }
  bool is_zero() const noexcept { return bits_ == 0; }
  int bit(int i) const { return static_cast<int>((bits_ >> i) & 1u); }

  friend BinaryVector operator+(const BinaryVector& a, const BinaryVector& b) {
    require(a.genus_ == b.genus_, "vectors of different length", ErrorCode::LengthMismatch);
    return BinaryVector(a.genus_, a.bits_ ^ b.bits_);
  }

  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < length(); ++i) out += bit(i) ? '1' : '0';
    return out;
  }

 private:
  int genus_;
  std::uint64_t bits_;
};

struct GammaTag {};
struct CharacterTag {};

inline std::uint64_t low_half(std::uint64_t bits, int g) { return bits & ((std::uint64_t{1} << g) - 1); }
inline std::uint64_t high_half(std::uint64_t bits, int g) { return bits >> g; }

}  // namespace detail

using Gamma2Element = detail::BinaryVector<detail::GammaTag>;
using Character = detail::BinaryVector<detail::CharacterTag>;

/// Which alternating form plays the Weil pairing. Degenerate drops the last
/// symplectic pair and exists only to show the mirror check notices.
enum class PairingForm { Standard, Degenerate };

/// (-1)^{a^T J b} for the standard symplectic form J on (Z/2)^{2g}.
inline int weil_pairing(const Gamma2Element& a, const Gamma2Element& b,
                        PairingForm form = PairingForm::Standard) {
  detail::require(a.genus() == b.genus(), "pairing vectors of different length",
                  ErrorCode::LengthMismatch);
  const int g = a.genus();
  std::uint64_t cross = (detail::low_half(a.mask(), g) & detail::high_half(b.mask(), g)) ^
                        (detail::high_half(a.mask(), g) & detail::low_half(b.mask(), g));
  if (form == PairingForm::Degenerate) cross &= ~(std::uint64_t{1} << (g - 1));
  return std::popcount(cross) % 2 == 0 ? 1 : -1;
}

/// kappa(gamma) = (-1)^{<kappa, gamma>} with the plain dot product.
inline int character_value(const Character& kappa, const Gamma2Element& gamma) {
  detail::require(kappa.genus() == gamma.genus(), "character and element of different length",
                  ErrorCode::LengthMismatch);
  return std::popcount(kappa.mask() & gamma.mask()) % 2 == 0 ? 1 : -1;
}

/// The element gamma = w(kappa) with weil_pairing(gamma, .) == kappa(.):
/// J swaps the two halves.
inline Gamma2Element weil_dual(const Character& kappa) {
  const int g = kappa.genus();
  const std::uint64_t swapped =
      (detail::low_half(kappa.mask(), g) << g) | detail::high_half(kappa.mask(), g);
  return Gamma2Element(g, swapped);
}

inline Character weil_dual_inverse(const Gamma2Element& gamma) {
  const int g = gamma.genus();
  const std::uint64_t swapped =
      (detail::low_half(gamma.mask(), g) << g) | detail::high_half(gamma.mask(), g);
  return Character(g, swapped);
}

inline int fermionic_shift(int g) {
  detail::require_genus(g);
  return 2 * g - 2;
}

/// Hodge polynomial of the (g-1)-dimensional Prym variety:
/// sum C(g-1,p) C(g-1,q) u^p v^q = (1+u)^{g-1} (1+v)^{g-1}.
inline BivarPoly prym_e_poly(int g) { return bivar_eval_signed_binomial(g, 1, 1); }

/// kappa-variant part of E(M; u, v). The variant classes of F_k are
/// wedge^kbar H^1(X, C_gamma) with kbar = 2g-2k-1 odd, Hodge numbers
/// C(g-1,p) C(g-1,q) for p+q = kbar, and weight (uv)^{3g-3} after the shift
/// by the stratum codimension. Odd degree gives the E-polynomial sign -1.
inline BivarPoly e_poly_kappa_lhs(int g, const Character& kappa) {
  detail::require_genus(g);
  detail::require(kappa.genus() == g, "character length does not match genus",
                  ErrorCode::LengthMismatch);
  if (kappa.is_zero())
    throw Error(ErrorCode::TrivialCharacter, "the trivial character has no variant part");
  BivarPoly total;
  for (int k = 1; k <= g - 1; ++k) {
    const int kbar = 2 * g - 2 * k - 1;
    const Integer sign = kbar % 2 == 0 ? 1 : -1;
    for (int p = std::max(0, kbar - (g - 1)); p <= std::min(kbar, g - 1); ++p) {
      const int q = kbar - p;
      total += BivarPoly::monomial(sign * binomial(g - 1, p) * binomial(g - 1, q), p, q);
    }
  }
  return total.shifted(3 * g - 3, 3 * g - 3);
}

/// The displayed closed form 1/2 (uv)^{3g-3} [(1-u)^{g-1}(1-v)^{g-1} - (1+u)^{g-1}(1+v)^{g-1}].
inline BivarPoly e_poly_kappa_closed(int g) {
  detail::require_genus(g);
  return (bivar_eval_signed_binomial(g, -1, -1) - bivar_eval_signed_binomial(g, 1, 1))
      .div_exact(2)
      .shifted(3 * g - 3, 3 * g - 3);
}

struct MirrorMutation {
  std::optional<int> fermionic_shift;
  PairingForm pairing = PairingForm::Standard;
};

/// Above this genus the 2^{2g}-term average is replaced by its closed form.
inline constexpr int kLiteralAverageMaxGenus = 10;

/// 2^{-2g} sum over gamma' of w(gamma,gamma') E(P_gamma)(w u, w v), where the
/// signed E-polynomial of the Prym is the Hodge polynomial at (-u, -v).
/// Every gamma' is visited and its pairing evaluated; terms are grouped by
/// pairing value before the bivariate multiply.
inline BivarPoly twisted_prym_average(int g, const Gamma2Element& gamma,
                                      PairingForm form = PairingForm::Standard) {
  const std::uint64_t size = std::uint64_t{1} << (2 * g);
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
  if (g <= kLiteralAverageMaxGenus) {
    for (std::uint64_t bits = 0; bits < size; ++bits) {
      if (weil_pairing(gamma, Gamma2Element(g, bits), form) == 1)
        ++plus;
      else
        ++minus;
    }
  } else {
    // Nondegenerate pairing: w(gamma, .) is a surjective character.
    plus = minus = size / 2;
  }
  const BivarPoly sum = Integer(plus) * bivar_eval_signed_binomial(g, -1, -1) -
                        Integer(minus) * bivar_eval_signed_binomial(g, 1, 1);
  return sum.div_exact(Integer(size));
}

inline BivarPoly e_poly_rhs(int g, const Gamma2Element& gamma, const MirrorMutation& mutation = {}) {
  detail::require_genus(g);
  detail::require(gamma.genus() == g, "element length does not match genus",
                  ErrorCode::LengthMismatch);
  if (gamma.is_zero()) throw Error(ErrorCode::TrivialElement, "gamma must be nontrivial");
  const int shift = mutation.fermionic_shift.value_or(fermionic_shift(g));
  detail::require(shift >= 0, "fermionic shift must be nonnegative");
  // M^gamma is a torsor under T^*P_gamma: the cotangent fibre adds (uv)^{g-1}.
  const int weight = (g - 1) + shift;
  return twisted_prym_average(g, gamma, mutation.pairing).shifted(weight, weight);
}

struct MirrorOptions {
  std::optional<std::uint64_t> sample;  // number of nonzero gammas; all when unset
  std::uint64_t seed = 0;
  MirrorMutation mutation;
};

struct ElementCheck {
  Gamma2Element gamma;
  bool pass = false;
};

struct MirrorReport {
  int genus = 0;
  std::uint64_t elements_checked = 0;
  bool pass = true;
  std::vector<ElementCheck> checks;
  BivarPoly lhs;
  BivarPoly rhs_sample;
  std::optional<std::string> first_violation;

  void require_pass() const {
    if (!pass) throw Error(ErrorCode::IdentityViolation, first_violation.value_or("mismatch"));
  }
};

namespace detail {

inline std::string first_difference(const BivarPoly& lhs, const BivarPoly& rhs,
                                    const Gamma2Element& gamma) {
  const BivarPoly diff = lhs - rhs;
  const auto& [exps, c] = *diff.terms().begin();
  return "gamma=" + gamma.to_string() + ": coefficient of u^" + std::to_string(exps.first) +
         " v^" + std::to_string(exps.second) + " is " + lhs.coeff(exps.first, exps.second).str() +
         " on the left and " + rhs.coeff(exps.first, exps.second).str() + " on the right";
}

inline std::vector<std::uint64_t> choose_elements(int g, const MirrorOptions& options) {
  const std::uint64_t nonzero = (std::uint64_t{1} << (2 * g)) - 1;
  std::vector<std::uint64_t> out;
  if (!options.sample || *options.sample >= nonzero) {
    out.reserve(nonzero);
    for (std::uint64_t bits = 1; bits <= nonzero; ++bits) out.push_back(bits);
    return out;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, nonzero);
  std::unordered_set<std::uint64_t> seen;
  while (out.size() < *options.sample) {
    const std::uint64_t bits = pick(rng);
    if (seen.insert(bits).second) out.push_back(bits);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Checks the per-character identity for every nonzero gamma (or a seeded
/// sample). The left side is independent of the character, so it is built
/// once from gamma's dual character of the first element.
inline MirrorReport mirror_verify(int g, const MirrorOptions& options = {}) {
  detail::require_genus(g);
  detail::require(g <= Gamma2Element::kMaxGenus, "genus too large for the 2-torsion model");
  MirrorReport report;
  report.genus = g;
  const auto elements = detail::choose_elements(g, options);
  detail::require(!elements.empty(), "sample size must be positive");

  report.lhs = e_poly_kappa_lhs(g, weil_dual_inverse(Gamma2Element(g, elements.front())));
  for (std::uint64_t bits : elements) {
    const Gamma2Element gamma(g, bits);
    const BivarPoly lhs = e_poly_kappa_lhs(g, weil_dual_inverse(gamma));
    const BivarPoly rhs = e_poly_rhs(g, gamma, options.mutation);
    const bool ok = lhs == rhs;
    if (report.checks.empty()) report.rhs_sample = rhs;
    if (!ok && report.pass) {
      report.pass = false;
      report.first_violation = detail::first_difference(lhs, rhs, gamma);
      report.rhs_sample = rhs;
    }
    report.checks.push_back({gamma, ok});
  }
  report.elements_checked = report.checks.size();
  return report;
}

}  // namespace hitchin
