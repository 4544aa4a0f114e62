#pragma once

// Integer bookkeeping for moduli of bundles and Higgs bundles on a curve:
// dimensions, Hitchin base, spectral curve data, Hilbert polynomials and
// Harder–Narasimhan types.

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hitchin/error.hpp"
#include "hitchin/exactpoly.hpp"
#include "hitchin/moduli_params.hpp"

namespace hitchin {

using Rational = boost::multiprecision::cpp_rational;

enum class Space { VectorBundles, Higgs, HitchinBase };

constexpr std::string_view to_string(Space space) noexcept {
  switch (space) {
    case Space::VectorBundles: return "vector-bundles";
    case Space::Higgs: return "higgs";
    case Space::HitchinBase: return "hitchin-base";
  }
  return "?";
}

/// dim H^0(X, K^i) on a genus-g curve for i >= 1. K has degree 2g-2, so for
/// i >= 2 the degree 2i(g-1) exceeds 2g-2, h^1 vanishes and Riemann–Roch
/// gives 2i(g-1) + 1 - g = (2i-1)(g-1).
inline long long h0_canonical_power(int i, int g) {
  detail::require(i >= 1, "h0_canonical_power: power must be >= 1");
  detail::require_genus(g);
  if (i == 1) return g;
  return static_cast<long long>(2 * i - 1) * (g - 1);
}

/// Dimension of the Hitchin base: sum of h^0(K^i) for i in 1..r, or 2..r
/// for the trace-free (SL) base.
inline long long hitchin_base_dim(int r, int g, bool reduced) {
  detail::require(r >= 1, "rank must be positive");
  detail::require_genus(g);
  long long total = 0;
  for (int i = reduced ? 2 : 1; i <= r; ++i) total += h0_canonical_power(i, g);
  return total;
}

/// Complex dimension of the moduli space selected by (group, space).
/// Higgs covers both the Dolbeault and Betti sides.
inline long long moduli_dim(const ModuliParams& params, Space space) {
  params.validate();
  const long long r2 = static_cast<long long>(params.rank) * params.rank;
  const long long g1 = params.genus - 1;
  switch (space) {
    case Space::VectorBundles:
      switch (params.group) {
        case Group::GL: return g1 * r2 + 1;
        case Group::SL: return (r2 - 1) * g1;
        case Group::PGL: break;
      }
      throw Error(ErrorCode::UnsupportedCombination, "no tabulated dimension for PGL bundles");
    case Space::Higgs:
      // 2[dim Z_G + (g-1) dim G]
      switch (params.group) {
        case Group::GL: return 2 * (1 + g1 * r2);
        case Group::SL:
        case Group::PGL: return 2 * g1 * (r2 - 1);
      }
      break;
    case Space::HitchinBase:
      return hitchin_base_dim(params.rank, params.genus, params.group != Group::GL);
  }
  throw Error(ErrorCode::UnsupportedCombination, "unknown space selector");
}

struct SpectralNumbers {
  long long ramification_degree = 0;
  long long spectral_genus = 0;
  long long line_degree_delta = 0;

  friend bool operator==(const SpectralNumbers&, const SpectralNumbers&) = default;
};

/// Degree-r spectral cover Y -> X: ramification degree, genus of Y, and the
/// degree of the line bundle L on Y with deg(pi_* L) = d, solved from
/// deg pi_* L = deg L + (1 - g(Y)) - r(1 - g).
inline SpectralNumbers spectral_numbers(int r, int g, long long d) {
  detail::require(r >= 1, "rank must be positive");
  detail::require_genus(g);
  SpectralNumbers out;
  out.ramification_degree = 2LL * r * (r - 1) * (g - 1);
  out.spectral_genus = static_cast<long long>(r) * r * (g - 1) + 1;
  out.line_degree_delta = d - (1 - out.spectral_genus) + static_cast<long long>(r) * (1 - g);
  return out;
}

/// chi(E(n)) = d + r(n + 1 - g).
inline Integer hilbert_poly(long long r, long long d, int g, long long n) {
  return Integer(d) + Integer(r) * (Integer(n) + 1 - g);
}

/// Real codimension of the Harder–Narasimhan stratum of type (k+1, -k).
inline int hn_codim_rank2(int g, int k) {
  detail::require_genus(g);
  detail::require(k >= 1, "stratum index k must be >= 1");
  return 2 * g + 4 * k - 4;
}

struct HNBlock {
  int rank = 1;
  long long degree = 0;

  Rational slope() const { return Rational(degree, rank); }
};

/// Harder–Narasimhan type: graded pieces with strictly decreasing slopes.
class HNType {
 public:
  explicit HNType(std::vector<HNBlock> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw Error(ErrorCode::InvalidHNType, "no blocks");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (blocks_[i].rank < 1)
        throw Error(ErrorCode::InvalidHNType, "block rank must be positive");
      if (i > 0 && !(blocks_[i - 1].slope() > blocks_[i].slope()))
        throw Error(ErrorCode::InvalidHNType, "slopes must be strictly decreasing");
    }
  }

  /// The semistable type of rank r and degree d.
  static HNType semistable(int r, long long d) { return HNType({{r, d}}); }

  const std::vector<HNBlock>& blocks() const noexcept { return blocks_; }

  int total_rank() const {
    int r = 0;
    for (const auto& b : blocks_) r += b.rank;
    return r;
  }

  long long total_degree() const {
    long long d = 0;
    for (const auto& b : blocks_) d += b.degree;
    return d;
  }

  /// Length-r vector with each slope repeated rank-many times.
  std::vector<Rational> slope_vector() const {
    std::vector<Rational> out;
    for (const auto& b : blocks_) out.insert(out.end(), static_cast<std::size_t>(b.rank), b.slope());
    return out;
  }

  friend bool operator==(const HNType& a, const HNType& b) {
    return a.slope_vector() == b.slope_vector();
  }

 private:
  std::vector<HNBlock> blocks_;
};

/// Shatz order: a <= b iff every partial slope sum of a is at most b's.
inline bool hn_leq(const HNType& a, const HNType& b) {
  if (a.total_rank() != b.total_rank() || a.total_degree() != b.total_degree())
    throw Error(ErrorCode::IncompatibleTypes, "HN types differ in total rank or degree");
  const auto mu_a = a.slope_vector();
  const auto mu_b = b.slope_vector();
  Rational sum_a = 0;
  Rational sum_b = 0;
  for (std::size_t i = 0; i + 1 < mu_a.size(); ++i) {
    sum_a += mu_a[i];
    sum_b += mu_b[i];
    if (sum_a > sum_b) return false;
  }
  return true;
}

}  // namespace hitchin
