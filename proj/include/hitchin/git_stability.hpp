#pragma once

// GIT stability bookkeeping: torus weight profiles, Hilbert–Mumford weights
// of filtrations of a quotient O(-n)^N -> E, and the subspace inequality
// characterizing semistable points of the Quot scheme.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "hitchin/exactpoly.hpp"
#include "hitchin/geometry_numerics.hpp"

namespace hitchin {

enum class Stability { Unstable, StrictlySemistable, StrictlyPolystable, Stable };

constexpr std::string_view to_string(Stability s) noexcept {
  switch (s) {
    case Stability::Unstable: return "unstable";
    case Stability::StrictlySemistable: return "strictly-semistable";
    case Stability::StrictlyPolystable: return "strictly-polystable";
    case Stability::Stable: return "stable";
  }
  return "?";
}

constexpr bool is_semistable(Stability s) noexcept { return s != Stability::Unstable; }
constexpr bool is_polystable(Stability s) noexcept {
  return s == Stability::StrictlyPolystable || s == Stability::Stable;
}
constexpr bool is_stable(Stability s) noexcept { return s == Stability::Stable; }

/// Weights of C^* on the nonzero components of a lift of the point.
class WeightProfile {
 public:
  explicit WeightProfile(std::vector<long long> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw Error(ErrorCode::EmptyProfile, "weight profile is empty");
  }

  const std::vector<long long>& weights() const noexcept { return weights_; }
  long long min() const { return *std::min_element(weights_.begin(), weights_.end()); }
  long long max() const { return *std::max_element(weights_.begin(), weights_.end()); }

 private:
  std::vector<long long> weights_;
};

/// Hilbert–Mumford classification for a C^* action. Both lambda and
/// lambda^{-1} are one-parameter subgroups, so the profile and its negation
/// are both tested: the point is unstable when all weights share a strict
/// sign, fixed when every weight is zero, and has a closed 1-dimensional
/// orbit when weights of both strict signs occur.
inline Stability torus_classify(const WeightProfile& profile) {
  const long long lo = profile.min();
  const long long hi = profile.max();
  if (lo > 0 || hi < 0) return Stability::Unstable;
  if (lo == 0 && hi == 0) return Stability::StrictlyPolystable;
  if (lo < 0 && hi > 0) return Stability::Stable;
  // One extreme is zero: the limit in that direction is the weight-0 part.
  return Stability::StrictlySemistable;
}

struct FiltrationBlock {
  long long dim = 1;     // N_i = dim V_i
  long long weight = 0;  // a_i
  long long rank = 0;    // rank of the graded piece G_i
  long long degree = 0;  // degree of G_i
};

/// Weight filtration of V = C^N induced by a one-parameter subgroup of SL_N,
/// together with the graded pieces of the induced filtration of E.
struct FiltrationData {
  std::vector<FiltrationBlock> blocks;
  long long n = 0;  // twist with E(n) globally generated
  long long m = 0;  // twist of the linearization L_m
  int genus = 2;

  long long total_dim() const {
    long long total = 0;
    for (const auto& b : blocks) total += b.dim;
    return total;
  }

  void validate() const {
    detail::require_genus(genus);
    if (blocks.empty()) throw Error(ErrorCode::InvalidFiltration, "filtration has no blocks");
    Integer weighted = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].dim < 1) throw Error(ErrorCode::InvalidFiltration, "block dimension must be positive");
      if (blocks[i].rank < 0) throw Error(ErrorCode::InvalidFiltration, "block rank must be nonnegative");
      if (i > 0 && blocks[i - 1].weight <= blocks[i].weight)
        throw Error(ErrorCode::InvalidFiltration, "weights must be strictly decreasing");
      weighted += Integer(blocks[i].dim) * blocks[i].weight;
    }
    if (weighted != 0)
      throw Error(ErrorCode::InvalidFiltration, "sum N_i a_i = " + weighted.str() + ", must be 0");
  }
};

namespace detail {

inline Integer graded_euler(const FiltrationData& f, std::size_t i) {
  const auto& b = f.blocks[i];
  return hilbert_poly(b.rank, b.degree, f.genus, f.m);
}

}  // namespace detail

/// -sum a_i chi(G_i(m)).
inline Integer hm_weight_graded(const FiltrationData& f) {
  f.validate();
  Integer total = 0;
  for (std::size_t i = 0; i < f.blocks.size(); ++i)
    total -= Integer(f.blocks[i].weight) * detail::graded_euler(f, i);
  return total;
}

/// sum_{i<s} (a_{i+1} - a_i)(chi(E_i(m)) - dim F_i / N * chi(E(m))), exact.
inline Rational hm_weight_filtered(const FiltrationData& f) {
  f.validate();
  Integer chi_total = 0;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) chi_total += detail::graded_euler(f, i);
  const Integer big_n = f.total_dim();

  Rational total = 0;
  Integer chi_partial = 0;
  Integer dim_partial = 0;
  for (std::size_t i = 0; i + 1 < f.blocks.size(); ++i) {
    chi_partial += detail::graded_euler(f, i);
    dim_partial += f.blocks[i].dim;
    const Integer step = Integer(f.blocks[i + 1].weight) - f.blocks[i].weight;
    total += Rational(step) * (Rational(chi_partial) - Rational(dim_partial, big_n) * Rational(chi_total));
  }
  return total;
}

/// Hilbert–Mumford weight mu_{L_m}(E, lambda), evaluated by both expressions.
inline Integer hm_weight(const FiltrationData& f) {
  const Integer graded = hm_weight_graded(f);
  const Rational filtered = hm_weight_filtered(f);
  if (denominator(filtered) != 1)
    throw Error(ErrorCode::NonIntegerWeight, "filtered expression gave " + filtered.str());
  if (numerator(filtered) != graded)
    throw Error(ErrorCode::ExpressionMismatch,
                "graded form " + graded.str() + " vs filtered form " + filtered.str());
  return graded;
}

/// N' / chi(E'(m)) <= N / chi(E(m)), cross-multiplied.
inline bool quotient_semistability_test(long long sub_dim, long long sub_rank, long long sub_degree,
                                        long long total_dim, long long rank, long long degree, int g,
                                        long long m) {
  detail::require_genus(g);
  const Integer chi_sub = hilbert_poly(sub_rank, sub_degree, g, m);
  const Integer chi_total = hilbert_poly(rank, degree, g, m);
  if (chi_sub <= 0 || chi_total <= 0)
    throw Error(ErrorCode::NonPositiveEuler, "chi(E'(m)) = " + chi_sub.str() +
                                                 ", chi(E(m)) = " + chi_total.str() +
                                                 "; take m larger");
  return Integer(sub_dim) * chi_total <= Integer(total_dim) * chi_sub;
}

}  // namespace hitchin
