#pragma once

// Poincaré polynomial of the rank-2, odd-degree, fixed-determinant Higgs
// moduli space. Route one sums the Bialynicki–Birula strata of the C^*
// action scaling the Higgs field; route two expands Hitchin's closed form as
// power series and checks that the non-polynomial tails cancel.

#include <string>
#include <vector>

#include "hitchin/bundle_poincare.hpp"
#include "hitchin/exactpoly.hpp"

namespace hitchin {

/// Index of a non-trivial fixed component F_k, 1 <= k <= g-1. F_k covers the
/// symmetric product of degree kbar = 2g - 2k - 1 of the curve.
class StratumIndex {
 public:
  StratumIndex(int g, int k) : k_(k), kbar_(2 * g - 2 * k - 1) {
    detail::require_genus(g);
    detail::require(k >= 1 && k <= g - 1, "stratum index k=" + std::to_string(k) +
                                              " outside 1.." + std::to_string(g - 1));
  }

  int k() const noexcept { return k_; }
  int kbar() const noexcept { return kbar_; }

 private:
  int k_;
  int kbar_;
};

/// Real codimension 2(g + 2k - 2) of the attracting set of F_k.
inline int bb_codimension(int g, const StratumIndex& index) {
  return 2 * (g + 2 * index.k() - 2);
}

/// P_t(F_k): the invariant part is the symmetric product; each of the
/// 2^{2g}-1 non-trivial characters adds the exterior power
/// wedge^kbar H^1(X, C_gamma) of dimension C(2g-2, kbar), which sits in
/// cohomological degree kbar.
inline IntPoly fixed_locus_poincare(int g, const StratumIndex& index) {
  const int kbar = index.kbar();
  const Integer variant = (pow2(2 * g) - 1) * binomial(2 * g - 2, kbar);
  return coeff_extract_x(g, kbar) + IntPoly::monomial(variant, kbar);
}

inline IntPoly poincare_M_stratified(int g) {
  detail::require_genus(g);
  IntPoly total = poincare_N_closed(g);
  for (int k = 1; k <= g - 1; ++k) {
    const StratumIndex index(g, k);
    total += fixed_locus_poincare(g, index).shifted(bb_codimension(g, index));
  }
  if (total.degree() > 6 * g - 6)
    throw Error(ErrorCode::DegreeOverflow, "stratified sum has degree " +
                                               std::to_string(total.degree()));
  return total;
}

/// The four summands of Hitchin's closed form, each as a truncated series.
struct HitchinTerms {
  TruncSeries harder_narasimhan;  // (1+t^3)^{2g} / ((1-t^2)(1-t^4))
  TruncSeries correction;         // -t^{4g-4} [..] / (4 (1-t^2)(1-t^4))
  TruncSeries geometric_tail;     // -(g-1) t^{4g-3} (1+t)^{2g-2} / (1-t)
  TruncSeries parity;             // 2^{2g-1} t^{4g-4} [(1+t)^{2g-2} - (1-t)^{2g-2}]

  TruncSeries sum() const { return harder_narasimhan + correction + geometric_tail + parity; }
};

inline HitchinTerms hitchin_closed_terms(int g, int order) {
  detail::require_genus(g);
  const IntPoly quartic = IntPoly::binomial_power(-1, 2, 1) * IntPoly::binomial_power(-1, 4, 1);
  const IntPoly plus = IntPoly::binomial_power(1, 1, 2 * g - 2);
  const IntPoly minus = IntPoly::binomial_power(-1, 1, 2 * g - 2);

  HitchinTerms terms;
  terms.harder_narasimhan = series_expand(IntPoly::binomial_power(1, 3, 2 * g), quartic, order);

  const IntPoly bracket =
      IntPoly::binomial_power(1, 2, 1).pow(2) * IntPoly::binomial_power(1, 1, 2 * g) -
      IntPoly::binomial_power(1, 1, 4) * IntPoly::binomial_power(-1, 1, 2 * g);
  terms.correction = Integer(-1) * series_expand(bracket, quartic, order).div_exact(4).shifted(4 * g - 4);

  terms.geometric_tail = Integer(-(g - 1)) *
                         series_expand(plus, IntPoly::binomial_power(-1, 1, 1), order).shifted(4 * g - 3);

  terms.parity = TruncSeries((pow2(2 * g - 1) * (plus - minus)).shifted(4 * g - 4), order);
  return terms;
}

/// Closed-form route. `order` is the result window (default 6g-5); the sum
/// is formed 2g terms further and every coefficient past degree 6g-6 must
/// cancel.
inline IntPoly poincare_M_closed(int g, int order) {
  detail::require_genus(g);
  const int top = 6 * g - 6;
  detail::require(order >= top + 1, "truncation order " + std::to_string(order) +
                                        " cannot hold degree " + std::to_string(top));
  const int window = order + 2 * g;
  const TruncSeries total = hitchin_closed_terms(g, window).sum();
  for (int i = top + 1; i < window; ++i) {
    if (total.coeff(i) != 0)
      throw Error(ErrorCode::TailNonzero, "closed form leaves coefficient " +
                                              total.coeff(i).str() + " at t^" + std::to_string(i));
  }
  return total.poly();
}

inline IntPoly poincare_M_closed(int g) { return poincare_M_closed(g, default_truncation_order(g)); }

}  // namespace hitchin
