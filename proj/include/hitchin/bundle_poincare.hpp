#pragma once

// Poincaré polynomial of the moduli space of stable rank-2 bundles of odd
// degree with fixed determinant, by two routes: the closed Harder–Narasimhan
// quotient and the Atiyah–Bott equivariant stratification recursion.

#include <string>

#include "hitchin/exactpoly.hpp"
#include "hitchin/geometry_numerics.hpp"
#include "hitchin/moduli_params.hpp"

namespace hitchin {

/// [(1+t^3)^{2g} - t^{2g}(1+t)^{2g}] / [(1-t^2)(1-t^4)], divided exactly.
inline IntPoly poincare_N_closed(int g) {
  detail::require_genus(g);
  const IntPoly numerator = IntPoly::binomial_power(1, 3, 2 * g) -
                            IntPoly::binomial_power(1, 1, 2 * g).shifted(2 * g);
  const IntPoly denominator = IntPoly::binomial_power(-1, 2, 1) * IntPoly::binomial_power(-1, 4, 1);
  return poly_exact_div(numerator, denominator);
}

/// Equivariant Poincaré series of an unstable stratum C_k (k >= 1):
/// ((1+t)^{2g} / (1-t^2))^2. Independent of k.
inline TruncSeries strata_equivariant_poly(int g, int order) {
  detail::require_genus(g);
  const TruncSeries factor =
      series_expand(IntPoly::binomial_power(1, 1, 2 * g), IntPoly::binomial_power(-1, 2, 1), order);
  return factor * factor;
}

/// Poincaré series of the classifying space of the complex gauge group:
/// [(1+t)(1+t^3)]^{2g} / ((1-t^2)^2 (1-t^4)).
inline TruncSeries classifying_space_poly(int g, int order) {
  detail::require_genus(g);
  const IntPoly numerator =
      (IntPoly::binomial_power(1, 1, 1) * IntPoly::binomial_power(1, 3, 1)).pow(2 * g);
  const IntPoly denominator =
      IntPoly::binomial_power(-1, 2, 1).pow(2) * IntPoly::binomial_power(-1, 4, 1);
  return series_expand(numerator, denominator, order);
}

/// Number of unstable strata whose leading term t^{codim} falls inside a
/// window of the given order. Later strata contribute nothing there, so
/// summing only these is exact within the window.
inline int hn_strata_in_window(int g, int order) {
  detail::require_genus(g);
  int count = 0;
  while (2 * g + 4 * (count + 1) - 4 < order) ++count;
  return count;
}

struct RecursionResult {
  IntPoly poly;
  int strata_summed = 0;
  int working_order = 0;
};

/// Recursion pipeline. `order` is the result window (at least 6g-5, the
/// default); the series work runs 2g terms further so the (1+t)^{2g}
/// quotient is taken on the full polynomial P_t(N) of degree 8g-6.
inline RecursionResult poincare_N_recursion_traced(int g, int order) {
  detail::require_genus(g);
  const int top = 6 * g - 6;
  detail::require(order >= top + 1, "truncation order " + std::to_string(order) +
                                        " cannot hold degree " + std::to_string(top));
  const int window = order + 2 * g;

  const TruncSeries stratum = strata_equivariant_poly(g, window);
  TruncSeries open_stratum = classifying_space_poly(g, window);
  const int strata = hn_strata_in_window(g, window);
  for (int k = 1; k <= strata; ++k) open_stratum = open_stratum - stratum.shifted(hn_codim_rank2(g, k));

  // Split off the classifying space of the central C^*.
  const TruncSeries full = IntPoly::binomial_power(-1, 2, 1) * open_stratum;

  const int full_degree = top + 2 * g;
  for (int i = full_degree + 1; i < window; ++i) {
    if (full.coeff(i) != 0)
      throw Error(ErrorCode::TailNonzero,
                  "P_t(N) has nonzero coefficient at t^" + std::to_string(i));
  }

  // Pic^1 contributes the (1+t)^{2g} factor.
  IntPoly reduced = poly_exact_div(full.poly(), IntPoly::binomial_power(1, 1, 2 * g));
  if (reduced.degree() > top)
    throw Error(ErrorCode::TailNonzero, "reduced polynomial has degree " +
                                            std::to_string(reduced.degree()) + " > " +
                                            std::to_string(top));
  return {std::move(reduced), strata, window};
}

inline IntPoly poincare_N_recursion(int g, int order) {
  return poincare_N_recursion_traced(g, order).poly;
}

inline IntPoly poincare_N_recursion(int g) {
  return poincare_N_recursion(g, default_truncation_order(g));
}

}  // namespace hitchin
