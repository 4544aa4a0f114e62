#pragma once

// Exact arithmetic kernel: dense univariate integer polynomials, truncated
// power series, sparse bivariate polynomials, and the Macdonald coefficient
// extraction. Everything is over arbitrary-precision integers.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hitchin/error.hpp"

namespace hitchin {

using Integer = boost::multiprecision::cpp_int;

/// C(n, k); zero outside 0 <= k <= n.
inline Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline Integer pow2(int exponent) {
  detail::require(exponent >= 0, "pow2: negative exponent");
  return Integer(1) << exponent;
}

namespace detail {

inline std::string term_string(const Integer& c, std::string_view monomial, bool first) {
  std::string out;
  Integer magnitude = c;
  if (c < 0) {
    out += first ? "-" : " - ";
    magnitude = -c;
  } else if (!first) {
    out += " + ";
  }
  if (monomial.empty()) {
    out += magnitude.str();
  } else {
    if (magnitude != 1) out += magnitude.str();
    out += monomial;
  }
  return out;
}

}  // namespace detail

/// Dense polynomial in t. Coefficient i multiplies t^i; trailing zeros are
/// never stored, so the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;

  explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  IntPoly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPoly constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

  static IntPoly monomial(const Integer& c, int degree) {
    detail::require(degree >= 0, "monomial: negative degree");
    std::vector<Integer> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    return IntPoly(std::move(coeffs));
  }

  /// (1 + coeff * t^exponent)^power, expanded by the binomial theorem.
  static IntPoly binomial_power(const Integer& coeff, int exponent, int power) {
    detail::require(exponent >= 0 && power >= 0, "binomial_power: negative argument");
    if (exponent == 0) {
      return constant(boost::multiprecision::pow(Integer(1) + coeff,
                                                 static_cast<unsigned>(power)));
    }
    std::vector<Integer> coeffs(static_cast<std::size_t>(exponent) * power + 1);
    Integer c_pow = 1;
    for (int j = 0; j <= power; ++j) {
      coeffs[static_cast<std::size_t>(j) * exponent] = binomial(power, j) * c_pow;
      c_pow *= coeff;
    }
    return IntPoly(std::move(coeffs));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  Integer coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
  }

  /// Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  IntPoly& operator+=(const IntPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }

  IntPoly& operator-=(const IntPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
  }

  IntPoly& operator*=(const IntPoly& other) {
    *this = *this * other;
    return *this;
  }

  IntPoly& operator*=(const Integer& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
  }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend IntPoly operator*(const Integer& s, IntPoly a) { return a *= s; }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(out));
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiplication by t^shift.
  IntPoly shifted(int shift) const {
    detail::require(shift >= 0, "shifted: negative shift");
    if (is_zero()) return {};
    std::vector<Integer> out(static_cast<std::size_t>(shift));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(out));
  }

  /// Drops every term of degree >= order.
  IntPoly truncated(int order) const {
    detail::require(order >= 0, "truncated: negative order");
    if (order >= static_cast<int>(coeffs_.size())) return *this;
    return IntPoly(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + order));
  }

  IntPoly pow(unsigned exponent) const {
    IntPoly result = constant(1);
    IntPoly base = *this;
    while (exponent != 0) {
      if (exponent & 1u) result *= base;
      exponent >>= 1;
      if (exponent != 0) base = base * base;
    }
    return result;
  }

  Integer evaluate(const Integer& t) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  /// c_i == c_{2*center - i} for every i, with nothing above degree 2*center.
  bool is_palindromic(int center) const {
    if (is_zero()) return true;
    if (degree() > 2 * center) return false;
    for (int i = 0; i <= 2 * center; ++i)
      if (coeff(i) != coeff(2 * center - i)) return false;
    return true;
  }

  std::string to_string(std::string_view var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
      const auto& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      std::string mono;
      if (i >= 1) mono = std::string(var);
      if (i >= 2) mono += "^" + std::to_string(i);
      out += detail::term_string(c, mono, first);
      first = false;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

namespace detail {

struct AscendingDivision {
  std::vector<Integer> quotient;
  int failed_at = -1;  // index where the constant-term division was inexact
};

/// First `terms` coefficients of num/den computed from the constant term
/// upward. den must have a nonzero constant term. Stops at the first step
/// whose running remainder is not divisible by that constant term.
inline AscendingDivision divide_ascending(const IntPoly& num, const IntPoly& den, int terms) {
  const Integer& lead = den.coeffs().front();
  AscendingDivision result;
  result.quotient.reserve(static_cast<std::size_t>(std::max(terms, 0)));
  for (int i = 0; i < terms; ++i) {
    Integer r = num.coeff(i);
    const int reach = std::min(i, den.degree());
    for (int j = 1; j <= reach; ++j) {
      const auto& dj = den.coeffs()[static_cast<std::size_t>(j)];
      if (dj != 0) r -= dj * result.quotient[static_cast<std::size_t>(i - j)];
    }
    if (r % lead != 0) {
      result.failed_at = i;
      return result;
    }
    result.quotient.push_back(r / lead);
  }
  return result;
}

inline IntPoly drop_low(const IntPoly& p, int count) {
  if (count <= 0 || p.is_zero()) return p;
  return IntPoly(std::vector<Integer>(p.coeffs().begin() + count, p.coeffs().end()));
}

}  // namespace detail

/// Exact quotient numerator / denominator. Throws NonDivisible when the
/// quotient is not a polynomial.
inline IntPoly poly_exact_div(const IntPoly& numerator, const IntPoly& denominator) {
  detail::require(!denominator.is_zero(), "poly_exact_div: zero denominator");
  if (numerator.is_zero()) return {};
  const int shift = denominator.valuation();
  if (numerator.valuation() < shift)
    throw Error(ErrorCode::NonDivisible, "numerator has lower t-adic valuation than denominator");
  const IntPoly num = detail::drop_low(numerator, shift);
  const IntPoly den = detail::drop_low(denominator, shift);
  if (num.degree() < den.degree())
    throw Error(ErrorCode::NonDivisible, "numerator degree below denominator degree");
  const int terms = num.degree() - den.degree() + 1;
  auto division = detail::divide_ascending(num, den, terms);
  if (division.failed_at >= 0)
    throw Error(ErrorCode::NonDivisible,
                "inexact step at degree " + std::to_string(division.failed_at));
  IntPoly quotient(std::move(division.quotient));
  const IntPoly remainder = num - quotient * den;
  if (!remainder.is_zero())
    throw Error(ErrorCode::NonDivisible,
                "remainder nonzero at degree " + std::to_string(remainder.valuation()));
  return quotient;
}

/// Power series in t known modulo t^order.
class TruncSeries {
 public:
  TruncSeries() = default;

  TruncSeries(const IntPoly& poly, int order) : order_(order) {
    detail::require(order >= 0, "TruncSeries: negative order");
    poly_ = poly.truncated(order);
  }

  const IntPoly& poly() const noexcept { return poly_; }
  int order() const noexcept { return order_; }

  Integer coeff(int i) const {
    detail::require(i >= 0 && i < order_, "TruncSeries::coeff: index " + std::to_string(i) +
                                              " outside window of order " +
                                              std::to_string(order_));
    return poly_.coeff(i);
  }

  TruncSeries truncated(int order) const {
    detail::require(order <= order_, "TruncSeries::truncated: cannot extend precision");
    return TruncSeries(poly_, order);
  }

  /// Multiplication by t^shift, keeping the current order.
  TruncSeries shifted(int shift) const { return TruncSeries(poly_.shifted(shift), order_); }

  /// Divides every coefficient by `divisor`; throws NonDivisible if any is not a multiple.
  TruncSeries div_exact(const Integer& divisor) const {
    detail::require(divisor != 0, "TruncSeries::div_exact: zero divisor");
    std::vector<Integer> out;
    out.reserve(poly_.coeffs().size());
    for (std::size_t i = 0; i < poly_.coeffs().size(); ++i) {
      const auto& c = poly_.coeffs()[i];
      if (c % divisor != 0)
        throw Error(ErrorCode::NonDivisible, "coefficient of t^" + std::to_string(i) +
                                                 " not divisible by " + divisor.str());
      out.push_back(c / divisor);
    }
    return TruncSeries(IntPoly(std::move(out)), order_);
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    const int order = std::min(a.order_, b.order_);
    return TruncSeries(a.poly_.truncated(order) + b.poly_.truncated(order), order);
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    const int order = std::min(a.order_, b.order_);
    return TruncSeries(a.poly_.truncated(order) - b.poly_.truncated(order), order);
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const int order = std::min(a.order_, b.order_);
    return TruncSeries(a.poly_.truncated(order) * b.poly_.truncated(order), order);
  }
  friend TruncSeries operator*(const Integer& s, const TruncSeries& a) {
    return TruncSeries(a.poly_ * s, a.order_);
  }
  friend TruncSeries operator*(const IntPoly& p, const TruncSeries& a) {
    return TruncSeries(p.truncated(a.order_) * a.poly_, a.order_);
  }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.order_ == b.order_ && a.poly_ == b.poly_;
  }

 private:
  IntPoly poly_;
  int order_ = 0;
};

/// The series s with s * denominator == numerator mod t^order.
inline TruncSeries series_expand(const IntPoly& numerator, const IntPoly& denominator,
                                 int order) {
  detail::require(order >= 0, "series_expand: negative order");
  if (denominator.is_zero() || denominator.coeff(0) == 0)
    throw Error(ErrorCode::ZeroConstantTerm, "denominator is not invertible as a power series");
  auto division = detail::divide_ascending(numerator, denominator, order);
  if (division.failed_at >= 0)
    throw Error(ErrorCode::NonDivisible, "series coefficient of t^" +
                                             std::to_string(division.failed_at) +
                                             " is not integral");
  return TruncSeries(IntPoly(std::move(division.quotient)), order);
}

/// Poincaré polynomial of the n-th symmetric product of a genus-g curve:
/// the x^n coefficient of (1 + x t)^{2g} / ((1 - x)(1 - x t^2)).
/// Only x^a from 1/(1-x), (x t^2)^b and C(2g, c)(x t)^c with a + b + c = n
/// contribute, so the coefficient is sum_{b + c <= n} C(2g, c) t^{c + 2b}.
inline IntPoly coeff_extract_x(int g, int n) {
  detail::require(g >= 0, "coeff_extract_x: negative genus");
  detail::require(n >= 0, "coeff_extract_x: negative n");
  std::vector<Integer> coeffs(static_cast<std::size_t>(2 * n) + 1);
  for (int c = 0; c <= std::min(n, 2 * g); ++c) {
    const Integer weight = binomial(2 * g, c);
    for (int b = 0; b + c <= n; ++b) coeffs[static_cast<std::size_t>(c + 2 * b)] += weight;
  }
  return IntPoly(std::move(coeffs));
}

/// Sparse polynomial in u, v keyed by exponent pairs (p, q).
class BivarPoly {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Integer>;

  BivarPoly() = default;

  static BivarPoly monomial(const Integer& c, int p, int q) {
    detail::require(p >= 0 && q >= 0, "BivarPoly::monomial: negative exponent");
    BivarPoly out;
    if (c != 0) out.terms_[{p, q}] = c;
    return out;
  }

  /// (1 + sign_u * u)^{g-1} (1 + sign_v * v)^{g-1}.
  static BivarPoly signed_binomial(int g, int sign_u, int sign_v) {
    detail::require(g >= 1, "signed_binomial: genus must be >= 1");
    detail::require((sign_u == 1 || sign_u == -1) && (sign_v == 1 || sign_v == -1),
                    "signed_binomial: signs must be +1 or -1");
    BivarPoly out;
    for (int p = 0; p <= g - 1; ++p) {
      for (int q = 0; q <= g - 1; ++q) {
        Integer c = binomial(g - 1, p) * binomial(g - 1, q);
        if ((sign_u == -1 && p % 2 == 1) != (sign_v == -1 && q % 2 == 1)) c = -c;
        out.terms_[{p, q}] = c;
      }
    }
    return out;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coeff(int p, int q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? Integer(0) : it->second;
  }

  int total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, e.first + e.second);
    return best;
  }

  BivarPoly& operator+=(const BivarPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }

  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
  }

  friend BivarPoly operator*(const Integer& s, const BivarPoly& a) {
    BivarPoly out;
    if (s == 0) return out;
    for (const auto& [e, c] : a.terms_) out.terms_[e] = c * s;
    return out;
  }

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplication by u^p v^q.
  BivarPoly shifted(int p, int q) const {
    detail::require(p >= 0 && q >= 0, "BivarPoly::shifted: negative shift");
    BivarPoly out;
    for (const auto& [e, c] : terms_) out.terms_[{e.first + p, e.second + q}] = c;
    return out;
  }

  BivarPoly div_exact(const Integer& divisor) const {
    detail::require(divisor != 0, "BivarPoly::div_exact: zero divisor");
    BivarPoly out;
    for (const auto& [e, c] : terms_) {
      if (c % divisor != 0)
        throw Error(ErrorCode::NonDivisible, "coefficient of u^" + std::to_string(e.first) +
                                                 " v^" + std::to_string(e.second) +
                                                 " not divisible by " + divisor.str());
      out.terms_[e] = c / divisor;
    }
    return out;
  }

  Integer evaluate(const Integer& u, const Integer& v) const {
    Integer acc = 0;
    for (const auto& [e, c] : terms_)
      acc += c * boost::multiprecision::pow(u, static_cast<unsigned>(e.first)) *
             boost::multiprecision::pow(v, static_cast<unsigned>(e.second));
    return acc;
  }

  /// Terms in descending total degree, then descending u-degree.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Integer>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      const int da = a.first.first + a.first.second;
      const int db = b.first.first + b.first.second;
      if (da != db) return da > db;
      return a.first.first > b.first.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
      std::string mono;
      if (e.first >= 1) mono += e.first == 1 ? "u" : "u^" + std::to_string(e.first);
      if (e.second >= 1) mono += e.second == 1 ? "v" : "v^" + std::to_string(e.second);
      out += detail::term_string(c, mono, first);
      first = false;
    }
    return out;
  }

 private:
  void add_term(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const BivarPoly& p) { return os << p.to_string(); }

/// (1 + sign_u u)^{g-1} (1 + sign_v v)^{g-1}; genus at least 2.
inline BivarPoly bivar_eval_signed_binomial(int g, int sign_u, int sign_v) {
  detail::require_genus(g);
  return BivarPoly::signed_binomial(g, sign_u, sign_v);
}

/// Truncation order that captures every polynomial of degree <= 6g - 6.
constexpr int default_truncation_order(int g) noexcept { return 6 * g - 6 + 1; }

}  // namespace hitchin
