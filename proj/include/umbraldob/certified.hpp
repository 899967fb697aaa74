#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "umbraldob/rational.hpp"

namespace umbraldob {

/// Closed rational interval [lo, hi] known to contain a real value.
class CertifiedValue {
 public:
  CertifiedValue() = default;
  /// Throws std::invalid_argument if lo > hi.
  CertifiedValue(Rational lo, Rational hi);
  static CertifiedValue exact(const Rational& v) { return {v, v}; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const CertifiedValue& inner) const { return lo_ <= inner.lo_ && inner.hi_ <= hi_; }

  friend CertifiedValue operator+(const CertifiedValue& a, const CertifiedValue& b);
  friend CertifiedValue operator-(const CertifiedValue& a, const CertifiedValue& b);
  /// Divisor must be strictly positive.
  friend CertifiedValue operator/(const CertifiedValue& a, const CertifiedValue& b);
  friend bool operator==(const CertifiedValue&, const CertifiedValue&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

/// Knobs of the truncation rule used by certified_sum.
struct SumOptions {
  /// Accept truncation at K once term(K+1)/term(K) <= ratio_threshold. Must lie in [0, 1).
  Rational ratio_threshold{Rational(1, 2)};
  /// Number of following ratios that must be non-increasing.
  std::size_t lookahead = 8;
  /// Largest term index that may be evaluated.
  std::size_t hard_cap = 10000;
  /// When set, keep extending K until the tail bound is at most this width.
  std::optional<Rational> max_width;
};

/// Detailed outcome of a certified summation.
struct SumTrace {
  CertifiedValue value;
  /// Index of the last term in the exact partial sum.
  std::size_t last_index = 0;
  /// Ratio term(K+1)/term(K) observed at the truncation point.
  Rational ratio;
};

using TermFunction = std::function<Rational(std::size_t)>;

/// Certified-modulo-monotonicity summation of a non-negative series.
///
/// Finds the first K at which term(K+1)/term(K) <= threshold and the ratios
/// stay non-increasing across the next `lookahead` terms, then returns
/// [S_K, S_K + term(K+1) / (1 - r_K)] with S_K the exact partial sum. For the
/// default threshold 1/2 the tail bound never exceeds 2 * term(K+1).
///
/// Zero terms: a zero run after a positive term counts as ratio 0, a positive
/// term after a zero counts as an infinite ratio, and a leading zero run gives
/// no evidence at all. A series whose terms vanish all the way to the hard
/// cap sums to [0, 0].
///
/// Throws NegativeTermError, NonConvergentError, std::invalid_argument for bad options.
CertifiedValue certified_sum(const TermFunction& term, const SumOptions& options = {});
SumTrace certified_sum_traced(const TermFunction& term, const SumOptions& options = {});

}  // namespace umbraldob
