#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "umbraldob/certified.hpp"
#include "umbraldob/polynomial.hpp"
#include "umbraldob/psi_sequence.hpp"
#include "umbraldob/rational.hpp"

namespace umbraldob {

/// Options for a psi-series at `lambda`, derived from `base`.
///
/// When the limiting term ratio L of the psi-exponential series is not below
/// the base threshold (Gauss q < 1 gives L = lambda (1 - q)), the threshold is
/// raised to (1 + L) / 2 so that a truncation point exists. Throws
/// NonConvergentError when L >= 1.
SumOptions series_options(const PsiSequence& seq, const Rational& lambda, const SumOptions& base);

/// Certified enclosure of exp_psi(lambda) = sum_k lambda^k / k_psi!.
CertifiedValue psi_exp(const PsiSequence& seq, const Rational& lambda, const SumOptions& options = {});

/// Rational bounds on one pmf value.
struct PmfBounds {
  Rational lo;
  Rational hi;
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

/// psi-Poisson distribution p_k = lambda^k / (k_psi! exp_psi(lambda)).
/// The normalizer is computed once, at construction.
class PsiPoissonDistribution {
 public:
  /// Throws std::invalid_argument for lambda <= 0.
  PsiPoissonDistribution(PsiSequence seq, Rational lambda, const SumOptions& options = {});

  const PsiSequence& sequence() const { return seq_; }
  const Rational& lambda() const { return lambda_; }
  const CertifiedValue& normalizer() const { return normalizer_; }

  /// Exact lambda^k / k_psi!.
  Rational unnormalized(std::uint64_t k) const;
  PmfBounds pmf(std::uint64_t k) const;

 private:
  PsiSequence seq_;
  Rational lambda_;
  CertifiedValue normalizer_;
};

PmfBounds pmf(const PsiPoissonDistribution& dist, std::uint64_t k);

/// L_psi(p) = exp_psi(lambda)^-1 sum_k p(k_psi) lambda^k / k_psi!.
///
/// p is split by coefficient sign into p+ - p-; each part is summed with
/// certified_sum and the enclosures are subtracted.
CertifiedValue moment_functional(const PsiSequence& seq, const Rational& lambda, const XPolynomial& p,
                                 const SumOptions& options = {});

/// L_psi applied to the psi-falling factorial of order n at lambda = 1. Contains 1.
CertifiedValue verify_falling_moment(const PsiSequence& seq, std::uint64_t n,
                                     const SumOptions& options = {});

/// psi-Dobinski series exp_psi(1)^-1 sum_k (k_psi)^n / k_psi!.
CertifiedValue dobinski_bell(const PsiSequence& seq, std::uint64_t n, const SumOptions& options = {});

/// Bell number via the umbral functional: expand X^n in falling factorials
/// (Stirling coefficients) and send every falling factorial to 1.
BigInt rota_bell_exact(std::uint64_t n);

/// Exact Poisson(1) expectation: X^m -> B_m, extended linearly. Works for any
/// coefficient ring that can be scaled by an integer (rationals, q-polynomials).
template <class Coeff, class Var>
Coeff poisson_moment_exact(const Polynomial<Coeff, Var>& p) {
  Coeff out{};
  for (std::size_t m = 0; m < p.size(); ++m) out += p.coefficient(m) * Rational(rota_bell_exact(m));
  return out;
}

/// Truncated formal power series in t, exact coefficients.
struct TruncatedSeries {
  std::vector<Rational> coefficients;
  long truncation_order() const { return static_cast<long>(coefficients.size()) - 1; }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

/// Jackson q-derivative: a_n t^n -> a_n [n]_q t^(n-1). Drops one order.
TruncatedSeries jackson_derivative(const TruncatedSeries& s, const Rational& q);

/// Outcome of the generating-function checks on a psi-Poisson pmf.
struct GeneratingFunctionVerdicts {
  /// n-th Jackson derivative at t = 0 over [n]_q!, as an enclosure.
  PmfBounds extracted;
  PmfBounds pmf_bound;
  bool coefficient_ok = false;
  /// [d_q G](1); only computed for lambda = 1.
  std::optional<CertifiedValue> mean;
  std::optional<bool> mean_ok;
};

/// Builds G(t) to `order` from the pmf bounds, extracts p_n through n Jackson
/// derivatives, and for lambda = 1 checks that [d_q G](1) encloses 1.
/// seq must be Classical or Gauss q; order >= n.
GeneratingFunctionVerdicts verify_pmf_via_generating_function(const PsiSequence& seq,
                                                              const Rational& lambda, std::uint64_t n,
                                                              std::uint64_t order,
                                                              const SumOptions& options = {});

}  // namespace umbraldob
