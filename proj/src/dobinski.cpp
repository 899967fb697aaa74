#include "umbraldob/dobinski.hpp"

#include <stdexcept>

#include "umbraldob/errors.hpp"
#include "umbraldob/umbral.hpp"

namespace umbraldob {

namespace {

// Certified sum_k weight(k) * lambda^k / k_psi! for a non-negative weight.
template <class Weight>
CertifiedValue psi_weighted_series(const PsiSequence& seq, const Rational& lambda, Weight weight,
                                   const SumOptions& options) {
  PsiFactorialCache cache(seq);
  const TermFunction term = [&](std::size_t k) -> Rational {
    Rational w = weight(cache, k);
    if (w.is_zero()) return w;
    return w * pow(lambda, k) / cache.factorial(k);
  };
  return certified_sum(term, series_options(seq, lambda, options));
}

std::pair<XPolynomial, XPolynomial> split_by_sign(const XPolynomial& p) {
  std::vector<Rational> pos(p.size());
  std::vector<Rational> neg(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational c = p.coefficient(i);
    if (c.sign() > 0) pos[i] = c;
    if (c.sign() < 0) neg[i] = -c;
  }
  return {XPolynomial(std::move(pos)), XPolynomial(std::move(neg))};
}

Rational q_number(const Rational& q, std::uint64_t n) {
  Rational sum;
  Rational power(1);
  for (std::uint64_t i = 0; i < n; ++i) {
    sum += power;
    power *= q;
  }
  return sum;
}

}  // namespace

SumOptions series_options(const PsiSequence& seq, const Rational& lambda, const SumOptions& base) {
  SumOptions out = base;
  const auto limit = seq.exponential_ratio_limit(lambda);
  if (!limit) return out;
  if (*limit >= Rational(1)) {
    throw NonConvergentError("psi-exponential series for " + seq.description() + " at lambda=" +
                             lambda.to_display() + " diverges (limiting ratio " +
                             limit->to_display() + ")");
  }
  if (*limit >= out.ratio_threshold) out.ratio_threshold = (Rational(1) + *limit) / Rational(2);
  return out;
}

CertifiedValue psi_exp(const PsiSequence& seq, const Rational& lambda, const SumOptions& options) {
  if (lambda.sign() <= 0) throw std::invalid_argument("lambda must be positive");
  return psi_weighted_series(
      seq, lambda, [](PsiFactorialCache&, std::size_t) { return Rational(1); }, options);
}

PsiPoissonDistribution::PsiPoissonDistribution(PsiSequence seq, Rational lambda, const SumOptions& options)
    : seq_(std::move(seq)), lambda_(std::move(lambda)) {
  if (lambda_.sign() <= 0) throw std::invalid_argument("lambda must be positive");
  normalizer_ = psi_exp(seq_, lambda_, options);
}

Rational PsiPoissonDistribution::unnormalized(std::uint64_t k) const {
  return pow(lambda_, k) / psi_factorial(seq_, k);
}

PmfBounds PsiPoissonDistribution::pmf(std::uint64_t k) const {
  const Rational t = unnormalized(k);
  return {t / normalizer_.hi(), t / normalizer_.lo()};
}

PmfBounds pmf(const PsiPoissonDistribution& dist, std::uint64_t k) { return dist.pmf(k); }

CertifiedValue moment_functional(const PsiSequence& seq, const Rational& lambda, const XPolynomial& p,
                                 const SumOptions& options) {
  if (lambda.sign() <= 0) throw std::invalid_argument("lambda must be positive");
  const auto [positive, negative] = split_by_sign(p);
  auto part = [&](const XPolynomial& poly) {
    if (poly.is_zero()) return CertifiedValue();
    return psi_weighted_series(
        seq, lambda,
        [&poly](PsiFactorialCache& cache, std::size_t k) { return poly.evaluate(cache.value(k)); },
        options);
  };
  CertifiedValue sum = part(positive);
  if (!negative.is_zero()) sum = sum - part(negative);
  return sum / psi_exp(seq, lambda, options);
}

CertifiedValue verify_falling_moment(const PsiSequence& seq, std::uint64_t n, const SumOptions& options) {
  const Rational one(1);
  const CertifiedValue sum = psi_weighted_series(
      seq, one,
      [n](PsiFactorialCache& cache, std::size_t k) {
        if (n > k) return Rational(0);
        Rational product(1);
        for (std::uint64_t i = 0; i < n; ++i) product *= cache.value(k - i);
        return product;
      },
      options);
  return sum / psi_exp(seq, one, options);
}

CertifiedValue dobinski_bell(const PsiSequence& seq, std::uint64_t n, const SumOptions& options) {
  return moment_functional(seq, Rational(1), XPolynomial::variable_power(n), options);
}

BigInt rota_bell_exact(std::uint64_t n) {
  BigInt sum = 0;
  for (const auto& s : stirling2_row(n)) sum += s;
  return sum;
}

TruncatedSeries jackson_derivative(const TruncatedSeries& s, const Rational& q) {
  TruncatedSeries out;
  for (std::size_t n = 1; n < s.coefficients.size(); ++n) {
    out.coefficients.push_back(s.coefficients[n] * q_number(q, n));
  }
  return out;
}

GeneratingFunctionVerdicts verify_pmf_via_generating_function(const PsiSequence& seq,
                                                              const Rational& lambda, std::uint64_t n,
                                                              std::uint64_t order,
                                                              const SumOptions& options) {
  if (!seq.is_classical() && !seq.is_gauss_q()) {
    throw std::invalid_argument("generating-function check needs a classical or Gauss q sequence");
  }
  if (order < n) throw std::invalid_argument("order must be at least n");
  const Rational q = seq.q_parameter();
  const PsiPoissonDistribution dist(seq, lambda, options);

  TruncatedSeries lower;
  TruncatedSeries upper;
  for (std::uint64_t k = 0; k <= order; ++k) {
    const PmfBounds b = dist.pmf(k);
    lower.coefficients.push_back(b.lo);
    upper.coefficients.push_back(b.hi);
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    lower = jackson_derivative(lower, q);
    upper = jackson_derivative(upper, q);
  }
  const Rational factorial = psi_factorial(seq, n);

  GeneratingFunctionVerdicts out;
  out.extracted = {lower.coefficients.at(0) / factorial, upper.coefficients.at(0) / factorial};
  out.pmf_bound = dist.pmf(n);
  out.coefficient_ok = out.pmf_bound.lo <= out.extracted.lo && out.extracted.hi <= out.pmf_bound.hi;
  if (lambda == Rational(1)) {
    // [d_q G](1) = sum_k p_k [k]_q, i.e. the moment functional of X.
    out.mean = moment_functional(seq, lambda, XPolynomial::variable_power(1), options);
    out.mean_ok = out.mean->contains(Rational(1));
  }
  return out;
}

}  // namespace umbraldob
