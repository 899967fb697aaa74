#include "umbraldob/operator_calc.hpp"

#include <vector>

namespace umbraldob {

XPolynomial apply_number_operator(const XPolynomial& p) { return (p.derivative() + p).shifted(1); }

XPolynomial exponential_polynomial(std::uint64_t n) {
  XPolynomial phi = XPolynomial::constant(Rational(1));
  for (std::uint64_t i = 0; i < n; ++i) phi = apply_number_operator(phi);
  return phi;
}

XPolynomial conjugated_number_operator_series(const XPolynomial& p, std::size_t order) {
  // exp(+x) and exp(-x) coefficients up to `order`.
  std::vector<Rational> exp_plus(order);
  std::vector<Rational> exp_minus(order);
  Rational factorial(1);
  for (std::size_t i = 0; i < order; ++i) {
    if (i > 0) factorial *= Rational(i);
    exp_plus[i] = Rational(1) / factorial;
    exp_minus[i] = i % 2 == 0 ? exp_plus[i] : -exp_plus[i];
  }
  // f = p e^x
  std::vector<Rational> f(order);
  for (std::size_t i = 0; i < p.size() && i < order; ++i) {
    for (std::size_t j = 0; i + j < order; ++j) f[i + j] += p.coefficient(i) * exp_plus[j];
  }
  // (xD) f multiplies the coefficient of x^i by i.
  for (std::size_t i = 0; i < order; ++i) f[i] *= Rational(i);
  std::vector<Rational> out(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; i + j < order; ++j) out[i + j] += f[i] * exp_minus[j];
  }
  return XPolynomial(std::move(out));
}

ConjugationVerdict verify_conjugation(std::uint64_t max_degree) {
  ConjugationVerdict verdict;
  for (std::uint64_t m = 0; m <= max_degree; ++m) {
    const XPolynomial monomial = XPolynomial::variable_power(m);
    // x (D + 1) x^m = m x^m + x^(m+1)
    const XPolynomial lhs = XPolynomial::monomial(m, Rational(m)) + XPolynomial::monomial(m + 1);
    const XPolynomial operator_side = apply_number_operator(monomial);
    // Four spare orders show that the series result has no tail beyond degree m+1.
    const XPolynomial series_side = conjugated_number_operator_series(monomial, m + 6);
    if (lhs != operator_side || lhs != series_side) {
      verdict.passed = false;
      verdict.failing_degree = m;
      break;
    }
  }
  return verdict;
}

Rational dobinski_specialization(std::uint64_t n) { return exponential_polynomial(n).evaluate(Rational(1)); }

}  // namespace umbraldob
