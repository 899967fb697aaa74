#pragma once

#include <cstdint>
#include <optional>

#include "umbraldob/polynomial.hpp"

namespace umbraldob {

// The number operator xD conjugated by e^x acts on the polynomial prefactor
// of p(x) e^x as p -> x (p' + p). Everything here works on that prefactor.

/// x (p'(x) + p(x)).
XPolynomial apply_number_operator(const XPolynomial& p);

/// phi_n(x) = e^-x (xD)^n e^x, i.e. n applications of the number operator to 1.
XPolynomial exponential_polynomial(std::uint64_t n);

/// Truncated power series computation of e^-x (xD)(p(x) e^x), kept to
/// `order` terms. Independent of apply_number_operator.
XPolynomial conjugated_number_operator_series(const XPolynomial& p, std::size_t order);

struct ConjugationVerdict {
  bool passed = true;
  /// First monomial degree at which the routes disagree.
  std::optional<std::uint64_t> failing_degree;
};

/// For every x^m with m <= max_degree, compares x(D+1) x^m built from
/// derivative and shift, apply_number_operator(x^m), and the truncated series
/// conjugation e^-x (xD) (x^m e^x).
ConjugationVerdict verify_conjugation(std::uint64_t max_degree);

/// phi_n(1), which equals the Bell number B_n.
Rational dobinski_specialization(std::uint64_t n);

}  // namespace umbraldob
