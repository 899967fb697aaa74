#pragma once

#include <cstdint>
#include <vector>

#include "umbraldob/polynomial.hpp"
#include "umbraldob/psi_sequence.hpp"
#include "umbraldob/rational.hpp"

namespace umbraldob {

/// Gauss q-number 1 + q + ... + q^(n-1) as a polynomial in q; zero for n = 0.
QPolynomial q_number_symbolic(std::uint64_t n);

/// [n]_q! as a polynomial in q.
QPolynomial q_factorial_symbolic(std::uint64_t n);

/// Stirling number of the second kind, S(n, k).
BigInt stirling2(std::uint64_t n, std::uint64_t k);

/// Row S(n, 0..n).
std::vector<BigInt> stirling2_row(std::uint64_t n);

/// Triangle of Stirling-type numbers, entry (n, k) for 0 <= k <= n <= n_max.
/// Classical triangles hold degree-0 polynomials.
class StirlingTable {
 public:
  explicit StirlingTable(std::vector<std::vector<QPolynomial>> rows);

  std::uint64_t n_max() const { return rows_.size() - 1; }
  /// Zero for k > n; throws std::out_of_range for n > n_max.
  const QPolynomial& at(std::uint64_t n, std::uint64_t k) const;
  const std::vector<QPolynomial>& row(std::uint64_t n) const;

 private:
  std::vector<std::vector<QPolynomial>> rows_;
};

StirlingTable classical_stirling_table(std::uint64_t n_max);

/// Carlitz q-Stirling numbers from the expansion
///   [x]_q^n = sum_k S_q(n, k) [x]_q [x-1]_q ... [x-k+1]_q
/// solved as a lower-triangular system on x = 0..n over Q[q].
/// Throws InconsistentSystemError if a pivot division is not exact.
StirlingTable carlitz_q_stirling(std::uint64_t n_max);

/// Same triangle from S_q(n+1, k) = q^(k-1) S_q(n, k-1) + [k]_q S_q(n, k).
/// The recursion follows from the expansion above; it is checked against
/// the triangular solve in the tests before being trusted.
StirlingTable carlitz_q_stirling_recursive(std::uint64_t n_max);

/// Result of fitting psi(k)^n = sum_j c_j psi_falling(k, j) on k = 0..n.
struct PsiStirlingDiagnostic {
  /// c_0 .. c_n.
  std::vector<Rational> coefficients;
  /// Residual at k = n+1 .. probe_limit.
  std::vector<Rational> residuals;

  bool consistent() const;
};

/// Solves for constant psi-Stirling coefficients on k = 0..n and reports the
/// residuals at the probe points k = n+1..probe_limit. All-zero residuals
/// mean the expansion with constant coefficients holds on the probed range.
PsiStirlingDiagnostic psi_stirling_diagnostic(const PsiSequence& seq, std::uint64_t n,
                                              std::uint64_t probe_limit);

/// sum_k entry(n, k).
QPolynomial bell_via_sum(const StirlingTable& table, std::uint64_t n);

}  // namespace umbraldob
