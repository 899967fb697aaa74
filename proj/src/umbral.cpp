#include "umbraldob/umbral.hpp"

#include <stdexcept>
#include <string>

#include "umbraldob/errors.hpp"

namespace umbraldob {

namespace {

QPolynomial power(const QPolynomial& base, std::uint64_t exponent) {
  QPolynomial out = QPolynomial::constant(Rational(1));
  for (std::uint64_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

// falling[j][k] = [j]_q [j-1]_q ... [j-k+1]_q for 0 <= k <= j <= n_max.
std::vector<std::vector<QPolynomial>> q_falling_table(std::uint64_t n_max) {
  std::vector<QPolynomial> numbers;
  for (std::uint64_t j = 0; j <= n_max; ++j) numbers.push_back(q_number_symbolic(j));
  std::vector<std::vector<QPolynomial>> falling(n_max + 1);
  for (std::uint64_t j = 0; j <= n_max; ++j) {
    falling[j].push_back(QPolynomial::constant(Rational(1)));
    for (std::uint64_t k = 1; k <= j; ++k) falling[j].push_back(falling[j][k - 1] * numbers[j - k + 1]);
  }
  return falling;
}

}  // namespace

QPolynomial q_number_symbolic(std::uint64_t n) {
  return QPolynomial(std::vector<Rational>(n, Rational(1)));
}

QPolynomial q_factorial_symbolic(std::uint64_t n) {
  QPolynomial out = QPolynomial::constant(Rational(1));
  for (std::uint64_t i = 1; i <= n; ++i) out *= q_number_symbolic(i);
  return out;
}

std::vector<BigInt> stirling2_row(std::uint64_t n) {
  std::vector<BigInt> row{1};
  for (std::uint64_t m = 1; m <= n; ++m) {
    std::vector<BigInt> next(m + 1, BigInt(0));
    for (std::uint64_t k = 1; k <= m; ++k) {
      next[k] = row[k - 1];
      if (k < m) next[k] += BigInt(static_cast<unsigned long>(k)) * row[k];
    }
    row = std::move(next);
  }
  return row;
}

BigInt stirling2(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  return stirling2_row(n)[k];
}

StirlingTable::StirlingTable(std::vector<std::vector<QPolynomial>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("Stirling table needs at least row 0");
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) throw std::invalid_argument("Stirling table row has wrong length");
  }
}

const QPolynomial& StirlingTable::at(std::uint64_t n, std::uint64_t k) const {
  static const QPolynomial zero;
  const auto& r = row(n);
  return k < r.size() ? r[k] : zero;
}

const std::vector<QPolynomial>& StirlingTable::row(std::uint64_t n) const {
  if (n >= rows_.size()) {
    throw std::out_of_range("row " + std::to_string(n) + " beyond table n_max " +
                            std::to_string(n_max()));
  }
  return rows_[n];
}

StirlingTable classical_stirling_table(std::uint64_t n_max) {
  std::vector<std::vector<QPolynomial>> rows;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    std::vector<QPolynomial> r;
    for (const auto& s : stirling2_row(n)) r.push_back(QPolynomial::constant(Rational(s)));
    rows.push_back(std::move(r));
  }
  return StirlingTable(std::move(rows));
}

StirlingTable carlitz_q_stirling(std::uint64_t n_max) {
  const auto falling = q_falling_table(n_max);
  std::vector<std::vector<QPolynomial>> rows;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    std::vector<QPolynomial> coeffs;
    for (std::uint64_t j = 0; j <= n; ++j) {
      // Row x = j: [j]_q^n = sum_{k<=j} c_k falling(j, k).
      QPolynomial rhs = power(q_number_symbolic(j), n);
      for (std::uint64_t k = 0; k < j; ++k) rhs -= coeffs[k] * falling[j][k];
      auto [quotient, remainder] = divide(rhs, falling[j][j]);
      if (!remainder.is_zero()) {
        throw InconsistentSystemError("non-exact pivot division at n=" + std::to_string(n) +
                                      ", k=" + std::to_string(j));
      }
      coeffs.push_back(std::move(quotient));
    }
    rows.push_back(std::move(coeffs));
  }
  return StirlingTable(std::move(rows));
}

StirlingTable carlitz_q_stirling_recursive(std::uint64_t n_max) {
  std::vector<std::vector<QPolynomial>> rows;
  rows.push_back({QPolynomial::constant(Rational(1))});
  for (std::uint64_t n = 0; n < n_max; ++n) {
    const auto& prev = rows.back();
    std::vector<QPolynomial> next(n + 2);
    for (std::uint64_t k = 1; k <= n + 1; ++k) {
      next[k] = prev[k - 1].shifted(k - 1);
      if (k <= n) next[k] += q_number_symbolic(k) * prev[k];
    }
    rows.push_back(std::move(next));
  }
  return StirlingTable(std::move(rows));
}

bool PsiStirlingDiagnostic::consistent() const {
  for (const auto& r : residuals) {
    if (!r.is_zero()) return false;
  }
  return true;
}

PsiStirlingDiagnostic psi_stirling_diagnostic(const PsiSequence& seq, std::uint64_t n,
                                              std::uint64_t probe_limit) {
  if (probe_limit <= n) throw std::invalid_argument("probe_limit must exceed n");
  PsiStirlingDiagnostic out;
  auto expanded = [&](std::uint64_t k) {
    Rational sum;
    for (std::uint64_t j = 0; j < out.coefficients.size() && j <= k; ++j) {
      sum += out.coefficients[j] * psi_falling_factorial(seq, k, j);
    }
    return sum;
  };
  for (std::uint64_t j = 0; j <= n; ++j) {
    const Rational lhs = pow(seq.value(j), n);
    const Rational pivot = psi_falling_factorial(seq, j, j);
    out.coefficients.push_back((lhs - expanded(j)) / pivot);
  }
  for (std::uint64_t k = n + 1; k <= probe_limit; ++k) {
    out.residuals.push_back(pow(seq.value(k), n) - expanded(k));
  }
  return out;
}

QPolynomial bell_via_sum(const StirlingTable& table, std::uint64_t n) {
  QPolynomial sum;
  for (const auto& entry : table.row(n)) sum += entry;
  return sum;
}

}  // namespace umbraldob
