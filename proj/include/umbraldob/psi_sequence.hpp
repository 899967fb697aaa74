#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "umbraldob/rational.hpp"

namespace umbraldob {

/// Admissible sequence psi with psi(0) = 0 and psi(n) > 0 for n >= 1.
///
/// psi(n) is written n_psi; it generalizes n (classical) and the Gauss
/// q-number [n]_q. Construct through the named factories, which validate
/// admissibility and throw InadmissibleSequenceError.
class PsiSequence {
 public:
  struct Classical {};
  struct GaussQ {
    Rational q;
  };
  struct Fibonacci {};
  struct Custom {
    /// psi(0), psi(1), ... as provided.
    std::vector<Rational> values;
  };
  using Kind = std::variant<Classical, GaussQ, Fibonacci, Custom>;

  static PsiSequence classical();
  static PsiSequence gauss_q(const Rational& q);
  static PsiSequence fibonacci();
  static PsiSequence custom(std::vector<Rational> values);

  const Kind& kind() const { return kind_; }
  const std::string& description() const { return description_; }

  bool is_classical() const { return std::holds_alternative<Classical>(kind_); }
  bool is_gauss_q() const { return std::holds_alternative<GaussQ>(kind_); }
  /// The q of a GaussQ sequence, 1 for Classical. Throws std::logic_error otherwise.
  Rational q_parameter() const;

  /// n_psi. Throws OutOfRangeError past the end of a custom list.
  Rational value(std::uint64_t n) const;

  /// lim_k lambda / psi(k+1), the limiting term ratio of the psi-exponential
  /// series at lambda. Empty for custom sequences, where it is unknown.
  std::optional<Rational> exponential_ratio_limit(const Rational& lambda) const;

 private:
  PsiSequence(Kind kind, std::string description)
      : kind_(std::move(kind)), description_(std::move(description)) {}

  Kind kind_;
  std::string description_;
};

Rational psi_value(const PsiSequence& seq, std::uint64_t n);

/// n_psi! = psi(n) * (n-1)_psi!, with 0_psi! = 1.
Rational psi_factorial(const PsiSequence& seq, std::uint64_t n);

/// psi(x) psi(x-1) ... psi(x-k+1). Zero whenever k > x since psi(0) = 0 enters.
Rational psi_falling_factorial(const PsiSequence& seq, std::uint64_t x, std::uint64_t k);

/// Incrementally extended table of psi(0..n) and n_psi!. Not thread-safe;
/// intended to live inside a single series evaluation.
class PsiFactorialCache {
 public:
  explicit PsiFactorialCache(const PsiSequence& seq);

  const Rational& value(std::uint64_t n);
  const Rational& factorial(std::uint64_t n);

 private:
  void extend(std::uint64_t n);

  PsiSequence seq_;
  std::vector<Rational> values_;
  std::vector<Rational> factorials_;
};

}  // namespace umbraldob
