#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "umbraldob/polynomial.hpp"

namespace umbraldob {

/// Largest ground-set size the enumerator accepts (B_13 = 27,644,437).
inline constexpr std::uint32_t kEnumerationCap = 13;

/// Partition of {0, ..., n-1} as a restricted growth string: rgs[i] is the
/// block of element i, rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]).
class SetPartition {
 public:
  SetPartition() = default;
  /// Throws std::invalid_argument if `rgs` is not a restricted growth string.
  explicit SetPartition(std::vector<std::uint8_t> rgs);

  std::size_t size() const { return rgs_.size(); }
  const std::vector<std::uint8_t>& rgs() const { return rgs_; }
  std::uint32_t block_count() const;
  std::vector<std::vector<std::uint32_t>> blocks() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  friend class PartitionEnumerator;
  std::vector<std::uint8_t> rgs_;
};

/// Streams every partition of {0, ..., n-1} once, in lexicographic rgs order.
///
///   PartitionEnumerator e(5);
///   while (const SetPartition* p = e.next()) { ... }
///
/// The returned pointer is valid until the following call to next().
class PartitionEnumerator {
 public:
  /// Throws CapExceededError for n > kEnumerationCap.
  explicit PartitionEnumerator(std::uint32_t n);

  const SetPartition* next();

 private:
  std::uint32_t n_;
  bool started_ = false;
  bool done_ = false;
  SetPartition current_;
  // prefix_max_[i] = max(rgs[0..i])
  std::vector<std::uint8_t> prefix_max_;
};

/// Sum of the elements in the block containing 0.
std::uint64_t cigl_statistic(const SetPartition& p);

/// Generating polynomials sum q^cigl over the k-block partitions, per k.
struct CiglWeightedCount {
  std::uint32_t n = 0;
  std::map<std::uint32_t, QPolynomial> by_blocks;
};

CiglWeightedCount cigl_weighted_count(std::uint32_t n);

QPolynomial cigl_q_stirling(std::uint32_t n, std::uint32_t k);
QPolynomial cigl_q_bell(std::uint32_t n);

/// X (X + q - 1) (X + q^2 - 1) ... (X + q^(n-1) - 1).
XQPolynomial cigl_q_power(std::uint32_t n);

/// Poisson(1) average of cigl_q_power(n), evaluated exactly through X^m -> B_m.
QPolynomial cigl_q_dobinski_exact(std::uint32_t n);

}  // namespace umbraldob
