#include "umbraldob/cigl.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "umbraldob/dobinski.hpp"
#include "umbraldob/errors.hpp"

namespace umbraldob {

SetPartition::SetPartition(std::vector<std::uint8_t> rgs) : rgs_(std::move(rgs)) {
  std::uint8_t running_max = 0;
  for (std::size_t i = 0; i < rgs_.size(); ++i) {
    if (i == 0 ? rgs_[0] != 0 : rgs_[i] > running_max + 1) {
      throw std::invalid_argument("not a restricted growth string at position " + std::to_string(i));
    }
    running_max = std::max(running_max, rgs_[i]);
  }
}

std::uint32_t SetPartition::block_count() const {
  if (rgs_.empty()) return 0;
  return 1U + *std::max_element(rgs_.begin(), rgs_.end());
}

std::vector<std::vector<std::uint32_t>> SetPartition::blocks() const {
  std::vector<std::vector<std::uint32_t>> out(block_count());
  for (std::size_t i = 0; i < rgs_.size(); ++i) out[rgs_[i]].push_back(static_cast<std::uint32_t>(i));
  return out;
}

PartitionEnumerator::PartitionEnumerator(std::uint32_t n) : n_(n) {
  if (n > kEnumerationCap) {
    throw CapExceededError("partition enumeration capped at n=" + std::to_string(kEnumerationCap) +
                           ", got n=" + std::to_string(n));
  }
  current_.rgs_.assign(n, 0);
  prefix_max_.assign(n, 0);
}

const SetPartition* PartitionEnumerator::next() {
  if (done_) return nullptr;
  if (!started_) {
    started_ = true;
    return &current_;
  }
  auto& rgs = current_.rgs_;
  std::size_t i = n_;
  while (i > 1) {
    --i;
    if (rgs[i] <= prefix_max_[i - 1]) {
      ++rgs[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], rgs[i]);
      for (std::size_t j = i + 1; j < n_; ++j) {
        rgs[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      return &current_;
    }
  }
  done_ = true;
  return nullptr;
}

std::uint64_t cigl_statistic(const SetPartition& p) {
  std::uint64_t sum = 0;
  const auto& rgs = p.rgs();
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    if (rgs[i] == 0) sum += i;
  }
  return sum;
}

CiglWeightedCount cigl_weighted_count(std::uint32_t n) {
  PartitionEnumerator partitions(n);
  const std::size_t max_stat = static_cast<std::size_t>(n) * (n == 0 ? 0 : n - 1) / 2;
  // counts[k][s]: number of k-block partitions with cigl statistic s.
  std::vector<std::vector<std::uint64_t>> counts(n + 1, std::vector<std::uint64_t>(max_stat + 1, 0));
  while (const SetPartition* p = partitions.next()) {
    ++counts[p->block_count()][cigl_statistic(*p)];
  }
  CiglWeightedCount out;
  out.n = n;
  for (std::uint32_t k = 0; k <= n; ++k) {
    std::vector<Rational> coeffs;
    coeffs.reserve(counts[k].size());
    for (auto c : counts[k]) coeffs.emplace_back(c);
    QPolynomial poly(std::move(coeffs));
    if (!poly.is_zero()) out.by_blocks.emplace(k, std::move(poly));
  }
  return out;
}

QPolynomial cigl_q_stirling(std::uint32_t n, std::uint32_t k) {
  const auto counts = cigl_weighted_count(n);
  const auto it = counts.by_blocks.find(k);
  return it == counts.by_blocks.end() ? QPolynomial() : it->second;
}

QPolynomial cigl_q_bell(std::uint32_t n) {
  QPolynomial sum;
  for (const auto& [k, poly] : cigl_weighted_count(n).by_blocks) sum += poly;
  return sum;
}

XQPolynomial cigl_q_power(std::uint32_t n) {
  XQPolynomial product = XQPolynomial::constant(QPolynomial::constant(Rational(1)));
  for (std::uint32_t i = 0; i < n; ++i) {
    // X + (q^i - 1)
    const QPolynomial shift = QPolynomial::monomial(i) - QPolynomial::constant(Rational(1));
    product *= XQPolynomial({shift, QPolynomial::constant(Rational(1))});
  }
  return product;
}

QPolynomial cigl_q_dobinski_exact(std::uint32_t n) { return poisson_moment_exact(cigl_q_power(n)); }

}  // namespace umbraldob
