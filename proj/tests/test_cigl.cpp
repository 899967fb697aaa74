#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "umbraldob/cigl.hpp"
#include "umbraldob/errors.hpp"

using namespace umbraldob;

namespace {

QPolynomial q_poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> out;
  for (long c : coeffs) out.emplace_back(c);
  return QPolynomial(std::move(out));
}

std::uint64_t count_partitions(std::uint32_t n) {
  PartitionEnumerator e(n);
  std::uint64_t count = 0;
  while (e.next() != nullptr) ++count;
  return count;
}

}  // namespace

TEST_CASE("partition enumeration counts") {
  CHECK(count_partitions(3) == 5);
  CHECK(count_partitions(0) == 1);
  CHECK(count_partitions(5) == 52);
  const auto bells = oracle::bell_triangle(11);
  for (std::uint32_t n = 0; n <= 11; ++n) CHECK(BigInt(static_cast<unsigned long>(count_partitions(n))) == bells[n]);
  CHECK_THROWS_AS(PartitionEnumerator(14), CapExceededError);
}

TEST_CASE("enumeration is lexicographic, unique and well formed") {
  for (std::uint32_t n = 0; n <= 8; ++n) {
    PartitionEnumerator e(n);
    std::set<std::vector<std::uint8_t>> seen;
    std::vector<std::uint8_t> previous;
    bool first = true;
    while (const SetPartition* p = e.next()) {
      CHECK(p->size() == n);
      // Reconstructing validates the restricted growth property.
      CHECK_NOTHROW(SetPartition(p->rgs()));
      if (!first) CHECK(previous < p->rgs());
      previous = p->rgs();
      first = false;
      CHECK(seen.insert(p->rgs()).second);
    }
    CHECK(seen.size() == oracle::all_partitions(static_cast<int>(n)).size());
    CHECK(e.next() == nullptr);
  }
}

TEST_CASE("SetPartition validation and blocks") {
  CHECK_THROWS_AS(SetPartition({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition({0, 1, 3}), std::invalid_argument);
  const SetPartition p({0, 1, 0, 2});
  CHECK(p.block_count() == 3);
  CHECK(p.blocks() == std::vector<std::vector<std::uint32_t>>{{0, 2}, {1}, {3}});
  CHECK(SetPartition().block_count() == 0);
}

TEST_CASE("cigl statistic") {
  CHECK(cigl_statistic(SetPartition({0, 0, 0})) == 3);
  CHECK(cigl_statistic(SetPartition({0, 1, 2})) == 0);
  CHECK(cigl_statistic(SetPartition({0, 1, 0})) == 2);
  CHECK(cigl_statistic(SetPartition()) == 0);
}

TEST_CASE("cigl q-Stirling and q-Bell examples") {
  CHECK(cigl_q_stirling(2, 1) == q_poly({0, 1}));
  CHECK(cigl_q_stirling(2, 2) == q_poly({1}));
  CHECK(cigl_q_stirling(3, 2) == q_poly({1, 1, 1}));
  CHECK(cigl_q_stirling(3, 5).is_zero());
  CHECK(cigl_q_bell(2) == q_poly({1, 1}));
  CHECK(cigl_q_bell(3) == q_poly({2, 1, 1, 1}));
  CHECK(cigl_q_bell(0) == q_poly({1}));
  CHECK_THROWS_AS(cigl_q_bell(14), CapExceededError);
}

TEST_CASE("cigl polynomials match brute-force enumeration") {
  for (int n = 0; n <= 9; ++n) {
    CHECK(cigl_q_bell(n) == oracle::cigl_polynomial(n, -1));
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(cigl_q_stirling(n, k) == oracle::cigl_polynomial(n, k));
    }
  }
}

TEST_CASE("cigl q-Stirling at q=1 is S(n,k)") {
  for (std::uint32_t n = 0; n <= 10; ++n) {
    const auto counts = cigl_weighted_count(n);
    CHECK(counts.n == n);
    Rational total;
    for (std::uint32_t k = 0; k <= n; ++k) {
      const Rational at_one = cigl_q_stirling(n, k).evaluate(Rational(1));
      CHECK(at_one == Rational(oracle::stirling2_inclusion_exclusion(n, k)));
      total += at_one;
    }
    CHECK(total == Rational(oracle::bell_triangle(n)[n]));
  }
}

TEST_CASE("cigl q-power expansion") {
  const XQPolynomial x = XQPolynomial::variable_power(1);
  CHECK(cigl_q_power(0) == XQPolynomial::constant(q_poly({1})));
  CHECK(cigl_q_power(1) == x);
  CHECK(cigl_q_power(2) == XQPolynomial{QPolynomial(), q_poly({-1, 1}), q_poly({1})});
  const QPolynomial q_minus_1 = q_poly({-1, 1});
  const QPolynomial q2_minus_1 = q_poly({-1, 0, 1});
  CHECK(cigl_q_power(3) ==
        XQPolynomial{QPolynomial(), q_minus_1 * q2_minus_1, q_poly({-2, 1, 1}), q_poly({1})});
}

TEST_CASE("cigl q-Dobinski exact evaluation") {
  CHECK(cigl_q_dobinski_exact(2) == q_poly({1, 1}));
  CHECK(cigl_q_dobinski_exact(3) == q_poly({2, 1, 1, 1}));
  CHECK(cigl_q_dobinski_exact(0) == q_poly({1}));
}

TEST_CASE("cigl q-Dobinski formula holds (two independent routes)") {
  for (std::uint32_t n = 0; n <= 10; ++n) {
    CAPTURE(n);
    const QPolynomial bell = cigl_q_bell(n);
    CHECK(cigl_q_dobinski_exact(n) == bell);
    CHECK(bell.evaluate(Rational(1)) == Rational(oracle::bell_triangle(n)[n]));
    if (n >= 1) {
      CHECK(bell.degree() == static_cast<long>(n * (n - 1) / 2));
      CHECK(bell.leading() == Rational(1));
    }
  }
}
