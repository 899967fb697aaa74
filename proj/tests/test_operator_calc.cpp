#include <doctest.h>

#include "oracles.hpp"
#include "umbraldob/dobinski.hpp"
#include "umbraldob/operator_calc.hpp"

using namespace umbraldob;

namespace {

XPolynomial x_poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> out;
  for (long c : coeffs) out.emplace_back(c);
  return XPolynomial(std::move(out));
}

}  // namespace

TEST_CASE("number operator on the prefactor") {
  CHECK(apply_number_operator(x_poly({1})) == x_poly({0, 1}));
  CHECK(apply_number_operator(x_poly({0, 1})) == x_poly({0, 1, 1}));
  CHECK(apply_number_operator(x_poly({0, 1, 1})) == x_poly({0, 1, 3, 1}));
  CHECK(apply_number_operator(XPolynomial()).is_zero());
}

TEST_CASE("series conjugation agrees with the closed form") {
  for (std::size_t m = 0; m <= 8; ++m) {
    const XPolynomial p = XPolynomial::variable_power(m);
    CHECK(conjugated_number_operator_series(p, m + 6) == apply_number_operator(p));
  }
  const XPolynomial mixed = x_poly({3, -2, 0, 5});
  CHECK(conjugated_number_operator_series(mixed, 10) == apply_number_operator(mixed));
}

TEST_CASE("exponential polynomials") {
  CHECK(exponential_polynomial(0) == x_poly({1}));
  CHECK(exponential_polynomial(1) == x_poly({0, 1}));
  CHECK(exponential_polynomial(2) == x_poly({0, 1, 1}));
  CHECK(exponential_polynomial(3) == x_poly({0, 1, 3, 1}));
  for (unsigned n = 0; n <= 15; ++n) {
    const auto phi = exponential_polynomial(n);
    CHECK(phi.degree() == static_cast<long>(n));
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(phi.coefficient(k) == Rational(oracle::stirling2_inclusion_exclusion(n, k)));
    }
  }
}

TEST_CASE("conjugation identity") {
  CHECK(verify_conjugation(0).passed);
  CHECK(verify_conjugation(1).passed);
  const auto verdict = verify_conjugation(20);
  CHECK(verdict.passed);
  CHECK(!verdict.failing_degree.has_value());
}

TEST_CASE("Dobinski specialization at x = 1") {
  CHECK(dobinski_specialization(2) == Rational(2));
  CHECK(dobinski_specialization(0) == Rational(1));
  CHECK(dobinski_specialization(5) == Rational(52));
  const auto bells = oracle::bell_triangle(15);
  for (std::uint64_t n = 0; n <= 15; ++n) {
    CHECK(dobinski_specialization(n) == Rational(bells[n]));
    CHECK(dobinski_specialization(n) == Rational(rota_bell_exact(n)));
  }
  for (std::uint64_t n = 0; n <= 10; ++n) {
    CHECK(dobinski_bell(PsiSequence::classical(), n).contains(dobinski_specialization(n)));
  }
}
