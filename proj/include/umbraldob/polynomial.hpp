#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "umbraldob/errors.hpp"
#include "umbraldob/rational.hpp"

namespace umbraldob {

/// Indeterminate tags. They keep q-polynomials and x-polynomials apart at
/// the type level while sharing one implementation.
struct QVar {
  static constexpr std::string_view symbol = "q";
};
struct XVar {
  static constexpr std::string_view symbol = "x";
};

/// Dense univariate polynomial. Coefficient i multiplies var^i.
///
/// The stored list is trimmed so that the last entry is nonzero; the zero
/// polynomial is the empty list. `Coeff{}` must be the additive identity.
template <class Coeff, class Var>
class Polynomial {
 public:
  using coefficient_type = Coeff;
  using variable = Var;

  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coefficients) : coeffs_(coefficients) { trim(); }

  static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }

  static Polynomial monomial(std::size_t degree, Coeff c = Coeff{1}) {
    std::vector<Coeff> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  static Polynomial variable_power(std::size_t degree) { return monomial(degree); }

  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  std::size_t size() const { return coeffs_.size(); }

  Coeff coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff{}; }

  std::span<const Coeff> coefficients() const { return coeffs_; }

  const Coeff& leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == Coeff{}) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  /// Coefficient-wise scaling.
  template <class Scalar>
  Polynomial scaled(const Scalar& s) const {
    std::vector<Coeff> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c * s);
    return Polynomial(std::move(out));
  }

  /// Multiply by var^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Coeff> out(k);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Rational(i));
    return Polynomial(std::move(out));
  }

  /// Horner evaluation at `at`; the result lives in the coefficient ring.
  template <class Scalar>
  Coeff evaluate(const Scalar& at) const {
    Coeff acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * at;
      acc += *it;
    }
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Coeff{}) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

template <class Coeff, class Var, class Scalar>
  requires(!std::same_as<Scalar, Polynomial<Coeff, Var>>)
Polynomial<Coeff, Var> operator*(const Polynomial<Coeff, Var>& p, const Scalar& s) {
  return p.scaled(s);
}

template <class Coeff, class Var, class Scalar>
  requires(!std::same_as<Scalar, Polynomial<Coeff, Var>>)
Polynomial<Coeff, Var> operator*(const Scalar& s, const Polynomial<Coeff, Var>& p) {
  return p.scaled(s);
}

/// Polynomial in q with rational coefficients.
using QPolynomial = Polynomial<Rational, QVar>;
/// Polynomial in x (or the moment variable X) with rational coefficients.
using XPolynomial = Polynomial<Rational, XVar>;
/// Polynomial in X whose coefficients are q-polynomials.
using XQPolynomial = Polynomial<QPolynomial, XVar>;

/// Quotient and remainder of long division over a field of coefficients.
template <class Var>
std::pair<Polynomial<Rational, Var>, Polynomial<Rational, Var>> divide(
    const Polynomial<Rational, Var>& numerator, const Polynomial<Rational, Var>& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const long dd = divisor.degree();
  std::vector<Rational> rem(numerator.coefficients().begin(), numerator.coefficients().end());
  if (static_cast<long>(rem.size()) - 1 < dd) return {{}, numerator};
  std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(dd));
  const Rational& lead = divisor.leading();
  for (long i = static_cast<long>(rem.size()) - 1; i >= dd; --i) {
    if (rem[static_cast<std::size_t>(i)].is_zero()) continue;
    const Rational factor = rem[static_cast<std::size_t>(i)] / lead;
    const auto shift = static_cast<std::size_t>(i - dd);
    quot[shift] = factor;
    for (long j = 0; j <= dd; ++j) {
      rem[shift + static_cast<std::size_t>(j)] -= factor * divisor.coefficient(static_cast<std::size_t>(j));
    }
  }
  return {Polynomial<Rational, Var>(std::move(quot)), Polynomial<Rational, Var>(std::move(rem))};
}

/// Human-readable rendering, lowest degree first: "2 + q + q^2".
template <class Var>
std::string to_display(const Polynomial<Rational, Var>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational c = p.coefficient(i);
    if (c.is_zero()) continue;
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c.sign() < 0) {
      os << "-";
      c = abs(c);
    }
    first = false;
    const bool unit = c == Rational(1);
    if (i == 0 || !unit) os << c.to_display();
    if (i > 0) {
      if (!unit) os << "*";
      os << Var::symbol;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace umbraldob
