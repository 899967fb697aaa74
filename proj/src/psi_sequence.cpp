#include "umbraldob/psi_sequence.hpp"

#include <stdexcept>
#include <type_traits>

#include "umbraldob/errors.hpp"

namespace umbraldob {

PsiSequence PsiSequence::classical() { return PsiSequence(Classical{}, "classical"); }

PsiSequence PsiSequence::gauss_q(const Rational& q) {
  if (q.sign() <= 0) {
    throw InadmissibleSequenceError("Gauss q-sequence needs q > 0, got " + q.to_display());
  }
  return PsiSequence(GaussQ{q}, "q=" + q.to_display());
}

PsiSequence PsiSequence::fibonacci() { return PsiSequence(Fibonacci{}, "fibonacci"); }

PsiSequence PsiSequence::custom(std::vector<Rational> values) {
  if (values.empty() || !values.front().is_zero()) {
    throw InadmissibleSequenceError("custom sequence must start with psi(0) = 0");
  }
  std::string label = "custom:";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && values[i].sign() <= 0) {
      throw InadmissibleSequenceError("custom sequence needs psi(" + std::to_string(i) +
                                      ") > 0, got " + values[i].to_display());
    }
    if (i > 0) label += ",";
    label += values[i].to_display();
  }
  return PsiSequence(Custom{std::move(values)}, std::move(label));
}

Rational PsiSequence::q_parameter() const {
  if (const auto* g = std::get_if<GaussQ>(&kind_)) return g->q;
  if (is_classical()) return Rational(1);
  throw std::logic_error("sequence " + description_ + " has no q parameter");
}

Rational PsiSequence::value(std::uint64_t n) const {
  return std::visit(
      [n](const auto& k) -> Rational {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Classical>) {
          return Rational(n);
        } else if constexpr (std::is_same_v<K, GaussQ>) {
          Rational sum;
          Rational power(1);
          for (std::uint64_t i = 0; i < n; ++i) {
            sum += power;
            power *= k.q;
          }
          return sum;
        } else if constexpr (std::is_same_v<K, Fibonacci>) {
          BigInt a = 0;
          BigInt b = 1;
          for (std::uint64_t i = 0; i < n; ++i) {
            BigInt next = a + b;
            a = b;
            b = next;
          }
          return Rational(a);
        } else {
          if (n >= k.values.size()) {
            throw OutOfRangeError("custom sequence has no value at index " + std::to_string(n));
          }
          return k.values[n];
        }
      },
      kind_);
}

std::optional<Rational> PsiSequence::exponential_ratio_limit(const Rational& lambda) const {
  if (is_classical() || std::holds_alternative<Fibonacci>(kind_)) return Rational(0);
  if (const auto* g = std::get_if<GaussQ>(&kind_)) {
    // [k]_q -> 1/(1-q) for q < 1 and diverges otherwise.
    if (g->q >= Rational(1)) return Rational(0);
    return lambda * (Rational(1) - g->q);
  }
  return std::nullopt;
}

Rational psi_value(const PsiSequence& seq, std::uint64_t n) { return seq.value(n); }

Rational psi_factorial(const PsiSequence& seq, std::uint64_t n) {
  PsiFactorialCache cache(seq);
  return cache.factorial(n);
}

Rational psi_falling_factorial(const PsiSequence& seq, std::uint64_t x, std::uint64_t k) {
  if (k > x) return Rational(0);
  Rational out(1);
  for (std::uint64_t i = 0; i < k; ++i) out *= seq.value(x - i);
  return out;
}

PsiFactorialCache::PsiFactorialCache(const PsiSequence& seq) : seq_(seq) {
  values_.push_back(seq.value(0));
  factorials_.emplace_back(1);
}

void PsiFactorialCache::extend(std::uint64_t n) {
  if (const auto* fib = std::get_if<PsiSequence::Fibonacci>(&seq_.kind()); fib != nullptr) {
    while (values_.size() <= n) {
      const std::size_t i = values_.size();
      values_.push_back(i < 3 ? Rational(1) : values_[i - 1] + values_[i - 2]);
      factorials_.push_back(factorials_.back() * values_.back());
    }
    return;
  }
  if (const auto* g = std::get_if<PsiSequence::GaussQ>(&seq_.kind()); g != nullptr) {
    // [i]_q = 1 + q [i-1]_q
    while (values_.size() <= n) {
      values_.push_back(Rational(1) + g->q * values_.back());
      factorials_.push_back(factorials_.back() * values_.back());
    }
    return;
  }
  while (values_.size() <= n) {
    values_.push_back(seq_.value(values_.size()));
    factorials_.push_back(factorials_.back() * values_.back());
  }
}

const Rational& PsiFactorialCache::value(std::uint64_t n) {
  extend(n);
  return values_[n];
}

const Rational& PsiFactorialCache::factorial(std::uint64_t n) {
  extend(n);
  return factorials_[n];
}

}  // namespace umbraldob
