#include "umbraldob/certified.hpp"

#include <stdexcept>
#include <vector>

#include "umbraldob/errors.hpp"

namespace umbraldob {

CertifiedValue::CertifiedValue(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("certified interval with lo > hi");
}

CertifiedValue operator+(const CertifiedValue& a, const CertifiedValue& b) {
  return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

CertifiedValue operator-(const CertifiedValue& a, const CertifiedValue& b) {
  return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

CertifiedValue operator/(const CertifiedValue& a, const CertifiedValue& b) {
  if (b.lo_.sign() <= 0) throw std::domain_error("interval division by a non-positive interval");
  const Rational c1 = a.lo_ / b.lo_;
  const Rational c2 = a.lo_ / b.hi_;
  const Rational c3 = a.hi_ / b.lo_;
  const Rational c4 = a.hi_ / b.hi_;
  return {min(min(c1, c2), min(c3, c4)), max(max(c1, c2), max(c3, c4))};
}

namespace {

struct Ratio {
  enum class Kind { finite, infinite, undefined };
  Kind kind = Kind::undefined;
  Rational value;
};

class SeriesWalker {
 public:
  SeriesWalker(const TermFunction& term, std::size_t cap) : term_(term), cap_(cap) {}

  const Rational& term(std::size_t k) {
    while (terms_.size() <= k) {
      const std::size_t idx = terms_.size();
      if (idx > cap_) throw NonConvergentError("series index exceeds hard cap");
      Rational t = term_(idx);
      if (t.sign() < 0) {
        throw NegativeTermError("term " + std::to_string(idx) + " is negative: " + t.to_string());
      }
      if (!t.is_zero() && !first_positive_) first_positive_ = idx;
      terms_.push_back(std::move(t));
    }
    return terms_[k];
  }

  // term(k+1)/term(k), classified for zero terms.
  const Ratio& ratio(std::size_t k) {
    while (ratios_.size() <= k) {
      const std::size_t j = ratios_.size();
      term(j + 1);
      const Rational& cur = terms_[j];
      const Rational& next = terms_[j + 1];
      Ratio r;
      if (!cur.is_zero()) {
        r.kind = Ratio::Kind::finite;
        r.value = next / cur;
      } else if (!next.is_zero()) {
        r.kind = Ratio::Kind::infinite;
      } else if (first_positive_ && *first_positive_ < j) {
        r.kind = Ratio::Kind::finite;
      }
      ratios_.push_back(std::move(r));
    }
    return ratios_[k];
  }

  Rational partial_sum(std::size_t last) {
    Rational s;
    for (std::size_t k = 0; k <= last; ++k) s += term(k);
    return s;
  }

  bool any_positive() const { return first_positive_.has_value(); }

 private:
  const TermFunction& term_;
  std::size_t cap_;
  std::vector<Rational> terms_;
  std::vector<Ratio> ratios_;
  std::optional<std::size_t> first_positive_;
};

}  // namespace

SumTrace certified_sum_traced(const TermFunction& term, const SumOptions& options) {
  if (options.ratio_threshold.sign() < 0 || options.ratio_threshold >= Rational(1)) {
    throw std::invalid_argument("ratio threshold must lie in [0, 1)");
  }
  if (options.lookahead == 0) throw std::invalid_argument("lookahead must be positive");

  SeriesWalker walker(term, options.hard_cap);
  const std::size_t window = options.lookahead;
  for (std::size_t k = 0; k + window + 1 <= options.hard_cap; ++k) {
    const Ratio head = walker.ratio(k);
    if (head.kind != Ratio::Kind::finite || head.value > options.ratio_threshold) continue;
    bool monotone = true;
    for (std::size_t j = k + 1; j <= k + window; ++j) {
      const Ratio& r = walker.ratio(j);
      if (r.kind != Ratio::Kind::finite || r.value > walker.ratio(j - 1).value) {
        monotone = false;
        break;
      }
    }
    if (!monotone) continue;
    const Rational tail = walker.term(k + 1) / (Rational(1) - head.value);
    if (options.max_width && tail > *options.max_width) continue;
    Rational s = walker.partial_sum(k);
    Rational hi = s + tail;
    return SumTrace{CertifiedValue(std::move(s), std::move(hi)), k, head.value};
  }
  for (std::size_t k = 0; k <= options.hard_cap && !walker.any_positive(); ++k) walker.term(k);
  if (!walker.any_positive()) return SumTrace{CertifiedValue(), 0, Rational()};
  throw NonConvergentError("no truncation point found within hard cap " +
                           std::to_string(options.hard_cap));
}

CertifiedValue certified_sum(const TermFunction& term, const SumOptions& options) {
  return certified_sum_traced(term, options).value;
}

}  // namespace umbraldob
