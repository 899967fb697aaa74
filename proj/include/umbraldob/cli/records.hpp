#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "umbraldob/certified.hpp"
#include "umbraldob/polynomial.hpp"
#include "umbraldob/rational.hpp"

namespace umbraldob::cli {

struct IntegerValue {
  std::string text;
  friend bool operator==(const IntegerValue&, const IntegerValue&) = default;
};

/// Lowest degree first, each entry "numerator/denominator".
struct CoefficientList {
  std::string variable;
  std::vector<std::string> coefficients;
  friend bool operator==(const CoefficientList&, const CoefficientList&) = default;
};

struct IntervalValue {
  std::string lo;
  std::string hi;
  friend bool operator==(const IntervalValue&, const IntervalValue&) = default;
};

enum class VerdictStatus { pass, fail, skip };

struct VerdictValue {
  VerdictStatus status = VerdictStatus::pass;
  std::string detail;
  friend bool operator==(const VerdictValue&, const VerdictValue&) = default;
};

using RecordValue = std::variant<IntegerValue, CoefficientList, IntervalValue, VerdictValue>;

/// One machine-readable result: what was computed, for which inputs, and the value.
struct OutputRecord {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> parameters;
  RecordValue value;
  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

enum class Format { json, csv, pretty };

/// Throws ParseError for anything but json, csv, pretty.
Format parse_format(std::string_view text);

IntegerValue integer_value(const BigInt& v);
IntegerValue integer_value(const Rational& v);
template <class Var>
CoefficientList coefficient_list(const Polynomial<Rational, Var>& p) {
  CoefficientList out{std::string(Var::symbol), {}};
  for (const auto& c : p.coefficients()) out.coefficients.push_back(c.to_string());
  return out;
}
IntervalValue interval_value(const CertifiedValue& v);
IntervalValue interval_value(const Rational& lo, const Rational& hi);
VerdictValue verdict_value(bool passed, std::string detail = {});

std::string_view to_string(VerdictStatus status);

/// Single top-level JSON array, two-space indent, trailing newline.
std::string to_json(const std::vector<OutputRecord>& records);
/// Inverse of to_json. Throws ParseError on malformed documents.
std::vector<OutputRecord> from_json(std::string_view text);

/// One row per distinct parameter tuple, one column group per record kind.
/// Comma separated, header row, LF endings.
std::string to_csv(const std::vector<OutputRecord>& records);

std::string to_pretty(const std::vector<OutputRecord>& records);

std::string render(const std::vector<OutputRecord>& records, Format format);

/// Truncated decimal expansion computed with integer arithmetic, for display only.
std::string decimal_approximation(const Rational& value, unsigned digits);

}  // namespace umbraldob::cli
