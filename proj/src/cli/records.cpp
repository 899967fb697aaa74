#include "umbraldob/cli/records.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "umbraldob/errors.hpp"

namespace umbraldob::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

VerdictStatus parse_status(const std::string& text) {
  if (text == "pass") return VerdictStatus::pass;
  if (text == "fail") return VerdictStatus::fail;
  if (text == "skip") return VerdictStatus::skip;
  throw ParseError("unknown verdict '" + text + "'");
}

ordered_json value_to_json(const RecordValue& value) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using V = std::decay_t<decltype(v)>;
        ordered_json j = ordered_json::object();
        if constexpr (std::is_same_v<V, IntegerValue>) {
          j["integer"] = v.text;
        } else if constexpr (std::is_same_v<V, CoefficientList>) {
          j["coefficients"] = v.coefficients;
          j["variable"] = v.variable;
        } else if constexpr (std::is_same_v<V, IntervalValue>) {
          j["interval"] = ordered_json::array({v.lo, v.hi});
        } else {
          j["verdict"] = std::string(to_string(v.status));
          j["detail"] = v.detail;
        }
        return j;
      },
      value);
}

RecordValue value_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("record value must be an object");
  if (j.contains("integer")) return IntegerValue{j.at("integer").get<std::string>()};
  if (j.contains("coefficients")) {
    return CoefficientList{j.at("variable").get<std::string>(),
                           j.at("coefficients").get<std::vector<std::string>>()};
  }
  if (j.contains("interval")) {
    const auto& pair = j.at("interval");
    if (!pair.is_array() || pair.size() != 2) throw ParseError("interval must be a two-element array");
    return IntervalValue{pair[0].get<std::string>(), pair[1].get<std::string>()};
  }
  if (j.contains("verdict")) {
    return VerdictValue{parse_status(j.at("verdict").get<std::string>()),
                        j.value("detail", std::string())};
  }
  throw ParseError("record value has no recognised field");
}

std::string display_coefficients(const CoefficientList& list) {
  std::vector<Rational> coeffs;
  for (const auto& c : list.coefficients) coeffs.push_back(Rational::parse(c));
  if (list.variable == "x") return to_display(XPolynomial(std::move(coeffs)));
  return to_display(QPolynomial(std::move(coeffs)));
}

std::string describe_parameters(const OutputRecord& r) {
  std::vector<std::string> parts;
  for (const auto& [key, value] : r.parameters) parts.push_back(key + "=" + value);
  return join(parts, " ");
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "pretty") return Format::pretty;
  throw ParseError("unknown format '" + std::string(text) + "' (expected json, csv or pretty)");
}

IntegerValue integer_value(const BigInt& v) { return {v.get_str()}; }

IntegerValue integer_value(const Rational& v) {
  if (!v.is_integer()) throw std::invalid_argument("integer record from non-integer " + v.to_string());
  return {v.numerator().get_str()};
}

IntervalValue interval_value(const CertifiedValue& v) { return interval_value(v.lo(), v.hi()); }

IntervalValue interval_value(const Rational& lo, const Rational& hi) {
  return {lo.to_string(), hi.to_string()};
}

VerdictValue verdict_value(bool passed, std::string detail) {
  return {passed ? VerdictStatus::pass : VerdictStatus::fail, std::move(detail)};
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::pass:
      return "pass";
    case VerdictStatus::fail:
      return "fail";
    case VerdictStatus::skip:
      return "skip";
  }
  return "fail";
}

std::string to_json(const std::vector<OutputRecord>& records) {
  ordered_json doc = ordered_json::array();
  for (const auto& r : records) {
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : r.parameters) params[key] = value;
    ordered_json entry = ordered_json::object();
    entry["kind"] = r.kind;
    entry["parameters"] = std::move(params);
    entry["value"] = value_to_json(r.value);
    doc.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::vector<OutputRecord> from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("top-level JSON value must be an array");
  std::vector<OutputRecord> out;
  try {
    for (const auto& entry : doc) {
      OutputRecord r;
      r.kind = entry.at("kind").get<std::string>();
      for (const auto& [key, value] : entry.at("parameters").items()) {
        r.parameters.emplace_back(key, value.get<std::string>());
      }
      r.value = value_from_json(entry.at("value"));
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what());
  }
  return out;
}

std::string to_csv(const std::vector<OutputRecord>& records) {
  std::vector<std::string> param_columns;
  std::vector<std::string> kinds;
  std::map<std::string, const RecordValue*> kind_shape;
  // Rows keyed by parameter tuple, in first-appearance order.
  std::vector<std::vector<std::pair<std::string, std::string>>> row_keys;
  std::vector<std::map<std::string, const RecordValue*>> row_cells;
  std::map<std::vector<std::pair<std::string, std::string>>, std::size_t> row_index;

  for (const auto& r : records) {
    for (const auto& [key, value] : r.parameters) {
      if (std::find(param_columns.begin(), param_columns.end(), key) == param_columns.end()) {
        param_columns.push_back(key);
      }
    }
    if (!kind_shape.count(r.kind)) {
      kinds.push_back(r.kind);
      kind_shape[r.kind] = &r.value;
    }
    const auto [it, inserted] = row_index.try_emplace(r.parameters, row_keys.size());
    const std::size_t row = it->second;
    if (inserted) {
      row_keys.push_back(r.parameters);
      row_cells.emplace_back();
    }
    row_cells[row][r.kind] = &r.value;
  }

  std::vector<std::string> header = param_columns;
  for (const auto& kind : kinds) {
    const RecordValue& shape = *kind_shape[kind];
    if (std::holds_alternative<IntervalValue>(shape)) {
      header.push_back(kind + "_lo");
      header.push_back(kind + "_hi");
    } else if (std::holds_alternative<VerdictValue>(shape)) {
      header.push_back(kind);
      header.push_back(kind + "_detail");
    } else {
      header.push_back(kind);
    }
  }

  std::ostringstream os;
  std::vector<std::string> escaped;
  for (const auto& h : header) escaped.push_back(csv_escape(h));
  os << join(escaped, ",") << "\n";
  for (std::size_t row = 0; row < row_keys.size(); ++row) {
    std::vector<std::string> cells;
    for (const auto& column : param_columns) {
      std::string cell;
      for (const auto& [key, value] : row_keys[row]) {
        if (key == column) cell = value;
      }
      cells.push_back(csv_escape(cell));
    }
    for (const auto& kind : kinds) {
      const RecordValue& shape = *kind_shape[kind];
      const auto found = row_cells[row].find(kind);
      const RecordValue* v = found == row_cells[row].end() ? nullptr : found->second;
      if (std::holds_alternative<IntervalValue>(shape)) {
        const auto* iv = v ? std::get_if<IntervalValue>(v) : nullptr;
        cells.push_back(iv ? iv->lo : "");
        cells.push_back(iv ? iv->hi : "");
      } else if (std::holds_alternative<VerdictValue>(shape)) {
        const auto* vv = v ? std::get_if<VerdictValue>(v) : nullptr;
        cells.push_back(vv ? std::string(to_string(vv->status)) : "");
        cells.push_back(csv_escape(vv ? vv->detail : ""));
      } else if (std::holds_alternative<CoefficientList>(shape)) {
        const auto* cv = v ? std::get_if<CoefficientList>(v) : nullptr;
        cells.push_back(cv ? join(cv->coefficients, ";") : "");
      } else {
        const auto* iv = v ? std::get_if<IntegerValue>(v) : nullptr;
        cells.push_back(iv ? iv->text : "");
      }
    }
    os << join(cells, ",") << "\n";
  }
  return os.str();
}

std::string to_pretty(const std::vector<OutputRecord>& records) {
  std::ostringstream os;
  for (const auto& r : records) {
    const std::string params = describe_parameters(r);
    std::visit(
        [&](const auto& v) {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, VerdictValue>) {
            std::string status(to_string(v.status));
            for (auto& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            os << status << "  " << r.kind << " " << params;
            if (!v.detail.empty()) os << "  " << v.detail;
            os << "\n";
          } else {
            os << r.kind << " " << params << ": ";
            if constexpr (std::is_same_v<V, IntegerValue>) {
              os << v.text;
            } else if constexpr (std::is_same_v<V, CoefficientList>) {
              os << display_coefficients(v);
            } else {
              os << "[" << decimal_approximation(Rational::parse(v.lo), 12) << ", "
                 << decimal_approximation(Rational::parse(v.hi), 12) << "]";
            }
            os << "\n";
          }
        },
        r.value);
  }
  return os.str();
}

std::string render(const std::vector<OutputRecord>& records, Format format) {
  switch (format) {
    case Format::json:
      return to_json(records);
    case Format::csv:
      return to_csv(records);
    case Format::pretty:
      return to_pretty(records);
  }
  return {};
}

std::string decimal_approximation(const Rational& value, unsigned digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const Rational magnitude = abs(value);
  BigInt scaled = magnitude.numerator() * scale;
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), magnitude.denominator().get_mpz_t());
  std::string text = scaled.get_str();
  if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
  std::string out = value.sign() < 0 ? "-" : "";
  out += text.substr(0, text.size() - digits);
  if (digits > 0) out += "." + text.substr(text.size() - digits);
  return out;
}

}  // namespace umbraldob::cli
