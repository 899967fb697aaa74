#include "umbraldob/cli/commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <ostream>

#include "umbraldob/cigl.hpp"
#include "umbraldob/cli/seq_spec.hpp"
#include "umbraldob/dobinski.hpp"
#include "umbraldob/errors.hpp"
#include "umbraldob/operator_calc.hpp"
#include "umbraldob/umbral.hpp"

namespace umbraldob::cli {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::uint64_t parse_count(const std::string& name, const std::string& text) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(name + " must be a non-negative integer, got '" + text + "'");
  }
  return value;
}

void require_at_most(const std::string& what, std::uint64_t value, std::uint64_t cap) {
  if (value > cap) {
    throw CapExceededError(what + " capped at " + std::to_string(cap) + ", got " + std::to_string(value));
  }
}

std::string show(const CertifiedValue& v) {
  return "[" + decimal_approximation(v.lo(), 12) + ", " + decimal_approximation(v.hi(), 12) + "]";
}

OutputRecord verdict_record(const std::string& kind, Params params, bool passed, std::string detail) {
  return {kind, std::move(params), verdict_value(passed, std::move(detail))};
}

OutputRecord skip_record(const std::string& kind, Params params, std::string detail) {
  return {kind, std::move(params), VerdictValue{VerdictStatus::skip, std::move(detail)}};
}

// Exact value the psi-Dobinski series should reproduce, when one exists.
std::optional<Rational> dobinski_reference(const PsiSequence& seq, std::uint64_t n,
                                           const std::optional<StirlingTable>& carlitz, std::string& why) {
  if (seq.is_classical()) return Rational(rota_bell_exact(n));
  if (seq.is_gauss_q()) return bell_via_sum(*carlitz, n).evaluate(seq.q_parameter());
  try {
    const auto diag = psi_stirling_diagnostic(seq, n, n + 8);
    if (!diag.consistent()) {
      why = "no constant psi-Stirling expansion for this sequence at n=" + std::to_string(n);
      return std::nullopt;
    }
    Rational sum;
    for (const auto& c : diag.coefficients) sum += c;
    return sum;
  } catch (const OutOfRangeError& e) {
    why = e.what();
    return std::nullopt;
  }
}

std::vector<OutputRecord> verify_falling(const PsiSequence& seq, std::uint64_t n_max,
                                         const SumOptions& options) {
  std::vector<OutputRecord> out;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    Params params{{"n", std::to_string(n)}, {"seq", seq.description()}};
    try {
      const auto v = verify_falling_moment(seq, n, options);
      out.push_back(verdict_record("falling-moment", params, v.contains(Rational(1)), "interval " + show(v)));
    } catch (const Error& e) {
      out.push_back(verdict_record("falling-moment", params, false, e.what()));
    }
  }
  return out;
}

std::vector<OutputRecord> verify_dobinski(const PsiSequence& seq, std::uint64_t n_max,
                                          const SumOptions& options) {
  std::optional<StirlingTable> carlitz;
  if (seq.is_gauss_q()) carlitz = carlitz_q_stirling(n_max);
  std::vector<OutputRecord> out;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    Params params{{"n", std::to_string(n)}, {"seq", seq.description()}};
    std::string why;
    const auto reference = dobinski_reference(seq, n, carlitz, why);
    if (!reference) {
      out.push_back(skip_record("dobinski", params, why));
      continue;
    }
    try {
      const auto v = dobinski_bell(seq, n, options);
      out.push_back(verdict_record("dobinski", params, v.contains(*reference),
                                   "reference " + reference->to_display() + " interval " + show(v)));
    } catch (const Error& e) {
      out.push_back(verdict_record("dobinski", params, false, e.what()));
    }
  }
  return out;
}

std::vector<OutputRecord> verify_cigl(std::uint64_t n_max) {
  require_at_most("cigl-dobinski n-max", n_max, kEnumerationCap);
  std::vector<OutputRecord> out;
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    const QPolynomial bell = cigl_q_bell(n);
    const QPolynomial dobinski = cigl_q_dobinski_exact(n);
    out.push_back(verdict_record("cigl-dobinski", {{"n", std::to_string(n)}}, bell == dobinski,
                                 "enumerated " + to_display(bell) + "; moments " + to_display(dobinski)));
  }
  return out;
}

std::vector<OutputRecord> verify_conjugation_records(std::uint64_t n_max) {
  require_at_most("conjugation n-max", n_max, kConjugationCap);
  std::vector<OutputRecord> out;
  const auto verdict = verify_conjugation(n_max);
  std::string detail = verdict.passed ? "all degrees agree"
                                      : "degree " + std::to_string(*verdict.failing_degree) + " differs";
  out.push_back(verdict_record("conjugation", {{"max-degree", std::to_string(n_max)}}, verdict.passed,
                               std::move(detail)));
  return out;
}

std::vector<OutputRecord> verify_pmf_gf(const PsiSequence& seq, std::uint64_t n_max, const SumOptions& options) {
  if (!seq.is_classical() && !seq.is_gauss_q()) {
    throw InadmissibleSequenceError("pmf-gf needs a classical or q=<rational> sequence, got " +
                                    seq.description());
  }
  std::vector<OutputRecord> out;
  const std::uint64_t order = n_max + 4;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    Params params{{"n", std::to_string(n)}, {"seq", seq.description()}};
    try {
      const auto v = verify_pmf_via_generating_function(seq, Rational(1), n, order, options);
      const bool passed = v.coefficient_ok && v.mean_ok.value_or(false);
      out.push_back(verdict_record("pmf-gf", params, passed,
                                   std::string("coefficient ") + (v.coefficient_ok ? "ok" : "mismatch") +
                                       ", mean " + show(*v.mean)));
    } catch (const Error& e) {
      out.push_back(verdict_record("pmf-gf", params, false, e.what()));
    }
  }
  return out;
}

std::vector<OutputRecord> verify_q1(std::uint64_t n_max) {
  require_at_most("q1-reduction n-max", n_max, kEnumerationCap);
  const StirlingTable carlitz = carlitz_q_stirling(n_max);
  std::vector<OutputRecord> out;
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    const auto expected = stirling2_row(n);
    const auto counts = cigl_weighted_count(n);
    bool ok = true;
    for (std::uint32_t k = 0; k <= n; ++k) {
      const Rational s(expected[k]);
      const auto it = counts.by_blocks.find(k);
      const Rational cigl_at_one = it == counts.by_blocks.end() ? Rational() : it->second.evaluate(Rational(1));
      ok = ok && carlitz.at(n, k).evaluate(Rational(1)) == s && cigl_at_one == s;
    }
    out.push_back(verdict_record("q1-reduction", {{"n", std::to_string(n)}}, ok,
                                 ok ? "Carlitz and cigl rows reduce to S(n,k)" : "row mismatch at q=1"));
  }
  return out;
}

}  // namespace

EnvironmentLookup process_environment() {
  return [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (v == nullptr) return std::nullopt;
    return std::string(v);
  };
}

SumOptions sum_options_from_environment(const EnvironmentLookup& env) {
  SumOptions options;
  if (const auto cap = env("UMBRALDOB_SUM_CAP")) {
    options.hard_cap = parse_count("UMBRALDOB_SUM_CAP", *cap);
    if (options.hard_cap == 0) throw ParseError("UMBRALDOB_SUM_CAP must be positive");
  }
  return options;
}

CommandOutput table_command(const std::string& kind, std::uint64_t n) {
  CommandOutput out;
  auto& records = out.records;
  if (kind == "stirling" || kind == "bell") {
    require_at_most(kind + " table n", n, kClassicalTableCap);
    for (std::uint64_t m = 0; m <= n; ++m) {
      const auto row = stirling2_row(m);
      if (kind == "bell") {
        records.push_back({kind, {{"n", std::to_string(m)}}, integer_value(rota_bell_exact(m))});
        continue;
      }
      for (std::uint64_t k = 0; k <= m; ++k) {
        records.push_back({kind, {{"n", std::to_string(m)}, {"k", std::to_string(k)}}, integer_value(row[k])});
      }
    }
  } else if (kind == "q-stirling" || kind == "q-bell") {
    require_at_most(kind + " table n", n, kQTableCap);
    const StirlingTable table = carlitz_q_stirling(n);
    for (std::uint64_t m = 0; m <= n; ++m) {
      if (kind == "q-bell") {
        records.push_back({kind, {{"n", std::to_string(m)}}, coefficient_list(bell_via_sum(table, m))});
        continue;
      }
      for (std::uint64_t k = 0; k <= m; ++k) {
        records.push_back(
            {kind, {{"n", std::to_string(m)}, {"k", std::to_string(k)}}, coefficient_list(table.at(m, k))});
      }
    }
  } else if (kind == "cigl-q-stirling" || kind == "cigl-q-bell") {
    require_at_most(kind + " table n (partition enumeration)", n, kEnumerationCap);
    for (std::uint32_t m = 0; m <= n; ++m) {
      const auto counts = cigl_weighted_count(m);
      if (kind == "cigl-q-bell") {
        QPolynomial sum;
        for (const auto& [k, poly] : counts.by_blocks) sum += poly;
        records.push_back({kind, {{"n", std::to_string(m)}}, coefficient_list(sum)});
        continue;
      }
      for (std::uint32_t k = 0; k <= m; ++k) {
        const auto it = counts.by_blocks.find(k);
        const QPolynomial entry = it == counts.by_blocks.end() ? QPolynomial() : it->second;
        records.push_back(
            {kind, {{"n", std::to_string(m)}, {"k", std::to_string(k)}}, coefficient_list(entry)});
      }
    }
  } else {
    throw ParseError("unknown table kind '" + kind +
                     "' (expected stirling, bell, q-stirling, q-bell, cigl-q-stirling, cigl-q-bell)");
  }
  return out;
}

CommandOutput verify_command(const std::string& identity, std::uint64_t n_max, const std::string& seq_spec,
                             const SumOptions& options) {
  const PsiSequence seq = parse_sequence_spec(seq_spec);
  CommandOutput out;
  if (identity == "falling-moment") {
    require_at_most("falling-moment n-max", n_max, kSeriesVerifyCap);
    out.records = verify_falling(seq, n_max, options);
  } else if (identity == "dobinski") {
    require_at_most("dobinski n-max", n_max, kSeriesVerifyCap);
    out.records = verify_dobinski(seq, n_max, options);
  } else if (identity == "cigl-dobinski") {
    out.records = verify_cigl(n_max);
  } else if (identity == "conjugation") {
    out.records = verify_conjugation_records(n_max);
  } else if (identity == "pmf-gf") {
    require_at_most("pmf-gf n-max", n_max, kSeriesVerifyCap);
    out.records = verify_pmf_gf(seq, n_max, options);
  } else if (identity == "q1-reduction") {
    out.records = verify_q1(n_max);
  } else {
    throw ParseError("unknown identity '" + identity +
                     "' (expected falling-moment, dobinski, cigl-dobinski, conjugation, pmf-gf, q1-reduction)");
  }
  for (const auto& r : out.records) {
    if (std::get<VerdictValue>(r.value).status == VerdictStatus::fail) out.exit_code = kExitVerdictFailed;
  }
  return out;
}

CommandOutput dist_command(const std::string& seq_spec, const std::string& lambda_text, std::uint64_t k_max,
                           const SumOptions& options) {
  const PsiSequence seq = parse_sequence_spec(seq_spec);
  const Rational lambda = Rational::parse(lambda_text);
  if (lambda.sign() <= 0) throw ParseError("lambda must be positive, got " + lambda_text);
  require_at_most("dist k-max", k_max, kDistCap);
  const PsiPoissonDistribution dist(seq, lambda, options);
  CommandOutput out;
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    const PmfBounds b = dist.pmf(k);
    out.records.push_back({"pmf", {{"k", std::to_string(k)}}, interval_value(b.lo, b.hi)});
  }
  out.records.push_back({"normalizer", {}, interval_value(dist.normalizer())});
  return out;
}

CommandOutput oracle_command(std::uint64_t n, const SumOptions& options) {
  require_at_most("oracle n (partition enumeration)", n, kEnumerationCap);
  CommandOutput out;
  const PsiSequence classical = PsiSequence::classical();
  for (std::uint32_t m = 0; m <= n; ++m) {
    const Params params{{"n", std::to_string(m)}};
    std::uint64_t count = 0;
    PartitionEnumerator partitions(m);
    while (partitions.next() != nullptr) ++count;
    const BigInt rota = rota_bell_exact(m);
    const Rational specialization = dobinski_specialization(m);
    out.records.push_back({"enumeration-count", params, integer_value(BigInt(static_cast<unsigned long>(count)))});
    out.records.push_back({"rota-bell", params, integer_value(rota)});
    bool agree = BigInt(static_cast<unsigned long>(count)) == rota && specialization == Rational(rota);
    std::string detail = agree ? "exact routes agree" : "exact routes disagree";
    try {
      const CertifiedValue dob = dobinski_bell(classical, m, options);
      out.records.push_back({"dobinski", params, interval_value(dob)});
      if (!dob.contains(Rational(rota))) {
        agree = false;
        detail += "; Dobinski interval misses B_n";
      }
    } catch (const Error& e) {
      agree = false;
      detail += std::string("; ") + e.what();
    }
    out.records.push_back({"operator-specialization", params, integer_value(specialization)});
    out.records.push_back(verdict_record("agreement", params, agree, detail));
    if (!agree) out.exit_code = kExitVerdictFailed;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvironmentLookup& env) {
  CLI::App app{"Exact Bell, Stirling and Dobinski-type identities (classical, q, cigl-q, psi)", "umbraldob"};
  app.require_subcommand(1);

  std::string format_text = "pretty";
  std::string kind;
  std::string n_text;
  std::string identity;
  std::string seq_text = "classical";
  std::string lambda_text;
  std::string k_max_text;
  std::string max_width_text;
  const char* max_width_help = "Tighten each series until its tail bound is at most this rational";

  auto* table = app.add_subcommand("table", "Emit a Stirling/Bell triangle or sequence up to n");
  table->add_option("--kind", kind, "stirling | bell | q-stirling | q-bell | cigl-q-stirling | cigl-q-bell")
      ->required();
  table->add_option("--n", n_text, "Largest n")->required();
  table->add_option("--format", format_text, "json | csv | pretty");

  auto* verify = app.add_subcommand("verify", "Check an identity for n = 0..n-max");
  verify
      ->add_option("--identity", identity,
                   "falling-moment | dobinski | cigl-dobinski | conjugation | pmf-gf | q1-reduction")
      ->required();
  verify->add_option("--n-max", n_text, "Largest n")->required();
  verify->add_option("--seq", seq_text, "classical | q=<rational> | fibonacci | custom:<r0>,<r1>,...");
  verify->add_option("--format", format_text, "json | csv | pretty");
  verify->add_option("--max-width", max_width_text, max_width_help);

  auto* dist = app.add_subcommand("dist", "Bounds on the psi-Poisson pmf");
  dist->add_option("--seq", seq_text, "classical | q=<rational> | fibonacci | custom:<r0>,<r1>,...")->required();
  dist->add_option("--lambda", lambda_text, "Positive rational rate")->required();
  dist->add_option("--k-max", k_max_text, "Largest k")->required();
  dist->add_option("--format", format_text, "json | csv | pretty");
  dist->add_option("--max-width", max_width_text, max_width_help);

  auto* oracle = app.add_subcommand("oracle", "Compare enumeration, umbral, series and operator routes to B_n");
  oracle->add_option("--n", n_text, "Largest n (at most 13)")->required();
  oracle->add_option("--format", format_text, "json | csv | pretty");
  oracle->add_option("--max-width", max_width_text, max_width_help);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const Format format = parse_format(format_text);
    SumOptions options = sum_options_from_environment(env);
    if (!max_width_text.empty()) {
      const Rational width = Rational::parse(max_width_text);
      if (width.sign() <= 0) throw ParseError("--max-width must be positive, got " + max_width_text);
      options.max_width = width;
    }
    CommandOutput result;
    if (table->parsed()) {
      result = table_command(kind, parse_count("--n", n_text));
    } else if (verify->parsed()) {
      result = verify_command(identity, parse_count("--n-max", n_text), seq_text, options);
    } else if (dist->parsed()) {
      result = dist_command(seq_text, lambda_text, parse_count("--k-max", k_max_text), options);
    } else {
      result = oracle_command(parse_count("--n", n_text), options);
    }
    out << render(result.records, format);
    return result.exit_code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InadmissibleSequenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerdictFailed;
  }
}

}  // namespace umbraldob::cli
