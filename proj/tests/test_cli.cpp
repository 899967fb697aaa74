#include <doctest.h>

#include <map>
#include <sstream>

#include "umbraldob/cli/commands.hpp"
#include "umbraldob/cli/records.hpp"
#include "umbraldob/cli/seq_spec.hpp"
#include "umbraldob/errors.hpp"

using namespace umbraldob;
using namespace umbraldob::cli;

namespace {

struct Invocation {
  int status;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args, std::map<std::string, std::string> env = {}) {
  std::ostringstream out;
  std::ostringstream err;
  const EnvironmentLookup lookup = [env](const std::string& name) -> std::optional<std::string> {
    const auto it = env.find(name);
    if (it == env.end()) return std::nullopt;
    return it->second;
  };
  const int status = run(args, out, err, lookup);
  return {status, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

std::size_t line_count(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n' ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("sequence spec grammar") {
  CHECK(parse_sequence_spec("classical").is_classical());
  const auto q = parse_sequence_spec("q=3/2");
  REQUIRE(q.is_gauss_q());
  CHECK(q.q_parameter() == Rational(BigInt(3), BigInt(2)));
  CHECK(parse_sequence_spec("fibonacci").description() == "fibonacci");
  CHECK(psi_value(parse_sequence_spec("custom:0,1/2,3"), 1) == Rational(BigInt(1), BigInt(2)));
  for (const char* bad : {"", "classic", "q=", "q=x", "q=1/0", "custom:", "custom:0,,1", "Classical", "q = 1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_sequence_spec(bad), ParseError);
  }
  CHECK_THROWS_AS(parse_sequence_spec("q=0"), InadmissibleSequenceError);
  CHECK_THROWS_AS(parse_sequence_spec("q=-1"), InadmissibleSequenceError);
  CHECK_THROWS_AS(parse_sequence_spec("custom:1,2"), InadmissibleSequenceError);
}

TEST_CASE("table command") {
  auto bell = invoke({"table", "--kind", "bell", "--n", "5", "--format", "csv"});
  CHECK(bell.status == kExitOk);
  CHECK(has_line(bell.out, "n,bell"));
  CHECK(has_line(bell.out, "5,52"));

  const auto cigl = table_command("cigl-q-bell", 3);
  REQUIRE(cigl.records.size() == 4);
  const auto& last = std::get<CoefficientList>(cigl.records.back().value);
  CHECK(last.variable == "q");
  CHECK(last.coefficients == std::vector<std::string>{"2/1", "1/1", "1/1", "1/1"});

  auto stirling = invoke({"table", "--kind", "stirling", "--n", "0"});
  CHECK(stirling.status == kExitOk);
  CHECK(line_count(stirling.out) == 1);
  CHECK(stirling.out.find(": 1") != std::string::npos);

  const auto q_stirling = table_command("q-stirling", 3);
  CHECK(q_stirling.records.size() == 10);
  const auto q_bell = table_command("q-bell", 3);
  CHECK(std::get<CoefficientList>(q_bell.records.back().value).coefficients ==
        std::vector<std::string>{"1/1", "2/1", "1/1", "1/1"});
}

TEST_CASE("verify command") {
  auto cigl = invoke({"verify", "--identity", "cigl-dobinski", "--n-max", "8", "--seq", "classical"});
  CHECK(cigl.status == kExitOk);
  CHECK(line_count(cigl.out) == 9);
  CHECK(cigl.out.find("FAIL") == std::string::npos);

  const auto falling = verify_command("falling-moment", 6, "fibonacci", {});
  CHECK(falling.exit_code == kExitOk);
  CHECK(falling.records.size() == 7);
  for (const auto& r : falling.records) CHECK(std::get<VerdictValue>(r.value).status == VerdictStatus::pass);

  auto conj = invoke({"verify", "--identity", "conjugation", "--n-max", "20", "--seq", "classical"});
  CHECK(conj.status == kExitOk);

  for (const char* seq : {"classical", "q=1/4", "q=3/2"}) {
    CAPTURE(seq);
    CHECK(verify_command("dobinski", 8, seq, {}).exit_code == kExitOk);
  }
  const auto fib = verify_command("dobinski", 4, "fibonacci", {});
  CHECK(fib.exit_code == kExitOk);
  CHECK(std::get<VerdictValue>(fib.records[1].value).status == VerdictStatus::pass);
  CHECK(std::get<VerdictValue>(fib.records[3].value).status == VerdictStatus::skip);

  CHECK(verify_command("pmf-gf", 6, "q=1/2", {}).exit_code == kExitOk);
  CHECK(verify_command("q1-reduction", 10, "classical", {}).exit_code == kExitOk);
}

TEST_CASE("dist command") {
  const auto classical = dist_command("classical", "1", 3, {});
  REQUIRE(classical.records.size() == 5);
  const auto& p0 = std::get<IntervalValue>(classical.records[0].value);
  const auto& p1 = std::get<IntervalValue>(classical.records[1].value);
  CHECK(p0 == p1);
  const auto& p2 = std::get<IntervalValue>(classical.records[2].value);
  CHECK(Rational::parse(p2.lo) == Rational::parse(p0.lo) / Rational(2));
  CHECK(classical.records.back().kind == "normalizer");

  const auto gauss = dist_command("q=1/2", "1", 0, {});
  REQUIRE(gauss.records.size() == 2);
  const auto& norm = std::get<IntervalValue>(gauss.records[1].value);
  const auto& g0 = std::get<IntervalValue>(gauss.records[0].value);
  CHECK(Rational::parse(g0.lo) == Rational(1) / Rational::parse(norm.hi));
  CHECK(Rational::parse(g0.hi) == Rational(1) / Rational::parse(norm.lo));

  const auto fib = dist_command("fibonacci", "1", 5, {});
  REQUIRE(fib.records.size() == 7);
  Rational lo;
  for (std::size_t k = 0; k <= 5; ++k) lo += Rational::parse(std::get<IntervalValue>(fib.records[k].value).lo);
  CHECK(lo < Rational(1));

  auto csv = invoke({"dist", "--seq", "classical", "--lambda", "1", "--k-max", "3", "--format", "csv"});
  CHECK(csv.status == kExitOk);
  CHECK(line_count(csv.out) == 6);  // header, k = 0..3, normalizer
}

TEST_CASE("oracle command") {
  const auto five = oracle_command(5, {});
  CHECK(five.exit_code == kExitOk);
  CHECK(five.records.size() == 6 * 5);
  auto csv = invoke({"oracle", "--n", "5", "--format", "csv"});
  CHECK(csv.status == kExitOk);
  CHECK(csv.out.rfind("n,enumeration-count,rota-bell,dobinski_lo,dobinski_hi,operator-specialization,agreement,", 0) ==
        0);
  CHECK(csv.out.find("\n5,52,52,") != std::string::npos);

  const auto zero = oracle_command(0, {});
  REQUIRE(zero.records.size() == 5);
  CHECK(std::get<IntegerValue>(zero.records[0].value).text == "1");
  CHECK(std::get<IntegerValue>(zero.records[1].value).text == "1");
  CHECK(std::get<IntegerValue>(zero.records[3].value).text == "1");

  auto too_big = invoke({"oracle", "--n", "14"});
  CHECK(too_big.status == kExitUsage);
  CHECK(too_big.err.find("13") != std::string::npos);
}

TEST_CASE("JSON output round-trips byte for byte") {
  const std::vector<std::vector<std::string>> commands{
      {"table", "--kind", "q-stirling", "--n", "4", "--format", "json"},
      {"table", "--kind", "bell", "--n", "10", "--format", "json"},
      {"verify", "--identity", "dobinski", "--n-max", "4", "--seq", "q=1/2", "--format", "json"},
      {"verify", "--identity", "dobinski", "--n-max", "3", "--seq", "fibonacci", "--format", "json"},
      {"dist", "--seq", "fibonacci", "--lambda", "1", "--k-max", "4", "--format", "json"},
      {"oracle", "--n", "4", "--format", "json"},
  };
  for (const auto& args : commands) {
    CAPTURE(args[0]);
    const auto r = invoke(args);
    REQUIRE(r.status == kExitOk);
    const auto records = from_json(r.out);
    CHECK(to_json(records) == r.out);
    CHECK(to_json(from_json(to_json(records))) == r.out);
  }
}

TEST_CASE("from_json rejects malformed documents") {
  for (const char* bad : {"", "{}", "[1]", "[{\"kind\":1}]", "[{\"kind\":\"a\",\"parameters\":{},\"value\":{}}]",
                          "[{\"kind\":\"a\",\"parameters\":{\"n\":1},\"value\":{\"integer\":\"1\"}}]", "[", "nonsense"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(from_json(bad), ParseError);
  }
}

TEST_CASE("CSV quoting") {
  const std::vector<OutputRecord> records{
      {"check", {{"n", "1"}}, VerdictValue{VerdictStatus::pass, "a, \"b\""}}};
  CHECK(to_csv(records) == "n,check,check_detail\n1,pass,\"a, \"\"b\"\"\"\n");
}

TEST_CASE("decimal approximation") {
  CHECK(decimal_approximation(Rational(BigInt(1), BigInt(3)), 4) == "0.3333");
  CHECK(decimal_approximation(Rational(BigInt(-7), BigInt(2)), 2) == "-3.50");
  CHECK(decimal_approximation(Rational(5), 0) == "5");
}

TEST_CASE("exit statuses on a malformed-input corpus") {
  const std::vector<std::vector<std::string>> usage_errors{
      {},
      {"frobnicate"},
      {"table"},
      {"table", "--kind", "bell"},
      {"table", "--kind", "nope", "--n", "3"},
      {"table", "--kind", "bell", "--n", "-1"},
      {"table", "--kind", "bell", "--n", "abc"},
      {"table", "--kind", "bell", "--n", "3", "--format", "xml"},
      {"table", "--kind", "bell", "--n", "501"},
      {"table", "--kind", "q-bell", "--n", "41"},
      {"table", "--kind", "cigl-q-bell", "--n", "14"},
      {"table", "--kind", "bell", "--n", "3", "--bogus"},
      {"verify", "--identity", "dobinski", "--n-max", "3", "--seq", "q=0"},
      {"verify", "--identity", "dobinski", "--n-max", "3", "--seq", "q=1/0"},
      {"verify", "--identity", "dobinski", "--n-max", "3", "--seq", "custom:1,2"},
      {"verify", "--identity", "dobinski", "--n-max", "3", "--seq", "poisson"},
      {"verify", "--identity", "everything", "--n-max", "3"},
      {"verify", "--identity", "cigl-dobinski", "--n-max", "14"},
      {"verify", "--identity", "pmf-gf", "--n-max", "3", "--seq", "fibonacci"},
      {"verify", "--identity", "dobinski", "--n-max", "3", "--max-width", "0"},
      {"dist", "--seq", "classical", "--lambda", "0", "--k-max", "3"},
      {"dist", "--seq", "classical", "--lambda", "-1/2", "--k-max", "3"},
      {"dist", "--seq", "classical", "--lambda", "one", "--k-max", "3"},
      {"dist", "--seq", "classical", "--lambda", "1"},
      {"oracle", "--n", "14"},
      {"oracle", "--n", ""},
  };
  for (const auto& args : usage_errors) {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    CAPTURE(joined);
    const auto r = invoke(args);
    CHECK(r.status == kExitUsage);
    CHECK(!r.err.empty());
  }
  CHECK(invoke({"--help"}).status == kExitOk);
  CHECK(invoke({"table", "--kind", "bell", "--n", "3"}).status == kExitOk);
}

TEST_CASE("UMBRALDOB_SUM_CAP") {
  // Too small a cap makes the series checks fail rather than crash.
  auto capped = invoke({"verify", "--identity", "dobinski", "--n-max", "3"}, {{"UMBRALDOB_SUM_CAP", "3"}});
  CHECK(capped.status == kExitVerdictFailed);
  auto dist = invoke({"dist", "--seq", "classical", "--lambda", "1", "--k-max", "2"}, {{"UMBRALDOB_SUM_CAP", "3"}});
  CHECK(dist.status == kExitVerdictFailed);
  auto generous = invoke({"verify", "--identity", "dobinski", "--n-max", "3"}, {{"UMBRALDOB_SUM_CAP", "500"}});
  CHECK(generous.status == kExitOk);
  for (const char* bad : {"", "0", "-5", "ten", "12x"}) {
    CAPTURE(bad);
    CHECK(invoke({"table", "--kind", "bell", "--n", "3"}, {{"UMBRALDOB_SUM_CAP", bad}}).status == kExitUsage);
  }
  CHECK(sum_options_from_environment([](const std::string&) { return std::optional<std::string>("77"); }).hard_cap ==
        77);
}
