#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "umbraldob/certified.hpp"
#include "umbraldob/cli/records.hpp"
#include "umbraldob/psi_sequence.hpp"

namespace umbraldob::cli {

/// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitUsage = 2;

/// Size limits for `table`, per kind family.
inline constexpr std::uint64_t kClassicalTableCap = 500;
inline constexpr std::uint64_t kQTableCap = 40;
/// Limit on n for the series-based identities of `verify`.
inline constexpr std::uint64_t kSeriesVerifyCap = 40;
inline constexpr std::uint64_t kConjugationCap = 200;
inline constexpr std::uint64_t kDistCap = 1000;

using EnvironmentLookup = std::function<std::optional<std::string>(const std::string&)>;

EnvironmentLookup process_environment();

/// Summation options after applying UMBRALDOB_SUM_CAP. Throws ParseError on
/// a malformed value.
SumOptions sum_options_from_environment(const EnvironmentLookup& env);

/// Result of a command before rendering.
struct CommandOutput {
  std::vector<OutputRecord> records;
  int exit_code = kExitOk;
};

// Command bodies. Each throws ParseError / CapExceededError /
// InadmissibleSequenceError for usage problems; run() maps those to exit 2.
CommandOutput table_command(const std::string& kind, std::uint64_t n);
CommandOutput verify_command(const std::string& identity, std::uint64_t n_max, const std::string& seq_spec,
                             const SumOptions& options);
CommandOutput dist_command(const std::string& seq_spec, const std::string& lambda, std::uint64_t k_max,
                           const SumOptions& options);
CommandOutput oracle_command(std::uint64_t n, const SumOptions& options);

/// Full command line entry point; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvironmentLookup& env = process_environment());

}  // namespace umbraldob::cli
