#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "verma_ext/coxeter.hpp"

namespace verma_ext::cli {

enum class OutputFormat { text, json, csv };

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitDomain = 2,
    kExitVerifyFailed = 3,
};

struct RunConfig {
    std::string type_descriptor;
    /// Each subset holds 0-based simple indices.
    std::vector<std::vector<int>> singular_subsets;
    std::uint64_t budget = kDefaultBudget;
    std::filesystem::path cache_dir;  // empty disables the cache
    OutputFormat output_format = OutputFormat::text;
    DescentPolicy descent_policy = DescentPolicy::smallest;
    unsigned parallelism = 0;  // 0 = one thread per core
    int oracle_max_length = kDefaultOracleMaxLength;
};

struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    /// First failure only, with enough data to reproduce it.
    std::vector<nlohmann::ordered_json> witnesses;
    double elapsed_ms = 0;

    void check(bool ok, const std::function<nlohmann::ordered_json()>& witness);
};

struct VerifyReport {
    std::string system;
    std::vector<SuiteResult> suites;
    double elapsed_ms = 0;
    std::size_t rpoly_computed = 0;
    bool cache_loaded = false;

    bool passed() const;
    const SuiteResult* suite(std::string_view name) const;
    nlohmann::ordered_json to_json() const;
};

struct ReportFiles {
    std::filesystem::path dimension_csv;
    std::filesystem::path rpoly_cache;
    std::filesystem::path summary_json;
    std::filesystem::path subspaces_json;
    std::size_t rpoly_computed = 0;
};

/// 1-based comma separated generator list; "" or "none" is the empty set.
std::vector<int> parse_subset(std::string_view text);
std::string format_subset(const std::vector<int>& subset);

VerifyReport run_verify(const RunConfig& config);
ReportFiles run_report(const RunConfig& config, const std::string& timestamp);

int cmd_enumerate(const RunConfig& config, std::ostream& out);
int cmd_rpoly(const RunConfig& config, std::string_view x_word, std::string_view y_word, std::ostream& out);
int cmd_vspace(const RunConfig& config, std::string_view x_word, std::string_view y_word, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_report(const RunConfig& config, std::ostream& out);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

} // namespace verma_ext::cli
