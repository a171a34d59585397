#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/report.hpp"

namespace nsg::cli {

enum class Command { Analyze, Verify, Partition, Waves, Count };
enum class OutputFormat { Text, Json };

struct SRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

struct RunConfig {
    Command command = Command::Analyze;
    std::vector<std::int64_t> generators;
    std::optional<std::string> syzygy_table_path;
    std::optional<SRange> s_range;
    std::optional<std::set<Family>> families;
    OutputFormat output = OutputFormat::Text;
    unsigned parallelism = 1;
    bool waves_only = false;
};

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

struct CommandResult {
    int exit_code = kExitPass;
    std::string output;
};

/// Comma-separated decimal integers; throws InvalidArgument on anything else.
std::vector<std::int64_t> parse_generators(std::string_view text);
/// "a..b" or a single "a".
SRange parse_s_range(std::string_view text);
std::set<Family> parse_families(std::string_view text);
/// NSG_PARALLELISM when set, else 1. Throws InvalidArgument on a bad value.
unsigned default_parallelism();

/// Runs one command. Input problems surface as nsg::Error.
CommandResult execute(const RunConfig& cfg);

/// Checks sorted by family and parameters; residual = actual - expected.
std::string emit_report(const IdentityReport& report, OutputFormat format);

/// Full command line front end. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace nsg::cli
