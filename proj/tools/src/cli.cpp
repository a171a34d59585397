#include "nsg_cli/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nsg/error.hpp"

namespace nsg::cli {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view what) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last)
        throw Error(ErrorCode::InvalidArgument, std::string(what) + ": '" + std::string(text) + "' is not a decimal integer");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

bool is_input_error(ErrorCode code) {
    switch (code) {
    case ErrorCode::Empty:
    case ErrorCode::NonPositive:
    case ErrorCode::NonCoprime:
    case ErrorCode::NonMinimal:
    case ErrorCode::TrivialSemigroup:
    case ErrorCode::NotAGenerator:
    case ErrorCode::InvalidTable:
    case ErrorCode::InconsistentBetti:
    case ErrorCode::InvalidArgument:
    case ErrorCode::NegativeArgument:
    case ErrorCode::InstanceTooLarge:
    case ErrorCode::ModulusDividesNothing:
    case ErrorCode::BadResidue:
    case ErrorCode::TooManyGenerators:
        return true;
    default:
        return false;
    }
}

/// CLI11 would read "--s -14..-1" as two options.
std::vector<std::string> glue_negative_values(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if ((a == "--s" || a == "-s") && i + 1 < argc && argv[i + 1][0] == '-') {
            args.push_back("--s=" + std::string(argv[++i]));
            continue;
        }
        args.push_back(std::move(a));
    }
    return args;
}

} // namespace

std::vector<std::int64_t> parse_generators(std::string_view text) {
    std::vector<std::int64_t> out;
    if (trim(text).empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_integer(trim(text.substr(start, end - start)), "generator"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

SRange parse_s_range(std::string_view text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto v = parse_integer(trim(text), "s");
        return {v, v};
    }
    SRange r{parse_integer(trim(text.substr(0, dots)), "s"), parse_integer(trim(text.substr(dots + 2)), "s")};
    if (r.lo > r.hi) throw Error(ErrorCode::InvalidArgument, "s range " + std::string(text) + " is empty");
    return r;
}

std::set<Family> parse_families(std::string_view text) {
    std::set<Family> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        const auto name = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        const auto f = family_from_string(name);
        if (!f) throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(name) + "'");
        out.insert(*f);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

unsigned default_parallelism() {
    const char* env = std::getenv("NSG_PARALLELISM");
    if (!env || !*env) return 1;
    const auto v = parse_integer(env, "NSG_PARALLELISM");
    if (v <= 0) throw Error(ErrorCode::InvalidArgument, "NSG_PARALLELISM must be positive");
    return static_cast<unsigned>(v);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical semigroups: invariants, Hilbert numerators, Sylvester waves and syzygy-degree identities"};
    app.name("nsg");
    app.require_subcommand(1);

    struct Options {
        std::string generators;
        std::string table;
        std::string s;
        std::string families;
        std::string output = "text";
        int parallelism = -1; // unset
        bool waves_only = false;
    } opts;

    auto common = [&](CLI::App* sub) {
        sub->add_option("generators", opts.generators, "comma-separated generators, e.g. 3,5,7")->required();
        sub->add_option("--output", opts.output, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--parallelism", opts.parallelism, "worker threads (default NSG_PARALLELISM or 1)");
    };
    auto* analyze = app.add_subcommand("analyze", "profile, classification, numerator and syzygy kinds");
    auto* verify = app.add_subcommand("verify", "run every applicable identity check");
    auto* partition = app.add_subcommand("partition", "denumerant against the wave sum");
    auto* waves = app.add_subcommand("waves", "wave polynomials and optional values");
    auto* count = app.add_subcommand("count", "number of independent identities");
    for (auto* sub : {analyze, verify, partition, waves, count}) common(sub);
    verify->add_option("--table", opts.table, "syzygy table JSON");
    verify->add_option("--families", opts.families, "comma-separated families to run");
    verify->add_option("--s", opts.s, "wave range for the WaveSum family, a..b");
    partition->add_option("--s", opts.s, "a..b or a single value")->required();
    partition->add_flag("--waves-only", opts.waves_only, "skip the denumerant; allows negative s");
    waves->add_option("--s", opts.s, "also evaluate the waves on a..b");

    const auto args = glue_negative_values(argc, argv);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    RunConfig cfg;
    cfg.output = opts.output == "json" ? OutputFormat::Json : OutputFormat::Text;
    try {
        if (analyze->parsed()) cfg.command = Command::Analyze;
        if (verify->parsed()) cfg.command = Command::Verify;
        if (partition->parsed()) cfg.command = Command::Partition;
        if (waves->parsed()) cfg.command = Command::Waves;
        if (count->parsed()) cfg.command = Command::Count;
        cfg.generators = parse_generators(opts.generators);
        if (!opts.table.empty()) cfg.syzygy_table_path = opts.table;
        if (!opts.s.empty()) cfg.s_range = parse_s_range(opts.s);
        if (!opts.families.empty()) cfg.families = parse_families(opts.families);
        cfg.waves_only = opts.waves_only;
        if (opts.parallelism == 0 || opts.parallelism < -1)
            throw Error(ErrorCode::InvalidArgument, "parallelism must be positive");
        cfg.parallelism = opts.parallelism > 0 ? static_cast<unsigned>(opts.parallelism) : default_parallelism();

        const CommandResult result = execute(cfg);
        out << result.output;
        return result.exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (cfg.output == OutputFormat::Json)
            out << nlohmann::json{{"error", {{"code", std::string(to_string(e.code()))}, {"detail", e.detail()}}}}.dump()
                << "\n";
        return is_input_error(e.code()) ? kExitInputError : kExitViolation;
    }
}

} // namespace nsg::cli
