#include "emit.hpp"

#include <algorithm>
#include <sstream>

#include "nsg_cli/cli.hpp"

namespace nsg::cli::detail {

namespace {

std::string_view status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    }
    return "fail";
}

} // namespace

std::string value_string(const ExactValue& v) {
    if (const auto* c = std::get_if<CyclotomicNumber>(&v)) {
        if (auto r = is_rational(*c)) return to_string(*r);
    }
    return to_string(v);
}

std::string params_string(const CheckParams& p) {
    std::string out;
    auto add = [&](const char* key, const std::optional<std::int64_t>& v) {
        if (!v) return;
        if (!out.empty()) out += ' ';
        out += key;
        out += '=';
        out += std::to_string(*v);
    };
    add("q", p.q);
    add("n", p.n);
    add("r", p.r);
    add("k", p.k);
    add("s", p.s);
    return out.empty() ? "-" : out;
}

nlohmann::json check_json(const Check& c) {
    nlohmann::json params = nlohmann::json::object();
    auto add = [&](const char* key, const std::optional<std::int64_t>& v) {
        if (v) params[key] = *v;
    };
    add("q", c.params.q);
    add("n", c.params.n);
    add("r", c.params.r);
    add("k", c.params.k);
    add("s", c.params.s);
    nlohmann::json j = {
        {"family", std::string(to_string(c.family))},
        {"name", c.name},
        {"params", params},
        {"role", c.role == CheckRole::Identity ? "identity" : "cross_check"},
        {"status", std::string(status_name(c.status))},
    };
    if (c.status != CheckStatus::Skipped) {
        j["expected"] = value_string(c.expected);
        j["actual"] = value_string(c.actual);
        j["residual"] = value_string(exact_difference(c.actual, c.expected));
    }
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

nlohmann::json report_array(const IdentityReport& report) {
    IdentityReport sorted = report;
    sort_report(sorted);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : sorted) arr.push_back(check_json(c));
    return arr;
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << line << '\n';
    }
    return out.str();
}

} // namespace nsg::cli::detail

namespace nsg::cli {

std::string emit_report(const IdentityReport& report, OutputFormat format) {
    if (format == OutputFormat::Json) {
        nlohmann::json j = {{"checks", detail::report_array(report)}};
        return j.dump() + "\n";
    }
    if (report.empty()) return "no checks executed\n";
    IdentityReport sorted = report;
    sort_report(sorted);
    std::vector<std::vector<std::string>> rows = {{"family", "name", "params", "status", "expected", "actual", "residual"}};
    for (const auto& c : sorted) {
        if (c.status == CheckStatus::Skipped) {
            rows.push_back({std::string(to_string(c.family)), c.name, detail::params_string(c.params), "skipped", "-", "-",
                            c.note.empty() ? "-" : c.note});
            continue;
        }
        rows.push_back({std::string(to_string(c.family)), c.name, detail::params_string(c.params),
                        c.status == CheckStatus::Pass ? "pass" : "FAIL", detail::value_string(c.expected),
                        detail::value_string(c.actual), detail::value_string(exact_difference(c.actual, c.expected))});
    }
    return detail::format_table(rows);
}

} // namespace nsg::cli
