#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nsg/report.hpp"

namespace nsg::cli::detail {

/// Rational when the value is rational, basis coordinates otherwise.
std::string value_string(const ExactValue& v);

nlohmann::json check_json(const Check& c);
nlohmann::json report_array(const IdentityReport& report);

/// Left-aligned columns separated by two spaces; first row is the header.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

std::string params_string(const CheckParams& p);

} // namespace nsg::cli::detail
