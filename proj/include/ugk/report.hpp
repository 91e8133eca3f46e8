#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ugk/conditions.hpp"
#include "ugk/constructions.hpp"
#include "ugk/oracle.hpp"

namespace ugk::report {

inline constexpr const char* kSchema = "ugk-report/1";

/// Top-level object every JSON report starts from.
nlohmann::json envelope(const std::string& command, const std::string& input);

nlohmann::json diagnostics(const Ultragraph& g, const std::vector<Diagnostic>& ds);
nlohmann::json emitters(const Ultragraph& g);
nlohmann::json conditions(const std::vector<ConditionReport>& rs);
nlohmann::json witness(const Ultragraph& g, const Witness& w);
nlohmann::json diff(const oracle::DiffReport& r);

}  // namespace ugk::report
