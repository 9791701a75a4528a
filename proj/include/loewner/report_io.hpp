#pragma once

#include "loewner/checks.hpp"

#include <nlohmann/json_fwd.hpp>

namespace loewner {

nlohmann::ordered_json report_to_json(const IneqReport &report);
nlohmann::ordered_json reports_to_json(const std::vector<IneqReport> &reports);
nlohmann::ordered_json summary_to_json(const SweepSummary &summary);
nlohmann::ordered_json sweep_config_to_json(const SweepConfig &config);

/// Accepts a partial object; absent keys keep the defaults in `base`.
SweepConfig sweep_config_from_json(const nlohmann::json &j, SweepConfig base);

} // namespace loewner
