#include "loewner/report_io.hpp"

#include <nlohmann/json.hpp>

namespace loewner {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json report_to_json(const IneqReport &r) {
    ordered_json w;
    w["seed"] = r.witness.seed;
    w["dim"] = r.witness.dim;
    w["functions"] = r.witness.functions;
    w["params"] = r.witness.params;
    w["norm"] = r.witness.norm;

    ordered_json j;
    j["check_id"] = r.check_id;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["margin"] = r.margin;
    j["pass"] = r.pass;
    j["expected_fail"] = r.expected_fail;
    if (!r.error.empty())
        j["error"] = r.error;
    j["witness"] = std::move(w);
    return j;
}

ordered_json reports_to_json(const std::vector<IneqReport> &reports) {
    ordered_json arr = ordered_json::array();
    for (const auto &r : reports)
        arr.push_back(report_to_json(r));
    return arr;
}

ordered_json summary_to_json(const SweepSummary &s) {
    ordered_json j;
    j["pass"] = s.passed;
    j["expected_fail"] = s.expected_failed;
    j["unexpected_fail"] = s.unexpected;
    j["total"] = s.total();
    return j;
}

ordered_json sweep_config_to_json(const SweepConfig &c) {
    ordered_json j;
    j["dims"] = c.dims;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["functions"] = c.functions;
    std::vector<std::string> norms;
    for (const auto &k : c.norms)
        norms.push_back(k.str());
    j["norms"] = norms;
    j["nu"] = c.nu_grid;
    j["spectrum_range"] = {c.spectrum_lo, c.spectrum_hi};
    j["direction_samples"] = c.direction_samples;
    return j;
}

SweepConfig sweep_config_from_json(const json &j, SweepConfig base) {
    if (!j.is_object())
        throw std::invalid_argument("sweep config must be a JSON object");
    if (j.contains("dims"))
        base.dims = j["dims"].get<std::vector<int>>();
    if (j.contains("samples"))
        base.samples = j["samples"].get<int>();
    if (j.contains("seed"))
        base.seed = j["seed"].get<uint64_t>();
    if (j.contains("functions"))
        base.functions = j["functions"].get<std::vector<std::string>>();
    if (j.contains("norms")) {
        base.norms.clear();
        for (const auto &t : j["norms"])
            base.norms.push_back(NormKind::parse(t.get<std::string>()));
    }
    if (j.contains("nu"))
        base.nu_grid = j["nu"].get<std::vector<double>>();
    if (j.contains("spectrum_range")) {
        const auto range = j["spectrum_range"].get<std::vector<double>>();
        if (range.size() != 2)
            throw std::invalid_argument("spectrum_range must be [lo, hi]");
        base.spectrum_lo = range[0];
        base.spectrum_hi = range[1];
    }
    if (j.contains("direction_samples"))
        base.direction_samples = j["direction_samples"].get<int>();
    return base;
}

} // namespace loewner
