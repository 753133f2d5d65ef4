#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "dloc/annihilator.hpp"
#include "dloc/experiment.hpp"

namespace dloc {

// Deterministic renderings of a kappa run; timings never appear in the text
// report, and live under the "timings_ms" key of the JSON one.
std::string kappa_report_text(const Poly& f, int a, const KappaResult& result);
nlohmann::json kappa_report_json(const Poly& f, int a, const KappaResult& result);
std::string kappa_timings_text(const KappaResult& result);

std::string experiment_report_text(const ExperimentTable& table);
nlohmann::json experiment_report_json(const ExperimentTable& table);
std::string experiment_timings_text(const ExperimentTable& table);

} // namespace dloc
