#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "evoc/engine/engine.hpp"

namespace evoc::engine {

// Exact column set of the per-generation metrics file, header included.
void write_metrics_csv(std::ostream& out, const std::vector<GenMetrics>& rows);

// Run report: effective config echo, code version, best-word trace, final
// designation and stabilization flag. Stable key order, trailing newline.
std::string report_json(const ExperimentConfig& cfg, const AnytimeReport& report);

}  // namespace evoc::engine
