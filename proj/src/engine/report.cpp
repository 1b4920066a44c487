#include "evoc/engine/report.hpp"

#include <string>
#include <vector>

#include "evoc/util/csv.hpp"
#include "evoc/version.hpp"

#include "config_json.hpp"

namespace evoc::engine {
namespace {

using Json = nlohmann::ordered_json;

Json entry_json(const BestEntry& e) {
  return Json{{"generation", e.generation}, {"fitness", e.fitness}, {"word", e.word}};
}

}  // namespace

void write_metrics_csv(std::ostream& out, const std::vector<GenMetrics>& rows) {
  write_csv_row(out, {"generation", "best_fitness", "mean_fitness", "diversity", "stress",
                      "realized_mutation_rate", "sos_tiers_active", "mutator_frequency",
                      "recombination_events", "phase"});
  for (const GenMetrics& r : rows) {
    write_csv_row(out, {std::to_string(r.generation), format_double(r.best_fitness),
                        format_double(r.mean_fitness), format_double(r.diversity),
                        format_double(r.stress), format_double(r.realized_mutation_rate),
                        std::to_string(r.sos_tiers_active), format_double(r.mutator_frequency),
                        std::to_string(r.recombination_events), phase_name(r.phase)});
  }
}

std::string report_json(const ExperimentConfig& cfg, const AnytimeReport& report) {
  Json j;
  j["schema_version"] = 1;
  j["code_version"] = kVersion;
  j["config"] = config_to_json(cfg);
  j["generations"] = report.generations;
  j["stabilized"] = report.stabilized;
  j["final"] = entry_json(report.final);
  Json trace = Json::array();
  for (const BestEntry& e : report.best_trace) trace.push_back(entry_json(e));
  j["best_trace"] = std::move(trace);
  return j.dump(2) + "\n";
}

}  // namespace evoc::engine
