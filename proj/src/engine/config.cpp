#include "evoc/engine/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "evoc/errors.hpp"

#include "config_json.hpp"

namespace evoc::engine {
namespace {

using Json = nlohmann::ordered_json;

std::string join(const std::string& path, const char* key) {
  return path.empty() ? std::string(key) : path + "." + key;
}

const Json* find(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

void expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
}

void check_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) throw ConfigError(join(path, it.key().c_str()), "unknown key");
  }
}

void read_unsigned(const Json& j, const char* key, std::uint64_t& out, const std::string& path) {
  const Json* v = find(j, key);
  if (v == nullptr) return;
  if (v->is_number_unsigned()) {
    out = v->get<std::uint64_t>();
    return;
  }
  if (v->is_number_integer()) {
    auto n = v->get<std::int64_t>();
    if (n < 0) throw ConfigError(join(path, key), "must not be negative");
    out = static_cast<std::uint64_t>(n);
    return;
  }
  throw ConfigError(join(path, key), "expected a non-negative integer");
}

void read_size(const Json& j, const char* key, std::size_t& out, const std::string& path) {
  std::uint64_t v = out;
  read_unsigned(j, key, v, path);
  out = static_cast<std::size_t>(v);
}

void read_double(const Json& j, const char* key, double& out, const std::string& path) {
  const Json* v = find(j, key);
  if (v == nullptr) return;
  if (!v->is_number()) throw ConfigError(join(path, key), "expected a number");
  out = v->get<double>();
}

void read_bool(const Json& j, const char* key, bool& out, const std::string& path) {
  const Json* v = find(j, key);
  if (v == nullptr) return;
  if (!v->is_boolean()) throw ConfigError(join(path, key), "expected true or false");
  out = v->get<bool>();
}

void read_string(const Json& j, const char* key, std::string& out, const std::string& path) {
  const Json* v = find(j, key);
  if (v == nullptr) return;
  if (!v->is_string()) throw ConfigError(join(path, key), "expected a string");
  out = v->get<std::string>();
}

void in_unit(double v, const char* key) {
  if (v < 0.0 || v > 1.0) throw ConfigError(key, "must be in [0, 1]");
}

}  // namespace

const char* mode_name(Mode m) {
  return m == Mode::c_ima ? "c_ima" : "c_ina";
}

const char* benchmark_name(Benchmark b) {
  switch (b) {
    case Benchmark::onemax: return "onemax";
    case Benchmark::oscillation: return "oscillation";
    case Benchmark::ktrap: return "ktrap";
    case Benchmark::neutral: return "neutral";
  }
  return "?";
}

ExperimentConfig config_from_json(const Json& j) {
  expect_object(j, "");
  check_keys(j,
             {"seed", "budget", "window", "population", "mode", "genome", "rates", "selection",
              "sos", "mrs", "recombination", "hypermutation", "memory", "environment", "stress",
              "phase"},
             "");

  ExperimentConfig c;
  read_unsigned(j, "seed", c.seed, "");
  read_unsigned(j, "budget", c.budget, "");
  read_unsigned(j, "window", c.window, "");
  read_size(j, "population", c.population, "");

  if (const Json* v = find(j, "mode")) {
    if (!v->is_string()) throw ConfigError("mode", "expected a string");
    const std::string s = v->get<std::string>();
    if (s == "c_ima") {
      c.mode = Mode::c_ima;
    } else if (s == "c_ina") {
      c.mode = Mode::c_ina;
    } else {
      throw ConfigError("mode", "must be \"c_ima\" or \"c_ina\"");
    }
  }

  if (const Json* b = find(j, "genome")) {
    expect_object(*b, "genome");
    check_keys(*b, {"alphabet", "init", "mutator_fraction", "species"}, "genome");
    read_string(*b, "alphabet", c.genome.alphabet, "genome");
    read_string(*b, "init", c.genome.init, "genome");
    read_double(*b, "mutator_fraction", c.genome.mutator_fraction, "genome");
    read_string(*b, "species", c.genome.species, "genome");
  }
  if (const Json* b = find(j, "rates")) {
    expect_object(*b, "rates");
    check_keys(*b, {"base_rate", "mutator_strength", "replication_fidelity"}, "rates");
    read_double(*b, "base_rate", c.rates.base_rate, "rates");
    read_double(*b, "mutator_strength", c.rates.mutator_strength, "rates");
    read_double(*b, "replication_fidelity", c.rates.replication_fidelity, "rates");
  }
  if (const Json* b = find(j, "selection")) {
    expect_object(*b, "selection");
    check_keys(*b, {"tournament", "elitism"}, "selection");
    read_size(*b, "tournament", c.selection.tournament, "selection");
    read_size(*b, "elitism", c.selection.elitism, "selection");
  }
  if (const Json* b = find(j, "sos")) {
    expect_object(*b, "sos");
    check_keys(*b,
               {"ner_threshold", "tls_threshold", "targeted_multiplier", "untargeted_multiplier",
                "ner_repair"},
               "sos");
    read_double(*b, "ner_threshold", c.sos.ner_threshold, "sos");
    read_double(*b, "tls_threshold", c.sos.tls_threshold, "sos");
    read_double(*b, "targeted_multiplier", c.sos.targeted_multiplier, "sos");
    read_double(*b, "untargeted_multiplier", c.sos.untargeted_multiplier, "sos");
    read_double(*b, "ner_repair", c.sos.ner_repair, "sos");
  }
  if (const Json* b = find(j, "mrs")) {
    expect_object(*b, "mrs");
    check_keys(*b, {"enabled", "p_repair", "barrier_threshold"}, "mrs");
    read_bool(*b, "enabled", c.mrs.enabled, "mrs");
    read_double(*b, "p_repair", c.mrs.p_repair, "mrs");
    read_double(*b, "barrier_threshold", c.mrs.barrier_threshold, "mrs");
  }
  if (const Json* b = find(j, "recombination")) {
    expect_object(*b, "recombination");
    check_keys(*b, {"enabled", "rate", "crossovers", "hotspot_weight"}, "recombination");
    read_bool(*b, "enabled", c.recombination.enabled, "recombination");
    read_double(*b, "rate", c.recombination.rate, "recombination");
    read_size(*b, "crossovers", c.recombination.crossovers, "recombination");
    read_double(*b, "hotspot_weight", c.recombination.hotspot_weight, "recombination");
  }
  if (const Json* b = find(j, "hypermutation")) {
    expect_object(*b, "hypermutation");
    check_keys(*b, {"enabled", "rate"}, "hypermutation");
    read_bool(*b, "enabled", c.hypermutation.enabled, "hypermutation");
    read_double(*b, "rate", c.hypermutation.rate, "hypermutation");
  }
  if (const Json* b = find(j, "memory")) {
    expect_object(*b, "memory");
    check_keys(*b, {"enabled", "capacity"}, "memory");
    read_bool(*b, "enabled", c.memory.enabled, "memory");
    read_size(*b, "capacity", c.memory.capacity, "memory");
  }
  if (const Json* b = find(j, "environment")) {
    expect_object(*b, "environment");
    check_keys(*b, {"benchmark", "loci", "differing", "switch_every", "switches", "lesion_rate"},
               "environment");
    if (const Json* v = find(*b, "benchmark")) {
      if (!v->is_string()) throw ConfigError("environment.benchmark", "expected a string");
      const std::string s = v->get<std::string>();
      if (s == "onemax") {
        c.environment.benchmark = Benchmark::onemax;
      } else if (s == "oscillation") {
        c.environment.benchmark = Benchmark::oscillation;
      } else if (s == "ktrap") {
        c.environment.benchmark = Benchmark::ktrap;
      } else if (s == "neutral") {
        c.environment.benchmark = Benchmark::neutral;
      } else {
        throw ConfigError("environment.benchmark",
                          "must be one of onemax, oscillation, ktrap, neutral");
      }
    }
    read_size(*b, "loci", c.environment.loci, "environment");
    // Track the loci count unless the flip width is set explicitly.
    bool differing_given = find(*b, "differing") != nullptr;
    read_size(*b, "differing", c.environment.differing, "environment");
    if (!differing_given) c.environment.differing = c.environment.loci;
    read_unsigned(*b, "switch_every", c.environment.switch_every, "environment");
    read_size(*b, "switches", c.environment.switches, "environment");
    read_double(*b, "lesion_rate", c.environment.lesion_rate, "environment");
  }
  if (const Json* b = find(j, "stress")) {
    expect_object(*b, "stress");
    check_keys(*b, {"target_fraction"}, "stress");
    read_double(*b, "target_fraction", c.stress.target_fraction, "stress");
  }
  if (const Json* b = find(j, "phase")) {
    expect_object(*b, "phase");
    check_keys(*b, {"improvement_window", "improvements_to_specialize"}, "phase");
    read_unsigned(*b, "improvement_window", c.phase.improvement_window, "phase");
    read_size(*b, "improvements_to_specialize", c.phase.improvements_to_specialize, "phase");
  }

  validate_config(c);
  return c;
}

Json config_to_json(const ExperimentConfig& c) {
  Json j;
  j["seed"] = c.seed;
  j["budget"] = c.budget;
  j["window"] = c.window;
  j["population"] = c.population;
  j["mode"] = mode_name(c.mode);
  j["genome"] = Json{{"alphabet", c.genome.alphabet},
                     {"init", c.genome.init},
                     {"mutator_fraction", c.genome.mutator_fraction},
                     {"species", c.genome.species}};
  j["rates"] = Json{{"base_rate", c.rates.base_rate},
                    {"mutator_strength", c.rates.mutator_strength},
                    {"replication_fidelity", c.rates.replication_fidelity}};
  j["selection"] = Json{{"tournament", c.selection.tournament}, {"elitism", c.selection.elitism}};
  j["sos"] = Json{{"ner_threshold", c.sos.ner_threshold},
                  {"tls_threshold", c.sos.tls_threshold},
                  {"targeted_multiplier", c.sos.targeted_multiplier},
                  {"untargeted_multiplier", c.sos.untargeted_multiplier},
                  {"ner_repair", c.sos.ner_repair}};
  j["mrs"] = Json{{"enabled", c.mrs.enabled},
                  {"p_repair", c.mrs.p_repair},
                  {"barrier_threshold", c.mrs.barrier_threshold}};
  j["recombination"] = Json{{"enabled", c.recombination.enabled},
                            {"rate", c.recombination.rate},
                            {"crossovers", c.recombination.crossovers},
                            {"hotspot_weight", c.recombination.hotspot_weight}};
  j["hypermutation"] =
      Json{{"enabled", c.hypermutation.enabled}, {"rate", c.hypermutation.rate}};
  j["memory"] = Json{{"enabled", c.memory.enabled}, {"capacity", c.memory.capacity}};
  j["environment"] = Json{{"benchmark", benchmark_name(c.environment.benchmark)},
                          {"loci", c.environment.loci},
                          {"differing", c.environment.differing},
                          {"switch_every", c.environment.switch_every},
                          {"switches", c.environment.switches},
                          {"lesion_rate", c.environment.lesion_rate}};
  j["stress"] = Json{{"target_fraction", c.stress.target_fraction}};
  j["phase"] = Json{{"improvement_window", c.phase.improvement_window},
                    {"improvements_to_specialize", c.phase.improvements_to_specialize}};
  return j;
}

ExperimentConfig load_config_text(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config is not valid json: ") + e.what());
  }
  return config_from_json(j);
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_config_text(buf.str());
}

void validate_config(const ExperimentConfig& c) {
  if (c.window == 0) throw ConfigError("window", "must be at least 1");
  if (c.population < 2) throw ConfigError("population", "must be at least 2");

  {
    const std::string& a = c.genome.alphabet;
    if (a.size() < 2) throw ConfigError("genome.alphabet", "needs at least two symbols");
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t k = i + 1; k < a.size(); ++k) {
        if (a[i] == a[k]) throw ConfigError("genome.alphabet", "symbols must be unique");
      }
    }
    if (c.environment.benchmark != Benchmark::neutral &&
        (a.find('0') == std::string::npos || a.find('1') == std::string::npos)) {
      throw ConfigError("genome.alphabet", "string benchmarks need '0' and '1'");
    }
  }
  if (c.genome.init != "random" && c.genome.init != "zeros")
    throw ConfigError("genome.init", "must be \"random\" or \"zeros\"");
  in_unit(c.genome.mutator_fraction, "genome.mutator_fraction");

  in_unit(c.rates.base_rate, "rates.base_rate");
  if (c.rates.mutator_strength < 1.0) {
    throw ConfigError("rates.mutator_strength", "must be at least 1");
  }
  in_unit(c.rates.replication_fidelity, "rates.replication_fidelity");

  if (c.selection.tournament < 1 || c.selection.tournament > c.population) {
    throw ConfigError("selection.tournament", "must be in [1, population]");
  }
  if (c.selection.elitism >= c.population) {
    throw ConfigError("selection.elitism", "must be smaller than the population");
  }

  if (c.sos.ner_threshold <= 0.0 || c.sos.ner_threshold > 1.0) {
    throw ConfigError("sos.ner_threshold", "must be in (0, 1]");
  }
  if (c.sos.tls_threshold <= c.sos.ner_threshold || c.sos.tls_threshold > 1.0) {
    throw ConfigError("sos.tls_threshold", "must be in (ner_threshold, 1]");
  }
  if (c.sos.targeted_multiplier < 0.0 || c.sos.untargeted_multiplier < 0.0) {
    throw ConfigError("sos.targeted_multiplier", "multipliers must not be negative");
  }
  in_unit(c.sos.ner_repair, "sos.ner_repair");

  in_unit(c.mrs.p_repair, "mrs.p_repair");
  in_unit(c.mrs.barrier_threshold, "mrs.barrier_threshold");

  in_unit(c.recombination.rate, "recombination.rate");
  if (c.recombination.crossovers < 1) {
    throw ConfigError("recombination.crossovers", "must be at least 1");
  }
  if (c.recombination.hotspot_weight <= 0.0) {
    throw ConfigError("recombination.hotspot_weight", "must be positive");
  }

  in_unit(c.hypermutation.rate, "hypermutation.rate");

  if (c.memory.capacity < 1) throw ConfigError("memory.capacity", "must be at least 1");

  if (c.environment.loci < 1) throw ConfigError("environment.loci", "must be at least 1");
  if (c.environment.benchmark == Benchmark::ktrap && c.environment.loci < 3) {
    throw ConfigError("environment.loci", "ktrap needs at least 3 loci");
  }
  if (c.environment.benchmark == Benchmark::oscillation) {
    if (c.environment.differing < 1 || c.environment.differing > c.environment.loci) {
      throw ConfigError("environment.differing", "must be in [1, loci]");
    }
  }
  if (c.environment.switches > 0) {
    if (c.environment.benchmark != Benchmark::oscillation) {
      throw ConfigError("environment.switches", "only the oscillation benchmark switches");
    }
    if (c.environment.switch_every < 1) {
      throw ConfigError("environment.switch_every", "must be at least 1 when switching");
    }
  }
  in_unit(c.environment.lesion_rate, "environment.lesion_rate");

  if (c.stress.target_fraction <= 0.0 || c.stress.target_fraction > 1.0) {
    throw ConfigError("stress.target_fraction", "must be in (0, 1]");
  }

  if (c.phase.improvement_window < 1) {
    throw ConfigError("phase.improvement_window", "must be at least 1");
  }
  if (c.phase.improvements_to_specialize < 1) {
    throw ConfigError("phase.improvements_to_specialize", "must be at least 1");
  }
}

}  // namespace evoc::engine
