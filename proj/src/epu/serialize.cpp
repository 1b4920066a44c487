#include "evoc/epu/serialize.hpp"

#include <string>
#include <vector>

#include "json.hpp"

#include "evoc/errors.hpp"

namespace evoc::epu {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Json epu_to_json(const Epu& e) {
  Json j;
  j["id"] = e.id;
  j["coding"] = e.coding;
  j["regulator"] = Json{{"signal", e.regulator.signal}, {"threshold", e.regulator.threshold}};
  j["replication_fidelity"] = e.replication_fidelity;
  Json interactions = Json::array();
  for (const Interaction& i : e.interactions) {
    interactions.push_back(Json{{"target", i.target}, {"affinity", i.affinity}});
  }
  j["interactions"] = std::move(interactions);
  j["variation"] = Json{{"multipliers", e.variation.multipliers},
                        {"hotspots", e.variation.hotspots}};
  return j;
}

// Strict field access: every key must exist, no extras allowed.
const Json& field(const Json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ValidationError(std::string("genome json: missing key '") + key + "' in " + where);
  }
  return *it;
}

void reject_unknown(const Json& j, std::initializer_list<const char*> keys, const char* where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ValidationError("genome json: unknown key '" + it.key() + "' in " + where);
    }
  }
}

template <typename T>
T as(const Json& j, const char* key, const char* where) {
  const Json& v = field(j, key, where);
  try {
    return v.get<T>();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("genome json: bad value for '") + key + "' in " + where +
                          ": " + e.what());
  }
}

Epu epu_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("genome json: epu entry is not an object");
  reject_unknown(
      j, {"id", "coding", "regulator", "replication_fidelity", "interactions", "variation"},
      "epu");
  Epu e;
  e.id = as<std::uint64_t>(j, "id", "epu");
  e.coding = as<std::string>(j, "coding", "epu");

  const Json& reg = field(j, "regulator", "epu");
  reject_unknown(reg, {"signal", "threshold"}, "regulator");
  e.regulator.signal = as<std::string>(reg, "signal", "regulator");
  e.regulator.threshold = as<double>(reg, "threshold", "regulator");

  e.replication_fidelity = as<double>(j, "replication_fidelity", "epu");

  const Json& ints = field(j, "interactions", "epu");
  if (!ints.is_array()) throw ValidationError("genome json: interactions is not an array");
  for (const Json& ij : ints) {
    reject_unknown(ij, {"target", "affinity"}, "interaction");
    Interaction i;
    i.target = as<std::uint64_t>(ij, "target", "interaction");
    i.affinity = as<double>(ij, "affinity", "interaction");
    e.interactions.push_back(i);
  }

  const Json& var = field(j, "variation", "epu");
  reject_unknown(var, {"multipliers", "hotspots"}, "variation");
  e.variation.multipliers = as<std::vector<double>>(var, "multipliers", "variation");
  e.variation.hotspots = as<std::vector<std::uint8_t>>(var, "hotspots", "variation");
  return e;
}

}  // namespace

std::string serialize_genome(const Genome& g) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["alphabet"] = g.alphabet;
  j["tags"] = Json{{"mutator", g.tags.mutator}, {"species", g.tags.species}};
  Json epus = Json::array();
  for (const Epu& e : g.epus) epus.push_back(epu_to_json(e));
  j["epus"] = std::move(epus);
  return j.dump(2);
}

Genome deserialize_genome(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("genome json: parse failure: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("genome json: top level is not an object");
  reject_unknown(j, {"schema_version", "alphabet", "tags", "epus"}, "genome");
  const auto version = as<int>(j, "schema_version", "genome");
  if (version != kSchemaVersion) {
    throw ValidationError("genome json: unsupported schema_version " + std::to_string(version));
  }

  Genome g;
  g.alphabet = as<std::string>(j, "alphabet", "genome");
  const Json& tags = field(j, "tags", "genome");
  reject_unknown(tags, {"mutator", "species"}, "tags");
  g.tags.mutator = as<bool>(tags, "mutator", "tags");
  g.tags.species = as<std::string>(tags, "species", "tags");

  const Json& epus = field(j, "epus", "genome");
  if (!epus.is_array()) throw ValidationError("genome json: epus is not an array");
  for (const Json& ej : epus) g.epus.push_back(epu_from_json(ej));

  validate_genome(g);
  return g;
}

}  // namespace evoc::epu
