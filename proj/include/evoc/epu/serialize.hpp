#pragma once

#include <string>

#include "evoc/epu/genome.hpp"

namespace evoc::epu {

// JSON text for a genome (schema_version 1). Key order and number formatting
// are fixed, so equal genomes serialize to equal bytes.
std::string serialize_genome(const Genome& g);

// Inverse of serialize_genome. Throws ValidationError on malformed JSON,
// wrong schema_version, missing or unknown keys, or a genome that fails
// validation.
Genome deserialize_genome(const std::string& text);

}  // namespace evoc::epu
