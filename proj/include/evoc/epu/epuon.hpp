#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evoc/epu/epu.hpp"
#include "evoc/epu/genome.hpp"
#include "evoc/tm/codec.hpp"
#include "evoc/tm/executor.hpp"

namespace evoc::epu {

// Directed graph of epus used as constructible memory. Nodes keep insertion
// order, edges are kept sorted, and every edge endpoint must be a node id.
//
// An epuon may carry a generator: a coded machine that decides the edge
// relation over node ids. For the ordered pair (i, j) the generator runs on
// the word "<i>|<j>" (decimal ids) with the configured fuel; the edge exists
// iff the run halts with output word "1". Stored edges are expected to equal
// the generator's budgeted output.
class Epuon {
 public:
  std::size_t add(Epu node);
  const std::vector<Epu>& nodes() const { return nodes_; }
  const Epu* find(std::uint64_t id) const;
  Epu* find(std::uint64_t id);

  void link(std::uint64_t from, std::uint64_t to);
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges() const { return edges_; }

  // Replaces the stored edges with the union of all node interactions whose
  // targets are nodes of this epuon.
  void rebuild_edges_from_interactions();

  void set_generator(tm::CodeWord generator, std::uint64_t fuel);
  const std::optional<tm::CodeWord>& generator() const { return generator_; }

  // Edge relation computed by the generator. Throws ValidationError when no
  // generator is set.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> generate_edges() const;

  // Stored edges match the generator's output.
  bool generator_consistent() const;

 private:
  std::vector<Epu> nodes_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges_;
  std::optional<tm::CodeWord> generator_;
  std::uint64_t generator_fuel_ = 10000;
};

// Wraps a coded machine as an epu whose coding sequence is the code word
// itself. Decodes (and therefore validates) the code first.
Epu epuize(const tm::CodeWord& code, IdGenerator& ids);

// Runs the machine coded in the epu's coding sequence. Throws DecodeError
// when the coding is not a valid code word.
tm::RunResult evaluate_epu(const Epu& e, std::string_view input, std::uint64_t fuel);

// Genome holding a single epuized machine; the genome alphabet is the code
// alphabet so replication operators stay applicable.
Genome make_epuized_genome(const tm::CodeWord& code, IdGenerator& ids);

}  // namespace evoc::epu
