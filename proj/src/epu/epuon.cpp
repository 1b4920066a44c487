#include "evoc/epu/epuon.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "evoc/errors.hpp"

namespace evoc::epu {

std::size_t Epuon::add(Epu node) {
  if (find(node.id) != nullptr) {
    throw ValidationError("duplicate epu id " + std::to_string(node.id) + " in epuon");
  }
  nodes_.push_back(std::move(node));
  return nodes_.size() - 1;
}

const Epu* Epuon::find(std::uint64_t id) const {
  for (const Epu& e : nodes_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

Epu* Epuon::find(std::uint64_t id) {
  for (Epu& e : nodes_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

void Epuon::link(std::uint64_t from, std::uint64_t to) {
  if (find(from) == nullptr || find(to) == nullptr) {
    throw ValidationError("epuon edge endpoint is not a node");
  }
  auto edge = std::make_pair(from, to);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), edge);
  if (it != edges_.end() && *it == edge) return;
  edges_.insert(it, edge);
}

void Epuon::rebuild_edges_from_interactions() {
  edges_.clear();
  for (const Epu& e : nodes_) {
    for (const Interaction& i : e.interactions) {
      if (find(i.target) != nullptr) {
        edges_.emplace_back(e.id, i.target);
      }
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

void Epuon::set_generator(tm::CodeWord generator, std::uint64_t fuel) {
  // Decode eagerly so a malformed generator fails here, not on first query.
  (void)tm::decode_machine(generator);
  generator_ = std::move(generator);
  generator_fuel_ = fuel;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> Epuon::generate_edges() const {
  if (!generator_.has_value()) {
    throw ValidationError("epuon has no generator");
  }
  const tm::MachineDescription machine = tm::decode_machine(*generator_);
  const tm::CompiledMachine compiled(machine);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const Epu& a : nodes_) {
    for (const Epu& b : nodes_) {
      const std::string query = std::to_string(a.id) + "|" + std::to_string(b.id);
      tm::RunResult r =
          tm::run_compiled(compiled, tm::initial_configuration(machine, query), generator_fuel_);
      if (r.kind == tm::RunResult::Kind::halted && r.output == "1") {
        out.emplace_back(a.id, b.id);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Epuon::generator_consistent() const {
  return generate_edges() == edges_;
}

Epu epuize(const tm::CodeWord& code, IdGenerator& ids) {
  // Decode first: only valid code words become epus.
  (void)tm::decode_machine(code);
  return make_default_epu(ids.fresh(), code.text);
}

tm::RunResult evaluate_epu(const Epu& e, std::string_view input, std::uint64_t fuel) {
  const tm::MachineDescription machine = tm::decode_machine(tm::CodeWord{e.coding});
  return tm::run(machine, input, fuel);
}

Genome make_epuized_genome(const tm::CodeWord& code, IdGenerator& ids) {
  std::vector<Epu> epus;
  epus.push_back(epuize(code, ids));
  return make_genome(std::move(epus), "0123456789|");
}

}  // namespace evoc::epu
