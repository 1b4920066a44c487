#include "evoc/engine/engine.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "evoc/errors.hpp"
#include "evoc/ops/mutator.hpp"
#include "evoc/ops/recombination.hpp"

namespace evoc::engine {
namespace {

double mean_fitness(const std::vector<Individual>& pop) {
  double sum = 0.0;
  for (const Individual& i : pop) sum += i.fitness;
  return sum / static_cast<double>(pop.size());
}

// Highest fitness, earliest index on ties.
std::size_t best_index(const std::vector<Individual>& pop) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (pop[i].fitness > pop[best].fitness) best = i;
  }
  return best;
}

// Lowest fitness among non-elite slots, earliest index on ties.
std::size_t worst_replaceable(const std::vector<Individual>& pop, std::size_t elitism) {
  std::size_t worst = elitism;
  for (std::size_t i = elitism + 1; i < pop.size(); ++i) {
    if (pop[i].fitness < pop[worst].fitness) worst = i;
  }
  return worst;
}

// Positions of the shared prefix where the two words disagree.
std::vector<std::size_t> diff_loci(const std::string& a, const std::string& b) {
  std::vector<std::size_t> out;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) out.push_back(i);
  }
  return out;
}

std::size_t tournament_pick(const std::vector<Individual>& pop, std::size_t rounds, Rng& rng) {
  std::size_t winner = pick_index(rng, pop.size());
  for (std::size_t k = 1; k < rounds; ++k) {
    const std::size_t challenger = pick_index(rng, pop.size());
    if (pop[challenger].fitness > pop[winner].fitness) winner = challenger;
  }
  return winner;
}

// Appends donor proposals whose loci are still free (first writer wins).
void merge_proposals(std::vector<epu::ProposedMutation>& into,
                     const std::vector<epu::ProposedMutation>& donor) {
  for (const epu::ProposedMutation& p : donor) {
    bool taken = false;
    for (const epu::ProposedMutation& q : into) {
      if (q.locus == p.locus) {
        taken = true;
        break;
      }
    }
    if (!taken) into.push_back(p);
  }
}

double sampled_diversity(const std::vector<Individual>& pop) {
  const std::size_t n = std::min<std::size_t>(32, pop.size());
  if (n < 2) return 0.0;
  std::vector<std::size_t> idx(n);
  for (std::size_t k = 0; k < n; ++k) idx[k] = k * pop.size() / n;
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      sum += epu::divergence(pop[idx[a]].genome, pop[idx[b]].genome);
      ++pairs;
    }
  }
  return sum / static_cast<double>(pairs);
}

double mutator_share(const std::vector<Individual>& pop) {
  std::size_t carriers = 0;
  for (const Individual& i : pop) {
    if (i.genome.tags.mutator) ++carriers;
  }
  return static_cast<double>(carriers) / static_cast<double>(pop.size());
}

// One full generation. `innovative` opens the stress-gated layer; with it
// closed this is exactly the imitative core.
void advance(EngineState& s, bool innovative) {
  const std::uint64_t g = s.generation + 1;
  const int variant = s.env.variant_at(g);
  const bool switched = s.env.is_switch(g);
  const ExperimentConfig& cfg = s.cfg;

  if (switched) {
    if (innovative && cfg.memory.enabled) {
      const std::size_t bi = best_index(s.population);
      s.memory.store(s.env.variant_at(g - 1), s.population[bi].genome,
                     s.population[bi].fitness, cfg.memory.capacity);
    }
    for (Individual& ind : s.population) ind.fitness = s.env.fitness(ind.genome, variant);
    s.stress = 1.0;
    s.phase = Phase::inducible;
    s.improvement_gens.clear();
    s.improvement_loci.clear();
    s.contingency.clear();
    if (innovative) {
      s.lesions.clear();
      ops::seed_lesions(s.lesions, cfg.environment.loci, cfg.environment.lesion_rate, s.rng_env);
    }
  } else {
    s.stress = stress_signal(mean_fitness(s.population), s.env.optimum(variant),
                             cfg.stress.target_fraction);
  }
  ops::sos_update(s.sos, s.stress);

  if (innovative) {
    if (s.phase == Phase::inducible && s.stress > cfg.sos.ner_threshold) {
      s.phase = Phase::proactive;
    }
    if (s.phase == Phase::proactive &&
        s.improvement_gens.size() >= cfg.phase.improvements_to_specialize) {
      const std::size_t need = cfg.phase.improvements_to_specialize;
      const std::uint64_t span =
          s.improvement_gens.back() - s.improvement_gens[s.improvement_gens.size() - need];
      if (span <= cfg.phase.improvement_window) s.phase = Phase::specializing;
    }
    if (s.phase == Phase::specializing) {
      // Hypermutable loci = where recent best improvements touched the word.
      const std::uint64_t horizon =
          g > cfg.phase.improvement_window ? g - cfg.phase.improvement_window : 0;
      s.contingency.clear();
      for (std::size_t k = 0; k < s.improvement_gens.size(); ++k) {
        if (s.improvement_gens[k] < horizon) continue;
        s.contingency.insert(s.contingency.end(), s.improvement_loci[k].begin(),
                             s.improvement_loci[k].end());
      }
      std::sort(s.contingency.begin(), s.contingency.end());
      s.contingency.erase(std::unique(s.contingency.begin(), s.contingency.end()),
                          s.contingency.end());
    } else {
      s.contingency.clear();
    }
    ops::ner_repair(s.lesions, s.sos, cfg.sos.ner_repair, s.rng_extras);
  }

  const bool tls_on = innovative && ops::tier_active(s.sos, ops::kTlsTier);
  const bool hyper_on = innovative && cfg.hypermutation.enabled &&
                        s.phase == Phase::specializing && !s.contingency.empty();

  // Reproduction: elites survive verbatim, the rest of the slots are filled
  // by tournament winners' offspring.
  std::vector<Individual> next;
  next.reserve(cfg.population);
  {
    std::vector<std::size_t> order(s.population.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return s.population[a].fitness > s.population[b].fitness;
    });
    for (std::size_t e = 0; e < cfg.selection.elitism; ++e) next.push_back(s.population[order[e]]);
  }

  std::size_t loci_copied = 0;
  std::size_t edits_applied = 0;
  while (next.size() < cfg.population) {
    const Individual& parent =
        s.population[tournament_pick(s.population, cfg.selection.tournament, s.rng_repro)];

    epu::RatePolicy policy{cfg.rates.base_rate, 1.0};
    policy = ops::with_mutator(policy, parent.genome.tags, cfg.rates.mutator_strength);
    std::vector<epu::ProposedMutation> proposals =
        epu::replication_proposals(parent.genome, policy, s.rng_repro);

    if (tls_on) {
      if (!s.lesions.empty()) {
        merge_proposals(proposals, ops::tls_proposals(parent.genome, s.lesions, s.sos,
                                                      cfg.rates.base_rate, true, s.rng_extras));
      }
      merge_proposals(proposals, ops::tls_proposals(parent.genome, s.lesions, s.sos,
                                                    cfg.rates.base_rate, false, s.rng_extras));
    }
    if (hyper_on) {
      merge_proposals(proposals, ops::hypermutation_proposals(parent.genome, s.contingency,
                                                              cfg.hypermutation.rate,
                                                              s.rng_extras));
    }
    ops::mrs_filter(s.mrs, proposals, s.rng_repro);

    epu::Genome child = epu::apply_mutations(parent.genome, proposals, s.ids);
    edits_applied += proposals.size();
    loci_copied += parent.genome.total_loci();
    const double f = s.env.fitness(child, variant);
    next.push_back({std::move(child), f});
  }

  // Stress-scaled horizontal exchange behind the divergence gate.
  std::size_t recombination_events = 0;
  if (innovative && cfg.recombination.enabled && s.stress > 0.0) {
    const auto attempts = static_cast<std::size_t>(
        std::floor(s.stress * cfg.recombination.rate * static_cast<double>(cfg.population)));
    const ops::RecombinationParams params{cfg.recombination.crossovers,
                                          cfg.recombination.hotspot_weight};
    for (std::size_t k = 0; k < attempts; ++k) {
      std::size_t i = pick_index(s.rng_extras, next.size());
      std::size_t j = pick_index(s.rng_extras, next.size() - 1);
      if (j >= i) ++j;
      const double d = epu::divergence(next[i].genome, next[j].genome);
      if (!ops::recombination_gate(s.mrs, s.sos, d)) continue;
      std::size_t target = j;
      if (target < cfg.selection.elitism) target = i;
      if (target < cfg.selection.elitism) continue;  // both ends elite: leave them be
      epu::Genome child = ops::recombine(next[i].genome, next[j].genome, params, s.rng_extras,
                                         s.ids);
      const double f = s.env.fitness(child, variant);
      next[target] = {std::move(child), f};
      ++recombination_events;
    }
  }

  // Memory reinjection: a stored solution for this variant beats the current
  // best, so plant it on the weakest slot (the quick recall path).
  if (cfg.memory.enabled) {
    if (const MemoryEntry* hit = s.memory.lookup(variant)) {
      if (hit->fitness > next[best_index(next)].fitness &&
          cfg.selection.elitism < next.size()) {
        epu::Genome copy = epu::apply_mutations(hit->genome, {}, s.ids);
        const double f = s.env.fitness(copy, variant);
        next[worst_replaceable(next, cfg.selection.elitism)] = {std::move(copy), f};
      }
    }
  }

  s.population = std::move(next);
  s.generation = g;

  // Track the running answer.
  const std::size_t bi = best_index(s.population);
  const double bf = s.population[bi].fitness;
  if (switched) {
    s.best_trace.push_back({g, bf, s.population[bi].genome.flattened()});
  } else if (bf > s.best_trace.back().fitness) {
    std::string word = s.population[bi].genome.flattened();
    s.improvement_gens.push_back(g);
    s.improvement_loci.push_back(diff_loci(s.best_trace.back().word, word));
    s.best_trace.push_back({g, bf, std::move(word)});
  }

  GenMetrics row;
  row.generation = g;
  row.best_fitness = bf;
  row.mean_fitness = mean_fitness(s.population);
  row.diversity = sampled_diversity(s.population);
  row.stress = s.stress;
  row.realized_mutation_rate =
      loci_copied == 0 ? 0.0
                       : static_cast<double>(edits_applied) / static_cast<double>(loci_copied);
  row.sos_tiers_active = ops::active_tier_count(s.sos);
  row.mutator_frequency = mutator_share(s.population);
  row.recombination_events = recombination_events;
  row.phase = s.phase;
  s.last_metrics = row;
}

}  // namespace

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::inducible: return "inducible";
    case Phase::proactive: return "proactive";
    case Phase::specializing: return "specializing";
  }
  return "?";
}

double stress_signal(double mean, double optimum, double target_fraction) {
  const double target = optimum * target_fraction;
  if (target <= 0.0) return 0.0;
  return std::clamp(1.0 - mean / target, 0.0, 1.0);
}

const MemoryEntry* SolutionMemory::lookup(int variant) const {
  for (const MemoryEntry& e : entries) {
    if (e.variant == variant) return &e;
  }
  return nullptr;
}

void SolutionMemory::store(int variant, const epu::Genome& g, double fitness,
                           std::size_t capacity) {
  for (MemoryEntry& e : entries) {
    if (e.variant == variant) {
      if (fitness > e.fitness) {
        e.genome = g;
        e.fitness = fitness;
      }
      return;
    }
  }
  entries.push_back({variant, g, fitness});
  while (entries.size() > capacity) {
    std::size_t weakest = 0;
    for (std::size_t i = 1; i < entries.size(); ++i) {
      if (entries[i].fitness < entries[weakest].fitness) weakest = i;
    }
    entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(weakest));
  }
}

epu::Epuon SolutionMemory::as_epuon() const {
  epu::Epuon net;
  for (const MemoryEntry& e : entries) {
    for (const epu::Epu& unit : e.genome.epus) net.add(unit);
  }
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    net.link(entries[i].genome.epus.front().id, entries[i + 1].genome.epus.front().id);
  }
  return net;
}

EngineState::EngineState(const ExperimentConfig& config)
    : cfg((validate_config(config), config)),
      env(config.environment),
      sos(ops::make_sos({{ops::kNerTier, config.sos.ner_threshold},
                         {ops::kTlsTier, config.sos.tls_threshold}})),
      rng_repro(split_rng(config.seed, 1)),
      rng_extras(split_rng(config.seed, 2)),
      rng_env(split_rng(config.seed, 3)) {
  sos.targeted_multiplier = cfg.sos.targeted_multiplier;
  sos.untargeted_multiplier = cfg.sos.untargeted_multiplier;
  mrs.enabled = cfg.mrs.enabled;
  mrs.p_repair = cfg.mrs.p_repair;
  mrs.barrier_threshold = cfg.mrs.barrier_threshold;
  ops::validate_mrs(mrs);

  Rng rng_init = split_rng(cfg.seed, 0);
  const std::size_t carriers = static_cast<std::size_t>(
      std::llround(cfg.genome.mutator_fraction * static_cast<double>(cfg.population)));
  population.reserve(cfg.population);
  const bool random_init = cfg.genome.init == "random";
  for (std::size_t i = 0; i < cfg.population; ++i) {
    std::string coding(cfg.environment.loci, cfg.genome.alphabet[0]);
    if (random_init)
      for (char& ch : coding)
        ch = cfg.genome.alphabet[pick_index(rng_init, cfg.genome.alphabet.size())];
    epu::Epu unit = epu::make_default_epu(ids.fresh(), std::move(coding));
    unit.replication_fidelity = cfg.rates.replication_fidelity;
    epu::LineageTags tags{i < carriers, cfg.genome.species};
    epu::Genome genome = epu::make_genome({std::move(unit)}, cfg.genome.alphabet, tags);
    const double f = env.fitness(genome, env.variant_at(0));
    population.push_back({std::move(genome), f});
  }

  stress = stress_signal(mean_fitness(population), env.optimum(env.variant_at(0)),
                         cfg.stress.target_fraction);
  ops::sos_update(sos, stress);
  if (cfg.mode == Mode::c_ina && stress > cfg.sos.ner_threshold) phase = Phase::proactive;

  const std::size_t bi = best_index(population);
  best_trace.push_back({0, population[bi].fitness, population[bi].genome.flattened()});

  GenMetrics row;
  row.generation = 0;
  row.best_fitness = population[bi].fitness;
  row.mean_fitness = mean_fitness(population);
  row.diversity = sampled_diversity(population);
  row.stress = stress;
  row.realized_mutation_rate = 0.0;
  row.sos_tiers_active = ops::active_tier_count(sos);
  row.mutator_frequency = mutator_share(population);
  row.recombination_events = 0;
  row.phase = phase;
  last_metrics = row;
}

void c_ima_step(EngineState& s) {
  advance(s, false);
}

void c_ina_step(EngineState& s) {
  advance(s, true);
}

void engine_step(EngineState& s) {
  advance(s, s.cfg.mode == Mode::c_ina);
}

RunOutput run_anytime(const ExperimentConfig& cfg) {
  EngineState state(cfg);
  AnytimeReport report;
  report.metrics.reserve(cfg.budget + 1);
  report.metrics.push_back(state.last_metrics);
  for (std::uint64_t g = 1; g <= cfg.budget; ++g) {
    engine_step(state);
    report.metrics.push_back(state.last_metrics);
  }
  report.best_trace = state.best_trace;
  report.final = state.best_trace.back();
  report.generations = cfg.budget;
  report.stabilized = cfg.budget >= cfg.window &&
                      cfg.budget - state.best_trace.back().generation >= cfg.window;
  return {std::move(report), std::move(state)};
}

}  // namespace evoc::engine
