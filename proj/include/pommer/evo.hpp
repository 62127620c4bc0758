#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pommer/features.hpp"

// Population management and genetic operators for the evolved rollout
// policies. Draw order against the shared Rng is part of the contract (tests
// replay it): tournament selection uses a partial Fisher-Yates over indices;
// crossover draws one coin per cell row-major (true -> first parent);
// mutation draws per cell in row-major order a selection coin, then a sign
// coin, then a magnitude.

namespace pommer::evo {

struct Individual {
  features::WeightMatrix weights;
  double sum_reward = 0.0;
  int evaluations = 0;

  double fitness() const { return evaluations > 0 ? sum_reward / evaluations : 0.0; }
  void reset_stats() {
    sum_reward = 0.0;
    evaluations = 0;
  }
};

struct Population {
  std::vector<Individual> members;
  int generation = 0;
};

enum class MutationStyle : std::uint8_t {
  PerActionFeatureSets = 0,  // independent feature subset per action row
  SharedFeatureSet = 1,      // one subset applied to every row
};

struct EvoConfig {
  int population_size = 10;
  int elite_count = 4;
  int tournament_size = 2;
  double mutation_prob = 0.2;       // per-feature selection probability
  double mutation_strength = 0.001; // step drawn from (0, strength]
  MutationStyle style = MutationStyle::SharedFeatureSet;
  double positive_bias = 0.5;       // probability the step is added, not subtracted
  int rollouts_per_individual = 4;  // L
  bool mutate_elites = false;
  bool clamp_non_negative = false;  // grouped action spaces require w >= 0
};

void validate(const EvoConfig& config);  // throws ConfigError

// All members start as zero matrices, or as copies of the seed when given.
Population init_population(const EvoConfig& config, int rows, int cols,
                           const std::optional<features::WeightMatrix>& seed = {});

inline void record_reward(Individual& ind, double delta) {
  ind.sum_reward += delta;
  ind.evaluations += 1;
}

// Best of M distinct uniformly sampled members; fitness ties go to the lower
// index.
const Individual& tournament_select(const Population& pop, int tournament_size, Rng& rng);

// Cell-wise coin flip between the parents; offspring stats start at zero.
Individual uniform_crossover(const Individual& a, const Individual& b, Rng& rng);

void mutate(Individual& ind, const EvoConfig& config, Rng& rng);

// Elites copied verbatim, the rest bred by tournament -> crossover -> mutate.
// All stats reset; generation advances. Requires every member evaluated.
Population evolve(const Population& pop, const EvoConfig& config, Rng& rng);

// Seed file: "<rows> <cols>" then one line of full-precision decimals per row.
void save_seed(const features::WeightMatrix& w, const std::string& path);
features::WeightMatrix load_seed(const std::string& path);

}  // namespace pommer::evo
