#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "pommer/evo.hpp"

namespace pommer::evo {

void validate(const EvoConfig& c) {
  if (c.population_size < 1) throw ConfigError("population size must be positive");
  if (c.elite_count < 0 || c.elite_count > c.population_size)
    throw ConfigError("elite count must be in [0, population size]");
  if (c.tournament_size < 1 || c.tournament_size > c.population_size)
    throw ConfigError("tournament size must be in [1, population size]");
  if (c.mutation_prob < 0.0 || c.mutation_prob > 1.0)
    throw ConfigError("mutation probability must be in [0, 1]");
  if (c.mutation_strength <= 0.0) throw ConfigError("mutation strength must be positive");
  if (c.positive_bias < 0.0 || c.positive_bias > 1.0)
    throw ConfigError("positive bias must be in [0, 1]");
  if (c.rollouts_per_individual < 1)
    throw ConfigError("rollouts per individual must be positive");
}

Population init_population(const EvoConfig& config, int rows, int cols,
                           const std::optional<features::WeightMatrix>& seed) {
  validate(config);
  if (seed && (seed->rows != rows || seed->cols != cols))
    throw ConfigError("population seed shape mismatch: expected " +
                      std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                      std::to_string(seed->rows) + "x" + std::to_string(seed->cols));
  Population pop;
  pop.members.resize(config.population_size);
  for (auto& m : pop.members)
    m.weights = seed ? *seed : features::WeightMatrix::zeros(rows, cols);
  return pop;
}

const Individual& tournament_select(const Population& pop, int tournament_size, Rng& rng) {
  const int p = static_cast<int>(pop.members.size());
  // Partial Fisher-Yates for M distinct indices.
  std::array<int, 64> idx;
  std::vector<int> idx_big;
  int* ids = idx.data();
  if (p > 64) {
    idx_big.resize(p);
    ids = idx_big.data();
  }
  std::iota(ids, ids + p, 0);
  int best = -1;
  for (int k = 0; k < tournament_size; ++k) {
    const int j = k + rng.next_int(p - k);
    std::swap(ids[k], ids[j]);
    const int cand = ids[k];
    if (best < 0 || pop.members[cand].fitness() > pop.members[best].fitness() ||
        (pop.members[cand].fitness() == pop.members[best].fitness() && cand < best))
      best = cand;
  }
  return pop.members[best];
}

Individual uniform_crossover(const Individual& a, const Individual& b, Rng& rng) {
  if (a.weights.rows != b.weights.rows || a.weights.cols != b.weights.cols)
    throw ConfigError("crossover parents have mismatched shapes");
  Individual child;
  child.weights = features::WeightMatrix::zeros(a.weights.rows, a.weights.cols);
  for (int r = 0; r < a.weights.rows; ++r)
    for (int c = 0; c < a.weights.cols; ++c)
      child.weights.at(r, c) = rng.chance(0.5) ? a.weights.at(r, c) : b.weights.at(r, c);
  return child;
}

void mutate(Individual& ind, const EvoConfig& config, Rng& rng) {
  auto& w = ind.weights;
  auto bump = [&](int r, int c) {
    const double sign = rng.chance(config.positive_bias) ? 1.0 : -1.0;
    // (0, strength]: never a zero-step "mutation".
    const double step = config.mutation_strength * (1.0 - rng.next_double());
    double v = w.at(r, c) + sign * step;
    if (config.clamp_non_negative && v < 0.0) v = 0.0;
    w.at(r, c) = v;
  };

  if (config.style == MutationStyle::PerActionFeatureSets) {
    for (int r = 0; r < w.rows; ++r)
      for (int c = 0; c < w.cols; ++c)
        if (rng.chance(config.mutation_prob)) bump(r, c);
  } else {
    std::array<bool, features::kNumFeatureKinds> chosen{};
    for (int c = 0; c < w.cols; ++c) chosen[c] = rng.chance(config.mutation_prob);
    for (int r = 0; r < w.rows; ++r)
      for (int c = 0; c < w.cols; ++c)
        if (chosen[c]) bump(r, c);
  }
}

Population evolve(const Population& pop, const EvoConfig& config, Rng& rng) {
  validate(config);
  if (static_cast<int>(pop.members.size()) != config.population_size)
    throw ConfigError("population size does not match the config");
  for (const auto& m : pop.members)
    if (m.evaluations == 0)
      throw ConfigError("evolve() requires every member to be evaluated");

  std::vector<int> order(pop.members.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return pop.members[a].fitness() > pop.members[b].fitness();
  });

  Population next;
  next.generation = pop.generation + 1;
  next.members.reserve(pop.members.size());
  for (int k = 0; k < config.elite_count; ++k) {
    Individual elite;
    elite.weights = pop.members[order[k]].weights;
    if (config.mutate_elites) mutate(elite, config, rng);
    next.members.push_back(std::move(elite));
  }
  while (static_cast<int>(next.members.size()) < config.population_size) {
    const Individual& p1 = tournament_select(pop, config.tournament_size, rng);
    const Individual& p2 = tournament_select(pop, config.tournament_size, rng);
    Individual child = uniform_crossover(p1, p2, rng);
    mutate(child, config, rng);
    next.members.push_back(std::move(child));
  }
  return next;
}

void save_seed(const features::WeightMatrix& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open seed file for writing: " + path);
  out.precision(17);
  out << w.rows << ' ' << w.cols << '\n';
  for (int r = 0; r < w.rows; ++r) {
    for (int c = 0; c < w.cols; ++c) out << (c ? " " : "") << w.at(r, c);
    out << '\n';
  }
}

features::WeightMatrix load_seed(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open seed file: " + path);
  int rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw ConfigError("malformed seed file header: " + path);
  if (rows < 1 || rows > 6 || cols < 1 || cols > features::kNumFeatureKinds)
    throw ConfigError("seed file shape out of range: " + path);
  auto w = features::WeightMatrix::zeros(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (!(in >> w.at(r, c)))
        throw ConfigError("seed file truncated at row " + std::to_string(r) + ": " + path);
  double extra;
  if (in >> extra) throw ConfigError("seed file has trailing data: " + path);
  return w;
}

}  // namespace pommer::evo
