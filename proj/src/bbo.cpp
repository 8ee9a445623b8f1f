// Copyright 2026 the auvplan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "auvplan/bbo.hpp"

#include <algorithm>
#include <cmath>
#include <execution>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace auvplan::bbo
{

namespace
{

void validate_config(const BboConfig & cfg)
{
  if (cfg.population_size < 2) {
    throw std::invalid_argument("bbo: population_size must be at least 2");
  }
  if (cfg.max_iterations < 1) {
    throw std::invalid_argument("bbo: max_iterations must be positive");
  }
  if (cfg.keep_count < 0 || cfg.new_count < 0) {
    throw std::invalid_argument("bbo: keep_count and new_count must be non-negative");
  }
  if (cfg.keep_count + cfg.new_count > cfg.population_size) {
    throw std::invalid_argument("bbo: keep_count + new_count exceeds population_size");
  }
  if (!(cfg.max_immigration > 0.0 && cfg.max_immigration <= 1.0) ||
      !(cfg.max_emigration > 0.0 && cfg.max_emigration <= 1.0)) {
    throw std::invalid_argument("bbo: maximum immigration/emigration rates must lie in (0, 1]");
  }
  if (!(cfg.max_mutation_rate >= 0.0 && cfg.max_mutation_rate <= 1.0)) {
    throw std::invalid_argument("bbo: max_mutation_rate must lie in [0, 1]");
  }
}

void check_score(const Score & s)
{
  if (!std::isfinite(s.violation) || s.violation < 0.0) {
    throw std::runtime_error("bbo: evaluator returned an invalid violation");
  }
  if (std::isnan(s.cost)) {
    throw std::runtime_error("bbo: evaluator returned NaN cost");
  }
}

void evaluate_range(const Problem & problem, std::vector<Habitat> & population, int first, int last,
                    bool parallel)
{
  if (parallel && last - first > 1) {
    std::vector<int> index(static_cast<std::size_t>(last - first));
    std::iota(index.begin(), index.end(), first);
    std::for_each(std::execution::par, index.begin(), index.end(), [&](int i) {
      const Score s = problem.evaluate(population[static_cast<std::size_t>(i)].siv);
      population[static_cast<std::size_t>(i)].cost = s.cost;
      population[static_cast<std::size_t>(i)].violation = s.violation;
    });
  } else {
    for (int i = first; i < last; ++i) {
      const Score s = problem.evaluate(population[static_cast<std::size_t>(i)].siv);
      population[static_cast<std::size_t>(i)].cost = s.cost;
      population[static_cast<std::size_t>(i)].violation = s.violation;
    }
  }
  for (int i = first; i < last; ++i) {
    check_score({population[static_cast<std::size_t>(i)].cost,
                 population[static_cast<std::size_t>(i)].violation});
  }
}

void sort_population(std::vector<Habitat> & population)
{
  std::stable_sort(population.begin(), population.end(), better);
}

double mean_cost(const std::vector<Habitat> & population)
{
  double sum = 0.0;
  for (const Habitat & h : population) sum += h.cost;
  return sum / static_cast<double>(population.size());
}

}  // namespace

std::vector<int> rank_species_counts(int population_size)
{
  if (population_size < 2) {
    throw std::invalid_argument("bbo: population_size must be at least 2");
  }
  std::vector<int> counts(static_cast<std::size_t>(population_size));
  for (int k = 0; k < population_size; ++k) {
    counts[static_cast<std::size_t>(k)] = population_size - 1 - k;
  }
  return counts;
}

RateTable compute_rates(const BboConfig & config, std::span<const int> species_counts)
{
  const int n = static_cast<int>(species_counts.size());
  if (n < 2) {
    throw std::invalid_argument("bbo: compute_rates needs a population of at least 2");
  }
  if (!(config.max_immigration > 0.0 && config.max_immigration <= 1.0) ||
      !(config.max_emigration > 0.0 && config.max_emigration <= 1.0)) {
    throw std::invalid_argument("bbo: maximum immigration/emigration rates must lie in (0, 1]");
  }

  RateTable table;
  table.lambda.resize(n);
  table.mu.resize(n);

  if (config.rate_mode == RateMode::LinearRank) {
    for (int k = 0; k < n; ++k) {
      table.mu[k] = static_cast<double>(n - 1 - k) / static_cast<double>(n - 1);
      table.lambda[k] = 1.0 - table.mu[k];
    }
    return table;
  }

  const int s_max = *std::max_element(species_counts.begin(), species_counts.end());
  if (s_max < 1) {
    throw std::invalid_argument("bbo: species counts must span at least one species");
  }
  for (int k = 0; k < n; ++k) {
    const int s = species_counts[static_cast<std::size_t>(k)];
    if (s < 0) throw std::invalid_argument("bbo: species counts must be non-negative");
    const double ratio = static_cast<double>(s) / static_cast<double>(s_max);
    table.lambda[k] = config.max_immigration * (1.0 - ratio);
    table.mu[k] = config.max_emigration * ratio;
  }
  return table;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> species_chain_rates(double max_immigration,
                                                                double max_emigration, int s_max)
{
  if (s_max < 0) throw std::invalid_argument("bbo: s_max must be non-negative");
  Eigen::VectorXd lambda(s_max + 1), mu(s_max + 1);
  for (int s = 0; s <= s_max; ++s) {
    const double ratio = s_max == 0 ? 1.0 : static_cast<double>(s) / static_cast<double>(s_max);
    lambda[s] = max_immigration * (1.0 - ratio);
    mu[s] = max_emigration * ratio;
  }
  return {lambda, mu};
}

Eigen::VectorXd species_probabilities(const Eigen::VectorXd & lambda, const Eigen::VectorXd & mu)
{
  const Eigen::Index n = lambda.size();
  if (n < 1 || mu.size() != n) {
    throw std::invalid_argument("bbo: lambda and mu must be non-empty and of equal length");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!std::isfinite(lambda[i]) || !std::isfinite(mu[i]) || lambda[i] < 0.0 || mu[i] < 0.0) {
      throw std::invalid_argument("bbo: rates must be finite and non-negative");
    }
  }
  Eigen::VectorXd p = Eigen::VectorXd::Zero(n);
  p[0] = 1.0;
  for (Eigen::Index s = 0; s + 1 < n; ++s) {
    if (mu[s + 1] > 0.0) {
      p[s + 1] = p[s] * lambda[s] / mu[s + 1];
    } else if (lambda[s] > 0.0) {
      // one-way door upward: lower states carry no steady-state mass
      p.head(s + 1).setZero();
      p[s + 1] = 1.0;
    } else {
      throw std::invalid_argument("bbo: degenerate rate chain (no flow between states)");
    }
    if (p[s + 1] > 1e280) {  // keep the telescoping products inside double range
      p.head(s + 2) *= 1e-280;
    }
  }
  const double total = p.sum();
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw std::invalid_argument("bbo: steady state of the rate chain is not normalizable");
  }
  return p / total;
}

Eigen::VectorXd mutation_rates(const Eigen::VectorXd & probabilities, double max_mutation_rate)
{
  if (!(max_mutation_rate >= 0.0 && max_mutation_rate <= 1.0)) {
    throw std::invalid_argument("bbo: max_mutation_rate must lie in [0, 1]");
  }
  if (probabilities.size() == 0) {
    throw std::invalid_argument("bbo: empty probability vector");
  }
  const double p_max = probabilities.maxCoeff();
  if (!(p_max > 0.0)) {
    throw std::invalid_argument("bbo: probability vector has no positive entry");
  }
  Eigen::VectorXd m = max_mutation_rate * (1.0 - (probabilities.array() / p_max)).matrix();
  return m.cwiseMax(0.0).cwiseMin(max_mutation_rate);
}

std::vector<Habitat> migrate(const std::vector<Habitat> & population, const RateTable & rates,
                             int keep_count, Rng & rng)
{
  const int n = static_cast<int>(population.size());
  if (rates.lambda.size() != n || rates.mu.size() != n) {
    throw std::invalid_argument("bbo: rate table does not match population size");
  }
  if (keep_count < 0 || keep_count > n) {
    throw std::invalid_argument("bbo: keep_count out of range");
  }
  std::vector<Habitat> out = population;
  const double total_mu = rates.mu.sum();
  for (int i = keep_count; i < n; ++i) {
    if (rng.uniform() >= rates.lambda[i]) continue;
    if (total_mu <= 0.0) continue;
    double pick = rng.uniform() * total_mu;
    int donor = n - 1;
    for (int j = 0; j < n; ++j) {
      pick -= rates.mu[j];
      if (pick < 0.0) {
        donor = j;
        break;
      }
    }
    const int dim = static_cast<int>(population[static_cast<std::size_t>(i)].siv.size());
    const int component = rng.uniform_int(dim);
    out[static_cast<std::size_t>(i)].siv[component] =
      population[static_cast<std::size_t>(donor)].siv[component];
  }
  return out;
}

std::vector<Habitat> mutate(const std::vector<Habitat> & population,
                            const Eigen::VectorXd & rates_per_habitat,
                            const Eigen::VectorXd & lower, const Eigen::VectorXd & upper,
                            int keep_count, Rng & rng)
{
  const int n = static_cast<int>(population.size());
  if (rates_per_habitat.size() != n) {
    throw std::invalid_argument("bbo: mutation rates do not match population size");
  }
  if (keep_count < 0 || keep_count > n) {
    throw std::invalid_argument("bbo: keep_count out of range");
  }
  std::vector<Habitat> out = population;
  for (int i = keep_count; i < n; ++i) {
    const double m = rates_per_habitat[i];
    Eigen::VectorXd & siv = out[static_cast<std::size_t>(i)].siv;
    for (Eigen::Index k = 0; k < siv.size(); ++k) {
      if (rng.uniform() < m) {
        siv[k] = rng.uniform(lower[k], upper[k]);
      }
    }
  }
  return out;
}

EvolveResult evolve(Problem & problem, const BboConfig & config)
{
  validate_config(config);
  const int n = config.population_size;
  const int dim = problem.dimension();
  if (dim < 1) throw std::invalid_argument("bbo: problem dimension must be positive");
  const Eigen::VectorXd lower = problem.lower_bounds();
  const Eigen::VectorXd upper = problem.upper_bounds();
  if (lower.size() != dim || upper.size() != dim) {
    throw std::invalid_argument("bbo: bounds do not match problem dimension");
  }
  for (int k = 0; k < dim; ++k) {
    if (!(lower[k] <= upper[k])) {
      throw std::invalid_argument("bbo: lower bound exceeds upper bound");
    }
  }

  Rng rng(config.seed);

  // Rank positions are fixed, so the rate table and per-habitat mutation
  // rates are constant across iterations.
  const std::vector<int> species = rank_species_counts(n);
  const RateTable rates = compute_rates(config, species);
  Eigen::VectorXd per_habitat_mutation(n);
  if (config.rate_mode == RateMode::SpeciesModel) {
    const auto [chain_lambda, chain_mu] =
      species_chain_rates(config.max_immigration, config.max_emigration, n - 1);
    const Eigen::VectorXd p = species_probabilities(chain_lambda, chain_mu);
    const Eigen::VectorXd m_by_species = mutation_rates(p, config.max_mutation_rate);
    for (int k = 0; k < n; ++k) {
      per_habitat_mutation[k] = m_by_species[species[static_cast<std::size_t>(k)]];
    }
  } else {
    per_habitat_mutation.setConstant(config.max_mutation_rate);
  }

  std::vector<Habitat> population(static_cast<std::size_t>(n));
  for (Habitat & h : population) {
    h.siv.resize(dim);
    for (int k = 0; k < dim; ++k) {
      h.siv[k] = rng.uniform(lower[k], upper[k]);
    }
  }
  evaluate_range(problem, population, 0, n, config.parallel_evaluation);
  sort_population(population);

  Habitat best = population.front();
  Trace trace;
  trace.reserve(static_cast<std::size_t>(config.max_iterations) + 1);
  trace.push_back({0, population.front().cost, mean_cost(population), population.front().violation});

  for (int t = 1; t <= config.max_iterations; ++t) {
    problem.begin_iteration(t);
    // operators work on the whole population; the saved elites re-enter
    // verbatim (scores included) over the worst slots after rescoring
    const std::vector<Habitat> elites(population.begin(),
                                      population.begin() + config.keep_count);
    population = migrate(population, rates, 0, rng);
    population = mutate(population, per_habitat_mutation, lower, upper, 0, rng);
    for (int i = n - config.new_count; i < n; ++i) {
      Eigen::VectorXd & siv = population[static_cast<std::size_t>(i)].siv;
      for (int k = 0; k < dim; ++k) {
        siv[k] = rng.uniform(lower[k], upper[k]);
      }
    }
    evaluate_range(problem, population, 0, n, config.parallel_evaluation);
    sort_population(population);
    for (int i = 0; i < config.keep_count; ++i) {
      population[static_cast<std::size_t>(n - config.keep_count + i)] =
        elites[static_cast<std::size_t>(i)];
    }
    sort_population(population);
    if (better(population.front(), best)) {
      best = population.front();
    }
    trace.push_back(
      {t, population.front().cost, mean_cost(population), population.front().violation});
  }
  return {best, trace};
}

std::string trace_to_csv(const Trace & trace)
{
  std::ostringstream out;
  out << "iteration,best_cost,mean_cost,best_violation\n";
  out.precision(12);
  for (const IterationRecord & r : trace) {
    out << r.iteration << ',' << r.best_cost << ',' << r.mean_cost << ',' << r.best_violation
        << '\n';
  }
  return out.str();
}

}  // namespace auvplan::bbo
