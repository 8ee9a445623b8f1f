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

#ifndef AUVPLAN_BBO_HPP_
#define AUVPLAN_BBO_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "auvplan/rng.hpp"

namespace auvplan::bbo
{

/// One candidate solution: a real decision vector plus its scores.
/// violation = 0 iff the decoded solution satisfies every hard constraint;
/// ranking is feasibility-first (violation, then cost).
struct Habitat
{
  Eigen::VectorXd siv;
  double cost = std::numeric_limits<double>::infinity();
  double violation = 0.0;
};

/// Feasibility-dominated ordering used everywhere the engine ranks habitats.
inline bool better(const Habitat & a, const Habitat & b)
{
  if (a.violation != b.violation) return a.violation < b.violation;
  return a.cost < b.cost;
}

enum class RateMode {
  SpeciesModel,  // immigration/emigration from per-rank species counts
  LinearRank     // emigration linearly spaced 1..0 over ranks, immigration = 1 - emigration
};

struct BboConfig
{
  int population_size = 50;
  int max_iterations = 100;
  int keep_count = 2;   // elites copied unchanged each generation
  int new_count = 0;    // fresh random habitats injected over the worst slots
  double max_immigration = 1.0;  // I in (0, 1]
  double max_emigration = 1.0;   // E in (0, 1]
  double max_mutation_rate = 0.1;
  RateMode rate_mode = RateMode::SpeciesModel;
  std::uint64_t seed = 0;
  bool parallel_evaluation = false;  // population scoring may fan out; merge is by index
};

/// Per-rank immigration (lambda) and emigration (mu) rates, index 0 = best.
struct RateTable
{
  Eigen::VectorXd lambda;
  Eigen::VectorXd mu;
};

struct Score
{
  double cost = std::numeric_limits<double>::infinity();
  double violation = 0.0;
};

/// Contract an optimization problem implements to run under evolve().
/// evaluate() must be deterministic for a fixed siv and a fixed problem state
/// snapshot; begin_iteration() is where time-varying problems advance that
/// snapshot (default: static problem, no-op).
class Problem
{
public:
  virtual ~Problem() = default;
  virtual int dimension() const = 0;
  virtual Eigen::VectorXd lower_bounds() const = 0;
  virtual Eigen::VectorXd upper_bounds() const = 0;
  virtual Score evaluate(const Eigen::VectorXd & siv) const = 0;
  virtual void begin_iteration(int /*iteration*/) {}
};

struct IterationRecord
{
  int iteration = 0;
  double best_cost = 0.0;
  double mean_cost = 0.0;
  double best_violation = 0.0;
};
using Trace = std::vector<IterationRecord>;

struct EvolveResult
{
  Habitat best;
  Trace trace;
};

/// Species counts by rank for a population of n: best habitat holds n-1
/// species, worst holds 0.
std::vector<int> rank_species_counts(int population_size);

/// Per-rank rate table. SpeciesModel reads species_counts (s_max = max count):
/// lambda = I*(1 - s/s_max), mu = E*s/s_max. LinearRank ignores the counts
/// beyond their number n: mu = linspace(1, 0, n), lambda = 1 - mu.
RateTable compute_rates(const BboConfig & config, std::span<const int> species_counts);

/// Birth-death chain rates indexed by species count 0..s_max for maximum
/// rates I (immigration) and E (emigration).
std::pair<Eigen::VectorXd, Eigen::VectorXd> species_chain_rates(double max_immigration,
                                                                double max_emigration, int s_max);

/// Steady-state distribution of the birth-death chain with per-state rates
/// lambda (up) and mu (down): the fixed point of the master equation,
/// computed from the balance recursion P[s+1] = P[s]*lambda[s]/mu[s+1] and
/// normalized to sum 1.
Eigen::VectorXd species_probabilities(const Eigen::VectorXd & lambda, const Eigen::VectorXd & mu);

/// Per-state mutation rate m = m_max * (1 - P/P_max); the likeliest state
/// mutates at 0, impossible states at m_max.
Eigen::VectorXd mutation_rates(const Eigen::VectorXd & probabilities, double max_mutation_rate);

/// Immigration pass over a best-first population. Each non-elite habitat i
/// immigrates with probability lambda[i]; the donor is drawn by roulette over
/// mu and one uniformly chosen component is copied across. Donors are read
/// from the input snapshot. Draw order per habitat: gate, donor roulette,
/// component index (the last two only when the gate fires).
std::vector<Habitat> migrate(const std::vector<Habitat> & population, const RateTable & rates,
                             int keep_count, Rng & rng);

/// Mutation pass: every component of every non-elite habitat is resampled
/// uniformly inside its bounds with its habitat's rate. Draw order: habitat-
/// major, component-minor; gate draw first, value draw only when it fires.
std::vector<Habitat> mutate(const std::vector<Habitat> & population,
                            const Eigen::VectorXd & rates_per_habitat,
                            const Eigen::VectorXd & lower, const Eigen::VectorXd & upper,
                            int keep_count, Rng & rng);

/// Full optimization loop: uniform init, then per iteration migrate and
/// mutate across the whole working population, inject new_count fresh
/// habitats over the worst slots, rescore, and re-enter the keep_count saved
/// elites verbatim (scores included) over the worst of the rescored
/// population. Under a time-varying problem a carried elite keeps the score
/// from its own evaluation iteration. All stochastic draws come from one
/// seeded generator in the order: initialize, then per iteration
/// migrate -> mutate -> inject.
EvolveResult evolve(Problem & problem, const BboConfig & config);

/// CSV rows "iteration,best_cost,mean_cost,best_violation" with header.
std::string trace_to_csv(const Trace & trace);

}  // namespace auvplan::bbo

#endif  // AUVPLAN_BBO_HPP_
