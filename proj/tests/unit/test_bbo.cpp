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

#include <doctest.h>

#include <cmath>

#include "auvplan/bbo.hpp"
#include "oracles.hpp"

using namespace auvplan;

namespace
{

struct SphereProblem : bbo::Problem
{
  int dim = 4;
  int dimension() const override { return dim; }
  Eigen::VectorXd lower_bounds() const override { return Eigen::VectorXd::Constant(dim, -1.0); }
  Eigen::VectorXd upper_bounds() const override { return Eigen::VectorXd::Constant(dim, 1.0); }
  bbo::Score evaluate(const Eigen::VectorXd & x) const override { return {x.squaredNorm(), 0.0}; }
};

struct ConstantProblem : bbo::Problem
{
  int dimension() const override { return 3; }
  Eigen::VectorXd lower_bounds() const override { return Eigen::VectorXd::Constant(3, -2.0); }
  Eigen::VectorXd upper_bounds() const override { return Eigen::VectorXd::Constant(3, 2.0); }
  bbo::Score evaluate(const Eigen::VectorXd &) const override { return {7.5, 0.0}; }
};

std::vector<bbo::Habitat> make_population(const std::vector<Eigen::VectorXd> & sivs)
{
  std::vector<bbo::Habitat> population;
  for (const auto & siv : sivs) {
    bbo::Habitat h;
    h.siv = siv;
    population.push_back(h);
  }
  return population;
}

}  // namespace

TEST_CASE("compute_rates species model boundary and midpoint values")
{
  bbo::BboConfig cfg;
  cfg.max_immigration = 1.0;
  cfg.max_emigration = 1.0;
  cfg.rate_mode = bbo::RateMode::SpeciesModel;

  // species counts 50 (best), 25, 0 (worst) with s_max = 50
  const std::vector<int> counts{50, 25, 0};
  const bbo::RateTable rates = compute_rates(cfg, counts);
  CHECK(rates.lambda[0] == doctest::Approx(0.0));
  CHECK(rates.mu[0] == doctest::Approx(1.0));
  CHECK(rates.lambda[1] == doctest::Approx(0.5));
  CHECK(rates.mu[1] == doctest::Approx(0.5));
  CHECK(rates.lambda[2] == doctest::Approx(1.0));
  CHECK(rates.mu[2] == doctest::Approx(0.0));
}

TEST_CASE("compute_rates linear rank is linspace with lambda = 1 - mu")
{
  bbo::BboConfig cfg;
  cfg.rate_mode = bbo::RateMode::LinearRank;
  const std::vector<int> counts = bbo::rank_species_counts(5);
  const bbo::RateTable rates = compute_rates(cfg, counts);
  const double expected_mu[5] = {1.0, 0.75, 0.5, 0.25, 0.0};
  for (int k = 0; k < 5; ++k) {
    CHECK(rates.mu[k] == doctest::Approx(expected_mu[k]));
    CHECK(rates.lambda[k] + rates.mu[k] == doctest::Approx(1.0));
  }
}

TEST_CASE("compute_rates identity lambda + mu = E when I = E")
{
  bbo::BboConfig cfg;
  cfg.rate_mode = bbo::RateMode::SpeciesModel;
  cfg.max_immigration = 0.7;
  cfg.max_emigration = 0.7;
  const std::vector<int> counts = bbo::rank_species_counts(12);
  const bbo::RateTable rates = compute_rates(cfg, counts);
  for (int k = 0; k < 12; ++k) {
    CHECK(rates.lambda[k] + rates.mu[k] == doctest::Approx(0.7).epsilon(1e-12));
  }
  // mu non-increasing, lambda non-decreasing as rank worsens
  for (int k = 1; k < 12; ++k) {
    CHECK(rates.mu[k] <= rates.mu[k - 1] + 1e-15);
    CHECK(rates.lambda[k] >= rates.lambda[k - 1] - 1e-15);
  }
}

TEST_CASE("compute_rates rejects invalid input")
{
  bbo::BboConfig cfg;
  CHECK_THROWS_AS((void)compute_rates(cfg, std::vector<int>{1}), std::invalid_argument);
  cfg.max_immigration = 1.5;
  CHECK_THROWS_AS((void)compute_rates(cfg, bbo::rank_species_counts(4)), std::invalid_argument);
  cfg.max_immigration = 0.0;
  CHECK_THROWS_AS((void)compute_rates(cfg, bbo::rank_species_counts(4)), std::invalid_argument);
}

TEST_CASE("species_probabilities single state is forced to one")
{
  const Eigen::VectorXd lambda = Eigen::VectorXd::Zero(1);
  const Eigen::VectorXd mu = Eigen::VectorXd::Zero(1);
  const Eigen::VectorXd p = bbo::species_probabilities(lambda, mu);
  REQUIRE(p.size() == 1);
  CHECK(p[0] == doctest::Approx(1.0));
}

TEST_CASE("species_probabilities is symmetric when I = E")
{
  const auto [lambda, mu] = bbo::species_chain_rates(1.0, 1.0, 8);
  const Eigen::VectorXd p = bbo::species_probabilities(lambda, mu);
  CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-12));
  for (int s = 0; s <= 8; ++s) {
    CHECK(p[s] == doctest::Approx(p[8 - s]).epsilon(1e-12));
  }
}

TEST_CASE("species_probabilities matches the ODE-integration oracle")
{
  for (int s_max : {1, 2, 4, 7, 10}) {
    for (double e : {1.0, 0.6}) {
      const auto [lambda, mu] = bbo::species_chain_rates(1.0, e, s_max);
      const Eigen::VectorXd p = bbo::species_probabilities(lambda, mu);
      const Eigen::VectorXd reference = oracles::ode_steady_state(lambda, mu);
      CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-12));
      for (int s = 0; s <= s_max; ++s) {
        CHECK(std::abs(p[s] - reference[s]) < 1e-8);
      }
    }
  }
}

TEST_CASE("species_probabilities rejects degenerate chains")
{
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(4);
  CHECK_THROWS_AS((void)bbo::species_probabilities(zero, zero), std::invalid_argument);
  Eigen::VectorXd lambda(2), mu(2);
  lambda << 1.0, 0.0;
  mu << 0.0, -1.0;
  CHECK_THROWS_AS((void)bbo::species_probabilities(lambda, mu), std::invalid_argument);
}

TEST_CASE("mutation_rates follows m_max * (1 - P/P_max)")
{
  Eigen::VectorXd p(3);
  p << 0.5, 0.25, 0.0;  // P_max = 0.5
  const Eigen::VectorXd m = bbo::mutation_rates(p, 0.1);
  CHECK(m[0] == doctest::Approx(0.0));
  CHECK(m[1] == doctest::Approx(0.05));
  CHECK(m[2] == doctest::Approx(0.1));

  CHECK_THROWS_AS((void)bbo::mutation_rates(Eigen::VectorXd::Zero(3), 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)bbo::mutation_rates(p, 1.5), std::invalid_argument);
}

TEST_CASE("migrate leaves the population unchanged when nothing immigrates")
{
  auto population = make_population({Eigen::Vector2d(1.0, 2.0), Eigen::Vector2d(3.0, 4.0)});
  bbo::RateTable rates;
  rates.lambda = Eigen::VectorXd::Zero(2);
  rates.mu = Eigen::VectorXd::Ones(2);
  Rng rng(7);
  const auto out = bbo::migrate(population, rates, 0, rng);
  for (std::size_t i = 0; i < population.size(); ++i) {
    CHECK(out[i].siv == population[i].siv);
  }
}

TEST_CASE("migrate over identical habitats is a no-op regardless of rates")
{
  auto population =
    make_population({Eigen::Vector3d(5.0, -1.0, 0.5), Eigen::Vector3d(5.0, -1.0, 0.5),
                     Eigen::Vector3d(5.0, -1.0, 0.5)});
  bbo::RateTable rates;
  rates.lambda = Eigen::VectorXd::Ones(3);
  rates.mu = Eigen::VectorXd::Ones(3);
  Rng rng(99);
  const auto out = bbo::migrate(population, rates, 0, rng);
  for (const auto & h : out) {
    CHECK(h.siv == population[0].siv);
  }
}

TEST_CASE("migrate replay: the worst habitat receives one component from the best")
{
  auto population = make_population({Eigen::Vector3d(10.0, 20.0, 30.0),
                                     Eigen::Vector3d(-1.0, -2.0, -3.0)});
  bbo::RateTable rates;
  rates.lambda = Eigen::VectorXd(2);
  rates.mu = Eigen::VectorXd(2);
  rates.lambda << 0.0, 1.0;
  rates.mu << 1.0, 0.0;

  const std::uint64_t seed = 2024;
  Rng rng(seed);
  const auto out = bbo::migrate(population, rates, 0, rng);

  // replay the documented draw order: habitat 0 gate (fails, lambda = 0),
  // habitat 1 gate (fires), donor roulette (total mu = 1 -> habitat 0),
  // component index
  Rng replay(seed);
  (void)replay.uniform();                       // habitat 0 gate
  (void)replay.uniform();                       // habitat 1 gate
  (void)replay.uniform();                       // donor roulette
  const int component = replay.uniform_int(3);  // replaced component

  CHECK(out[0].siv == population[0].siv);
  int changed = 0;
  for (int k = 0; k < 3; ++k) {
    if (out[1].siv[k] != population[1].siv[k]) {
      ++changed;
      CHECK(k == component);
      CHECK(out[1].siv[k] == population[0].siv[k]);
    }
  }
  CHECK(changed == 1);
}

TEST_CASE("migrate exempts elite habitats")
{
  auto population = make_population({Eigen::Vector2d(1.0, 1.0), Eigen::Vector2d(2.0, 2.0),
                                     Eigen::Vector2d(3.0, 3.0)});
  bbo::RateTable rates;
  rates.lambda = Eigen::VectorXd::Ones(3);
  rates.mu = Eigen::VectorXd::Ones(3);
  Rng rng(5);
  const auto out = bbo::migrate(population, rates, 2, rng);
  CHECK(out[0].siv == population[0].siv);
  CHECK(out[1].siv == population[1].siv);
}

TEST_CASE("mutate with zero rate is a no-op and with rate one hits collapsed bounds")
{
  auto population = make_population({Eigen::Vector2d(0.3, 0.7), Eigen::Vector2d(0.1, 0.9)});
  Rng rng(11);

  const auto unchanged = bbo::mutate(population, Eigen::VectorXd::Zero(2),
                                     Eigen::VectorXd::Zero(2), Eigen::VectorXd::Ones(2), 0, rng);
  for (std::size_t i = 0; i < population.size(); ++i) {
    CHECK(unchanged[i].siv == population[i].siv);
  }

  const Eigen::VectorXd point = Eigen::VectorXd::Constant(2, 0.25);
  const auto collapsed =
    bbo::mutate(population, Eigen::VectorXd::Ones(2), point, point, 0, rng);
  for (const auto & h : collapsed) {
    CHECK(h.siv[0] == doctest::Approx(0.25));
    CHECK(h.siv[1] == doctest::Approx(0.25));
  }
}

TEST_CASE("mutate replay: rate one reproduces the recorded uniform draws")
{
  auto population = make_population({Eigen::Vector3d(0.5, 0.5, 0.5)});
  const std::uint64_t seed = 31337;
  Rng rng(seed);
  const auto out = bbo::mutate(population, Eigen::VectorXd::Ones(1), Eigen::VectorXd::Zero(3),
                               Eigen::VectorXd::Ones(3), 0, rng);

  Rng replay(seed);
  for (int k = 0; k < 3; ++k) {
    (void)replay.uniform();  // gate (always fires at rate 1)
    CHECK(out[0].siv[k] == replay.uniform(0.0, 1.0));
  }
}

TEST_CASE("evolve converges on the sphere and beats random search")
{
  SphereProblem sphere;
  bbo::BboConfig cfg;
  cfg.population_size = 50;
  cfg.max_iterations = 100;
  cfg.keep_count = 2;
  cfg.new_count = 5;
  cfg.rate_mode = bbo::RateMode::SpeciesModel;
  cfg.max_mutation_rate = 0.1;

  int converged = 0;
  int random_search_converged = 0;
  for (int seed = 1; seed <= 100; ++seed) {
    cfg.seed = static_cast<std::uint64_t>(seed);
    const auto result = bbo::evolve(sphere, cfg);
    if (result.best.cost < 1e-2) ++converged;

    // independent baseline at the same evaluation budget
    Rng rng(static_cast<std::uint64_t>(seed) + 5000);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < cfg.population_size * (cfg.max_iterations + 1); ++i) {
      Eigen::VectorXd x(4);
      for (int k = 0; k < 4; ++k) x[k] = rng.uniform(-1.0, 1.0);
      best = std::min(best, x.squaredNorm());
    }
    if (best < 1e-2) ++random_search_converged;
  }
  CHECK(converged >= 95);
  CHECK(converged > random_search_converged);
}

TEST_CASE("evolve on a constant cost keeps a flat trace")
{
  ConstantProblem constant;
  bbo::BboConfig cfg;
  cfg.population_size = 10;
  cfg.max_iterations = 20;
  cfg.keep_count = 2;
  cfg.seed = 3;
  const auto result = bbo::evolve(constant, cfg);
  CHECK(result.best.cost == doctest::Approx(7.5));
  for (const auto & record : result.trace) {
    CHECK(record.best_cost == doctest::Approx(7.5));
    CHECK(record.mean_cost == doctest::Approx(7.5));
  }
}

TEST_CASE("evolve with full elitism freezes the initial population")
{
  SphereProblem sphere;
  bbo::BboConfig cfg;
  cfg.population_size = 12;
  cfg.max_iterations = 30;
  cfg.keep_count = 12;
  cfg.new_count = 0;
  cfg.seed = 17;
  const auto result = bbo::evolve(sphere, cfg);
  const double initial_best = result.trace.front().best_cost;
  for (const auto & record : result.trace) {
    CHECK(record.best_cost == doctest::Approx(initial_best));
  }
  CHECK(result.best.cost == doctest::Approx(initial_best));
}

TEST_CASE("evolve is deterministic for a fixed seed")
{
  SphereProblem sphere;
  bbo::BboConfig cfg;
  cfg.population_size = 20;
  cfg.max_iterations = 40;
  cfg.keep_count = 3;
  cfg.new_count = 4;
  cfg.seed = 123456;
  const auto a = bbo::evolve(sphere, cfg);
  const auto b = bbo::evolve(sphere, cfg);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].best_cost == b.trace[i].best_cost);
    CHECK(a.trace[i].mean_cost == b.trace[i].mean_cost);
  }
  CHECK(a.best.siv == b.best.siv);
}

TEST_CASE("evolve trace is monotone and stays in bounds across random problems")
{
  for (int seed = 1; seed <= 25; ++seed) {
    SphereProblem sphere;
    sphere.dim = 1 + seed % 5;
    bbo::BboConfig cfg;
    cfg.population_size = 10 + seed % 7;
    cfg.max_iterations = 15;
    cfg.keep_count = 1 + seed % 3;
    cfg.new_count = seed % 4;
    cfg.seed = static_cast<std::uint64_t>(seed) * 77;
    const auto result = bbo::evolve(sphere, cfg);
    for (std::size_t i = 1; i < result.trace.size(); ++i) {
      const auto & prev = result.trace[i - 1];
      const auto & next = result.trace[i];
      const bool not_worse = next.best_violation < prev.best_violation ||
                             (next.best_violation == prev.best_violation &&
                              next.best_cost <= prev.best_cost);
      CHECK(not_worse);
    }
    CHECK(result.best.siv.minCoeff() >= -1.0);
    CHECK(result.best.siv.maxCoeff() <= 1.0);
  }
}

TEST_CASE("evolve surfaces evaluator defects")
{
  struct BrokenProblem : bbo::Problem
  {
    int dimension() const override { return 2; }
    Eigen::VectorXd lower_bounds() const override { return Eigen::VectorXd::Zero(2); }
    Eigen::VectorXd upper_bounds() const override { return Eigen::VectorXd::Ones(2); }
    bbo::Score evaluate(const Eigen::VectorXd &) const override
    {
      return {std::numeric_limits<double>::quiet_NaN(), 0.0};
    }
  } broken;
  bbo::BboConfig cfg;
  cfg.population_size = 4;
  cfg.max_iterations = 1;
  cfg.keep_count = 1;
  CHECK_THROWS_AS((void)bbo::evolve(broken, cfg), std::runtime_error);
}

TEST_CASE("evolve validates its configuration")
{
  SphereProblem sphere;
  bbo::BboConfig cfg;
  cfg.max_iterations = 0;
  CHECK_THROWS_AS((void)bbo::evolve(sphere, cfg), std::invalid_argument);
  cfg.max_iterations = 5;
  cfg.keep_count = 40;
  cfg.new_count = 20;
  CHECK_THROWS_AS((void)bbo::evolve(sphere, cfg), std::invalid_argument);
}

TEST_CASE("trace serializes to CSV rows")
{
  bbo::Trace trace{{0, 1.5, 2.0, 0.0}, {1, 1.0, 1.5, 0.0}};
  const std::string csv = bbo::trace_to_csv(trace);
  CHECK(csv.find("iteration,best_cost,mean_cost,best_violation\n") == 0);
  CHECK(csv.find("0,1.5,2,0\n") != std::string::npos);
  CHECK(csv.find("1,1,1.5,0\n") != std::string::npos);
}
