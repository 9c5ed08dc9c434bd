#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "evomlp/dataset.hpp"
#include "evomlp/fitness.hpp"
#include "evomlp/mlp.hpp"
#include "evomlp/quickprop.hpp"
#include "evomlp/rng.hpp"

namespace evomlp {

enum class OperatorKind {
  mutate_weights,
  add_neuron,
  remove_neuron,
  crossover,
  lamarck_train,  // lamarckian mode only: commits trained weights
};

const char* to_string(OperatorKind op);

struct MutationParams {
  Scalar weight_prob = 0.1;
  Scalar weight_sigma = 0.2;
  Scalar rate_prob = 0.1;    // learning_rate, multiplicative exp(N(0, sigma))
  Scalar rate_sigma = 0.3;
};

struct EvolutionConfig {
  int population_size = 200;
  int generations = 300;
  StrategyMode mode = StrategyMode::darwinian;
  QpParams qp{1.75, 200, 0.0};  // qp.epochs is the per-evaluation budget
  // Empty roster means the mode's default: the four structural/weight
  // operators, plus lamarck_train in lamarckian mode, all equally likely.
  std::vector<OperatorKind> operators;
  Scalar elite_fraction = 0.10;  // in (0, 0.5]
  MutationParams mutation;
  Index hidden_init_lo = 2;
  Index hidden_init_hi = 10;
  Index hidden_cap = kDefaultHiddenCap;
  Scalar equality_tolerance = 1e-6;  // continuous errors only; the engine
                                     // compares classification errors exactly
  std::uint64_t master_seed = 1;
  int threads = 1;  // offspring evaluation; 0 = hardware concurrency
};

// Throws ConfigError; also resolves the default operator roster.
std::vector<OperatorKind> resolve_operators(const EvolutionConfig& config);
void validate_config(const EvolutionConfig& config);

struct GenerationStats {
  int generation = 0;
  Scalar best_error_after = 0.0;
  std::optional<Scalar> best_error_before;
  Index best_weights = 0;
  Scalar mean_error_after = 0.0;
  Scalar mean_weights = 0.0;
};

struct Individual {
  MlpGenome genome;
  FitnessRecord fitness;
};

using Population = std::vector<Individual>;

// Trains a transient copy for qp.epochs and scores it on the validation
// split (percent misclassified or NMSE by dataset kind). Baldwinian mode
// also scores the untrained genome as error_before. The genome itself is
// never modified; only op_lamarck_train commits trained weights.
FitnessRecord evaluate(const MlpGenome& genome, const Dataset& data,
                       const EvolutionConfig& config, int generation = 0);

// Each weight perturbed with probability weight_prob by N(0, weight_sigma);
// learning_rate rescaled with probability rate_prob by exp(N(0, rate_sigma)),
// clamped to its range.
MlpGenome op_mutate_weights(const MlpGenome& genome, Rng& rng,
                            const MutationParams& params = {});

// Saturating: at the cap (respectively at one hidden unit) the parent is
// returned unchanged.
MlpGenome op_add_neuron(const MlpGenome& genome, Rng& rng,
                        Index hidden_cap = kDefaultHiddenCap);
MlpGenome op_remove_neuron(const MlpGenome& genome, Rng& rng);

// Offspring size is uniform between the parents' sizes; each hidden unit
// (fan-in row plus fan-out column) is copied whole from a parent that has
// it; output biases are averaged; learning_rate comes from one parent.
MlpGenome op_crossover(const MlpGenome& a, const MlpGenome& b, Rng& rng);

// The Lamarckian local-search operator: the trained weights become the
// offspring's genome. learning_rate is untouched.
MlpGenome op_lamarck_train(const MlpGenome& genome, const Dataset& data,
                           const EvolutionConfig& config);

// One elitist generation: the top ceil(elite_fraction * N) survive
// unchanged, the rest are offspring of parents drawn uniformly from the top
// half, each produced by exactly one operator drawn uniformly from the
// roster. `generation` seeds the per-slot RNG streams, so the result is
// byte-identical at any thread count.
std::pair<Population, GenerationStats> step_generation(
    const Population& population, const Dataset& data,
    const EvolutionConfig& config, int generation);

struct EvolutionResult {
  MlpGenome best;
  FitnessRecord best_fitness;
  std::vector<GenerationStats> trace;  // generations + 1 entries, gen 0 first
  int generation_of_best = 0;          // first generation tying the final best
};

EvolutionResult run_evolution(const EvolutionConfig& config,
                              const Dataset& data);

namespace detail {
OperatorKind pick_operator(const std::vector<OperatorKind>& roster, Rng& rng);
Scalar comparison_tolerance(const EvolutionConfig& config, const Dataset& data);
}  // namespace detail

}  // namespace evomlp
