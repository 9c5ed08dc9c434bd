#include "evomlp/mlp.hpp"

#include <cmath>
#include <string>

namespace evomlp {

bool MlpGenome::operator==(const MlpGenome& other) const {
  return output_kind == other.output_kind &&
         learning_rate == other.learning_rate &&
         hidden_weights.rows() == other.hidden_weights.rows() &&
         hidden_weights.cols() == other.hidden_weights.cols() &&
         output_weights.rows() == other.output_weights.rows() &&
         output_weights.cols() == other.output_weights.cols() &&
         hidden_weights == other.hidden_weights &&
         output_weights == other.output_weights;
}

MlpGenome init_random(Index n_in, Index n_hidden, Index n_out, OutputKind kind,
                      Rng& rng, Index hidden_cap) {
  if (n_in < 1 || n_hidden < 1 || n_out < 1)
    throw ConfigError("init_random: sizes must be >= 1, got " +
                      std::to_string(n_in) + "-" + std::to_string(n_hidden) +
                      "-" + std::to_string(n_out));
  if (n_hidden > hidden_cap)
    throw ConfigError("init_random: n_hidden " + std::to_string(n_hidden) +
                      " exceeds hidden cap " + std::to_string(hidden_cap));
  MlpGenome g;
  g.output_kind = kind;
  g.hidden_weights.resize(n_hidden, n_in + 1);
  g.output_weights.resize(n_out, n_hidden + 1);
  // Row-major fill order is part of the determinism contract.
  for (Index r = 0; r < g.hidden_weights.rows(); ++r)
    for (Index c = 0; c < g.hidden_weights.cols(); ++c)
      g.hidden_weights(r, c) = uniform(rng, kWeightInitLo, kWeightInitHi);
  for (Index r = 0; r < g.output_weights.rows(); ++r)
    for (Index c = 0; c < g.output_weights.cols(); ++c)
      g.output_weights(r, c) = uniform(rng, kWeightInitLo, kWeightInitHi);
  g.learning_rate = std::exp(uniform(rng, std::log(0.01), std::log(0.5)));
  return g;
}

Matrix forward_batch(const MlpGenome& genome,
                     const Eigen::Ref<const Matrix>& inputs) {
  if (inputs.cols() != genome.n_in())
    throw ShapeError("forward: input width " + std::to_string(inputs.cols()) +
                     " does not match n_in " + std::to_string(genome.n_in()));
  const Index n = inputs.rows();
  Matrix hidden_pre(n, genome.n_hidden());
  hidden_pre.noalias() =
      inputs * genome.hidden_weights.leftCols(genome.n_in()).transpose();
  hidden_pre.rowwise() +=
      genome.hidden_weights.col(genome.n_in()).transpose();
  const Matrix hidden = logistic(hidden_pre.array()).matrix();

  Matrix out(n, genome.n_out());
  out.noalias() =
      hidden * genome.output_weights.leftCols(genome.n_hidden()).transpose();
  out.rowwise() += genome.output_weights.col(genome.n_hidden()).transpose();
  if (genome.output_kind == OutputKind::sigmoid)
    out = logistic(out.array()).matrix();
  return out;
}

Vector forward(const MlpGenome& genome, const Eigen::Ref<const Vector>& input) {
  if (input.size() != genome.n_in())
    throw ShapeError("forward: input length " + std::to_string(input.size()) +
                     " does not match n_in " + std::to_string(genome.n_in()));
  return forward_batch(genome, input.transpose()).row(0).transpose();
}

Index weight_count(const MlpGenome& genome) {
  return (genome.n_in() + 1) * genome.n_hidden() +
         (genome.n_hidden() + 1) * genome.n_out();
}

bool is_valid(const MlpGenome& genome) {
  return genome.n_in() >= 1 && genome.n_hidden() >= 1 && genome.n_out() >= 1 &&
         genome.output_weights.cols() == genome.n_hidden() + 1 &&
         genome.hidden_weights.allFinite() &&
         genome.output_weights.allFinite() &&
         std::isfinite(genome.learning_rate);
}

}  // namespace evomlp
