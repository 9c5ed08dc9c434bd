#pragma once

#include "evomlp/rng.hpp"
#include "evomlp/types.hpp"

namespace evomlp {

enum class OutputKind { sigmoid, linear };

// One-hidden-layer perceptron as evolved by the engine: weights, an
// evolvable hidden-layer size and an evolvable QuickProp step size.
// The last column of each weight matrix is the bias.
struct MlpGenome {
  Matrix hidden_weights;  // n_hidden x (n_in + 1)
  Matrix output_weights;  // n_out x (n_hidden + 1)
  Scalar learning_rate = 0.1;
  OutputKind output_kind = OutputKind::sigmoid;

  Index n_in() const { return hidden_weights.cols() - 1; }
  Index n_hidden() const { return hidden_weights.rows(); }
  Index n_out() const { return output_weights.rows(); }

  bool operator==(const MlpGenome& other) const;
};

inline constexpr Index kDefaultHiddenCap = 60;

inline constexpr Scalar kWeightInitLo = -0.5;
inline constexpr Scalar kWeightInitHi = 0.5;
inline constexpr Scalar kLearningRateMin = 0.001;
inline constexpr Scalar kLearningRateMax = 1.0;

// Logistic sigmoid of any Eigen array expression.
template <typename Derived>
auto logistic(const Eigen::ArrayBase<Derived>& x) {
  return 1.0 / (1.0 + (-x).exp());
}

// Weights uniform in [-0.5, 0.5], learning rate log-uniform in [0.01, 0.5].
MlpGenome init_random(Index n_in, Index n_hidden, Index n_out, OutputKind kind,
                      Rng& rng, Index hidden_cap = kDefaultHiddenCap);

Vector forward(const MlpGenome& genome, const Eigen::Ref<const Vector>& input);

// One row per example; rows match forward() on the corresponding input.
Matrix forward_batch(const MlpGenome& genome,
                     const Eigen::Ref<const Matrix>& inputs);

// (n_in + 1) * n_hidden + (n_hidden + 1) * n_out, biases included.
Index weight_count(const MlpGenome& genome);

// Shape consistency and weight finiteness.
bool is_valid(const MlpGenome& genome);

}  // namespace evomlp
