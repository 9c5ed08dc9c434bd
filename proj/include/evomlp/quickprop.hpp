#pragma once

#include <utility>

#include "evomlp/mlp.hpp"
#include "evomlp/types.hpp"

namespace evomlp {

struct QpParams {
  Scalar max_growth_factor = 1.75;  // mu; must be > 1
  int epochs = 0;
  Scalar weight_decay = 0.0;
};

struct TrainReport {
  int epochs_run = 0;
  Scalar initial_train_error = 0.0;  // mean squared error over the batch
  Scalar final_train_error = 0.0;
};

// Training objective: E = 1/2 sum of squared residuals over all examples and
// output components, plus 1/2 * weight_decay * sum of squared weights.
Scalar training_loss(const MlpGenome& genome,
                     const Eigen::Ref<const Matrix>& inputs,
                     const Eigen::Ref<const Matrix>& targets,
                     Scalar weight_decay = 0.0);

// dE/dW for the loss above; first matrix for hidden_weights, second for
// output_weights.
std::pair<Matrix, Matrix> batch_gradient(const MlpGenome& genome,
                                         const Eigen::Ref<const Matrix>& inputs,
                                         const Eigen::Ref<const Matrix>& targets,
                                         Scalar weight_decay = 0.0);

// Full-batch QuickProp. Per weight, with slope S(t) = dE/dw at epoch t and
// previous step D = dw(t-1):
//
//   dw(t) = S(t) / (S(t-1) - S(t)) * D      when D != 0 and the secant
//                                           curvature (S(t) - S(t-1)) / D
//                                           is positive,
//   |dw(t)| capped at max_growth_factor * |D|,
//   dw(t) = -learning_rate * S(t)           otherwise (first epoch, frozen
//                                           weight, or non-convex secant).
//
// After every epoch weights are clamped to [-100, 100] (non-finite values
// reset to 0) and the stored step becomes the movement actually applied.
// The input genome is never modified; training is fully deterministic.
std::pair<MlpGenome, TrainReport> train_qp(const MlpGenome& genome,
                                           const Eigen::Ref<const Matrix>& inputs,
                                           const Eigen::Ref<const Matrix>& targets,
                                           const QpParams& params);

inline constexpr Scalar kWeightClamp = 100.0;

}  // namespace evomlp
