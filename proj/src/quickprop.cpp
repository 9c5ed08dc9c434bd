#include "evomlp/quickprop.hpp"

#include <string>

namespace evomlp {

namespace {

void check_batch(const MlpGenome& genome, const Eigen::Ref<const Matrix>& inputs,
                 const Eigen::Ref<const Matrix>& targets) {
  if (inputs.rows() == 0) throw DataError("training batch is empty");
  if (inputs.cols() != genome.n_in() || targets.cols() != genome.n_out() ||
      inputs.rows() != targets.rows())
    throw ShapeError("training batch " + std::to_string(inputs.rows()) + "x" +
                     std::to_string(inputs.cols()) + " -> " +
                     std::to_string(targets.cols()) +
                     " does not match genome " + std::to_string(genome.n_in()) +
                     "-" + std::to_string(genome.n_hidden()) + "-" +
                     std::to_string(genome.n_out()));
}

// Forward pass plus the intermediate activations backprop needs.
struct Workspace {
  Matrix hidden;     // N x h, post-sigmoid
  Matrix out;        // N x n_out
  Matrix delta_out;  // N x n_out
  Matrix delta_hid;  // N x h
};

void forward_into(const MlpGenome& g, const Eigen::Ref<const Matrix>& x,
                  Workspace& ws) {
  const Index n_in = g.n_in(), n_hid = g.n_hidden();
  ws.hidden.noalias() = x * g.hidden_weights.leftCols(n_in).transpose();
  ws.hidden.rowwise() += g.hidden_weights.col(n_in).transpose();
  ws.hidden = logistic(ws.hidden.array()).matrix();
  ws.out.noalias() = ws.hidden * g.output_weights.leftCols(n_hid).transpose();
  ws.out.rowwise() += g.output_weights.col(n_hid).transpose();
  if (g.output_kind == OutputKind::sigmoid)
    ws.out = logistic(ws.out.array()).matrix();
}

// grad_h/grad_o must be preallocated to the weight shapes.
void gradient_into(const MlpGenome& g, const Eigen::Ref<const Matrix>& x,
                   const Eigen::Ref<const Matrix>& t, Scalar weight_decay,
                   Workspace& ws, Matrix& grad_h, Matrix& grad_o) {
  const Index n_in = g.n_in(), n_hid = g.n_hidden();
  forward_into(g, x, ws);
  ws.delta_out = ws.out - t;
  if (g.output_kind == OutputKind::sigmoid)
    ws.delta_out.array() *= ws.out.array() * (1.0 - ws.out.array());
  grad_o.leftCols(n_hid).noalias() = ws.delta_out.transpose() * ws.hidden;
  grad_o.col(n_hid) = ws.delta_out.colwise().sum().transpose();

  ws.delta_hid.noalias() = ws.delta_out * g.output_weights.leftCols(n_hid);
  ws.delta_hid.array() *= ws.hidden.array() * (1.0 - ws.hidden.array());
  grad_h.leftCols(n_in).noalias() = ws.delta_hid.transpose() * x;
  grad_h.col(n_in) = ws.delta_hid.colwise().sum().transpose();

  if (weight_decay > 0.0) {
    grad_h += weight_decay * g.hidden_weights;
    grad_o += weight_decay * g.output_weights;
  }
}

// One QuickProp update for a single weight matrix. prev_step holds the
// movement applied last epoch; grad_prev the slope that produced it.
void qp_update(Matrix& weights, const Matrix& grad, const Matrix& grad_prev,
               Matrix& prev_step, bool has_prev, Scalar learning_rate,
               Scalar mu) {
  auto g = grad.array();
  ArrayXX step;
  if (!has_prev) {
    step = -learning_rate * g;
  } else {
    auto s = prev_step.array();
    auto gp = grad_prev.array();
    // Secant curvature (g - gp) / s must be positive for the quadratic
    // step to aim at a minimum.
    auto convex = (s != 0.0) && ((g - gp) * s > 0.0);
    ArrayXX quad = g * s / (gp - g);
    ArrayXX cap = mu * s.abs();
    quad = quad.min(cap).max(-cap);
    step = convex.select(quad, -learning_rate * g);
  }
  const Matrix before = weights;
  weights += step.matrix();
  // Divergence guard: NaN resets to 0, everything else clamps into
  // [-kWeightClamp, kWeightClamp]; the stored step is the movement
  // actually applied.
  weights = weights.array()
                .isNaN()
                .select(0.0, weights.array())
                .min(kWeightClamp)
                .max(-kWeightClamp)
                .matrix();
  prev_step = weights - before;
}

}  // namespace

Scalar training_loss(const MlpGenome& genome,
                     const Eigen::Ref<const Matrix>& inputs,
                     const Eigen::Ref<const Matrix>& targets,
                     Scalar weight_decay) {
  check_batch(genome, inputs, targets);
  Workspace ws;
  forward_into(genome, inputs, ws);
  Scalar loss = 0.5 * (ws.out - targets).squaredNorm();
  if (weight_decay > 0.0)
    loss += 0.5 * weight_decay *
            (genome.hidden_weights.squaredNorm() +
             genome.output_weights.squaredNorm());
  return loss;
}

std::pair<Matrix, Matrix> batch_gradient(const MlpGenome& genome,
                                         const Eigen::Ref<const Matrix>& inputs,
                                         const Eigen::Ref<const Matrix>& targets,
                                         Scalar weight_decay) {
  check_batch(genome, inputs, targets);
  Workspace ws;
  Matrix grad_h(genome.n_hidden(), genome.n_in() + 1);
  Matrix grad_o(genome.n_out(), genome.n_hidden() + 1);
  gradient_into(genome, inputs, targets, weight_decay, ws, grad_h, grad_o);
  return {std::move(grad_h), std::move(grad_o)};
}

std::pair<MlpGenome, TrainReport> train_qp(const MlpGenome& genome,
                                           const Eigen::Ref<const Matrix>& inputs,
                                           const Eigen::Ref<const Matrix>& targets,
                                           const QpParams& params) {
  check_batch(genome, inputs, targets);
  if (params.max_growth_factor <= 1.0)
    throw ConfigError("QpParams: max_growth_factor must be > 1");
  if (params.epochs < 0) throw ConfigError("QpParams: epochs must be >= 0");
  if (params.weight_decay < 0.0)
    throw ConfigError("QpParams: weight_decay must be >= 0");

  MlpGenome net = genome;
  Workspace ws;
  const Scalar denom =
      static_cast<Scalar>(inputs.rows() * targets.cols());

  TrainReport report;
  report.epochs_run = params.epochs;
  forward_into(net, inputs, ws);
  report.initial_train_error = (ws.out - targets).squaredNorm() / denom;

  Matrix grad_h(net.n_hidden(), net.n_in() + 1);
  Matrix grad_o(net.n_out(), net.n_hidden() + 1);
  Matrix grad_h_prev, grad_o_prev;
  Matrix step_h = Matrix::Zero(grad_h.rows(), grad_h.cols());
  Matrix step_o = Matrix::Zero(grad_o.rows(), grad_o.cols());

  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    gradient_into(net, inputs, targets, params.weight_decay, ws, grad_h,
                  grad_o);
    const bool has_prev = epoch > 0;
    qp_update(net.hidden_weights, grad_h, grad_h_prev, step_h, has_prev,
              net.learning_rate, params.max_growth_factor);
    qp_update(net.output_weights, grad_o, grad_o_prev, step_o, has_prev,
              net.learning_rate, params.max_growth_factor);
    grad_h_prev = grad_h;
    grad_o_prev = grad_o;
  }

  forward_into(net, inputs, ws);
  report.final_train_error = (ws.out - targets).squaredNorm() / denom;
  return {std::move(net), report};
}

}  // namespace evomlp
