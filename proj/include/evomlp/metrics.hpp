#pragma once

#include "evomlp/dataset.hpp"
#include "evomlp/mlp.hpp"
#include "evomlp/types.hpp"

namespace evomlp {

// Percent misclassified in [0, 100]. Predicted class is the argmax output,
// ties broken toward the lowest index. Requires a classification dataset
// and a non-empty split.
Scalar classification_error(const MlpGenome& genome, const Dataset& dataset,
                            SplitId split);

// sqrt(sum (s_i - o_i)^2 / sum (s_i - s_mean)^2) with the sums running over
// every output component of every example in the split; s_mean is the grand
// mean of the true outputs. Requires a regression dataset and at least two
// examples with non-identical targets.
Scalar nmse(const MlpGenome& genome, const Dataset& dataset, SplitId split);

// Raw-matrix variants used by the evaluators above.
Scalar classification_error(const Eigen::Ref<const Matrix>& outputs,
                            const Eigen::Ref<const Matrix>& targets);
Scalar nmse(const Eigen::Ref<const Matrix>& outputs,
            const Eigen::Ref<const Matrix>& targets);

}  // namespace evomlp
