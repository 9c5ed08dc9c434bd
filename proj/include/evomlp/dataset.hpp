#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "evomlp/types.hpp"

namespace evomlp {

enum class DatasetKind { classification, regression };

enum class SplitId { train, validation, test };

// Immutable after construction; examples live in row-major example order,
// split membership is by row index.
struct Dataset {
  DatasetKind kind = DatasetKind::classification;
  Matrix inputs;   // N x n_in
  Matrix targets;  // N x n_out; one-hot rows for classification
  std::vector<Index> train_idx;
  std::vector<Index> validation_idx;
  std::vector<Index> test_idx;

  Index size() const { return inputs.rows(); }
  Index n_in() const { return inputs.cols(); }
  Index n_out() const { return targets.cols(); }

  const std::vector<Index>& split(SplitId id) const;

  bool operator==(const Dataset& other) const;
};

struct SplitSpec {
  double train_fraction = 0.5;
  double validation_fraction = 0.25;
  double test_fraction = 0.25;
  enum class Policy { sequential, round_robin };
  Policy policy = Policy::sequential;
};

// Checks split disjointness/coverage, shape consistency and, for
// classification, one-hot targets. Throws DataError on violation.
void validate(const Dataset& dataset);

// Proben1 text format: a header of `bool_in=`, `real_in=`, `bool_out=`,
// `real_out=`, `training_examples=`, `validation_examples=`,
// `test_examples=` lines followed by one whitespace-separated row per
// example (inputs then outputs). `#` starts a comment line. Split
// membership is sequential in the declared counts.
Dataset parse_proben1(std::istream& text);
Dataset parse_proben1_file(const std::string& path);

void write_proben1(const Dataset& dataset, std::ostream& out);
std::string to_proben1(const Dataset& dataset);

// exp(-5x) * sin(2*pi*x) on the equidistant grid x_k = k / (n_points - 1),
// x in [0, 1]. n_points must be >= 8 and divisible by 4; indices are dealt
// mod 4 as {0,1} -> train, {2} -> validation, {3} -> test.
Dataset sample_f2(Index n_points);

// Reassigns splits only; examples untouched. Counts come from
// floor(train), floor(validation) with the test split absorbing the
// remainder.
Dataset resplit(const Dataset& dataset, const SplitSpec& spec);

// Stand-in for the Proben1 glass1a file: 214 examples, 9 inputs in [0, 1],
// 6 classes with the UCI glass class distribution (70/76/17/13/9/29),
// sequential 107/53/54 splits. Class clouds are Gaussian with two heavily
// overlapping window classes, so the task is learnable but not separable.
// Drop in the original Proben1 glass1a.dt for experiments on the real data.
Dataset make_glass_standin(std::uint64_t seed = 7);

// Copies the split's rows into dense (inputs, targets) matrices.
std::pair<Matrix, Matrix> split_matrices(const Dataset& dataset, SplitId id);

}  // namespace evomlp
