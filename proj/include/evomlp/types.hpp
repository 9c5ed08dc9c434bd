#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace evomlp {

using Scalar = double;
using Index = Eigen::Index;

using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using ArrayXX = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Invalid sizes, fractions, operator rosters, CLI values.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dimension mismatches between genomes, inputs and datasets.
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Empty splits, degenerate denominators, kind mismatches.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed Proben1 text; carries the 1-based offending line.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, long line_number)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + msg),
        line(line_number) {}
  long line;
};

}  // namespace evomlp
