#pragma once

#include <compare>
#include <optional>
#include <string>

#include "evomlp/types.hpp"

namespace evomlp {

enum class StrategyMode { darwinian, lamarckian, baldwinian };

const char* to_string(StrategyMode mode);
std::optional<StrategyMode> parse_strategy_mode(const std::string& name);

struct FitnessRecord {
  Scalar error_after = 0.0;                 // validation error after training
  std::optional<Scalar> error_before;       // baldwinian mode only
  Index weights = 0;
  int evaluated_at_generation = 0;
};

// Lexicographic comparison; std::weak_ordering::less means `a` is fitter.
//
// Errors compare on a tolerance grid: two values tie when they share the
// bucket floor(error / tolerance) (exact comparison when tolerance is 0).
// The grid keeps the order a strict weak ordering, which a window
// |a - b| <= tolerance would not be: near-tie chains can make that relation
// cyclic, and the engine sorts whole populations with this comparator.
//
// Darwinian: error_after, then fewer weights.
std::weak_ordering compare_darwinian(const FitnessRecord& a,
                                     const FitnessRecord& b,
                                     Scalar tolerance = 0.0);

// Baldwinian: error_after, then error_before, then fewer weights. Both
// records must carry error_before.
std::weak_ordering compare_baldwinian(const FitnessRecord& a,
                                      const FitnessRecord& b,
                                      Scalar tolerance = 0.0);

// Dispatch on mode; lamarckian uses the darwinian comparison.
std::weak_ordering compare_records(StrategyMode mode, const FitnessRecord& a,
                                   const FitnessRecord& b,
                                   Scalar tolerance = 0.0);

}  // namespace evomlp
