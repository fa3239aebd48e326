#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gext/finite_group.hpp"

namespace gext {

enum class Lane {
  /// all degrees 0
  Ungraded,
  /// some nonzero degree, any sign
  ForcedNonzero,
  /// degrees >= 0 with some positive degree
  Connective,
  /// some negative degree
  NegativeBounded,
  /// no constraint
  Mixed,
  /// degrees >= 0, possibly all zero
  Nonnegative,
};

enum class DegreeZeroPart {
  Any,
  /// B_0 = A . 1
  BaseOnly,
  /// B_0 strictly larger than A . 1
  Larger,
};

struct GeneratorParams {
  std::uint64_t seed = 0;
  std::size_t max_rank = 8;
  /// Generator degrees are drawn from [-degree_range, degree_range].
  int degree_range = 3;
  /// Fixed base ring; otherwise drawn from a small menu per instance.
  std::optional<BaseRing> base;
  bool commutative_only = true;
  Lane lane = Lane::Mixed;
  DegreeZeroPart degree_zero = DegreeZeroPart::Any;
  /// Attach a faithful action of a cyclic group.
  bool with_action = false;
  /// Order of that group; 0 picks 2 or 3.
  std::size_t group_order = 0;
  /// Build a Galois recipe (ungraded) for harness sensitivity checks.
  bool plant_galois = false;
  /// Structure-constant perturbations attempted per instance.
  std::size_t repair_budget = 2;
  std::size_t max_attempts = 200;
};

struct GenerationStats {
  std::size_t attempts = 0;
  std::size_t lane_rejections = 0;
  std::size_t rank_rejections = 0;
  std::size_t action_rejections = 0;
  std::size_t perturbations_tried = 0;
  std::size_t perturbations_kept = 0;
  std::size_t perturbations_reverted = 0;
};

struct GeneratedInstance {
  GradedAlgebra algebra;
  std::optional<GroupAction> action;
  std::string recipe;
  GenerationStats stats;
};

class GenerationExhausted : public Error {
 public:
  using Error::Error;
};

std::string lane_name(Lane lane);
std::optional<Lane> parse_lane(const std::string& name);

/// Deterministic in (params): the same params give an identical instance.
GeneratedInstance random_graded_algebra(const GeneratorParams& params);

/// Per-trial seed derived from a run seed (splitmix64).
std::uint64_t trial_seed(std::uint64_t run_seed, std::uint64_t trial);

}  // namespace gext
