#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gext/presented_module.hpp"
#include "gext/random_algebra.hpp"

namespace gext {

struct FuzzOptions {
  std::string theorem;
  std::size_t trials = 500;
  std::uint64_t seed = 0;
  std::size_t max_rank = 8;
  int degree_range = 3;
  std::size_t jobs = 1;
};

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string base;
  std::string recipe;
  std::vector<int> degrees;
  /// The theorem's hypotheses held on this instance.
  bool premise = false;
  bool counterexample = false;
  std::string note;
};

struct FuzzReport {
  FuzzOptions options;
  std::vector<TrialRecord> trials;
  std::size_t premise_count = 0;
  std::size_t counterexamples = 0;
  GenerationStats generation;
  /// Planted instance or fixed exhibit, when the theorem has one.
  nlohmann::json sensitivity;
  bool sensitivity_ok = true;
};

/// thm-3.2, thm-4.2, rem-4.3, lem-5.3, lem-5.8, rem-5.5, lem-3.4.1.
std::vector<std::string> fuzz_theorems();

/// Throws InvalidArgument for an unknown theorem.
FuzzReport run_fuzz(const FuzzOptions& options);

nlohmann::json to_json(const FuzzReport& report);

/// Nonzero-or-not random presentation over a drawn base ring.
PresentedModule random_module(std::uint64_t seed);

}  // namespace gext
