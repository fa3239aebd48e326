#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gext/tensor_square.hpp"

namespace gext {

/// sigma(1) in B (x) B^op with its two rechecks.
struct SeparabilityCertificate {
  Vector idempotent;
  bool mu_check = false;
  bool centrality_check = false;
};

class ProjectionBroken : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

/// left * right == 0 with both nonzero; `left_in_degree_zero` says which factor lies in B_0.
struct ZeroDivisorWitness {
  Vector left;
  Vector right;
  bool left_in_degree_zero = true;
};

struct RegularityReport {
  /// Every nonzero x in B_0 is a non-zero-divisor on all of B (both sides).
  bool regular_in_b = true;
  /// B_0 has no zero divisors as a ring.
  bool b0_domain = true;
  /// B_0 was enumerated completely; otherwise spanning set plus seeded samples.
  bool exhaustive = false;
  std::size_t checked = 0;
  std::optional<ZeroDivisorWitness> witness;
};

enum class ConcentrationOutcome { Concentrated, Stuck, Unchanged };

struct ConcentrationResult {
  ConcentrationOutcome outcome = ConcentrationOutcome::Unchanged;
  /// Final element; supported in bidegree (0,0) when Concentrated.
  Vector idempotent;
  std::size_t steps = 0;
  std::optional<ZeroDivisorWitness> witness;
};

std::string outcome_name(ConcentrationOutcome o);

/// Rows: mu(e) = 1, then for each basis b, (b (x) 1) e - e b = 0, where e b acts by
/// x (x) y -> x (x) yb.
std::pair<ExactMatrix, Vector> separability_system(const TensorSquare& t);

/// Rechecks e against the separability system.
SeparabilityCertificate check_separability(const GradedAlgebra& b, const Vector& e);

/// Solves the separability system; none when it has no solution.
std::optional<SeparabilityCertificate> separability_idempotent(const GradedAlgebra& b);

/// Component of e supported on bidegrees (d, -d). Throws ProjectionBroken if the
/// projection fails the recheck.
Vector project_total_degree_zero(const GradedAlgebra& b, const Vector& e);

/// Strips the extreme first-factor degree groups while the remainder still passes the
/// separability recheck. Iterations are capped by the number of distinct degrees.
ConcentrationResult concentrate_idempotent(const GradedAlgebra& b, const Vector& e);

/// Limit on |B_0| for exhaustive enumeration.
inline constexpr std::uint64_t kRegularityEnumerationLimit = 4096;

RegularityReport degree_zero_regularity(const GradedAlgebra& b, std::uint64_t seed = 0);

/// Regular-in-B reading of "no zero divisors in B_0".
bool degree_zero_regular(const GradedAlgebra& b);

}  // namespace gext
