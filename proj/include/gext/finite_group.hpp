#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gext/graded_algebra.hpp"

namespace gext {

enum class GroupLaw { Shape, Closure, Associativity, Identity, Inverse };

class GroupAxiomViolation : public Error {
 public:
  GroupAxiomViolation(GroupLaw law, std::string detail);
  GroupLaw law() const { return law_; }

 private:
  GroupLaw law_;
};

std::string group_law_name(GroupLaw law);

/// Finite group given by its multiplication table: table[g][h] = index of g*h.
class FiniteGroup {
 public:
  /// Exhaustively checks closure, associativity, identity and inverses.
  /// Throws GroupAxiomViolation naming the first failed law.
  static FiniteGroup validate(std::vector<std::vector<std::size_t>> table);

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup trivial() { return cyclic(1); }
  /// Z/a x Z/b with (x, y) at index x * b + y.
  static FiniteGroup product_of_cyclic(std::size_t a, std::size_t b);

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t multiply(std::size_t g, std::size_t h) const { return table_[g][h]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  FiniteGroup() = default;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

inline FiniteGroup validate_group(std::vector<std::vector<std::size_t>> table) {
  return FiniteGroup::validate(std::move(table));
}

enum class ActionLaw { Shape, Automorphism, Unit, Degree, Composition, Identity, Injectivity };

std::string action_law_name(ActionLaw law);

class ActionViolation : public Error {
 public:
  ActionViolation(ActionLaw law, std::string detail);
  ActionLaw law() const { return law_; }

 private:
  ActionLaw law_;
};

struct ActionOptions {
  /// Enforce g -> matrix(g) injective. Relaxing this is recorded on the action.
  bool require_faithful = true;
};

/// Action of a finite group on a graded algebra by grading-preserving algebra
/// automorphisms; matrix(g) has g(e_j) in column j.
class GroupAction {
 public:
  static GroupAction validate(FiniteGroup group, GradedAlgebra algebra,
                              std::vector<ExactMatrix> matrices, ActionOptions options = {});

  /// The trivial group acting by the identity.
  static GroupAction trivial(const GradedAlgebra& algebra);

  const FiniteGroup& group() const { return group_; }
  const GradedAlgebra& algebra() const { return algebra_; }
  const ExactMatrix& matrix(std::size_t g) const { return matrices_[g]; }
  const std::vector<ExactMatrix>& matrices() const { return matrices_; }
  bool faithful_required() const { return faithful_required_; }
  bool faithful() const { return faithful_; }

  Vector apply(std::size_t g, const Vector& x) const { return matrices_[g].apply(x); }

 private:
  GroupAction(FiniteGroup group, GradedAlgebra algebra, std::vector<ExactMatrix> matrices,
              bool faithful_required, bool faithful)
      : group_(std::move(group)),
        algebra_(std::move(algebra)),
        matrices_(std::move(matrices)),
        faithful_required_(faithful_required),
        faithful_(faithful) {}

  FiniteGroup group_;
  GradedAlgebra algebra_;
  std::vector<ExactMatrix> matrices_;
  bool faithful_required_ = true;
  bool faithful_ = true;
};

inline GroupAction validate_action(FiniteGroup group, GradedAlgebra algebra,
                                   std::vector<ExactMatrix> matrices, ActionOptions options = {}) {
  return GroupAction::validate(std::move(group), std::move(algebra), std::move(matrices), options);
}

}  // namespace gext
