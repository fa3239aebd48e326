#include "gext/finite_group.hpp"

#include <optional>

namespace gext {

std::string group_law_name(GroupLaw law) {
  switch (law) {
    case GroupLaw::Shape:
      return "shape";
    case GroupLaw::Closure:
      return "closure";
    case GroupLaw::Associativity:
      return "associativity";
    case GroupLaw::Identity:
      return "identity";
    case GroupLaw::Inverse:
      return "inverse";
  }
  return "?";
}

GroupAxiomViolation::GroupAxiomViolation(GroupLaw law, std::string detail)
    : Error("group axiom violated (" + group_law_name(law) + "): " + detail), law_(law) {}

FiniteGroup FiniteGroup::validate(std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupAxiomViolation(GroupLaw::Shape, "empty table");
  for (const auto& row : table) {
    if (row.size() != n) throw GroupAxiomViolation(GroupLaw::Shape, "table is not square");
    for (std::size_t x : row)
      if (x >= n) throw GroupAxiomViolation(GroupLaw::Closure, "entry " + std::to_string(x));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw GroupAxiomViolation(GroupLaw::Associativity,
                                    "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(c) + ")");
        }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) identity = e;
  }
  if (!identity) throw GroupAxiomViolation(GroupLaw::Identity, "no two-sided identity");
  std::vector<std::size_t> inverse(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::optional<std::size_t> inv;
    for (std::size_t h = 0; h < n && !inv; ++h)
      if (table[g][h] == *identity && table[h][g] == *identity) inv = h;
    if (!inv) throw GroupAxiomViolation(GroupLaw::Inverse, "element " + std::to_string(g));
    inverse[g] = *inv;
  }
  FiniteGroup out;
  out.table_ = std::move(table);
  out.inverse_ = std::move(inverse);
  out.identity_ = *identity;
  return out;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return validate(std::move(t));
}

FiniteGroup FiniteGroup::product_of_cyclic(std::size_t a, std::size_t b) {
  const std::size_t n = a * b;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      t[g][h] = ((g / b + h / b) % a) * b + (g % b + h % b) % b;
  return validate(std::move(t));
}

std::string action_law_name(ActionLaw law) {
  switch (law) {
    case ActionLaw::Shape:
      return "shape";
    case ActionLaw::Automorphism:
      return "automorphism";
    case ActionLaw::Unit:
      return "unit";
    case ActionLaw::Degree:
      return "degree";
    case ActionLaw::Composition:
      return "composition";
    case ActionLaw::Identity:
      return "identity";
    case ActionLaw::Injectivity:
      return "injectivity";
  }
  return "?";
}

ActionViolation::ActionViolation(ActionLaw law, std::string detail)
    : Error("invalid group action (" + action_law_name(law) + "): " + detail), law_(law) {}

GroupAction GroupAction::validate(FiniteGroup group, GradedAlgebra algebra,
                                  std::vector<ExactMatrix> matrices, ActionOptions options) {
  const std::size_t n = algebra.rank();
  const BaseRing& ring = algebra.base();
  if (matrices.size() != group.order()) {
    throw ActionViolation(ActionLaw::Shape, std::to_string(matrices.size()) +
                                                " matrices for a group of order " +
                                                std::to_string(group.order()));
  }
  for (std::size_t g = 0; g < matrices.size(); ++g) {
    const auto& m = matrices[g];
    if (m.rows() != n || m.cols() != n || !(m.base() == ring)) {
      throw ActionViolation(ActionLaw::Shape, "matrix " + std::to_string(g) + " has wrong shape");
    }
  }
  for (std::size_t g = 0; g < matrices.size(); ++g) {
    const auto& m = matrices[g];
    const std::string who = "element " + std::to_string(g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m(i, j) != 0 && algebra.degree(i) != algebra.degree(j)) {
          throw ActionViolation(ActionLaw::Degree, who + " sends e_" + std::to_string(j) +
                                                       " outside its degree");
        }
    if (m.apply(algebra.unit_coords()) != algebra.unit_coords()) {
      throw ActionViolation(ActionLaw::Unit, who + " moves the unit");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Vector gi = m.column(i);
      for (std::size_t j = 0; j < n; ++j) {
        const Vector lhs = m.apply(algebra.multiply(unit_vector(ring, n, i), unit_vector(ring, n, j)));
        const Vector rhs = algebra.multiply(gi, m.column(j));
        if (lhs != rhs) {
          throw ActionViolation(ActionLaw::Automorphism,
                                who + " does not respect e_" + std::to_string(i) + " * e_" +
                                    std::to_string(j));
        }
      }
    }
  }
  if (matrices[group.identity()] != ExactMatrix::identity(ring, n)) {
    throw ActionViolation(ActionLaw::Identity, "identity element acts nontrivially");
  }
  for (std::size_t g = 0; g < group.order(); ++g)
    for (std::size_t h = 0; h < group.order(); ++h)
      if (matrices[g] * matrices[h] != matrices[group.multiply(g, h)]) {
        throw ActionViolation(ActionLaw::Composition,
                              "matrix(" + std::to_string(g) + ") * matrix(" + std::to_string(h) +
                                  ") != matrix(gh)");
      }
  bool faithful = true;
  for (std::size_t g = 0; g < group.order() && faithful; ++g)
    for (std::size_t h = g + 1; h < group.order() && faithful; ++h)
      if (matrices[g] == matrices[h]) faithful = false;
  if (!faithful && options.require_faithful) {
    throw ActionViolation(ActionLaw::Injectivity, "two group elements act identically");
  }
  // Every matrix is invertible: matrix(g) * matrix(g^-1) = matrix(e) = I.
  return GroupAction(std::move(group), std::move(algebra), std::move(matrices),
                     options.require_faithful, faithful);
}

GroupAction GroupAction::trivial(const GradedAlgebra& algebra) {
  return validate(FiniteGroup::trivial(), algebra,
                  {ExactMatrix::identity(algebra.base(), algebra.rank())});
}

}  // namespace gext
