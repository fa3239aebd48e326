#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "gext/finite_group.hpp"
#include "gext/presented_module.hpp"

namespace gext {

/// F_L -> ... -> F_1 -> F_0 -> M -> 0.
struct Resolution {
  BaseRing base;
  /// ranks[i] = rank of F_i.
  std::vector<std::size_t> ranks;
  /// Generator degrees of each F_i.
  std::vector<std::vector<int>> degrees;
  /// differentials[i] : F_{i+1} -> F_i.
  std::vector<ExactMatrix> differentials;
  /// F_0 -> generators of M (columns are representatives in M's coordinates).
  ExactMatrix augmentation;
  /// The resolution stops early because the next kernel is zero, or was cut at the cap.
  bool truncated = false;
  std::size_t length() const { return ranks.empty() ? 0 : ranks.size() - 1; }
};

/// Default cap on resolution length and cohomological degree; GEXT_RESOLUTION_CAP overrides.
std::size_t default_resolution_cap();

/// Minimal resolution built from the Smith form, cut at `length`.
Resolution free_resolution(const PresentedModule& m, std::size_t length);

/// d o d = 0, augmentation onto M, and exactness at every position strictly inside
/// the computed window.
bool verify_resolution(const Resolution& r, const PresentedModule& m);

/// Homology of F (x) N at position p, graded by summed degrees. Throws CapExceeded.
PresentedModule tor(const PresentedModule& m, const PresentedModule& n, std::size_t p,
                    std::size_t cap = default_resolution_cap());

using GradedFamily = std::map<int, PresentedModule>;

struct TorPiece {
  int i = 0;
  int j = 0;
  PresentedModule module;
};

struct GradedTor {
  PresentedModule total;
  std::vector<TorPiece> pieces;
};

/// The sum over i + j = q of Tor_p(B_i, C_j), every generator in degree q.
GradedTor graded_tor(const GradedFamily& b, const GradedFamily& c, std::size_t p, int q,
                     std::size_t cap = default_resolution_cap());

/// Pieces of a presented module split by generator degree.
GradedFamily split_by_degree(const PresentedModule& m);

/// A free A-module of rank r with G acting by invertible matrices.
class GModule {
 public:
  /// Checks identity, composition and that every matrix is invertible. Throws ActionViolation.
  static GModule validate(FiniteGroup group, BaseRing base, std::vector<ExactMatrix> matrices);
  static GModule trivial(FiniteGroup group, BaseRing base, std::size_t rank);
  /// The underlying A-module of an algebra with its group action.
  static GModule from_action(const GroupAction& action);

  const FiniteGroup& group() const { return group_; }
  const BaseRing& base() const { return base_; }
  std::size_t rank() const { return rank_; }
  const ExactMatrix& matrix(std::size_t g) const { return matrices_[g]; }
  const std::vector<ExactMatrix>& matrices() const { return matrices_; }

 private:
  GModule(FiniteGroup g, BaseRing b, std::size_t r, std::vector<ExactMatrix> m)
      : group_(std::move(g)), base_(std::move(b)), rank_(r), matrices_(std::move(m)) {}
  FiniteGroup group_;
  BaseRing base_;
  std::size_t rank_ = 0;
  std::vector<ExactMatrix> matrices_;
};

/// delta_s : Map(G^s, M) -> Map(G^(s+1), M) of the inhomogeneous bar complex.
/// Tuples are indexed with g_1 most significant, then the M coordinate.
ExactMatrix bar_differential(const GModule& m, std::size_t s);

/// H^s(G, M). Throws CapExceeded when s > cap.
PresentedModule group_cohomology(const GModule& m, std::size_t s,
                                 std::size_t cap = default_resolution_cap());

struct TensorSelfResult {
  bool nonzero = false;
  PresentedModule tensor;
  /// Generator index of M (x) M whose class is nonzero.
  std::optional<std::size_t> witness;
};

TensorSelfResult tensor_self_nonzero(const PresentedModule& m);

}  // namespace gext
