#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monoalg/lattice.hpp"

namespace monoalg {

/// Outcome of checking the standing hypotheses on a generating set.
/// Checks run in the order rank, pointed, saturated, minimally embedded; a
/// failed check leaves the later flags false.
struct ValidationReport {
  bool full_rank = false;
  bool pointed = false;
  bool saturated = false;
  bool minimally_embedded = false;
  std::optional<LatticeVector> saturation_witness;  ///< in the cone but not generated
  std::optional<Integer> bad_elementary_divisor;    ///< first elementary divisor != 1
  std::string message;                              ///< empty when valid

  bool valid() const { return full_rank && pointed && saturated && minimally_embedded; }
};

/// Affine, pointed, saturated, minimally embedded semigroup S in M = Z^n,
/// together with its dual rays S^v(1), ray generators S(1) and Hilbert basis.
/// Immutable after build().
class AffineSemigroup {
 public:
  /// Validates and throws Error(invalid_input) naming the failed hypothesis.
  static AffineSemigroup build(std::size_t rank, std::vector<LatticeVector> generators);
  static ValidationReport validate(std::size_t rank, std::span<const LatticeVector> generators);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<LatticeVector>& generators() const noexcept { return generators_; }
  /// Primitive facet normals, sorted lexicographically.
  const std::vector<DualVector>& dual_rays() const noexcept { return dual_rays_; }
  /// Primitive ray generators, graded order.
  const std::vector<LatticeVector>& ray_generators() const noexcept { return ray_generators_; }
  /// Irreducible elements, graded order.
  const std::vector<LatticeVector>& hilbert_basis() const noexcept { return hilbert_basis_; }

  bool contains(const LatticeVector& m) const;
  bool is_simplicial() const;
  bool is_first_octant() const;

  /// The standard first octant Z^n_{>=0}.
  static AffineSemigroup first_octant(std::size_t rank);

 private:
  AffineSemigroup() = default;

  std::size_t rank_ = 0;
  std::vector<LatticeVector> generators_;
  std::vector<DualVector> dual_rays_;
  std::vector<LatticeVector> ray_generators_;
  std::vector<LatticeVector> hilbert_basis_;
};

/// Rays of the cone {p : p(g) >= 0 for all g}, i.e. the dual cone of cone(generators),
/// by incremental double description. Lineality directions of the dual (present when the
/// generators do not span) are dropped. Sorted lexicographically.
std::vector<DualVector> dual_rays(std::span<const LatticeVector> generators, std::size_t rank);

/// Rays of the cone {m : rho(m) >= 0 for all rho}; the inverse of dual_rays on
/// full-dimensional pointed cones. Graded order.
std::vector<LatticeVector> cone_rays(std::span<const DualVector> normals, std::size_t rank);

bool member(const AffineSemigroup& s, const LatticeVector& m);
const std::vector<LatticeVector>& hilbert_basis(const AffineSemigroup& s);

/// Hilbert basis of the lattice points of a full-dimensional pointed cone given by its
/// ray generators and facet normals.
std::vector<LatticeVector> cone_hilbert_basis(std::span<const LatticeVector> rays,
                                              std::span<const DualVector> normals,
                                              std::size_t rank);

/// S ∩ (intersection of rho^perp over the defining rays).
struct Face {
  std::vector<DualVector> defining;  ///< subset of S^v(1)
  std::vector<LatticeVector> rays;   ///< ray generators of S lying in the face
  std::size_t rank = 0;

  bool contains(const AffineSemigroup& s, const LatticeVector& m) const;
};

/// F_0 = {0} ⊂ F_1 ⊂ ... ⊂ F_n = S with rank F_i = i.
struct CompleteFlag {
  std::vector<Face> faces;
};

/// mu_i in F_i \ F_{i-1} from S(1), rho_i in S^v(1) vanishing on F_{i-1} with rho_i(mu_i) > 0.
struct UpperTriangularPair {
  std::vector<LatticeVector> mus;
  std::vector<DualVector> rhos;

  IntMatrix matrix() const { return pairing_matrix(mus, rhos); }
};

/// Greedy flag: F_{i-1} = F_i ∩ rho^perp for the first dual ray (lex order) that drops
/// the rank by exactly one.
CompleteFlag complete_flag(const AffineSemigroup& s);

UpperTriangularPair upper_triangular_pair(const AffineSemigroup& s, const CompleteFlag& flag);

}  // namespace monoalg
