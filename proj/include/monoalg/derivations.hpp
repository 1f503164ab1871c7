#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoalg/ideal.hpp"

namespace monoalg {

/// x^m -> p(m) x^{m+alpha}.
struct HomogeneousDerivation {
  LatticeVector alpha;
  RationalDualVector p;
};

/// Demazure roots inside a box, grouped by the dual ray with rho(alpha) = -1.
struct RootSet {
  std::vector<DualVector> rays;                   ///< S^v(1), lex order
  std::vector<std::vector<LatticeVector>> roots;  ///< roots[i] belongs to rays[i], graded order
  Integer bound = 0;

  std::size_t size() const;
  std::vector<LatticeVector> all() const;  ///< flattened, graded order
};

/// Index into S.dual_rays() of the unique rho with rho(alpha) = -1, if alpha is a root.
std::optional<std::size_t> root_ray_index(const AffineSemigroup& s, const LatticeVector& alpha);
/// alpha in R_rho(I): a root whose shift sends every generator off rho^perp into supp(I).
bool in_ideal_root_set(const MonomialIdeal& ideal, const LatticeVector& alpha);

RootSet demazure_roots(const AffineSemigroup& s, const Integer& bound);
RootSet roots_of_ideal(const MonomialIdeal& ideal, const Integer& bound);

enum class LndCase { root, inner_escaping, inner_constrained };
std::string case_name(LndCase c);  // "i", "ii", "iii"

struct LndVerdict {
  bool locally_nilpotent = false;
  LndCase branch = LndCase::root;
};

/// Errors: invalid_input "not a liftable homogeneous degree" when alpha is neither in S
/// nor a root; precondition when alpha is a root and p is not a multiple of its rho.
LndVerdict classify_lnd(const MonomialIdeal& ideal, const LatticeVector& alpha, const RationalDualVector& p);

struct LndDegreeReport {
  LatticeVector alpha;
  LndCase kind = LndCase::root;
  std::vector<RationalDualVector> g_basis;          ///< G(alpha), RREF
  std::vector<RationalDualVector> k_basis;          ///< G(alpha) ∩ K(alpha), RREF
  std::vector<RationalDualVector> effective_basis;  ///< RREF rows of g_basis independent mod k_basis
  std::size_t effective_dim = 0;
  bool bounded_search = false;
};

LndDegreeReport degree_report(const MonomialIdeal& ideal, const LatticeVector& alpha);

/// Degrees with effective_dim > 0. Exact for cofinite ideals; otherwise bound is
/// required, the box [-bound, bound]^n is scanned and every report is flagged.
std::vector<LndDegreeReport> lnd_degrees(const MonomialIdeal& ideal, std::optional<Integer> bound = std::nullopt,
                                         std::size_t max_size = default_max_complement);

/// The derivation vanishes on K[S]/I.
bool is_trivial(const MonomialIdeal& ideal, const LatticeVector& alpha, const RationalDualVector& p);

struct NonLiftableWitness {
  MonomialIdeal ideal;  ///< I_H: monomials outside H ∪ {0}
  LatticeVector source;
  LatticeVector target;
  LatticeVector alpha;  ///< target - source
  std::vector<std::pair<DualVector, Integer>> violated;  ///< every rho with rho(alpha) < 0
  bool simplicial_branch = true;
};

/// Error: precondition "every derivation lifts" on the first octant.
NonLiftableWitness non_liftable_witness(const AffineSemigroup& s);

struct InnerOuterSplit {
  std::vector<HomogeneousDerivation> inner;  ///< alpha in S
  std::vector<HomogeneousDerivation> outer;  ///< alpha a root
};

InnerOuterSplit inner_outer_split(const AffineSemigroup& s, const std::vector<HomogeneousDerivation>& ds);

}  // namespace monoalg
