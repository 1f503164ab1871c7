#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monoalg/derivations.hpp"

namespace monoalg {

/// The finite-dimensional algebra K[S]/I in the monomial basis S \ supp(I).
///
/// A non-full ideal is replaced by its fullification; everything below (basis
/// labels, degrees, torus) then lives in the re-embedded lattice and a notice is
/// recorded.
class QuotientAlgebra {
 public:
  static QuotientAlgebra build(const MonomialIdeal& ideal, std::size_t max_dim = default_max_complement);

  const AffineSemigroup& semigroup() const noexcept { return full_.semigroup; }
  const MonomialIdeal& ideal() const noexcept { return full_.ideal; }
  const ComplementBasis& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool fullified() const noexcept { return full_.changed; }
  const Fullification& fullification() const noexcept { return full_; }
  const std::vector<std::string>& notices() const noexcept { return notices_; }

  /// Index of e_i * e_j, or nullopt when the product is zero.
  std::optional<std::size_t> product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const;

 private:
  QuotientAlgebra(Fullification full, ComplementBasis basis);

  Fullification full_;
  ComplementBasis basis_;
  std::vector<std::optional<std::size_t>> table_;
  std::vector<std::string> notices_;
};

/// Matrices act on column vectors: column j is the image of basis element j.
RationalMatrix derivation_matrix(const QuotientAlgebra& q, const LatticeVector& alpha, const RationalDualVector& p);

bool is_nilpotent(const RationalMatrix& a);

/// sum_i D^i / i!. Error: precondition "not locally nilpotent".
RationalMatrix exp_matrix(const QuotientAlgebra& q, const LatticeVector& alpha, const RationalDualVector& p);

/// sum_k coefficients[k] * s^k.
struct ParametricMatrix {
  std::vector<RationalMatrix> coefficients;

  RationalMatrix specialize(const Rational& s) const;
};

/// exp of s * D_{alpha, p} as a polynomial in s.
ParametricMatrix exp_parametric(const QuotientAlgebra& q, const LatticeVector& alpha, const RationalDualVector& p);

/// t(m) = prod t_i^{m_i}; negative exponents allowed.
Rational character(const std::vector<Rational>& t, const LatticeVector& m);

/// diag(t(m)) over the basis. Error: invalid_input on a zero component.
RationalMatrix torus_matrix(const QuotientAlgebra& q, const std::vector<Rational>& t);

struct ToricAutomorphism {
  IntMatrix lattice_map;                 ///< g acting on column vectors
  std::vector<std::size_t> permutation;  ///< g(e_j) = e_{permutation[j]}

  RationalMatrix matrix() const;
};

/// Automorphisms of S preserving supp(I); identity first.
std::vector<ToricAutomorphism> toric_automorphisms(const QuotientAlgebra& q);

struct UnipotentFamily {
  LatticeVector alpha;
  RationalDualVector direction;  ///< representative of G(alpha) mod K(alpha)
  ParametricMatrix matrix;
};

struct AutGenerators {
  std::vector<LatticeVector> torus_weights;
  std::vector<UnipotentFamily> unipotent_families;
  std::vector<ToricAutomorphism> toric;
  bool first_octant_certified = false;
  std::vector<LatticeVector> opposite_root_weights;  ///< alpha with a family at -alpha too
  std::vector<std::string> warnings;
};

AutGenerators aut_generators(const QuotientAlgebra& q);

bool is_algebra_automorphism(const QuotientAlgebra& q, const RationalMatrix& a);

/// T(t) exp(D_{alpha,p}) T(t)^{-1} == exp(D_{alpha, t(alpha) p}).
bool verify_conjugation(const QuotientAlgebra& q, const std::vector<Rational>& t, const LatticeVector& alpha,
                        const RationalDualVector& p);

/// The commutant of two generic torus elements is the diagonal, and diagonal
/// automorphisms obey the character relations. Error: precondition off the first octant.
bool verify_centralizer_torus(const QuotientAlgebra& q);

/// First n primes 2, 3, 5, ... as rationals; the default torus sample point.
std::vector<Rational> sample_torus(std::size_t n, std::size_t skip = 0);

}  // namespace monoalg
