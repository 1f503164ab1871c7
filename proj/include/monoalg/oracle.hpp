#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <vector>

#include "monoalg/quotient.hpp"

namespace monoalg {

// Independent ground truth: derivations of K[S]/I straight from the Leibniz rule,
// with no use of roots or the case analysis.

struct DerivationSpace {
  std::vector<RationalMatrix> basis;

  std::size_t dim() const noexcept { return basis.size(); }
};

/// Solves D(e_i e_j) = D(e_i) e_j + e_i D(e_j), D(1) = 0 over all basis pairs.
DerivationSpace all_derivations(const QuotientAlgebra& q);

bool satisfies_leibniz(const QuotientAlgebra& q, const RationalMatrix& d);

/// Entry (r, c) goes to degree label_r - label_c. Zero entries are dropped.
std::map<LatticeVector, RationalMatrix> graded_components(const QuotientAlgebra& q, const RationalMatrix& d);

/// Dimension of homogeneous nilpotent derivations per degree realized by Der(B).
std::map<LatticeVector, std::size_t> homogeneous_lnd_dims(const QuotientAlgebra& q);
std::map<LatticeVector, std::size_t> homogeneous_lnd_dims(const QuotientAlgebra& q, const DerivationSpace& der);

struct DegreeComparison {
  LatticeVector alpha;
  std::size_t oracle_dim = 0;
  std::size_t classified_dim = 0;
  bool match = true;
};

struct GradedComparisonReport {
  std::vector<DegreeComparison> degrees;  ///< graded order
  std::vector<LatticeVector> extras;      ///< oracle_dim > classified_dim: non-liftable candidates
  std::size_t derivation_dim = 0;

  std::vector<DegreeComparison> mismatches() const;
};

/// Runs on the quotient's working (fullified) ideal.
GradedComparisonReport compare_with_classification(const QuotientAlgebra& q);
GradedComparisonReport compare_with_classification(const MonomialIdeal& ideal,
                                                   std::size_t max_dim = default_max_complement);

/// Random full cofinite monomial ideal of the first octant Z^rank_{>=0} whose
/// complement has at most max_complement elements: pure powers x_i^{k_i} with k_i >= 2
/// plus a few mixed monomials of degree >= 2.
MonomialIdeal random_full_cofinite_ideal(std::mt19937_64& rng, std::size_t rank, std::size_t max_complement);

}  // namespace monoalg
