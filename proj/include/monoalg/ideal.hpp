#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monoalg/semigroup.hpp"

namespace monoalg {

/// Monomial ideal I = (x^a_1, ..., x^a_l) of K[S]. Generators are minimalized on
/// construction and kept in graded order. An empty generator list is the zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal(AffineSemigroup s, std::vector<LatticeVector> generators);

  const AffineSemigroup& semigroup() const noexcept { return s_; }
  const std::vector<LatticeVector>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  /// m in supp(I). Throws invalid_input "not a semigroup element" when m is not in S.
  bool supp_contains(const LatticeVector& m) const;
  /// Same test without the membership precondition (false outside S).
  bool in_supp(const LatticeVector& m) const;

 private:
  AffineSemigroup s_;
  std::vector<LatticeVector> gens_;
};

struct CofinitenessCertificate {
  bool cofinite = false;
  std::vector<std::pair<LatticeVector, Integer>> multiples;  ///< ray -> smallest k with k*ray in supp
  std::optional<LatticeVector> failing_ray;
};

CofinitenessCertificate is_cofinite(const MonomialIdeal& ideal);

/// Smallest l >= 0 with m + l*alpha in supp(I), solved exactly per generator
/// (each dual ray gives a linear inequality in l). nullopt if the ray never meets supp.
std::optional<Integer> first_escape(const MonomialIdeal& ideal, const LatticeVector& m, const LatticeVector& alpha);

/// Smallest l >= 1 with l*alpha in supp(I).
std::optional<Integer> smallest_multiple_in_supp(const MonomialIdeal& ideal, const LatticeVector& alpha);

/// S \ supp(I) in graded order.
class ComplementBasis {
 public:
  ComplementBasis() = default;
  explicit ComplementBasis(std::vector<LatticeVector> elements);

  const std::vector<LatticeVector>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const LatticeVector& operator[](std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const LatticeVector& m) const;

 private:
  std::vector<LatticeVector> elements_;
  std::map<LatticeVector, std::size_t> index_;
};

constexpr std::size_t default_max_complement = 512;

/// Breadth-first closure of 0 under the Hilbert basis, pruned by supp.
/// Errors: precondition "complement infinite" (witness = failing ray), or
/// precondition when the size exceeds max_size.
ComplementBasis complement(const MonomialIdeal& ideal, std::size_t max_size = default_max_complement);

/// No ray generator of S lies in supp(I).
bool is_full(const MonomialIdeal& ideal);

/// S' = subsemigroup generated by the complement, re-embedded in the lattice it spans.
struct Fullification {
  AffineSemigroup semigroup;
  MonomialIdeal ideal;
  IntMatrix embedding;  ///< rows: basis of the new lattice in old coordinates
  bool changed = false;

  LatticeVector to_original(const LatticeVector& m) const;
};

Fullification fullify(const MonomialIdeal& ideal, std::size_t max_size = default_max_complement);

}  // namespace monoalg
