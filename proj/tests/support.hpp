#pragma once

// Brute-force ground truth for the tests. Everything here works on small
// machine-integer vectors by exhaustive enumeration and shares no code with
// the library algorithms it checks.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "monoalg/oracle.hpp"

namespace bf {

using Vec = std::vector<long long>;

Vec from(const monoalg::LatticeVector& v);
Vec from(const monoalg::DualVector& v);
monoalg::LatticeVector lattice(const Vec& v);
std::string str(const Vec& v);

long long dot(const Vec& a, const Vec& b);
long long det(const std::vector<Vec>& rows);  // Leibniz expansion
std::size_t rank(std::vector<Vec> rows);      // fraction-free elimination

/// All points of [lo, hi]^n.
std::vector<Vec> box(std::size_t n, long long lo, long long hi);

/// Primitive facet normals of cone(gens) found by scanning [-b, b]^n: p >= 0 on gens
/// and the gens on p^perp span a hyperplane.
std::vector<Vec> facets(const std::vector<Vec>& gens, long long b = 6);

bool in_cone(const std::vector<Vec>& normals, const Vec& m);

/// Positive grading: some w with w(g) > 0 on every generator.
Vec grading(const std::vector<Vec>& gens);

/// All non-negative integer combinations of gens with w-degree <= max_deg.
std::set<Vec> generated(const std::vector<Vec>& gens, long long max_deg);

/// Lattice points of the cone that are not a sum of two nonzero cone points.
std::vector<Vec> hilbert_basis(const std::vector<Vec>& gens);

/// m in S + a for some ideal generator a, S = lattice points of cone(gens).
bool in_supp(const std::vector<Vec>& normals, const std::vector<Vec>& ideal_gens, const Vec& m);

/// Lattice points x = sum c_i b_i with every c_i in [0, 1).
long long parallelepiped_count(const std::vector<Vec>& basis);

/// Integer literal as a rational matrix.
monoalg::RationalMatrix rat(std::initializer_list<std::initializer_list<long>> rows);

}  // namespace bf
