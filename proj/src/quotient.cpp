#include "monoalg/quotient.hpp"

#include <map>
#include <set>

namespace monoalg {

namespace {

LatticeVector apply(const IntMatrix& g, const LatticeVector& m) {
  LatticeVector out(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out[i] += g(i, j) * m[j];
  return out;
}

std::vector<Rational> column(const RationalMatrix& a, std::size_t j) {
  std::vector<Rational> c(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) c[i] = a(i, j);
  return c;
}

std::vector<std::size_t> primes(std::size_t count) {
  std::vector<std::size_t> ps;
  for (std::size_t k = 2; ps.size() < count; ++k) {
    bool prime = true;
    for (auto p : ps)
      if (k % p == 0) {
        prime = false;
        break;
      }
    if (prime) ps.push_back(k);
  }
  return ps;
}

}  // namespace

QuotientAlgebra::QuotientAlgebra(Fullification full, ComplementBasis basis)
    : full_(std::move(full)), basis_(std::move(basis)) {
  const std::size_t d = basis_.size();
  table_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) table_[i * d + j] = basis_.index_of(basis_[i] + basis_[j]);
}

QuotientAlgebra QuotientAlgebra::build(const MonomialIdeal& ideal, std::size_t max_dim) {
  if (ideal.in_supp(LatticeVector(ideal.semigroup().rank())))
    fail(ErrorKind::precondition, "the ideal is the whole ring: the quotient is zero");
  Fullification full = fullify(ideal, max_dim);
  ComplementBasis basis = complement(full.ideal, max_dim);
  if (basis.size() == 0) fail(ErrorKind::precondition, "the ideal is the whole ring: the quotient is zero");
  const bool changed = full.changed;
  const std::size_t r = full.semigroup.rank();
  QuotientAlgebra q(std::move(full), std::move(basis));
  if (changed)
    q.notices_.push_back("ideal is not full: replaced by its fullification, re-embedded in rank " +
                         std::to_string(r));
  return q;
}

std::vector<Rational> QuotientAlgebra::multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  const std::size_t d = dim();
  std::vector<Rational> out(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      if (auto k = product(i, j)) out[*k] += a[i] * b[j];
    }
  }
  return out;
}

RationalMatrix derivation_matrix(const QuotientAlgebra& q, const LatticeVector& alpha, const RationalDualVector& p) {
  classify_lnd(q.ideal(), alpha, p);  // rejects non-liftable (alpha, p)
  const std::size_t d = q.dim();
  RationalMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto i = q.basis().index_of(q.basis()[j] + alpha);
    if (i) m(*i, j) = pairing(q.basis()[j], p);
  }
  return m;
}

bool is_nilpotent(const RationalMatrix& a) {
  RationalMatrix power = a;
  for (std::size_t k = 1; k < a.rows(); ++k) {
    if (power.is_zero()) return true;
    power = power * a;
  }
  return power.is_zero();
}

ParametricMatrix exp_parametric(const QuotientAlgebra& q, const LatticeVector& alpha, const RationalDualVector& p) {
  const RationalMatrix d = derivation_matrix(q, alpha, p);
  if (!classify_lnd(q.ideal(), alpha, p).locally_nilpotent || !is_nilpotent(d))
    fail(ErrorKind::precondition, "not locally nilpotent: derivation of degree " + to_string(alpha) + " with p = " +
                                      to_string(p));
  ParametricMatrix out;
  RationalMatrix term = RationalMatrix::identity(q.dim());
  for (std::size_t k = 1; !term.is_zero(); ++k) {
    out.coefficients.push_back(term);
    term = Rational(1, k) * (term * d);
  }
  return out;
}

RationalMatrix ParametricMatrix::specialize(const Rational& s) const {
  if (coefficients.empty()) return {};
  RationalMatrix out = coefficients.back();
  for (std::size_t k = coefficients.size() - 1; k-- > 0;) out = s * out + coefficients[k];
  return out;
}

RationalMatrix exp_matrix(const QuotientAlgebra& q, const LatticeVector& alpha, const RationalDualVector& p) {
  return exp_parametric(q, alpha, p).specialize(1);
}

Rational character(const std::vector<Rational>& t, const LatticeVector& m) {
  if (t.size() != m.size()) fail(ErrorKind::invalid_input, "torus point has wrong length");
  Rational out = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0) fail(ErrorKind::invalid_input, "torus component must be nonzero");
    const Rational base = m[i] < 0 ? Rational(1) / t[i] : t[i];
    Integer e = abs(m[i]);
    for (; e > 0; --e) out *= base;
  }
  return out;
}

RationalMatrix torus_matrix(const QuotientAlgebra& q, const std::vector<Rational>& t) {
  if (t.size() != q.semigroup().rank())
    fail(ErrorKind::invalid_input, "torus point needs " + std::to_string(q.semigroup().rank()) + " components");
  for (const auto& x : t)
    if (x == 0) fail(ErrorKind::invalid_input, "torus component must be nonzero");
  RationalMatrix m(q.dim(), q.dim());
  for (std::size_t i = 0; i < q.dim(); ++i) m(i, i) = character(t, q.basis()[i]);
  return m;
}

RationalMatrix ToricAutomorphism::matrix() const {
  const std::size_t d = permutation.size();
  RationalMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) m(permutation[j], j) = 1;
  return m;
}

std::vector<ToricAutomorphism> toric_automorphisms(const QuotientAlgebra& q) {
  const AffineSemigroup& s = q.semigroup();
  const MonomialIdeal& ideal = q.ideal();
  const std::size_t n = s.rank();
  const auto& rays = s.ray_generators();

  // n independent rays to pin down g.
  std::vector<std::size_t> base;
  {
    std::vector<LatticeVector> picked;
    for (std::size_t i = 0; i < rays.size() && base.size() < n; ++i) {
      picked.push_back(rays[i]);
      if (rank(rows_matrix(std::span<const LatticeVector>(picked), n)) == picked.size())
        base.push_back(i);
      else
        picked.pop_back();
    }
  }
  RationalMatrix base_cols(n, n);
  for (std::size_t j = 0; j < base.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) base_cols(i, j) = rays[base[j]][i];
  const auto base_inv = inverse(base_cols);
  if (n > 0 && !base_inv) fail(ErrorKind::internal, "ray generators do not span");

  const std::set<LatticeVector> ray_set(rays.begin(), rays.end());
  const std::set<LatticeVector> hilbert_set(s.hilbert_basis().begin(), s.hilbert_basis().end());

  std::vector<ToricAutomorphism> out;
  std::set<std::vector<Integer>> seen;
  std::vector<std::size_t> image(base.size());
  std::vector<bool> used(rays.size(), false);

  auto consider = [&]() {
    IntMatrix g(n, n);
    if (n > 0) {
      RationalMatrix targets(n, n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) targets(i, j) = rays[image[j]][i];
      const RationalMatrix gq = targets * *base_inv;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (gq(i, j).get_den() != 1) return;
          g(i, j) = gq(i, j).get_num();
        }
      if (abs(determinant(g)) != 1) return;
    }
    for (const auto& r : rays)
      if (!ray_set.count(apply(g, r))) return;
    for (const auto& h : s.hilbert_basis())
      if (!hilbert_set.count(apply(g, h))) return;
    IntMatrix g_inv(n, n);
    if (n > 0) {
      const auto inv = inverse(to_rational(g));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g_inv(i, j) = (*inv)(i, j).get_num();
    }
    for (const auto& a : ideal.generators())
      if (!ideal.in_supp(apply(g, a)) || !ideal.in_supp(apply(g_inv, a))) return;
    std::vector<Integer> key;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) key.push_back(g(i, j));
    if (!seen.insert(key).second) return;
    ToricAutomorphism t{g, {}};
    for (std::size_t j = 0; j < q.dim(); ++j) {
      const auto idx = q.basis().index_of(apply(g, q.basis()[j]));
      if (!idx) fail(ErrorKind::internal, "toric automorphism does not preserve the complement");
      t.permutation.push_back(*idx);
    }
    out.push_back(std::move(t));
  };

  // Injective assignments of the base rays to rays.
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == base.size()) {
      consider();
      return;
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (used[r]) continue;
      used[r] = true;
      image[k] = r;
      self(self, k + 1);
      used[r] = false;
    }
  };
  recurse(recurse, 0);

  std::sort(out.begin(), out.end(), [](const ToricAutomorphism& a, const ToricAutomorphism& b) {
    const bool ia = a.lattice_map == IntMatrix::identity(a.lattice_map.rows());
    const bool ib = b.lattice_map == IntMatrix::identity(b.lattice_map.rows());
    if (ia != ib) return ia;
    return a.permutation < b.permutation;
  });
  return out;
}

AutGenerators aut_generators(const QuotientAlgebra& q) {
  AutGenerators out;
  out.torus_weights = q.basis().elements();
  out.warnings = q.notices();
  for (const auto& r : lnd_degrees(q.ideal())) {
    for (const auto& p : r.effective_basis)
      out.unipotent_families.push_back({r.alpha, p, exp_parametric(q, r.alpha, p)});
  }
  out.toric = toric_automorphisms(q);
  out.first_octant_certified = q.semigroup().is_first_octant();
  if (!out.first_octant_certified)
    out.warnings.push_back(
        "first_octant_certified=false: the semigroup is not a first octant, so maximality of the torus and "
        "generation of the automorphism group are not certified (a 3-dimensional counterexample to maximality "
        "exists)");

  std::set<LatticeVector> alphas;
  for (const auto& f : out.unipotent_families) alphas.insert(f.alpha);
  for (const auto& a : alphas)
    if (alphas.count(-a)) out.opposite_root_weights.push_back(a);
  sort_graded(out.opposite_root_weights);
  return out;
}

bool is_algebra_automorphism(const QuotientAlgebra& q, const RationalMatrix& a) {
  const std::size_t d = q.dim();
  if (a.rows() != d || a.cols() != d) return false;
  if (rank(a) != d) return false;
  for (std::size_t i = 0; i < d; ++i)
    if (a(i, 0) != (i == 0 ? 1 : 0)) return false;
  std::vector<std::vector<Rational>> images;
  for (std::size_t j = 0; j < d; ++j) images.push_back(column(a, j));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      std::vector<Rational> lhs(d, 0);
      if (auto k = q.product(i, j)) lhs = images[*k];
      if (lhs != q.multiply(images[i], images[j])) return false;
    }
  return true;
}

bool verify_conjugation(const QuotientAlgebra& q, const std::vector<Rational>& t, const LatticeVector& alpha,
                        const RationalDualVector& p) {
  const RationalMatrix tm = torus_matrix(q, t);
  const auto tinv = inverse(tm);
  if (!tinv) return false;
  const RationalMatrix lhs = tm * exp_matrix(q, alpha, p) * *tinv;
  return lhs == exp_matrix(q, alpha, character(t, alpha) * p);
}

std::vector<Rational> sample_torus(std::size_t n, std::size_t skip) {
  const auto ps = primes(n + skip);
  std::vector<Rational> t;
  for (std::size_t i = skip; i < ps.size(); ++i) t.emplace_back(static_cast<unsigned long>(ps[i]));
  return t;
}

bool verify_centralizer_torus(const QuotientAlgebra& q) {
  const AffineSemigroup& s = q.semigroup();
  if (!s.is_first_octant())
    fail(ErrorKind::precondition, "centralizer check requires a first-octant semigroup");
  const std::size_t d = q.dim();
  const std::size_t n = s.rank();

  // A T = T A for two torus points: A_ij (t(m_i) - t(m_j)) = 0. Each equation has one
  // unknown, so A_ij is free iff every coefficient vanishes.
  const std::vector<std::vector<Rational>> points{sample_torus(n), sample_torus(n, n)};
  std::vector<std::vector<Rational>> chis;
  for (const auto& t : points) {
    std::vector<Rational> chi;
    for (std::size_t i = 0; i < d; ++i) chi.push_back(character(t, q.basis()[i]));
    chis.push_back(std::move(chi));
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      bool free = true;
      for (const auto& chi : chis)
        if (chi[i] != chi[j]) free = false;
      if (free) return false;  // an off-diagonal entry survives
    }

  // Diagonal automorphism a: a_k = a_i a_j whenever e_i e_j = e_k. Express every a_m as a
  // monomial in the values on the Hilbert basis and compare with the coordinates of m.
  const auto& hb = s.hilbert_basis();
  std::vector<std::optional<LatticeVector>> expo(d);
  expo[0] = LatticeVector(hb.size());
  for (std::size_t k = 0; k < hb.size(); ++k) {
    const auto idx = q.basis().index_of(hb[k]);
    if (!idx) continue;
    expo[*idx] = LatticeVector::unit(hb.size(), k);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const auto k = q.product(i, j);
        if (!k || !expo[i] || !expo[j]) continue;
        const LatticeVector e = *expo[i] + *expo[j];
        if (!expo[*k]) {
          expo[*k] = e;
          changed = true;
        } else if (*expo[*k] != e) {
          return false;
        }
      }
  }
  // m = sum c_k h_k with the Hilbert basis a lattice basis.
  RationalMatrix hcols(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) hcols(i, k) = hb[k][i];
  const auto hinv = inverse(hcols);
  for (std::size_t m = 0; m < d; ++m) {
    if (!expo[m]) return false;
    for (std::size_t k = 0; k < n; ++k) {
      Rational c = 0;
      for (std::size_t i = 0; i < n; ++i) c += (*hinv)(k, i) * q.basis()[m][i];
      if (c != (*expo[m])[k]) return false;
    }
  }
  return true;
}

}  // namespace monoalg
