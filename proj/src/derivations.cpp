#include "monoalg/derivations.hpp"

#include <set>

namespace monoalg {

namespace {

// Visit every point of [-b, b]^n in lex order.
template <class F>
void for_each_in_box(std::size_t n, const Integer& b, F&& f) {
  if (n == 0) return;
  LatticeVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = -b;
  for (;;) {
    f(v);
    std::size_t k = n;
    while (k-- > 0) {
      if (v[k] < b) {
        ++v[k];
        break;
      }
      v[k] = -b;
      if (k == 0) return;
    }
  }
}

std::vector<RationalDualVector> standard_basis(std::size_t n) {
  std::vector<RationalDualVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    RationalDualVector e(n);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

/// {p : p(h) = 0 for all h}, RREF basis.
std::vector<RationalDualVector> annihilator(const std::vector<LatticeVector>& hs, std::size_t n) {
  if (hs.empty()) return standard_basis(n);
  RationalMatrix m(hs.size(), n);
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = hs[i][j];
  std::vector<RationalDualVector> out;
  for (auto& v : nullspace(m)) out.emplace_back(std::move(v));
  return echelon_basis(out, n);
}

/// span(g) ∩ {p : p(h) = 0 for h in hs}, RREF basis.
std::vector<RationalDualVector> restrict_to(const std::vector<RationalDualVector>& g,
                                            const std::vector<LatticeVector>& hs, std::size_t n) {
  if (g.empty()) return {};
  if (hs.empty()) return echelon_basis(g, n);
  RationalMatrix m(hs.size(), g.size());
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = pairing(hs[i], g[j]);
  std::vector<RationalDualVector> out;
  for (const auto& c : nullspace(m)) {
    RationalDualVector p(n);
    for (std::size_t j = 0; j < g.size(); ++j) p = p + c[j] * g[j];
    out.push_back(std::move(p));
  }
  return echelon_basis(out, n);
}

std::size_t span_rank(const std::vector<RationalDualVector>& vs, std::size_t n) {
  return echelon_basis(vs, n).size();
}

bool proportional(const RationalDualVector& p, const DualVector& rho) {
  // p = lambda * rho for some rational lambda (possibly 0).
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (rho[i] == 0) {
      if (p[i] != 0) return false;
      continue;
    }
    const Rational l = p[i] / Rational(rho[i]);
    if (lambda && *lambda != l) return false;
    lambda = l;
  }
  return true;
}

}  // namespace

std::size_t RootSet::size() const {
  std::size_t k = 0;
  for (const auto& r : roots) k += r.size();
  return k;
}

std::vector<LatticeVector> RootSet::all() const {
  std::vector<LatticeVector> out;
  for (const auto& r : roots) out.insert(out.end(), r.begin(), r.end());
  sort_graded(out);
  return out;
}

std::optional<std::size_t> root_ray_index(const AffineSemigroup& s, const LatticeVector& alpha) {
  if (alpha.size() != s.rank()) return std::nullopt;
  std::optional<std::size_t> found;
  const auto& rays = s.dual_rays();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const Integer v = pairing(alpha, rays[i]);
    if (v >= 0) continue;
    if (v != -1 || found) return std::nullopt;
    found = i;
  }
  return found;
}

bool in_ideal_root_set(const MonomialIdeal& ideal, const LatticeVector& alpha) {
  const auto idx = root_ray_index(ideal.semigroup(), alpha);
  if (!idx) return false;
  const DualVector& rho = ideal.semigroup().dual_rays()[*idx];
  for (const auto& a : ideal.generators())
    if (pairing(a, rho) != 0 && !ideal.in_supp(a + alpha)) return false;
  return true;
}

RootSet demazure_roots(const AffineSemigroup& s, const Integer& bound) {
  if (bound < 1) fail(ErrorKind::invalid_input, "root bound must be at least 1");
  RootSet out;
  out.rays = s.dual_rays();
  out.roots.resize(out.rays.size());
  out.bound = bound;
  for_each_in_box(s.rank(), bound, [&](const LatticeVector& a) {
    if (auto idx = root_ray_index(s, a)) out.roots[*idx].push_back(a);
  });
  for (auto& r : out.roots) sort_graded(r);
  return out;
}

RootSet roots_of_ideal(const MonomialIdeal& ideal, const Integer& bound) {
  RootSet out = demazure_roots(ideal.semigroup(), bound);
  for (auto& group : out.roots) {
    std::vector<LatticeVector> keep;
    for (auto& a : group)
      if (in_ideal_root_set(ideal, a)) keep.push_back(std::move(a));
    group = std::move(keep);
  }
  return out;
}

std::string case_name(LndCase c) {
  switch (c) {
    case LndCase::root:
      return "i";
    case LndCase::inner_escaping:
      return "ii";
    case LndCase::inner_constrained:
      return "iii";
  }
  return "?";
}

LndVerdict classify_lnd(const MonomialIdeal& ideal, const LatticeVector& alpha, const RationalDualVector& p) {
  const AffineSemigroup& s = ideal.semigroup();
  if (alpha.size() != s.rank() || p.size() != s.rank())
    fail(ErrorKind::invalid_input, "degree or functional has wrong length");
  const LatticeVector zero(s.rank());

  if (s.contains(alpha)) {
    if (first_escape(ideal, zero, alpha)) return {true, LndCase::inner_escaping};
    for (const auto& h : s.hilbert_basis())
      if (pairing(h, p) != 0 && !first_escape(ideal, h, alpha)) return {false, LndCase::inner_constrained};
    return {true, LndCase::inner_constrained};
  }
  const auto idx = root_ray_index(s, alpha);
  if (!idx) fail(ErrorKind::invalid_input, "not a liftable homogeneous degree: " + to_string(alpha), alpha.coords());
  if (!proportional(p, s.dual_rays()[*idx]))
    fail(ErrorKind::precondition, "functional " + to_string(p) + " is not a multiple of " +
                                      to_string(s.dual_rays()[*idx]) + " for root " + to_string(alpha));
  return {p.is_zero() || in_ideal_root_set(ideal, alpha), LndCase::root};
}

LndDegreeReport degree_report(const MonomialIdeal& ideal, const LatticeVector& alpha) {
  const AffineSemigroup& s = ideal.semigroup();
  const std::size_t n = s.rank();
  if (alpha.size() != n) fail(ErrorKind::invalid_input, "degree has wrong length");
  const LatticeVector zero(n);
  LndDegreeReport r;
  r.alpha = alpha;

  if (s.contains(alpha)) {
    if (first_escape(ideal, zero, alpha)) {
      r.kind = LndCase::inner_escaping;
      r.g_basis = standard_basis(n);
    } else {
      r.kind = LndCase::inner_constrained;
      std::vector<LatticeVector> bad;
      for (const auto& h : s.hilbert_basis())
        if (!first_escape(ideal, h, alpha)) bad.push_back(h);
      r.g_basis = annihilator(bad, n);
    }
  } else {
    const auto idx = root_ray_index(s, alpha);
    if (!idx)
      fail(ErrorKind::invalid_input, "not a liftable homogeneous degree: " + to_string(alpha), alpha.coords());
    r.kind = LndCase::root;
    if (in_ideal_root_set(ideal, alpha))
      r.g_basis = echelon_basis({RationalDualVector(s.dual_rays()[*idx])}, n);
  }

  // p is trivial iff it vanishes on every h in H with h + alpha outside supp(I).
  std::vector<LatticeVector> live;
  for (const auto& h : s.hilbert_basis())
    if (!ideal.in_supp(h + alpha)) live.push_back(h);
  r.k_basis = restrict_to(r.g_basis, live, n);
  r.effective_dim = r.g_basis.size() - r.k_basis.size();

  std::vector<RationalDualVector> acc = r.k_basis;
  for (const auto& g : r.g_basis) {
    acc.push_back(g);
    if (span_rank(acc, n) == acc.size())
      r.effective_basis.push_back(g);
    else
      acc.pop_back();
  }
  return r;
}

std::vector<LndDegreeReport> lnd_degrees(const MonomialIdeal& ideal, std::optional<Integer> bound,
                                         std::size_t max_size) {
  const AffineSemigroup& s = ideal.semigroup();
  std::set<LatticeVector> candidates;
  bool bounded = false;
  const auto cert = is_cofinite(ideal);
  auto liftable = [&](const LatticeVector& a) { return s.contains(a) || in_ideal_root_set(ideal, a); };
  if (cert.cofinite) {
    const ComplementBasis c = complement(ideal, max_size);
    for (const auto& m : c.elements())
      for (const auto& m2 : c.elements()) {
        if (m == m2) continue;
        LatticeVector a = m2 - m;
        if (liftable(a)) candidates.insert(std::move(a));
      }
  } else {
    if (!bound)
      fail(ErrorKind::precondition, "ideal support is not cofinite: a search bound is required (failing ray " +
                                        to_string(*cert.failing_ray) + ")");
    if (*bound < 1) fail(ErrorKind::invalid_input, "search bound must be at least 1");
    bounded = true;
    for_each_in_box(s.rank(), *bound, [&](const LatticeVector& a) {
      if (!a.is_zero() && liftable(a)) candidates.insert(a);
    });
  }

  std::vector<LatticeVector> order(candidates.begin(), candidates.end());
  sort_graded(order);
  std::vector<LndDegreeReport> out;
  for (const auto& a : order) {
    LndDegreeReport r = degree_report(ideal, a);
    if (r.effective_dim == 0) continue;
    r.bounded_search = bounded;
    out.push_back(std::move(r));
  }
  return out;
}

bool is_trivial(const MonomialIdeal& ideal, const LatticeVector& alpha, const RationalDualVector& p) {
  classify_lnd(ideal, alpha, p);  // surfaces the liftability errors
  for (const auto& h : ideal.semigroup().hilbert_basis())
    if (pairing(h, p) != 0 && !ideal.in_supp(h + alpha)) return false;
  return true;
}

namespace {

MonomialIdeal hilbert_complement_ideal(const AffineSemigroup& s) {
  const auto& h = s.hilbert_basis();
  std::vector<LatticeVector> sums;
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i; j < h.size(); ++j) sums.push_back(h[i] + h[j]);
  return MonomialIdeal(s, std::move(sums));
}

NonLiftableWitness make_witness(const AffineSemigroup& s, MonomialIdeal ideal, const LatticeVector& source,
                                const LatticeVector& target, bool simplicial) {
  NonLiftableWitness w{std::move(ideal), source, target, target - source, {}, simplicial};
  for (const auto& rho : s.dual_rays()) {
    const Integer v = pairing(w.alpha, rho);
    if (v < 0) w.violated.emplace_back(rho, v);
  }
  return w;
}

}  // namespace

NonLiftableWitness non_liftable_witness(const AffineSemigroup& s) {
  if (s.is_first_octant()) fail(ErrorKind::precondition, "every derivation lifts: the semigroup is a first octant");
  MonomialIdeal ih = hilbert_complement_ideal(s);
  const auto& hb = s.hilbert_basis();
  const CompleteFlag flag = complete_flag(s);

  if (s.is_simplicial()) {
    // A dual ray taking a value >= 2 on H; the upper triangular pair usually exhibits one.
    std::optional<std::pair<LatticeVector, DualVector>> pick;
    const UpperTriangularPair pair = upper_triangular_pair(s, flag);
    for (std::size_t i = 0; i < pair.mus.size() && !pick; ++i)
      if (pairing(pair.mus[i], pair.rhos[i]) >= 2) pick.emplace(pair.mus[i], pair.rhos[i]);
    for (const auto& rho : s.dual_rays())
      for (const auto& h : hb)
        if (!pick && pairing(h, rho) >= 2) pick.emplace(h, rho);
    if (!pick) fail(ErrorKind::internal, "no dual ray takes a value >= 2 on the Hilbert basis");
    const auto& [mu1, rho] = *pick;
    for (const auto& h : hb)
      if (pairing(h, rho) == 0) return make_witness(s, std::move(ih), mu1, h, true);
    fail(ErrorKind::internal, "no Hilbert basis element on the facet " + to_string(rho));
  }

  // Two facets meeting in a codimension-2 face, a ray off both, and a target on both.
  std::vector<std::pair<DualVector, DualVector>> facet_pairs;
  const std::size_t n = s.rank();
  if (n >= 2 && flag.faces[n - 2].defining.size() == 2)
    facet_pairs.emplace_back(flag.faces[n - 2].defining[0], flag.faces[n - 2].defining[1]);
  const auto& rays = s.dual_rays();
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j) facet_pairs.emplace_back(rays[i], rays[j]);

  for (const auto& [r1, r2] : facet_pairs) {
    std::vector<LatticeVector> common;
    for (const auto& mu : s.ray_generators())
      if (pairing(mu, r1) == 0 && pairing(mu, r2) == 0) common.push_back(mu);
    if (common.empty() ||
        rank(rows_matrix(std::span<const LatticeVector>(common), n)) + 2 != n)
      continue;
    for (const auto& mu : s.ray_generators()) {
      if (pairing(mu, r1) <= 0 || pairing(mu, r2) <= 0) continue;
      for (const auto& h : hb)
        if (!h.is_zero() && pairing(h, r1) == 0 && pairing(h, r2) == 0)
          return make_witness(s, std::move(ih), mu, h, false);
    }
  }
  fail(ErrorKind::internal, "no non-simplicial witness found");
}

InnerOuterSplit inner_outer_split(const AffineSemigroup& s, const std::vector<HomogeneousDerivation>& ds) {
  InnerOuterSplit out;
  for (const auto& d : ds) {
    if (s.contains(d.alpha))
      out.inner.push_back(d);
    else if (root_ray_index(s, d.alpha))
      out.outer.push_back(d);
    else
      fail(ErrorKind::invalid_input, "not a liftable homogeneous degree: " + to_string(d.alpha), d.alpha.coords());
  }
  return out;
}

}  // namespace monoalg
