#include "monoalg/semigroup.hpp"

#include <map>
#include <set>

namespace monoalg {

namespace {

using Vec = std::vector<Integer>;

Integer dot(const Vec& a, const Vec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec combine(const Integer& a, const Vec& x, const Integer& b, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return primitive(std::move(out));
}

bool all_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::size_t rank_of(const std::vector<Vec>& rows, std::size_t n) {
  if (rows.empty()) return 0;
  IntMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return rank(m);
}

struct Cone {
  std::vector<Vec> rays;
  std::vector<Vec> lineality;
};

// Incremental double description for {x : a.x >= 0 for every constraint a}.
// Starts from the whole space (all lineality) and intersects one half-space at a time;
// new rays come from adjacent (+,-) pairs, adjacency decided by the rank of the
// common tight constraints.
Cone double_description(const std::vector<Vec>& constraints, std::size_t n) {
  Cone cone;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    cone.lineality.push_back(std::move(e));
  }
  std::vector<Vec> processed;

  for (const Vec& a : constraints) {
    if (all_zero(a)) continue;

    std::size_t lin_idx = cone.lineality.size();
    for (std::size_t i = 0; i < cone.lineality.size(); ++i)
      if (dot(a, cone.lineality[i]) != 0) {
        lin_idx = i;
        break;
      }

    if (lin_idx < cone.lineality.size()) {
      Vec l0 = cone.lineality[lin_idx];
      Integer al0 = dot(a, l0);
      if (al0 < 0) {
        for (auto& x : l0) x = -x;
        al0 = -al0;
      }
      std::vector<Vec> lineality;
      for (std::size_t i = 0; i < cone.lineality.size(); ++i) {
        if (i == lin_idx) continue;
        const Vec& l = cone.lineality[i];
        lineality.push_back(combine(al0, l, -dot(a, l), l0));
      }
      for (auto& r : cone.rays) r = combine(al0, r, -dot(a, r), l0);
      cone.rays.push_back(l0);
      cone.lineality = std::move(lineality);
      processed.push_back(a);
      continue;
    }

    std::vector<Vec> pos, zero, neg;
    for (const auto& r : cone.rays) {
      const Integer v = dot(a, r);
      if (v > 0)
        pos.push_back(r);
      else if (v == 0)
        zero.push_back(r);
      else
        neg.push_back(r);
    }
    const std::size_t pointed_dim = n - cone.lineality.size();
    std::vector<Vec> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        std::vector<Vec> tight;
        for (const auto& c : processed)
          if (dot(c, p) == 0 && dot(c, q) == 0) tight.push_back(c);
        if (pointed_dim < 2 || rank_of(tight, n) != pointed_dim - 2) continue;
        next.push_back(combine(dot(a, p), q, -dot(a, q), p));
      }
    }
    std::set<Vec> seen;
    cone.rays.clear();
    for (auto& r : next)
      if (seen.insert(r).second) cone.rays.push_back(std::move(r));
    processed.push_back(a);
  }
  return cone;
}

bool in_cone(const Vec& x, std::span<const DualVector> normals) {
  for (const auto& rho : normals)
    if (dot(x, rho.coords()) < 0) return false;
  return true;
}

// Pulling triangulation of the face spanned by `face` (indices into rays) of dimension dim.
void triangulate(const std::vector<LatticeVector>& rays, std::span<const DualVector> normals,
                 const std::vector<std::size_t>& face, std::size_t dim,
                 std::vector<std::vector<std::size_t>>& out) {
  if (face.size() == dim) {
    out.push_back(face);
    return;
  }
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> facets;
  for (const auto& rho : normals) {
    if (pairing(rays[apex], rho) <= 0) continue;
    std::vector<std::size_t> sub;
    std::vector<Vec> rows;
    for (std::size_t idx : face)
      if (pairing(rays[idx], rho) == 0) {
        sub.push_back(idx);
        rows.push_back(rays[idx].coords());
      }
    if (sub.empty() || rank_of(rows, rays[apex].size()) + 1 != dim) continue;
    facets.insert(sub);
  }
  for (const auto& facet : facets) {
    std::vector<std::vector<std::size_t>> sub;
    triangulate(rays, normals, facet, dim - 1, sub);
    for (auto& simplex : sub) {
      simplex.insert(simplex.begin(), apex);
      out.push_back(std::move(simplex));
    }
  }
}

// Lattice points of the half-open parallelepiped spanned by the given independent vectors.
std::vector<LatticeVector> parallelepiped_points(const std::vector<LatticeVector>& gens) {
  const std::size_t n = gens.size();
  IntMatrix b(n, n);  // columns are the generators
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(j, i) = gens[i][j];
  const SmithForm snf = smith_normal_form(b);
  const auto u_inv = inverse(to_rational(snf.U));
  const auto b_inv = inverse(to_rational(b));
  if (!u_inv || !b_inv) fail(ErrorKind::internal, "singular simplicial cone");
  const RationalMatrix rb = to_rational(b);

  std::vector<Integer> divisors = snf.diagonal();
  std::vector<LatticeVector> out;
  std::vector<Integer> y(n, 0);
  for (;;) {
    // x = U^{-1} y, then reduce into the parallelepiped.
    std::vector<Rational> x(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x[i] += (*u_inv)(i, j) * y[j];
    std::vector<Rational> lambda(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) lambda[i] += (*b_inv)(i, j) * x[j];
    for (auto& l : lambda) {
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), l.get_num_mpz_t(), l.get_den_mpz_t());
      l -= fl;
    }
    LatticeVector p(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += rb(i, j) * lambda[j];
      if (s.get_den() != 1) fail(ErrorKind::internal, "non-integral parallelepiped point");
      p[i] = s.get_num();
    }
    out.push_back(std::move(p));

    std::size_t k = 0;
    while (k < n) {
      ++y[k];
      if (y[k] < divisors[k]) break;
      y[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return out;
}

// Is target a non-negative integer combination of gens? gens must lie in a pointed cone.
class GeneratedMembership {
 public:
  GeneratedMembership(std::vector<Vec> gens, Vec weight) : gens_(std::move(gens)), weight_(std::move(weight)) {}

  bool contains(const Vec& target) {
    if (all_zero(target)) return true;
    if (dot(weight_, target) <= 0) return false;
    auto it = memo_.find(target);
    if (it != memo_.end()) return it->second;
    bool found = false;
    for (const auto& g : gens_) {
      Vec rest(target.size());
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = target[i] - g[i];
      if (dot(weight_, rest) < 0) continue;
      if (contains(rest)) {
        found = true;
        break;
      }
    }
    memo_.emplace(target, found);
    return found;
  }

 private:
  std::vector<Vec> gens_;
  Vec weight_;  // strictly positive on the cone minus 0
  std::map<Vec, bool> memo_;
};

struct Analysis {
  ValidationReport report;
  std::vector<DualVector> dual;
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> hilbert;
};

Analysis analyze(std::size_t n, std::span<const LatticeVector> generators) {
  Analysis a;
  for (const auto& g : generators)
    if (g.size() != n) fail(ErrorKind::invalid_input, "generator " + to_string(g) + " has wrong length");
  if (n == 0) {
    a.report.full_rank = a.report.pointed = a.report.saturated = a.report.minimally_embedded = true;
    return a;
  }
  if (generators.empty()) fail(ErrorKind::invalid_input, "empty generating set");

  const IntMatrix gm = rows_matrix(generators, n);
  const SmithForm snf = smith_normal_form(gm);
  if (snf.rank < n) {
    a.report.bad_elementary_divisor = Integer(0);
    a.report.message = "semigroup not minimally embedded: elementary divisor 0 (generators span rank " +
                       std::to_string(snf.rank) + " < " + std::to_string(n) + ")";
    return a;
  }
  a.report.full_rank = true;

  a.dual = dual_rays(generators, n);
  {
    std::vector<Vec> rows;
    for (const auto& d : a.dual) rows.push_back(d.coords());
    if (rank_of(rows, n) < n) {
      a.report.message = "semigroup not pointed";
      return a;
    }
  }
  a.report.pointed = true;

  a.rays = cone_rays(a.dual, n);
  a.hilbert = cone_hilbert_basis(a.rays, a.dual, n);

  Vec weight(n, 0);
  for (const auto& d : a.dual)
    for (std::size_t i = 0; i < n; ++i) weight[i] += d[i];
  std::vector<Vec> gens;
  {
    std::set<Vec> seen;
    for (const auto& g : generators)
      if (!g.is_zero() && seen.insert(g.coords()).second) gens.push_back(g.coords());
  }
  GeneratedMembership generated(gens, weight);
  for (const auto& h : a.hilbert) {
    if (!generated.contains(h.coords())) {
      a.report.saturation_witness = h;
      a.report.message = "semigroup not saturated: witness " + to_string(h) +
                         " lies in the cone but not in the semigroup";
      return a;
    }
  }
  a.report.saturated = true;

  for (const auto& d : snf.diagonal())
    if (d != 1) {
      a.report.bad_elementary_divisor = d;
      a.report.message = "semigroup not minimally embedded: elementary divisor " + d.get_str();
      return a;
    }
  a.report.minimally_embedded = true;
  return a;
}

}  // namespace

std::vector<DualVector> dual_rays(std::span<const LatticeVector> generators, std::size_t rank) {
  std::vector<Vec> constraints;
  for (const auto& g : generators) constraints.push_back(g.coords());
  Cone c = double_description(constraints, rank);
  std::vector<DualVector> out;
  for (auto& r : c.rays) out.emplace_back(std::move(r));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> cone_rays(std::span<const DualVector> normals, std::size_t rank) {
  std::vector<Vec> constraints;
  for (const auto& d : normals) constraints.push_back(d.coords());
  Cone c = double_description(constraints, rank);
  std::vector<LatticeVector> out;
  for (auto& r : c.rays) out.emplace_back(std::move(r));
  sort_graded(out);
  return out;
}

std::vector<LatticeVector> cone_hilbert_basis(std::span<const LatticeVector> rays,
                                              std::span<const DualVector> normals,
                                              std::size_t rank) {
  if (rank == 0) return {};
  std::vector<LatticeVector> ray_list(rays.begin(), rays.end());
  std::vector<std::size_t> all(ray_list.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> simplices;
  triangulate(ray_list, normals, all, rank, simplices);

  std::set<LatticeVector> candidates(ray_list.begin(), ray_list.end());
  for (const auto& simplex : simplices) {
    std::vector<LatticeVector> gens;
    for (auto idx : simplex) gens.push_back(ray_list[idx]);
    for (auto& p : parallelepiped_points(gens))
      if (!p.is_zero()) candidates.insert(std::move(p));
  }

  std::vector<LatticeVector> basis;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      if (y == x) continue;
      if (in_cone((x - y).coords(), normals)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  sort_graded(basis);
  return basis;
}

ValidationReport AffineSemigroup::validate(std::size_t rank, std::span<const LatticeVector> generators) {
  return analyze(rank, generators).report;
}

AffineSemigroup AffineSemigroup::build(std::size_t rank, std::vector<LatticeVector> generators) {
  Analysis a = analyze(rank, generators);
  if (!a.report.valid()) {
    std::vector<Integer> witness;
    if (a.report.saturation_witness) witness = a.report.saturation_witness->coords();
    fail(ErrorKind::invalid_input, a.report.message, witness);
  }
  AffineSemigroup s;
  s.rank_ = rank;
  s.generators_ = std::move(generators);
  s.dual_rays_ = std::move(a.dual);
  s.ray_generators_ = std::move(a.rays);
  s.hilbert_basis_ = std::move(a.hilbert);
  return s;
}

AffineSemigroup AffineSemigroup::first_octant(std::size_t rank) {
  std::vector<LatticeVector> units;
  for (std::size_t i = 0; i < rank; ++i) units.push_back(LatticeVector::unit(rank, i));
  return build(rank, std::move(units));
}

bool AffineSemigroup::contains(const LatticeVector& m) const {
  if (m.size() != rank_) return false;
  for (const auto& rho : dual_rays_)
    if (pairing(m, rho) < 0) return false;
  return true;
}

bool AffineSemigroup::is_simplicial() const { return ray_generators_.size() == rank_; }

bool AffineSemigroup::is_first_octant() const {
  if (!is_simplicial()) return false;
  if (rank_ > 0 && abs(determinant(rows_matrix(std::span<const LatticeVector>(ray_generators_), rank_))) != 1)
    return false;
  return hilbert_basis_ == ray_generators_;
}

bool member(const AffineSemigroup& s, const LatticeVector& m) { return s.contains(m); }

const std::vector<LatticeVector>& hilbert_basis(const AffineSemigroup& s) { return s.hilbert_basis(); }

bool Face::contains(const AffineSemigroup& s, const LatticeVector& m) const {
  if (!s.contains(m)) return false;
  for (const auto& rho : defining)
    if (pairing(m, rho) != 0) return false;
  return true;
}

CompleteFlag complete_flag(const AffineSemigroup& s) {
  const std::size_t n = s.rank();
  CompleteFlag flag;
  flag.faces.resize(n + 1);
  flag.faces[n] = Face{{}, s.ray_generators(), n};
  for (std::size_t i = n; i-- > 0;) {
    const Face& cur = flag.faces[i + 1];
    bool found = false;
    for (const auto& rho : s.dual_rays()) {
      if (std::find(cur.defining.begin(), cur.defining.end(), rho) != cur.defining.end()) continue;
      std::vector<LatticeVector> sub;
      std::vector<Vec> rows;
      for (const auto& r : cur.rays)
        if (pairing(r, rho) == 0) {
          sub.push_back(r);
          rows.push_back(r.coords());
        }
      if (rank_of(rows, n) != i) continue;
      Face f{cur.defining, std::move(sub), i};
      f.defining.push_back(rho);
      flag.faces[i] = std::move(f);
      found = true;
      break;
    }
    if (!found) fail(ErrorKind::internal, "no facet drops the face rank to " + std::to_string(i));
  }
  return flag;
}

UpperTriangularPair upper_triangular_pair(const AffineSemigroup& s, const CompleteFlag& flag) {
  const std::size_t n = s.rank();
  if (flag.faces.size() != n + 1) fail(ErrorKind::precondition, "flag length does not match rank");
  UpperTriangularPair pair;
  for (std::size_t i = 1; i <= n; ++i) {
    const Face& prev = flag.faces[i - 1];
    const Face& cur = flag.faces[i];
    std::optional<LatticeVector> mu;
    for (const auto& r : cur.rays)  // graded order inherited from S(1)
      if (std::find(prev.rays.begin(), prev.rays.end(), r) == prev.rays.end()) {
        mu = r;
        break;
      }
    if (!mu) fail(ErrorKind::precondition, "flag is not strictly increasing");
    std::optional<DualVector> rho;
    for (const auto& d : s.dual_rays()) {
      bool vanishes = true;
      for (const auto& r : prev.rays)
        if (pairing(r, d) != 0) {
          vanishes = false;
          break;
        }
      if (vanishes && pairing(*mu, d) > 0) {
        rho = d;
        break;
      }
    }
    if (!rho) fail(ErrorKind::internal, "no dual ray separates " + to_string(*mu));
    pair.mus.push_back(*mu);
    pair.rhos.push_back(*rho);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (pairing(pair.mus[i], pair.rhos[i]) <= 0) fail(ErrorKind::internal, "upper triangular pair: zero diagonal");
    for (std::size_t j = 0; j < i; ++j)
      if (pairing(pair.mus[j], pair.rhos[i]) != 0)
        fail(ErrorKind::internal, "upper triangular pair: nonzero below diagonal");
  }
  return pair;
}

}  // namespace monoalg
