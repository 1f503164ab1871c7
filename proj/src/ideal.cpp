#include "monoalg/ideal.hpp"

#include <deque>
#include <set>

namespace monoalg {

namespace {

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::vector<LatticeVector> minimalize(const AffineSemigroup& s, std::vector<LatticeVector> gens) {
  sort_graded(gens);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<LatticeVector> out;
  for (const auto& a : gens) {
    bool redundant = false;
    for (const auto& b : gens)
      if (b != a && s.contains(a - b)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(a);
  }
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(AffineSemigroup s, std::vector<LatticeVector> generators) : s_(std::move(s)) {
  for (const auto& a : generators) {
    if (a.size() != s_.rank())
      fail(ErrorKind::invalid_input, "ideal generator " + to_string(a) + " has wrong length");
    if (!s_.contains(a))
      fail(ErrorKind::invalid_input, "ideal generator " + to_string(a) + " is not a semigroup element",
           a.coords());
  }
  gens_ = minimalize(s_, std::move(generators));
}

bool MonomialIdeal::in_supp(const LatticeVector& m) const {
  if (!s_.contains(m)) return false;
  for (const auto& a : gens_)
    if (s_.contains(m - a)) return true;
  return false;
}

bool MonomialIdeal::supp_contains(const LatticeVector& m) const {
  if (!s_.contains(m)) fail(ErrorKind::invalid_input, "not a semigroup element: " + to_string(m), m.coords());
  return in_supp(m);
}

CofinitenessCertificate is_cofinite(const MonomialIdeal& ideal) {
  const AffineSemigroup& s = ideal.semigroup();
  CofinitenessCertificate cert;
  cert.cofinite = true;
  for (const auto& mu : s.ray_generators()) {
    std::optional<Integer> best;
    for (const auto& a : ideal.generators()) {
      bool feasible = true;
      Integer k = 1;
      for (const auto& rho : s.dual_rays()) {
        const Integer rm = pairing(mu, rho);
        const Integer ra = pairing(a, rho);
        if (rm == 0) {
          if (ra > 0) {
            feasible = false;
            break;
          }
        } else {
          k = std::max(k, ceil_div(ra, rm));
        }
      }
      if (feasible && (!best || k < *best)) best = k;
    }
    if (!best) {
      cert.cofinite = false;
      cert.multiples.clear();
      cert.failing_ray = mu;
      return cert;
    }
    cert.multiples.emplace_back(mu, *best);
  }
  return cert;
}

std::optional<Integer> first_escape(const MonomialIdeal& ideal, const LatticeVector& m, const LatticeVector& alpha) {
  const AffineSemigroup& s = ideal.semigroup();
  std::optional<Integer> best;
  for (const auto& a : ideal.generators()) {
    // rho(m - a) + l * rho(alpha) >= 0 for every dual ray, with l >= 0.
    Integer lo = 0;
    std::optional<Integer> hi;
    bool feasible = true;
    for (const auto& rho : s.dual_rays()) {
      const Integer c = pairing(m - a, rho);
      const Integer d = pairing(alpha, rho);
      if (d == 0) {
        if (c < 0) {
          feasible = false;
          break;
        }
      } else if (d > 0) {
        lo = std::max(lo, ceil_div(-c, d));
      } else {
        const Integer u = floor_div(c, -d);
        hi = hi ? std::min(*hi, u) : u;
      }
    }
    if (!feasible || (hi && *hi < lo)) continue;
    if (!best || lo < *best) best = lo;
  }
  return best;
}

std::optional<Integer> smallest_multiple_in_supp(const MonomialIdeal& ideal, const LatticeVector& alpha) {
  if (alpha.is_zero()) {
    if (ideal.in_supp(alpha)) return Integer(1);
    return std::nullopt;
  }
  auto l = first_escape(ideal, alpha, alpha);  // alpha + l*alpha, l >= 0
  if (!l) return std::nullopt;
  return *l + 1;
}

ComplementBasis::ComplementBasis(std::vector<LatticeVector> elements) : elements_(std::move(elements)) {
  sort_graded(elements_);
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<std::size_t> ComplementBasis::index_of(const LatticeVector& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ComplementBasis complement(const MonomialIdeal& ideal, std::size_t max_size) {
  const AffineSemigroup& s = ideal.semigroup();
  const auto cert = is_cofinite(ideal);
  if (!cert.cofinite)
    fail(ErrorKind::precondition, "complement infinite: no multiple of ray " + to_string(*cert.failing_ray) +
                                      " lies in the ideal",
         cert.failing_ray->coords());

  const LatticeVector zero(s.rank());
  std::vector<LatticeVector> found;
  if (ideal.in_supp(zero)) return ComplementBasis{};
  std::set<LatticeVector> seen{zero};
  std::deque<LatticeVector> queue{zero};
  while (!queue.empty()) {
    LatticeVector m = std::move(queue.front());
    queue.pop_front();
    found.push_back(m);
    if (found.size() > max_size)
      fail(ErrorKind::precondition,
           "complement has more than " + std::to_string(max_size) + " elements (raise MONOALG_MAX_DIM)");
    for (const auto& h : s.hilbert_basis()) {
      LatticeVector next = m + h;
      if (seen.count(next) || ideal.in_supp(next)) continue;
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
  return ComplementBasis(std::move(found));
}

bool is_full(const MonomialIdeal& ideal) {
  for (const auto& mu : ideal.semigroup().ray_generators())
    if (ideal.in_supp(mu)) return false;
  return true;
}

LatticeVector Fullification::to_original(const LatticeVector& m) const {
  if (m.size() != embedding.rows()) fail(ErrorKind::invalid_input, "vector length does not match fullified rank");
  LatticeVector out(embedding.cols());
  for (std::size_t i = 0; i < embedding.rows(); ++i)
    for (std::size_t j = 0; j < embedding.cols(); ++j) out[j] += m[i] * embedding(i, j);
  return out;
}

Fullification fullify(const MonomialIdeal& ideal, std::size_t max_size) {
  const AffineSemigroup& s = ideal.semigroup();
  const std::size_t n = s.rank();
  if (is_full(ideal)) {
    const ComplementBasis c = complement(ideal, max_size);  // surfaces the non-cofinite error
    (void)c;
    return Fullification{s, ideal, IntMatrix::identity(n), false};
  }
  const ComplementBasis c = complement(ideal, max_size);
  std::vector<LatticeVector> nonzero;
  for (const auto& m : c.elements())
    if (!m.is_zero()) nonzero.push_back(m);

  if (nonzero.empty()) {
    AffineSemigroup trivial = AffineSemigroup::build(0, {});
    MonomialIdeal zero_ideal(trivial, {});
    return Fullification{trivial, zero_ideal, IntMatrix(0, n), true};
  }

  const HermiteForm hnf = hermite_normal_form(rows_matrix(std::span<const LatticeVector>(nonzero), n));
  const std::size_t r = hnf.rank;
  IntMatrix basis(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = hnf.H(i, j);

  // Coordinates of x in the basis: solve y * basis = x via the pivot columns of the echelon form.
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0, j = 0; i < r; ++i) {
    while (basis(i, j) == 0) ++j;
    pivots.push_back(j);
  }
  auto coords = [&](const LatticeVector& x) {
    LatticeVector rest = x;
    LatticeVector y(r);
    for (std::size_t i = 0; i < r; ++i) {
      const Integer& p = basis(i, pivots[i]);
      if (!mpz_divisible_p(rest[pivots[i]].get_mpz_t(), p.get_mpz_t()))
        fail(ErrorKind::internal, "complement element outside its own span");
      y[i] = rest[pivots[i]] / p;
      for (std::size_t j = 0; j < n; ++j) rest[j] -= y[i] * basis(i, j);
    }
    if (!rest.is_zero()) fail(ErrorKind::internal, "complement element outside its own span");
    return y;
  };

  std::vector<LatticeVector> new_gens;
  for (const auto& m : nonzero) new_gens.push_back(coords(m));
  AffineSemigroup s2 = AffineSemigroup::build(r, new_gens);

  std::set<LatticeVector> comp2;
  for (const auto& m : c.elements()) comp2.insert(coords(m));
  std::vector<LatticeVector> ideal_gens;
  for (const auto& m : comp2)
    for (const auto& h : s2.hilbert_basis()) {
      LatticeVector x = m + h;
      if (!comp2.count(x)) ideal_gens.push_back(std::move(x));
    }
  MonomialIdeal i2(s2, std::move(ideal_gens));
  return Fullification{std::move(s2), std::move(i2), std::move(basis), true};
}

}  // namespace monoalg
