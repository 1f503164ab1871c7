#include "monoalg/oracle.hpp"

#include <numeric>

namespace monoalg {

namespace {

using Term = std::pair<std::size_t, Rational>;
using Equation = std::vector<Term>;

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

Equation normalize(Equation eq) {
  std::sort(eq.begin(), eq.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  Equation out;
  for (auto& t : eq) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.second == 0; }), out.end());
  return out;
}

}  // namespace

DerivationSpace all_derivations(const QuotientAlgebra& q) {
  const std::size_t d = q.dim();
  const std::size_t vars = d * d;
  auto var = [d](std::size_t row, std::size_t col) { return row * d + col; };

  std::vector<Equation> equations;
  for (std::size_t k = 0; k < d; ++k) equations.push_back({{var(k, 0), 1}});  // D(1) = 0
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      // Row k of D(e_i e_j) - D(e_i) e_j - e_i D(e_j).
      std::vector<Equation> rows(d);
      if (auto l = q.product(i, j))
        for (std::size_t k = 0; k < d; ++k) rows[k].emplace_back(var(k, *l), 1);
      for (std::size_t r = 0; r < d; ++r) {
        if (auto k = q.product(r, j)) rows[*k].emplace_back(var(r, i), -1);
        if (auto k = q.product(i, r)) rows[*k].emplace_back(var(r, j), -1);
      }
      for (auto& eq : rows) {
        eq = normalize(std::move(eq));
        if (!eq.empty()) equations.push_back(std::move(eq));
      }
    }

  // The system splits into independent blocks (one per degree); solve each block densely.
  std::vector<std::size_t> parent(vars);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& eq : equations)
    for (std::size_t t = 1; t < eq.size(); ++t) parent[find(parent, eq[t].first)] = find(parent, eq[0].first);

  std::map<std::size_t, std::vector<std::size_t>> blocks;  // root -> variables, ascending
  for (std::size_t v = 0; v < vars; ++v) blocks[find(parent, v)].push_back(v);
  std::map<std::size_t, std::vector<const Equation*>> block_eqs;
  for (const auto& eq : equations) block_eqs[find(parent, eq[0].first)].push_back(&eq);

  std::vector<std::pair<std::size_t, RationalMatrix>> found;  // (leading free variable, matrix)
  for (const auto& [root, vs] : blocks) {
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = i;
    const auto& eqs = block_eqs[root];
    RationalMatrix m(eqs.size(), vs.size());
    for (std::size_t r = 0; r < eqs.size(); ++r)
      for (const auto& [v, c] : *eqs[r]) m(r, local[v]) = c;
    for (const auto& sol : nullspace(m)) {
      RationalMatrix dm(d, d);
      std::size_t lead = vars;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (sol[i] == 0) continue;
        dm(vs[i] / d, vs[i] % d) = sol[i];
        if (sol[i] == 1 && lead == vars) lead = vs[i];
      }
      found.emplace_back(lead, std::move(dm));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  DerivationSpace out;
  for (auto& f : found) out.basis.push_back(std::move(f.second));
  return out;
}

bool satisfies_leibniz(const QuotientAlgebra& q, const RationalMatrix& dm) {
  const std::size_t d = q.dim();
  if (dm.rows() != d || dm.cols() != d) return false;
  for (std::size_t k = 0; k < d; ++k)
    if (dm(k, 0) != 0) return false;
  std::vector<std::vector<Rational>> cols(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) cols[i][k] = dm(k, i);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      std::vector<Rational> ei(d, 0), ej(d, 0), lhs(d, 0);
      ei[i] = 1;
      ej[j] = 1;
      if (auto l = q.product(i, j)) lhs = cols[*l];
      std::vector<Rational> rhs = q.multiply(cols[i], ej);
      const std::vector<Rational> second = q.multiply(ei, cols[j]);
      for (std::size_t k = 0; k < d; ++k) rhs[k] += second[k];
      if (lhs != rhs) return false;
    }
  return true;
}

std::map<LatticeVector, RationalMatrix> graded_components(const QuotientAlgebra& q, const RationalMatrix& dm) {
  const std::size_t d = q.dim();
  std::map<LatticeVector, RationalMatrix> out;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      if (dm(r, c) == 0) continue;
      const LatticeVector alpha = q.basis()[r] - q.basis()[c];
      auto it = out.find(alpha);
      if (it == out.end()) it = out.emplace(alpha, RationalMatrix(d, d)).first;
      it->second(r, c) = dm(r, c);
    }
  return out;
}

std::map<LatticeVector, std::size_t> homogeneous_lnd_dims(const QuotientAlgebra& q) {
  return homogeneous_lnd_dims(q, all_derivations(q));
}

std::map<LatticeVector, std::size_t> homogeneous_lnd_dims(const QuotientAlgebra& q, const DerivationSpace& der) {
  const std::size_t d = q.dim();
  std::map<LatticeVector, std::vector<RationalMatrix>> pieces;
  for (const auto& dm : der.basis)
    for (auto& [alpha, comp] : graded_components(q, dm)) pieces[alpha].push_back(std::move(comp));

  std::map<LatticeVector, std::size_t> out;
  for (const auto& [alpha, mats] : pieces) {
    RationalMatrix flat(mats.size(), d * d);
    for (std::size_t i = 0; i < mats.size(); ++i)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) flat(i, r * d + c) = mats[i](r, c);
    const std::size_t dim = rank(flat);
    if (alpha.is_zero()) {
      // Degree 0 acts diagonally: semisimple, so the only nilpotent element is 0.
      for (const auto& m : mats)
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c)
            if (r != c && m(r, c) != 0) fail(ErrorKind::internal, "degree-0 derivation is not diagonal");
      out[alpha] = 0;
      continue;
    }
    for (const auto& m : mats)
      if (!is_nilpotent(m)) fail(ErrorKind::internal, "homogeneous derivation of degree " + to_string(alpha) +
                                                          " is not nilpotent");
    out[alpha] = dim;
  }
  return out;
}

std::vector<DegreeComparison> GradedComparisonReport::mismatches() const {
  std::vector<DegreeComparison> out;
  for (const auto& c : degrees)
    if (!c.match) out.push_back(c);
  return out;
}

GradedComparisonReport compare_with_classification(const QuotientAlgebra& q) {
  const DerivationSpace der = all_derivations(q);
  const auto oracle = homogeneous_lnd_dims(q, der);
  std::map<LatticeVector, std::size_t> classified;
  for (const auto& r : lnd_degrees(q.ideal())) classified[r.alpha] = r.effective_dim;

  std::map<LatticeVector, DegreeComparison> merged;
  for (const auto& [alpha, dim] : oracle) {
    auto& c = merged[alpha];
    c.alpha = alpha;
    c.oracle_dim = dim;
  }
  for (const auto& [alpha, dim] : classified) {
    auto& c = merged[alpha];
    c.alpha = alpha;
    c.classified_dim = dim;
  }

  GradedComparisonReport report;
  report.derivation_dim = der.dim();
  for (auto& [alpha, c] : merged) {
    c.match = c.oracle_dim == c.classified_dim;
    if (c.oracle_dim > c.classified_dim) report.extras.push_back(alpha);
    report.degrees.push_back(c);
  }
  std::sort(report.degrees.begin(), report.degrees.end(),
            [](const DegreeComparison& a, const DegreeComparison& b) { return graded_less(a.alpha, b.alpha); });
  sort_graded(report.extras);
  return report;
}

GradedComparisonReport compare_with_classification(const MonomialIdeal& ideal, std::size_t max_dim) {
  return compare_with_classification(QuotientAlgebra::build(ideal, max_dim));
}

MonomialIdeal random_full_cofinite_ideal(std::mt19937_64& rng, std::size_t rank, std::size_t max_complement) {
  if (rank == 0) fail(ErrorKind::invalid_input, "random ideals need rank >= 1");
  const AffineSemigroup s = AffineSemigroup::first_octant(rank);
  const long top = rank == 1 ? 12 : rank == 2 ? 8 : 5;
  std::uniform_int_distribution<long> power(2, top);
  std::uniform_int_distribution<long> coord(0, top - 1);
  std::uniform_int_distribution<int> extra(0, 3);
  for (;;) {
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < rank; ++i) {
      LatticeVector a(rank);
      a[i] = power(rng);
      gens.push_back(std::move(a));
    }
    for (int k = extra(rng); k > 0; --k) {
      LatticeVector a(rank);
      for (std::size_t i = 0; i < rank; ++i) a[i] = coord(rng);
      if (a.sum() >= 2) gens.push_back(std::move(a));
    }
    MonomialIdeal ideal(s, std::move(gens));
    try {
      if (complement(ideal, max_complement).size() <= max_complement) return ideal;
    } catch (const Error&) {
      // too large; draw again
    }
  }
}

}  // namespace monoalg
