#include "monoalg/lattice.hpp"

#include <cstdlib>

namespace monoalg {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Integer pairing(const LatticeVector& m, const DualVector& p) {
  if (m.size() != p.size()) fail(ErrorKind::invalid_input, "pairing of vectors of different rank");
  Integer s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * p[i];
  return s;
}

Rational pairing(const LatticeVector& m, const RationalDualVector& p) {
  if (m.size() != p.size()) fail(ErrorKind::invalid_input, "pairing of vectors of different rank");
  Rational s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += Rational(m[i]) * p[i];
  return s;
}

bool graded_less(const LatticeVector& a, const LatticeVector& b) {
  const Integer sa = a.sum();
  const Integer sb = b.sum();
  if (sa != sb) return sa < sb;
  return a < b;
}

void sort_graded(std::vector<LatticeVector>& v) { std::sort(v.begin(), v.end(), graded_less); }

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const RationalDualVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::vector<Integer> primitive(std::vector<Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

RationalMatrix to_rational(const IntMatrix& a) {
  RationalMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  return r;
}

// ---------------------------------------------------------------------------

HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  HermiteForm out{a, IntMatrix::identity(m), 0};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h(i, c) == 0) continue;
        if (best == m || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == m) break;
      have_pivot = true;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool reduced = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        const Integer q = trunc_div(h(i, c), h(r, c));
        h.add_row(i, r, -q);
        u.add_row(i, r, -q);
        if (h(i, c) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (!have_pivot) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(h(i, c), h(r, c));
      if (q == 0) continue;
      h.add_row(i, r, -q);
      u.add_row(i, r, -q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm out{a, IntMatrix::identity(m), IntMatrix::identity(n), 0};
  IntMatrix& d = out.D;
  IntMatrix& u = out.U;
  IntMatrix& v = out.V;

  const std::size_t k = std::min(m, n);
  std::size_t t = 0;
  for (; t < k; ++t) {
    bool found_any = false;
    for (;;) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (bi == m || abs(d(i, j)) < abs(d(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m) break;
      found_any = true;
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = trunc_div(d(i, t), d(t, t));
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = trunc_div(d(t, j), d(t, t));
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row(t, i, 1);
            u.add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (!found_any) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  out.rank = t;
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::invalid_input, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer x = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = x;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) { return hermite_normal_form(a).rank; }

IntMatrix pairing_matrix(std::span<const LatticeVector> mus, std::span<const DualVector> rhos) {
  if (mus.size() != rhos.size()) fail(ErrorKind::invalid_input, "pairing matrix size mismatch");
  const std::size_t n = mus.size();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (mus[j].size() != n || rhos[i].size() != n)
        fail(ErrorKind::invalid_input, "pairing matrix size mismatch");
      a(i, j) = pairing(mus[j], rhos[i]);
    }
  }
  return a;
}

bool verify_det_index(std::span<const LatticeVector> mus, std::span<const DualVector> rhos) {
  const auto im = sublattice_index(mus);
  const auto in = sublattice_index(rhos);
  if (!im || !in || mus.size() != mus.front().size() || rhos.size() != rhos.front().size())
    fail(ErrorKind::precondition, "not linearly independent");
  const Integer det = determinant(pairing_matrix(mus, rhos));
  return (*im) * (*in) == abs(det);
}

// ---------------------------------------------------------------------------

EchelonForm rref(const RationalMatrix& a) {
  RationalMatrix m = a;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  RationalMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
  return {std::move(out), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& a) { return rref(a).pivots.size(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a) {
  const EchelonForm e = rref(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.R(i, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::invalid_input, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const EchelonForm e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.R(i, n + j);
  return inv;
}

std::vector<RationalDualVector> echelon_basis(const std::vector<RationalDualVector>& vs, std::size_t n) {
  RationalMatrix m(vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
  const EchelonForm e = rref(m);
  std::vector<RationalDualVector> out;
  for (std::size_t i = 0; i < e.R.rows(); ++i) {
    std::vector<Rational> row(e.R.row(i).begin(), e.R.row(i).end());
    out.emplace_back(std::move(row));
  }
  return out;
}

}  // namespace monoalg
