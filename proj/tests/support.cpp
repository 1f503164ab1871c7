#include "support.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>

namespace bf {

Vec from(const monoalg::LatticeVector& v) {
  Vec out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

Vec from(const monoalg::DualVector& v) {
  Vec out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

monoalg::LatticeVector lattice(const Vec& v) {
  std::vector<monoalg::Integer> c;
  for (long long x : v) c.emplace_back(static_cast<long>(x));
  return monoalg::LatticeVector(std::move(c));
}

std::string str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

long long dot(const Vec& a, const Vec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long long det(const std::vector<Vec>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    long long term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= rows[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::size_t rank(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size(), n = rows[0].size();
  std::vector<std::vector<__int128>> a(m, std::vector<__int128>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      const __int128 f = a[i][c], g = a[r][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] = a[i][j] * g - a[r][j] * f;
      __int128 h = 0;
      for (auto x : a[i]) {
        __int128 y = x < 0 ? -x : x;
        while (y != 0) {
          const __int128 t = h % y;
          h = y;
          y = t;
        }
      }
      if (h > 1)
        for (auto& x : a[i]) x /= h;
    }
    ++r;
  }
  return r;
}

std::vector<Vec> box(std::size_t n, long long lo, long long hi) {
  std::vector<Vec> out;
  Vec cur(n, lo);
  if (n == 0) return {Vec{}};
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < n && cur[i] == hi) cur[i++] = lo;
    if (i == n) break;
    ++cur[i];
  }
  return out;
}

std::vector<Vec> facets(const std::vector<Vec>& gens, long long b) {
  const std::size_t n = gens.at(0).size();
  std::vector<Vec> out;
  for (const Vec& p : box(n, -b, b)) {
    long long g = 0;
    for (long long x : p) g = std::gcd(g, std::llabs(x));
    if (g != 1) continue;
    std::vector<Vec> tight;
    bool ok = true;
    for (const Vec& v : gens) {
      const long long d = dot(p, v);
      if (d < 0) ok = false;
      if (d == 0) tight.push_back(v);
    }
    if (ok && n >= 1 && rank(tight) + 1 == n) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_cone(const std::vector<Vec>& normals, const Vec& m) {
  return std::all_of(normals.begin(), normals.end(), [&](const Vec& p) { return dot(p, m) >= 0; });
}

Vec grading(const std::vector<Vec>& gens) {
  const std::size_t n = gens.at(0).size();
  for (long long b = 1; b < 8; ++b)
    for (const Vec& w : box(n, -b, b))
      if (std::all_of(gens.begin(), gens.end(), [&](const Vec& g) { return dot(w, g) > 0; })) return w;
  std::abort();
}

std::set<Vec> generated(const std::vector<Vec>& gens, long long max_deg) {
  const Vec w = grading(gens);
  std::set<Vec> seen{Vec(gens.at(0).size(), 0)};
  std::queue<Vec> todo;
  todo.push(*seen.begin());
  while (!todo.empty()) {
    const Vec x = todo.front();
    todo.pop();
    for (const Vec& g : gens) {
      Vec y = x;
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += g[i];
      if (dot(w, y) > max_deg || seen.count(y)) continue;
      seen.insert(y);
      todo.push(y);
    }
  }
  return seen;
}

std::vector<Vec> hilbert_basis(const std::vector<Vec>& gens) {
  const std::size_t n = gens.at(0).size();
  const std::vector<Vec> normals = facets(gens);
  Vec lo(n, 0), hi(n, 0);
  for (const Vec& g : gens)
    for (std::size_t i = 0; i < n; ++i) (g[i] < 0 ? lo[i] : hi[i]) += g[i];
  long long l = 0, h = 0;
  for (std::size_t i = 0; i < n; ++i) l = std::min(l, lo[i]), h = std::max(h, hi[i]);
  std::vector<Vec> pts;
  for (const Vec& x : box(n, l, h)) {
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) inside = inside && x[i] >= lo[i] && x[i] <= hi[i];
    if (inside && in_cone(normals, x) && std::any_of(x.begin(), x.end(), [](long long c) { return c != 0; }))
      pts.push_back(x);
  }
  std::vector<Vec> out;
  for (const Vec& x : pts) {
    bool reducible = false;
    for (const Vec& y : pts) {
      if (y == x) continue;
      Vec d = x;
      for (std::size_t i = 0; i < n; ++i) d[i] -= y[i];
      if (in_cone(normals, d)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(x);
  }
  return out;
}

bool in_supp(const std::vector<Vec>& normals, const std::vector<Vec>& ideal_gens, const Vec& m) {
  if (!in_cone(normals, m)) return false;
  for (const Vec& a : ideal_gens) {
    Vec d = m;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= a[i];
    if (in_cone(normals, d)) return true;
  }
  return false;
}

long long parallelepiped_count(const std::vector<Vec>& basis) {
  const std::size_t n = basis.size();
  const long long d = det(basis);
  // adj[i][j] = cofactor(j, i), so that x * B^{-1} = x * adj / d with x a row vector.
  std::vector<Vec> adj(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Vec> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        Vec row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(basis[r][c]);
        minor.push_back(row);
      }
      adj[i][j] = ((i + j) % 2 ? -1 : 1) * det(minor);
    }
  Vec lo(n, 0), hi(n, 0);
  for (const Vec& b : basis)
    for (std::size_t i = 0; i < n; ++i) (b[i] < 0 ? lo[i] : hi[i]) += b[i];
  long long count = 0;
  Vec x = lo;
  while (true) {
    bool inside = true;
    for (std::size_t j = 0; j < n && inside; ++j) {
      long long c = 0;
      for (std::size_t i = 0; i < n; ++i) c += x[i] * adj[i][j];
      if (d < 0) c = -c;
      inside = c >= 0 && c < std::llabs(d);
    }
    count += inside;
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) x[i] = lo[i], ++i;
    if (i == n) break;
    ++x[i];
  }
  return count;
}

monoalg::RationalMatrix rat(std::initializer_list<std::initializer_list<long>> rows) {
  return monoalg::to_rational(monoalg::IntMatrix(rows));
}

}  // namespace bf
