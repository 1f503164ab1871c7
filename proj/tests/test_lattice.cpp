#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace monoalg;

TEST_SUITE("lattice") {

TEST_CASE("hermite normal form") {
  SUBCASE("already reduced") {
    const IntMatrix a{{2, 0}, {0, 3}};
    const auto h = hermite_normal_form(a);
    CHECK(h.H == a);
    CHECK(h.U == IntMatrix::identity(2));
  }
  SUBCASE("zero row") {
    const auto h = hermite_normal_form(IntMatrix{{0, 0}});
    CHECK(h.H == IntMatrix{{0, 0}});
    CHECK(h.rank == 0);
  }
  SUBCASE("defining identities on random input") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> e(-6, 6);
    for (int k = 0; k < 200; ++k) {
      const std::size_t r = 1 + k % 4, c = 1 + (k / 4) % 4;
      IntMatrix a(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a(i, j) = e(rng);
      const auto h = hermite_normal_form(a);
      REQUIRE(h.H == h.U * a);
      REQUIRE(abs(determinant(h.U)) == 1);
      // pivots positive, increasing, entries above reduced
      std::size_t col = 0;
      for (std::size_t i = 0; i < h.rank; ++i) {
        while (h.H(i, col) == 0) ++col;
        REQUIRE(h.H(i, col) > 0);
        for (std::size_t i2 = 0; i2 < i; ++i2) REQUIRE((h.H(i2, col) >= 0 && h.H(i2, col) < h.H(i, col)));
        for (std::size_t i2 = i + 1; i2 < r; ++i2) REQUIRE(h.H(i2, col) == 0);
        ++col;
      }
      for (std::size_t i = h.rank; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) REQUIRE(h.H(i, j) == 0);
    }
  }
  SUBCASE("[[1,1],[1,0]]") {
    const IntMatrix a{{1, 1}, {1, 0}};
    const auto h = hermite_normal_form(a);
    CHECK(h.H == h.U * a);
    CHECK(h.H(1, 0) == 0);
    CHECK(h.H == IntMatrix::identity(2));
  }
}

TEST_CASE("smith normal form") {
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal() == std::vector<Integer>{1, 6});
  CHECK(smith_normal_form(IntMatrix::identity(3)).D == IntMatrix::identity(3));
  const auto s = smith_normal_form(IntMatrix{{2, 4}, {0, 0}});
  CHECK(s.diagonal() == std::vector<Integer>{2, 0});
  CHECK(s.rank == 1);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> e(-9, 9);
  for (int k = 0; k < 200; ++k) {
    const std::size_t r = 1 + k % 3, c = 1 + (k / 3) % 4;
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = e(rng);
    const auto f = smith_normal_form(a);
    REQUIRE(f.D == f.U * a * f.V);
    REQUIRE(abs(determinant(f.U)) == 1);
    REQUIRE(abs(determinant(f.V)) == 1);
    const auto d = f.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      REQUIRE(d[i] >= 0);
      if (d[i] != 0) REQUIRE(d[i + 1] % d[i] == 0);
      else REQUIRE(d[i + 1] == 0);
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) REQUIRE(f.D(i, j) == 0);
  }
}

TEST_CASE("determinant and rank agree with brute force") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> e(-5, 5);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + k % 4;
    IntMatrix a(n, n);
    std::vector<bf::Vec> rows(n, bf::Vec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const long x = (k % 5 == 0 && i == n - 1) ? 2 * rows[0][j] : e(rng);
        a(i, j) = x;
        rows[i][j] = x;
      }
    REQUIRE(determinant(a) == static_cast<long>(bf::det(rows)));
    REQUIRE(rank(a) == bf::rank(rows));
    REQUIRE(rank(to_rational(a)) == bf::rank(rows));
  }
}

TEST_CASE("rational linear algebra") {
  const RationalMatrix a = bf::rat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  for (std::size_t i = 0; i < 3; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += a(i, j) * ns[0][j];
    CHECK(s == 0);
  }
  CHECK_FALSE(inverse(a).has_value());

  const RationalMatrix b = bf::rat({{2, 1}, {7, 4}});
  const auto inv = inverse(b);
  REQUIRE(inv.has_value());
  CHECK(*inv * b == RationalMatrix::identity(2));
  CHECK(*inv == bf::rat({{4, -1}, {-7, 2}}));

  const auto e = rref(bf::rat({{0, 2, 4}, {1, 1, 1}}));
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.R == bf::rat({{1, 0, -1}, {0, 1, 2}}));

  const auto basis = echelon_basis({RationalDualVector{2, 4}, RationalDualVector{1, 2}}, 2);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == RationalDualVector{1, 2});
}

TEST_CASE("sublattice index") {
  const std::vector<LatticeVector> std2 = {{1, 0}, {0, 1}};
  const std::vector<LatticeVector> twice = {{2, 0}, {0, 1}};
  const std::vector<LatticeVector> line = {{1, 0}};
  CHECK(sublattice_index<LatticeTag>(std2) == Integer(1));
  CHECK(sublattice_index<LatticeTag>(twice) == Integer(2));
  CHECK_FALSE(sublattice_index<LatticeTag>(line).has_value());
}

TEST_CASE("pairing matrix and det-index") {
  const std::vector<LatticeVector> e = {{1, 0}, {0, 1}};
  const std::vector<DualVector> es = {{1, 0}, {0, 1}};
  CHECK(pairing_matrix(e, es) == IntMatrix::identity(2));

  const std::vector<LatticeVector> b = {{1, 0}, {1, 1}};
  const std::vector<DualVector> bs = {{0, 1}, {1, 0}};
  CHECK(pairing_matrix(b, bs) == IntMatrix{{0, 1}, {1, 1}});

  const std::vector<LatticeVector> b2 = {{2, 0}, {0, 1}};
  CHECK(pairing_matrix(b2, es) == IntMatrix{{2, 0}, {0, 1}});
  CHECK(verify_det_index(e, es));
  CHECK(verify_det_index(b2, es));

  const std::vector<LatticeVector> dep = {{1, 1}, {2, 2}};
  try {
    verify_det_index(dep, es);
    FAIL("dependent input accepted");
  } catch (const Error& err) {
    CHECK(std::string(err.what()).find("not linearly independent") != std::string::npos);
    CHECK(err.kind() == ErrorKind::precondition);
  }
}

TEST_CASE("pairing is bilinear") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> e(-50, 50);
  for (int k = 0; k < 200; ++k) {
    const LatticeVector m{e(rng), e(rng), e(rng)}, m2{e(rng), e(rng), e(rng)};
    const DualVector p{e(rng), e(rng), e(rng)};
    REQUIRE(pairing(m + m2, p) == pairing(m, p) + pairing(m2, p));
    REQUIRE(pairing(m, p) == static_cast<long>(bf::dot(bf::from(m), bf::from(p))));
  }
}

TEST_CASE("graded order and primitive vectors") {
  std::vector<LatticeVector> v = {{1, 1}, {0, 2}, {2, -1}, {0, 0}, {1, 0}, {0, 1}};
  sort_graded(v);
  CHECK(v == std::vector<LatticeVector>{{0, 0}, {0, 1}, {1, 0}, {2, -1}, {0, 2}, {1, 1}});
  CHECK(primitive({4, -6, 2}) == std::vector<Integer>{2, -3, 1});
  CHECK(primitive({0, 0}) == std::vector<Integer>{0, 0});
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("big integers do not overflow") {
  IntMatrix a{{1, 0}, {0, 1}};
  a(0, 0) = Integer("123456789012345678901234567890");
  a(1, 1) = Integer("987654321098765432109876543210");
  CHECK(determinant(a) == Integer("121932631137021795226185032733622923332237463801111263526900"));
}

}  // TEST_SUITE
