#pragma once

// Exact integer and rational linear algebra over M = Z^n and its dual N.
//
// Everything here is arbitrary precision (GMP); there is no floating point in
// the library.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "monoalg/error.hpp"

namespace monoalg {

using Integer = mpz_class;
using Rational = mpq_class;

struct LatticeTag;
struct DualTag;

/// Integer vector living in a fixed lattice; the tag keeps M and N apart.
template <class Tag>
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t n) : coords_(n, 0) {}
  explicit IntVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  IntVector(std::initializer_list<long> xs) {
    coords_.reserve(xs.size());
    for (long x : xs) coords_.emplace_back(x);
  }

  static IntVector unit(std::size_t n, std::size_t i) {
    IntVector v(n);
    v.coords_[i] = 1;
    return v;
  }

  std::size_t size() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const noexcept { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
  }

  Integer sum() const {
    Integer s = 0;
    for (const auto& x : coords_) s += x;
    return s;
  }

  IntVector& operator+=(const IntVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  IntVector& operator-=(const IntVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  IntVector& operator*=(const Integer& k) {
    for (auto& x : coords_) x *= k;
    return *this;
  }

  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(const Integer& k, IntVector a) { return a *= k; }
  friend IntVector operator-(IntVector a) {
    for (auto& x : a.coords_) x = -x;
    return a;
  }

  friend bool operator==(const IntVector& a, const IntVector& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const IntVector& a, const IntVector& b) { return !(a == b); }
  /// Plain lexicographic order; used for map keys.
  friend bool operator<(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
  }

 private:
  void check_size(const IntVector& o) const {
    if (o.size() != size()) fail(ErrorKind::internal, "vector length mismatch");
  }

  std::vector<Integer> coords_;
};

using LatticeVector = IntVector<LatticeTag>;
using DualVector = IntVector<DualTag>;

/// Element of N_Q.
class RationalDualVector {
 public:
  RationalDualVector() = default;
  explicit RationalDualVector(std::size_t n) : coords_(n, 0) {}
  explicit RationalDualVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  explicit RationalDualVector(const DualVector& v) {
    for (const auto& x : v) coords_.emplace_back(x);
  }
  RationalDualVector(std::initializer_list<long> xs) {
    for (long x : xs) coords_.emplace_back(x);
  }

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
  }

  friend RationalDualVector operator*(const Rational& k, RationalDualVector v) {
    for (auto& x : v.coords_) x *= k;
    return v;
  }
  friend RationalDualVector operator+(RationalDualVector a, const RationalDualVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a.coords_[i] += b.coords_[i];
    return a;
  }
  friend bool operator==(const RationalDualVector& a, const RationalDualVector& b) {
    return a.coords_ == b.coords_;
  }

 private:
  std::vector<Rational> coords_;
};

/// The duality pairing <m, p> = p(m).
Integer pairing(const LatticeVector& m, const DualVector& p);
Rational pairing(const LatticeVector& m, const RationalDualVector& p);

/// Order used for every enumerated list of lattice points: coordinate sum, then lex.
bool graded_less(const LatticeVector& a, const LatticeVector& b);
void sort_graded(std::vector<LatticeVector>& v);

template <class Tag>
std::string to_string(const IntVector<Tag>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}
std::string to_string(const RationalDualVector& v);
std::string to_string(const Rational& q);

/// Divide by the gcd of the coordinates (zero vectors are returned unchanged).
std::vector<Integer> primitive(std::vector<Integer> v);

// ---------------------------------------------------------------------------
// Dense matrices.

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) fail(ErrorKind::invalid_input, "ragged matrix literal");
      for (long x : r) data_.emplace_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }
  bool is_square() const noexcept { return rows_ == cols_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& k) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const T& k) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::internal, "matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::internal, "matrix sum mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::internal, "matrix sum mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const T& k, Matrix a) {
    for (auto& x : a.data_) x *= k;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntMatrix& a);

/// Rows of the matrix are the given vectors.
template <class Tag>
IntMatrix rows_matrix(std::span<const IntVector<Tag>> vs, std::size_t n) {
  IntMatrix m(vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != n) fail(ErrorKind::invalid_input, "vector length does not match rank");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
  }
  return m;
}

// ---------------------------------------------------------------------------
// Normal forms.

struct HermiteForm {
  IntMatrix H;  ///< row Hermite normal form, H = U * A
  IntMatrix U;  ///< unimodular
  std::size_t rank = 0;
};

/// Row-style HNF: pivots positive and strictly increasing in column, entries
/// above a pivot reduced into [0, pivot), zero rows last.
HermiteForm hermite_normal_form(const IntMatrix& a);

struct SmithForm {
  IntMatrix D;  ///< diagonal, d_1 | d_2 | ..., D = U * A * V
  IntMatrix U;
  IntMatrix V;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

Integer determinant(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);

/// |Z^n / span(basis)|, or nullopt when the span has rank < n ("infinite").
template <class Tag>
std::optional<Integer> sublattice_index(std::span<const IntVector<Tag>> basis) {
  if (basis.empty()) fail(ErrorKind::invalid_input, "empty generating set");
  const std::size_t n = basis.front().size();
  const SmithForm s = smith_normal_form(rows_matrix(basis, n));
  if (s.rank < n) return std::nullopt;
  Integer index = 1;
  for (std::size_t i = 0; i < n; ++i) index *= s.D(i, i);
  return index;
}

/// Entry (i, j) is rho_i(mu_j).
IntMatrix pairing_matrix(std::span<const LatticeVector> mus, std::span<const DualVector> rhos);

/// |M/M'| * |N/N'| == |det A| for independent families mus (spanning M') and rhos (spanning N').
bool verify_det_index(std::span<const LatticeVector> mus, std::span<const DualVector> rhos);

// ---------------------------------------------------------------------------
// Linear algebra over Q.

struct EchelonForm {
  RationalMatrix R;                 ///< reduced row echelon form (zero rows dropped)
  std::vector<std::size_t> pivots;  ///< pivot column of each row
};

EchelonForm rref(const RationalMatrix& a);
std::size_t rank(const RationalMatrix& a);

/// Basis of {x : A x = 0}, one vector per free column, with a 1 in that column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a);

std::optional<RationalMatrix> inverse(const RationalMatrix& a);

/// Vectors in N_Q as matrix rows, reduced to echelon form. Used for canonical subspace bases.
std::vector<RationalDualVector> echelon_basis(const std::vector<RationalDualVector>& vs, std::size_t n);

}  // namespace monoalg
