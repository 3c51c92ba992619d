#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "aquiver/rational.hpp"

namespace aquiver {

/// The coefficient field: the rationals, or a prime field F_p whose elements
/// are stored as integers in [0, p). Everything is exact.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InputError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  /// Image of a rational number in this field. Throws InputError when the
  /// denominator vanishes mod p.
  Rational embed(const Rational& q) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  /// Throws InternalError on zero.
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// Dense matrix over a Field. Zero rows or columns are allowed and stand
/// for maps into or out of the zero space.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Field field);

  static Matrix identity(std::size_t n, Field field);
  /// Entries are embedded into the field. All rows must have `cols` entries.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols,
                          Field field);
  /// A single column.
  static Matrix column_vector(const std::vector<Rational>& entries, Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores field.embed(v).
  void set(std::size_t r, std::size_t c, const Rational& v);

  Matrix column(std::size_t c) const;
  Matrix transpose() const;
  Matrix scaled(const Rational& s) const;
  bool is_zero() const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  friend struct MatrixAccess;
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<Rational> data_;
};

namespace linalg {

struct Echelon {
  Matrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Columns form a basis of ker m; shape cols(m) x (cols(m) - rank(m)).
Matrix kernel_basis(const Matrix& m);

/// Linearly independent columns of m spanning its column space.
Matrix column_space_basis(const Matrix& m);

struct Solution {
  Matrix x;                   // one solution
  std::size_t free_dimension;  // dimension of the solution space
};

/// Solves a x = b for a matrix right-hand side; nothing if inconsistent.
std::optional<Solution> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Uniformly chosen small-entry invertible matrix, reproducible from rng.
Matrix random_invertible(std::size_t n, const Field& field, std::mt19937_64& rng);
/// Entries drawn from [lo, hi] and embedded in the field.
Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& field, std::mt19937_64& rng,
                     int lo = -2, int hi = 2);

}  // namespace linalg
}  // namespace aquiver
