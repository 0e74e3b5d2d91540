#pragma once

// Exact linear algebra over the rationals.
//
// Every map in the library is a dense RationalMatrix acting on column
// vectors: an m x n matrix is a map Q^n -> Q^m. Matrices with zero rows or
// zero columns are valid and stand for maps into or out of the zero space.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace stringy::qlinalg {

/// GMP rationals are kept canonical (lowest terms, positive denominator)
/// by every arithmetic operation. Use make_rational for num/den input.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);
Rational make_rational(const mpz_class& num, const mpz_class& den);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  /// Row-major integer literal, e.g. Matrix::from_rows({{1, 2}, {3, 4}}).
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  /// Column matrices from vectors of equal length `ambient`.
  static Matrix from_columns(std::size_t ambient, const std::vector<Vector>& columns);

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Rational>& entries() const noexcept { return data_; }

  Vector column(std::size_t c) const;
  Matrix columns(std::span<const std::size_t> indices) const;
  Matrix rows_subset(std::span<const std::size_t> indices) const;

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// [a | b], requires equal row counts.
Matrix hconcat(const Matrix& a, const Matrix& b);
/// [a ; b], requires equal column counts.
Matrix vconcat(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

/// A linear subspace of Q^ambient_dim given by independent basis columns.
struct Subspace {
  std::size_t ambient_dim = 0;
  Matrix basis;  // ambient_dim x dim

  std::size_t dim() const noexcept { return basis.cols(); }
};

/// Reduced row echelon form with pivots chosen as the first nonzero entry
/// scanning columns left to right, rows top to bottom.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);
Subspace kernel_basis(const Matrix& m);
/// Basis made of the pivot columns of m itself.
Subspace image_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when b is not in the column space.
/// Throws InputError when b.size() != m.rows().
std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b);
/// Column-wise solve of m X = rhs; nullopt if any column is unsolvable.
std::optional<Matrix> solve_columns(const Matrix& m, const Matrix& rhs);

std::optional<Matrix> inverse(const Matrix& m);

/// For f: A -> B and g: B -> C, true iff im f = ker g.
/// Throws InputError when f.rows() != g.cols().
bool is_exact_at(const Matrix& f, const Matrix& g);

bool is_injective(const Matrix& m);
bool is_surjective(const Matrix& m);

/// Does subspace `inner` lie in the column span of `outer`?
bool contains(const Subspace& outer, const Subspace& inner);

std::string to_string(const Matrix& m);

}  // namespace stringy::qlinalg
