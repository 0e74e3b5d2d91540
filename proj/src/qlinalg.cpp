#include "stringy/qlinalg.hpp"

#include <sstream>
#include <utility>

#include "stringy/errors.hpp"

namespace stringy::qlinalg {

Rational make_rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw InputError("matrix entry count " + std::to_string(data_.size()) + " does not match shape " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t ambient, const std::vector<Vector>& columns) {
  Matrix m(ambient, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != ambient) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < ambient; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Matrix Matrix::columns(std::span<const std::size_t> indices) const {
  Matrix out(rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, indices[j]);
  return out;
}

Matrix Matrix::rows_subset(std::span<const std::size_t> indices) const {
  Matrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(indices[i], j);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& q : data_)
    if (sgn(q) != 0) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw InputError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) != 0) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw InputError("matrix-vector shape mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
  return out;
}

namespace {

Matrix elementwise(const Matrix& a, const Matrix& b, bool subtract) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = subtract ? Rational(a(i, j) - b(i, j)) : Rational(a(i, j) + b(i, j));
  return out;
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) { return elementwise(a, b, false); }
Matrix operator-(const Matrix& a, const Matrix& b) { return elementwise(a, b, true); }

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InputError("hconcat row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw InputError("vconcat column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) out(a.rows() + i, j) = b(i, j);
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

RowEchelon row_reduce(const Matrix& m) {
  RowEchelon res{m, {}};
  Matrix& a = res.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivot_row = 0;
  Rational factor;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (sgn(a(r, col)) != 0) {
        sel = r;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != pivot_row)
      for (std::size_t j = col; j < cols; ++j) swap(a(sel, j), a(pivot_row, j));

    // Normalize the pivot row, remembering its nonzero support so the
    // elimination below only touches those columns.
    const Rational inv = 1 / a(pivot_row, col);
    std::vector<std::size_t> support;
    for (std::size_t j = col; j < cols; ++j) {
      if (sgn(a(pivot_row, j)) != 0) {
        a(pivot_row, j) *= inv;
        support.push_back(j);
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || sgn(a(r, col)) == 0) continue;
      factor = a(r, col);
      for (std::size_t j : support) a(r, j) -= factor * a(pivot_row, j);
    }
    res.pivot_columns.push_back(col);
    ++pivot_row;
  }
  return res;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_reduce(m).pivot_columns.size();
}

Subspace kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  const RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : ech.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> columns;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) v[ech.pivot_columns[i]] = -ech.reduced(i, free);
    columns.push_back(std::move(v));
  }
  return Subspace{n, Matrix::from_columns(n, columns)};
}

Subspace image_basis(const Matrix& m) {
  if (m.empty()) return Subspace{m.rows(), Matrix(m.rows(), 0)};
  const RowEchelon ech = row_reduce(m);
  return Subspace{m.rows(), m.columns(ech.pivot_columns)};
}

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) {
    throw InputError("solve: right-hand side has length " + std::to_string(b.size()) + ", expected " +
                     std::to_string(m.rows()));
  }
  Matrix rhs(m.rows(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  auto x = solve_columns(m, rhs);
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<Matrix> solve_columns(const Matrix& m, const Matrix& rhs) {
  if (rhs.rows() != m.rows()) throw InputError("solve: right-hand side row mismatch");
  const std::size_t n = m.cols();
  const RowEchelon ech = row_reduce(hconcat(m, rhs));
  // Consistent iff no pivot lands in the augmented block.
  std::size_t r = 0;
  for (; r < ech.pivot_columns.size() && ech.pivot_columns[r] < n; ++r) {
  }
  if (r != ech.pivot_columns.size()) return std::nullopt;

  Matrix x(n, rhs.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(ech.pivot_columns[i], j) = ech.reduced(i, n + j);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve_columns(m, Matrix::identity(m.rows()));
}

bool is_exact_at(const Matrix& f, const Matrix& g) {
  if (f.rows() != g.cols()) {
    throw InputError("is_exact_at: f maps into dimension " + std::to_string(f.rows()) + " but g starts at " +
                     std::to_string(g.cols()));
  }
  if (!(g * f).is_zero()) return false;
  return rank(f) == g.cols() - rank(g);
}

bool is_injective(const Matrix& m) { return rank(m) == m.cols(); }
bool is_surjective(const Matrix& m) { return rank(m) == m.rows(); }

bool contains(const Subspace& outer, const Subspace& inner) {
  if (outer.ambient_dim != inner.ambient_dim) throw InputError("subspaces live in different ambient spaces");
  return rank(hconcat(outer.basis, inner.basis)) == rank(outer.basis);
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
  }
  os << "] (" << m.rows() << "x" << m.cols() << ")";
  return os.str();
}

}  // namespace stringy::qlinalg
