#pragma once

#include <vector>

#include "hopfca/scalar.hpp"

namespace hopfca {

using Vec = std::vector<Scalar>;

// Dense exact matrix.  Row-major; every entry shares one FieldSpec.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, int rows, int cols);  // zero-filled

  static Matrix identity(const FieldSpec& f, int n);
  static Matrix zero(const FieldSpec& f, int rows, int cols) { return Matrix(f, rows, cols); }
  static Matrix from_rows(const FieldSpec& f, int rows, int cols, const std::vector<long>& flat);
  static Matrix col_vec(const Vec& v);
  static Matrix row_vec(const Vec& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return spec_; }

  Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  Vec apply(const Vec& v) const;  // matrix times column vector
  Vec row(int i) const;
  Vec col(int j) const;

  std::string str() const;

 private:
  FieldSpec spec_;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

// f tensor g on the row-major tensor basis: entry
// ((i*b.rows+i'), (j*b.cols+j')) = a(i,j) * b(i',j').
Matrix kron(const Matrix& a, const Matrix& b);

// Reduced row echelon form, in place convention: returns the echelon matrix
// and the pivot columns in increasing order.  Deterministic: the pivot of each
// step is the first nonzero column, topmost unused row after row swaps.
struct Echelon {
  Matrix rref;
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};
Echelon row_echelon(const Matrix& m);

int rank(const Matrix& m);

// Exact basis of the right kernel {v : m v = 0}, reduced column-echelon,
// pivots at the lowest free column index first.
std::vector<Vec> kernel_basis(const Matrix& m);

// Inverse of a square matrix; throws SingularMatrix.
Matrix invert(const Matrix& m);

// For surjective q, the section s with q s = I whose nonzero rows are exactly
// the echelon pivot columns of q.  Throws NotSurjective.
Matrix solve_right_inverse_section(const Matrix& q);

// Solve a x = b for every column of b; throws SingularMatrix("inconsistent
// linear system") when no solution exists.  Underdetermined systems take the
// deterministic solution with zeros at the free columns.
Matrix solve(const Matrix& a, const Matrix& b);

// Matrix whose columns are the given vectors.
Matrix columns(const FieldSpec& f, int dim, const std::vector<Vec>& cols);

}  // namespace hopfca
