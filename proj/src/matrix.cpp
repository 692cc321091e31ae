#include "hopfca/matrix.hpp"

#include <sstream>

namespace hopfca {

Matrix::Matrix(const FieldSpec& f, int rows, int cols)
    : spec_(f), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, int rows, int cols, const std::vector<long>& flat) {
  if (flat.size() != static_cast<size_t>(rows) * cols)
    throw ShapeMismatch("from_rows: flat list has wrong length");
  Matrix m(f, rows, cols);
  for (size_t i = 0; i < flat.size(); ++i) m.e_[i] = Scalar::from_long(f, flat[i]);
  return m;
}

Matrix Matrix::col_vec(const Vec& v) {
  if (v.empty()) throw ShapeMismatch("col_vec: empty vector");
  Matrix m(v[0].field(), static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
  return m;
}

Matrix Matrix::row_vec(const Vec& v) {
  if (v.empty()) throw ShapeMismatch("row_vec: empty vector");
  Matrix m(v[0].field(), 1, static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) m.at(0, static_cast<int>(i)) = v[i];
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix add");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sub");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ShapeMismatch("matrix mul: inner dimensions differ");
  Matrix r(spec_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(spec_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw ShapeMismatch("apply: size mismatch");
  Vec r(rows_, Scalar::zero(spec_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Vec Matrix::row(int i) const {
  Vec r(cols_, Scalar::zero(spec_));
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec Matrix::col(int j) const {
  Vec r(rows_, Scalar::zero(spec_));
  for (int i = 0; i < rows_; ++i) r[i] = at(i, j);
  return r;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    os << "\n";
  }
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Scalar& s = a.at(i, j);
      if (s.is_zero()) continue;
      for (int i2 = 0; i2 < b.rows(); ++i2)
        for (int j2 = 0; j2 < b.cols(); ++j2)
          if (!b.at(i2, j2).is_zero())
            r.at(i * b.rows() + i2, j * b.cols() + j2) = s * b.at(i2, j2);
    }
  return r;
}

Echelon row_echelon(const Matrix& m) {
  Echelon e{m, {}};
  Matrix& a = e.rref;
  int lead = 0;
  for (int c = 0; c < a.cols() && lead < a.rows(); ++c) {
    int piv = -1;
    for (int r = lead; r < a.rows(); ++r)
      if (!a.at(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(lead, j));
    Scalar inv = a.at(lead, c).inv();
    for (int j = 0; j < a.cols(); ++j) a.at(lead, j) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, c).is_zero()) continue;
      Scalar f = a.at(r, c);
      for (int j = 0; j < a.cols(); ++j) a.at(r, j) -= f * a.at(lead, j);
    }
    e.pivot_cols.push_back(c);
    ++lead;
  }
  return e;
}

int rank(const Matrix& m) { return row_echelon(m).rank(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols(), Scalar::zero(m.field()));
    v[c] = Scalar::one(m.field());
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
      v[e.pivot_cols[r]] = -e.rref.at(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("invert: not square");
  int n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  Echelon e = row_echelon(aug);
  for (int i = 0; i < n; ++i)
    if (static_cast<size_t>(i) >= e.pivot_cols.size() || e.pivot_cols[i] != i)
      throw SingularMatrix("matrix is singular");
  Matrix r(m.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = e.rref.at(i, n + j);
  return r;
}

Matrix solve_right_inverse_section(const Matrix& q) {
  Echelon e = row_echelon(q);
  if (e.rank() != q.rows()) throw NotSurjective("matrix has deficient row rank");
  // The pivot-column submatrix is invertible; spread its inverse over the
  // pivot rows of the section.
  Matrix sub(q.field(), q.rows(), q.rows());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.rows(); ++j) sub.at(i, j) = q.at(i, e.pivot_cols[j]);
  Matrix sub_inv = invert(sub);
  Matrix s(q.field(), q.cols(), q.rows());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.rows(); ++j) s.at(e.pivot_cols[i], j) = sub_inv.at(i, j);
  return s;
}

Matrix solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("solve: row counts differ");
  Matrix aug(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  Echelon e = row_echelon(aug);
  for (int c : e.pivot_cols)
    if (c >= a.cols()) throw SingularMatrix("inconsistent linear system");
  Matrix x(a.field(), a.cols(), b.cols());
  for (size_t r = 0; r < e.pivot_cols.size(); ++r)
    for (int j = 0; j < b.cols(); ++j)
      x.at(e.pivot_cols[r], j) = e.rref.at(static_cast<int>(r), a.cols() + j);
  return x;
}

Matrix columns(const FieldSpec& f, int dim, const std::vector<Vec>& cols) {
  Matrix m(f, dim, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != dim) throw ShapeMismatch("columns: vector length");
    for (int i = 0; i < dim; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

}  // namespace hopfca
