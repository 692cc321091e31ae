#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "hopfca/matrix.hpp"

namespace hopfca {

// Sparse vector over one basis: list of (index, coefficient).
using SparseVecT = std::vector<std::pair<int, Scalar>>;
// Sparse expansion of one basis element into a tensor square: (j, k, coeff).
using SparsePairT = std::vector<std::tuple<int, int, Scalar>>;

// A sparse element of a tensor product of based spaces.  Legs are ordered
// left to right; the flat index convention is row-major (leftmost leg
// slowest), matching kron.  All Sweedler-notation contractions in this
// project are pipelines of the leg operations below.
class SparseTensor {
 public:
  SparseTensor(const FieldSpec& f, std::vector<int> dims) : spec_(f), dims_(std::move(dims)) {}

  static SparseTensor basis(const FieldSpec& f, std::vector<int> dims, std::vector<int> idx);

  const FieldSpec& field() const { return spec_; }
  const std::vector<int>& dims() const { return dims_; }
  int legs() const { return static_cast<int>(dims_.size()); }
  const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }

  void add_term(const std::vector<int>& idx, const Scalar& c);
  void add(const SparseTensor& o);  // same dims
  SparseTensor scaled(const Scalar& c) const;
  bool operator==(const SparseTensor& o) const;

  // Replace leg `leg` using an expansion table: index i becomes the sum of
  // c * (j at leg, k at leg+1).  Used for comultiplications and coactions
  // landing in two legs.
  SparseTensor expand_leg(int leg, const std::vector<SparsePairT>& table, int d1, int d2) const;

  // Merge legs `leg` and `leg+1` via a product table (i,j) -> sparse vector.
  SparseTensor merge_legs(int leg, const std::vector<std::vector<SparseVecT>>& table,
                          int d_out) const;

  // Apply a linear map (matrix in (out, in) shape) to one leg.
  SparseTensor map_leg(int leg, const Matrix& m) const;

  // Replace leg by a sparse-row table i -> sum c_j e_j (out dimension d_out).
  SparseTensor map_leg_table(int leg, const std::vector<SparseVecT>& table, int d_out) const;

  // Contract one leg against a covector (e.g. a counit), removing the leg.
  SparseTensor contract_leg(int leg, const Vec& covec) const;

  // Contract legs a and b (a != b) against a bilinear form with shape
  // (dims[a], dims[b]); both legs are removed.
  SparseTensor contract_form(int a, int b, const Matrix& form) const;

  SparseTensor swap_legs(int a, int b) const;

  // Insert a new leg at position pos carrying the fixed vector v.
  SparseTensor insert_leg(int pos, const Vec& v) const;

  // Flatten to a dense coordinate vector (row-major over the legs).
  Vec to_dense() const;
  static SparseTensor from_dense(const FieldSpec& f, std::vector<int> dims, const Vec& v);

 private:
  FieldSpec spec_;
  std::vector<int> dims_;
  std::map<std::vector<int>, Scalar> terms_;  // nonzero only
};

}  // namespace hopfca
