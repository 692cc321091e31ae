#pragma once

#include <string>

#include "hopfca/report.hpp"
#include "hopfca/tensor.hpp"

namespace hopfca {

// Sparse views of an algebra and a coalgebra, the two halves every
// convolution computation needs.  prod[i][j] expands e_i e_j, cop[i]
// expands the coproduct of e_i.
struct AlgebraOps {
  int dim = 0;
  std::vector<std::vector<SparseVecT>> prod;
  Vec unit;
};
struct CoalgebraOps {
  int dim = 0;
  std::vector<SparsePairT> cop;
  Vec counit;
};

// Build sparse tables from the structure-constant storage convention:
// mult is (n*n, n) with row (i*n+j), column k = coefficient of e_k in
// e_i e_j; comult is (n, n*n) with row i, column (j*n+k) = coefficient
// of e_j (x) e_k in the coproduct of e_i.
std::vector<std::vector<SparseVecT>> prod_table(const Matrix& mult);
std::vector<SparsePairT> cop_table(const Matrix& comult);

// A finite-dimensional Hopf algebra as exact structure constants.
// The inverse antipode is computed eagerly at construction; sparse
// product/coproduct tables are cached for Sweedler pipelines.
struct HopfAlgebraData {
  std::string name;
  FieldSpec field;
  int dim = 0;
  Matrix mult;          // (n*n, n)
  Vec unit;             // n
  Matrix comult;        // (n, n*n)
  Vec counit;           // n
  Matrix antipode;      // (n, n), column j = S(e_j)
  Matrix antipode_inv;  // cached, antipode * antipode_inv = I

  std::vector<std::vector<SparseVecT>> prod;  // cached
  std::vector<SparsePairT> cop;               // cached

  Matrix mult_map() const { return mult.transpose(); }      // (n, n*n)
  Matrix comult_map() const { return comult.transpose(); }  // (n*n, n)

  AlgebraOps algebra_ops() const { return {dim, prod, unit}; }
  CoalgebraOps coalgebra_ops() const { return {dim, cop, counit}; }

  // Sweedler leg operations.
  SparseTensor elem(int i) const { return SparseTensor::basis(field, {dim}, {i}); }
  SparseTensor unit_elem() const;
  SparseTensor delta(const SparseTensor& t, int leg) const;  // one leg -> two
  SparseTensor mu(const SparseTensor& t, int leg) const;     // legs leg, leg+1 -> one
  SparseTensor eps(const SparseTensor& t, int leg) const { return t.contract_leg(leg, counit); }
};

// Constructs the value, checking shapes and inverting the antipode.
// Does not run the axiom suite; see verify_hopf.
HopfAlgebraData make_hopf(std::string name, const FieldSpec& field, int dim, Matrix mult,
                          Vec unit, Matrix comult, Vec counit, Matrix antipode);

// A linear map between based spaces; matrix shape (target dim, source dim),
// acting on coordinate columns.
struct LinearMap {
  std::string source;
  std::string target;
  Matrix matrix;
};

// The eight Hopf axiom families, each entry with a witness on failure:
// associativity, unit, coassociativity, counit, Δ-is-algebra-map,
// ε-is-algebra-map, antipode-left, antipode-right.
VerificationReport verify_hopf(const HopfAlgebraData& h);

// Dual Hopf algebra on the dual basis: transpose-reshape of all tensors.
HopfAlgebraData dual(const HopfAlgebraData& h);

enum class Variant { op, cop, op_cop };
HopfAlgebraData variant(const HopfAlgebraData& h, Variant which);

HopfAlgebraData tensor_product(const HopfAlgebraData& h, const HopfAlgebraData& k);

// Convolution product of f, g : C -> A, matrices (dim A, dim C).
Matrix convolve(const Matrix& f, const Matrix& g, const CoalgebraOps& c, const AlgebraOps& a);
// The convolution unit: unit_A o counit_C.
Matrix convolution_unit(const CoalgebraOps& c, const AlgebraOps& a);
// Two-sided convolution inverse, by exact linear solve in Hom(C, A).
// Throws NotConvolutionInvertible.
Matrix convolution_inverse(const Matrix& f, const CoalgebraOps& c, const AlgebraOps& a);
LinearMap convolution_inverse(const LinearMap& f, const HopfAlgebraData& c,
                              const HopfAlgebraData& a);

}  // namespace hopfca
