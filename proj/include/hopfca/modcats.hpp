#pragma once

#include "hopfca/pairing.hpp"

namespace hopfca {

// A Yetter-Drinfeld style module over a verified pairing.  Flavor 1 carries
// a left H-module and a right K-comodule; flavor 2 a right H-module and a
// left K-comodule.  Storage:
//   flavor 1: action (dim(H)*n, n) row (h*n+v); coaction (n, n*dim(K)),
//             row v, column (v'*dim(K)+k)
//   flavor 2: action (n*dim(H), n) row (v*dim(H)+h); coaction (n, dim(K)*n),
//             row v, column (k*n+v')
struct YdModule {
  std::string name;
  int flavor = 1;
  HopfPairing pairing;
  int dim = 0;
  Matrix action;
  Matrix coaction;
};

// A module over an explicit algebra, typically a quantum double.
// action is (dim(algebra)*n, n) with row (a*n+m).
struct RepModule {
  std::string name;
  HopfAlgebraData algebra;
  int dim = 0;
  Matrix action;
};

// A K*-bimodule that is simultaneously a right comodule over the tensor
// Hopf algebra W = K*cop (x) H*, with both module structures compatible
// with the coaction.  W basis index is flattened as (a*dim(H)+b).
//   left_action  (dim(K)*n, n) row (a*n+m)
//   right_action (n*dim(K), n) row (m*dim(K)+a)
//   coaction     (n, n*dim(W)) row m, column (m'*dim(W)+w)
struct DoiHopfModule {
  std::string name;
  HopfPairing pairing;
  int dim = 0;
  Matrix left_action;
  Matrix right_action;
  Matrix coaction;
};

// A two-sided two-cosided relative Hopf module.  The primal side is a
// K-H-bimodule with a K-K-bicomodule structure; the dual side is a
// K*-bimodule with a left K*-comodule and a right H*-comodule.  The four
// action/coaction compatibilities are tied together by sigma_r on the
// primal side and sigma_l on the dual side.
//   left_action   (d_l*n, n); right_action (n*d_r, n)
//   left_coaction (n, c_l*n); right_coaction (n, n*c_r)
// with (d_l, d_r, c_l, c_r) = (K, H, K, K) primal, (K*, K*, K*, H*) dual.
struct TwoSidedModule {
  enum class Side { primal, dual };
  std::string name;
  Side side = Side::primal;
  HopfPairing pairing;
  int dim = 0;
  Matrix left_action;
  Matrix right_action;
  Matrix left_coaction;
  Matrix right_coaction;
};

// An embedded subspace: inclusion has shape (ambient dim, subspace dim)
// with columns the reduced kernel basis that defines it.
struct Subspace {
  Matrix inclusion;
  int dim() const { return inclusion.cols(); }
};

// A quotient with a deterministic section: projection (q, ambient),
// section (ambient, q), projection * section = identity.
struct Quotient {
  Matrix projection;
  Matrix section;
  int dim() const { return projection.rows(); }
};

// The coefficient Hopf algebra K*cop (x) H* of the Doi-Hopf coaction.
HopfAlgebraData doihopf_ambient(const HopfPairing& p);

// Per-axiom ledgers: module/comodule laws, the mixed commuting laws, and
// every action/coaction compatibility, each with a witness on failure.
VerificationReport verify_object(const YdModule& v);
VerificationReport verify_object(const RepModule& r);
VerificationReport verify_object(const DoiHopfModule& m);
VerificationReport verify_object(const TwoSidedModule& m);

// Tensor product of same-flavor modules: diagonal action through the
// coproduct of H; the coaction multiplies the K legs in reversed order for
// flavor 1 and straight order read right to left for flavor 2.
YdModule yd_tensor(const YdModule& v, const YdModule& w);

// The one-dimensional module with counit action and unit coaction.
YdModule trivial_yd(const HopfPairing& p, int flavor);

// {x in M (x) N : (rho (x) id)(x) = (id (x) lambda)(x)} for a right
// coaction rho on M and a left coaction lambda on N over the same
// c_dim-dimensional coalgebra.
Subspace cotensor(const Matrix& right_coaction, const Matrix& left_coaction, int c_dim);

// Coinvariants {m : rho(m) = m (x) unit} of a right coaction.
Subspace coinvariants(const Matrix& coaction, const Vec& c_unit);

// M (x)_A N: quotient of M (x) N by the span of m.a (x) n - m (x) a.n.
Quotient tensor_over_algebra(const Matrix& right_action, const Matrix& left_action, int a_dim);

// Quotient of M by the span of {m.a - augmentation(a) m}; for a right
// K*-module the augmentation of e_a* is its value at the unit of K.
Quotient augmentation_quotient(const Matrix& right_action, const Vec& augmentation);

// Shared machinery: quotient by the span of explicit generators, with the
// echelon-pivot coordinates eliminated and the free coordinates kept.
Quotient quotient_by_span(const FieldSpec& f, int ambient_dim, const std::vector<Vec>& gens);

// Hit actions as pure index transpositions between a coaction over C and
// an action of the dual algebra on the same carrier.  Each pair below is
// mutually inverse.
Matrix left_action_from_right_coaction(const Matrix& coaction, int c_dim);
Matrix right_coaction_from_left_action(const Matrix& action, int c_dim);
Matrix right_action_from_left_coaction(const Matrix& coaction, int c_dim);
Matrix left_coaction_from_right_action(const Matrix& action, int c_dim);

// The unit object of either two-sided category: K with regular actions
// twisted by sigma_r on the right, or K* with the sigma_l-twisted right
// coaction.
TwoSidedModule two_sided_unit(const HopfPairing& p, TwoSidedModule::Side side);

// Tensor product inside a two-sided category.  On the primal side the
// carrier is the cotensor subspace (projection * section = identity with
// section the inclusion); on the dual side it is the quotient over K*.
struct TwoSidedTensor {
  TwoSidedModule object;
  Matrix projection;  // (dim, dim(M)*dim(N))
  Matrix section;     // (dim(M)*dim(N), dim)
};
TwoSidedTensor two_sided_tensor(const TwoSidedModule& m, const TwoSidedModule& n);

// Generic axiom checkers appending one ledger entry each; reused by all
// validators and by the functor round-trip suites.
void check_left_module(VerificationReport& rep, const std::string& id, const Matrix& action,
                       const AlgebraOps& a);
void check_right_module(VerificationReport& rep, const std::string& id, const Matrix& action,
                        const AlgebraOps& a);
void check_right_comodule(VerificationReport& rep, const std::string& id, const Matrix& coaction,
                          const CoalgebraOps& c);
void check_left_comodule(VerificationReport& rep, const std::string& id, const Matrix& coaction,
                         const CoalgebraOps& c);

// Equality with a first-difference witness; shared by the validators.
bool tensors_match(const SparseTensor& lhs, const SparseTensor& rhs, Witness& w);

// Sparse tables for the leg pipelines: lact[a][m] expands a.e_m, ract[m][a]
// expands e_m.a; the coaction tables expand one carrier leg into
// (carrier, coalgebra) or (coalgebra, carrier) pairs.
std::vector<std::vector<SparseVecT>> lact_table(const Matrix& action, int a_dim);
std::vector<std::vector<SparseVecT>> ract_table(const Matrix& action, int a_dim);
std::vector<SparsePairT> rcoact_table(const Matrix& coaction, int c_dim);
std::vector<SparsePairT> lcoact_table(const Matrix& coaction, int c_dim);

// Per-basis operators on the carrier: left_slices(action, d)[a] applied to
// coordinates of m gives a.m, and right_slices gives m.a.
std::vector<Matrix> left_slices(const Matrix& action, int a_dim);
std::vector<Matrix> right_slices(const Matrix& action, int a_dim);

}  // namespace hopfca
