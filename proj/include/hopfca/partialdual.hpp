#pragma once

#include "hopfca/doubles.hpp"

namespace hopfca {

// An algebra B with a compatible left coaction of an ambient Hopf algebra.
struct ComoduleAlgebra {
  HopfAlgebraData ambient;
  int carrier_dim = 0;
  Matrix algebra_mult;  // (n*n, n)
  Vec algebra_unit;     // n
  // rho : B -> ambient (x) B; row b, column (a * n + b') = coefficient of
  // amb_a (x) e_b' in rho(e_b).
  Matrix coaction;
};

// A coalgebra C with a compatible right action of the ambient Hopf algebra.
struct ModuleCoalgebra {
  HopfAlgebraData ambient;
  int carrier_dim = 0;
  Matrix comult;  // (n, n*n)
  Vec counit;     // n
  // right action: row (c * dim(ambient) + a), column c' = coefficient of
  // e_c' in e_c <| amb_a.
  Matrix action;
};

// A partially admissible mapping system (iota, zeta, pi, gamma) between the
// comodule algebra B, the ambient Hopf algebra, and the module coalgebra C,
// with the convolution inverses of zeta and gamma cached.
struct Pams {
  std::string name;
  HopfAlgebraData ambient;
  ComoduleAlgebra b;
  ModuleCoalgebra c;
  LinearMap iota;       // B -> ambient
  LinearMap zeta;       // ambient -> B
  LinearMap pi;         // ambient -> C
  LinearMap gamma;      // C -> ambient
  LinearMap zeta_bar;   // cached convolution inverse of zeta
  LinearMap gamma_bar;  // cached convolution inverse of gamma
};

// The left partial dual C*#B: a quasi-Hopf algebra with explicit associator.
// No antipode is carried.
struct QuasiHopfData {
  std::string name;
  FieldSpec field;
  int dim = 0;    // dim(C) * dim(B), basis x_i* # b_j with i slowest
  Matrix mult;    // (n*n, n)
  Vec unit;       // n
  Matrix comult;  // (n, n*n)
  Vec counit;     // n
  Vec associator;      // dense element of the triple tensor space (n^3)
  Vec associator_inv;  // same; their product is the triple unit
};

// The canonical system realizing the quantum double: ambient K^op (x) H,
// B = H embedded along sigma_r and the inverse antipode, C = K^op with the
// regular action twisted by sigma_r.
Pams canonical_pams(const HopfPairing& p);

// Full per-condition ledger: structural validity of B and C, the six
// defining conditions, their mirrored forms on the explicitly transposed
// maps over the dual ambient, and the derived composition identities.
VerificationReport verify_pams(const Pams& s);

QuasiHopfData partial_dual(const Pams& s);

// Builds both sides of the realization statement and compares: trivial
// associator, equal multiplication, equal coalgebra, and the induced
// comodule structure of K*cop against the twisted-coproduct formula.
VerificationReport check_double_realization(const HopfPairing& p);

// Invalid systems used as regression fixtures:
//   1: zeta replaced by its convolution inverse (evaluation on sweedler4);
//      the counit-style conditions survive but condition 6 fails
//   2: gamma replaced by k -> S(k) (x) 1 (evaluation on c3); pi o gamma
//      is no longer the identity
//   3: one coaction entry of B corrupted (evaluation on c2); B stops being
//      a comodule algebra
Pams mutated_pams(int which);

}  // namespace hopfca
