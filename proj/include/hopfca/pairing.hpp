#pragma once

#include "hopfca/hopf.hpp"

namespace hopfca {

// A Hopf pairing sigma : K* (x) H -> k, stored on the K basis:
// form(i, j) = sigma(e_i*, f_j).
struct HopfPairing {
  std::string name;
  HopfAlgebraData k_alg;  // K
  HopfAlgebraData h_alg;  // H
  Matrix form;            // (dim K, dim H)
};

// Checks the pairing conditions:
//   (i)   sigma(a a', h)  = sum sigma(a, h1) sigma(a', h2)
//   (ii)  sigma(a, h h')  = sum sigma(a1, h) sigma(a2, h')
//   (iii) sigma(1, h)     = eps(h)
//   (iv)  sigma(a, 1)     = eps(a)
//   (v)   sigma(a, S(h))  = sigma(S(a), h)   (consequence, reported separately)
VerificationReport verify_pairing(const HopfPairing& p);

// The induced Hopf algebra maps sigma_l : K* -> H* and sigma_r : H -> K,
// with sigma_l = sigma_r transposed on dual bases.  Asserts both are Hopf
// algebra maps; throws NotHopfMap otherwise.
struct InducedMaps {
  LinearMap sigma_l;  // matrix (dim H, dim K): dual-basis coordinates
  LinearMap sigma_r;  // matrix (dim K, dim H)
};
InducedMaps induced_maps(const HopfPairing& p);

// sigma-bar = sigma o (id (x) S^-1), the convolution inverse of sigma in
// Hom(K*cop (x) H, k); the inverse property is asserted.
Matrix sigma_bar(const HopfPairing& p);

enum class PairingKind { evaluation, trivial, from_map };

// evaluation: K = H, form = identity.  trivial: sigma(k*, h) = <k*, 1> eps(h).
// from_map: sigma(k*, h) = <k*, f(h)> for a Hopf algebra map f : H -> K.
HopfPairing standard_pairing(PairingKind kind, const HopfAlgebraData& k_alg,
                             const HopfAlgebraData& h_alg,
                             const LinearMap* f = nullptr);

// True iff the matrix is a Hopf algebra map from h to k (multiplication,
// unit, comultiplication, counit and antipode compatible).
bool is_hopf_map(const Matrix& f, const HopfAlgebraData& h, const HopfAlgebraData& k);

}  // namespace hopfca
