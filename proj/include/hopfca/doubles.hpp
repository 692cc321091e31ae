#pragma once

#include "hopfca/pairing.hpp"

namespace hopfca {

// The generalized quantum double K*cop bowtie_sigma H on the flat basis
// e_i* (x) f_j (i slowest).  Multiplication twists the tensor algebra by
// sigma and sigma-bar; the coalgebra is the tensor coalgebra of K*cop and H.
HopfAlgebraData quantum_double(const HopfPairing& p);

// Same structure constants computed through an explicitly materialized
// K*cop coalgebra object instead of expanding Sweedler legs in K* and
// flipping once.  Exists to pin the two routes against each other in tests.
HopfAlgebraData quantum_double_cop_route(const HopfPairing& p);

// Drinfeld double D(H) = H*cop bowtie H, the evaluation-pairing case.
HopfAlgebraData drinfeld_double(const HopfAlgebraData& h);

}  // namespace hopfca
