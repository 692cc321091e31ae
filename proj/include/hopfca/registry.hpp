#pragma once

#include "hopfca/modcats.hpp"

namespace hopfca {

// Built-in example keys.
struct ExampleKey {
  enum class Family { cyclic_group, symmetric_group_3, dual_group, sweedler4, taft };
  Family family;
  int order = 0;      // cyclic/dual-cyclic group order
  int taft_n = 0;     // Taft: x^n = 0, g^n = 1
  unsigned long taft_p = 0;
  long taft_q = 0;    // primitive taft_n-th root of unity mod taft_p
  bool dual_of_s3 = false;  // dual_group of S3 instead of a cyclic group
};

HopfAlgebraData build_hopf(const ExampleKey& key);

// Name-based builders backing the CLI.  Algebra names: c2..c6, s3,
// dual-c2..dual-c6, dual-s3, sweedler4, taft-3-7-2.  Pairing names:
// eval-c2, eval-c3, eval-s3, eval-sweedler4, eval-taft-3-7-2,
// trivial-c2-c3, sign-s3-c2, quot-c4-c2.
HopfAlgebraData build_hopf(const std::string& name);
HopfPairing build_pairing(const std::string& name);

std::vector<std::string> registry_hopf_names();
std::vector<std::string> registry_pairing_names();

// Standard module fixtures over a pairing: the trivial module, the regular
// quantum-double module pulled back to a Yetter-Drinfeld structure, their
// tensor product, and one seeded sample in the regular isomorphism class.
std::vector<YdModule> build_test_modules(const HopfPairing& p);

}  // namespace hopfca
