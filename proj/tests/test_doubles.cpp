#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfca/doubles.hpp"
#include "hopfca/registry.hpp"

using namespace hopfca;

namespace {

bool same_structure(const HopfAlgebraData& a, const HopfAlgebraData& b) {
  return a.dim == b.dim && a.field == b.field && a.mult == b.mult && a.unit == b.unit &&
         a.comult == b.comult && a.counit == b.counit && a.antipode == b.antipode;
}

bool is_commutative(const HopfAlgebraData& h) {
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j)
      for (int k = 0; k < h.dim; ++k)
        if (h.mult.at(i * h.dim + j, k) != h.mult.at(j * h.dim + i, k)) return false;
  return true;
}

bool is_cocommutative(const HopfAlgebraData& h) {
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j)
      for (int k = 0; k < h.dim; ++k)
        if (h.comult.at(i, j * h.dim + k) != h.comult.at(i, k * h.dim + j)) return false;
  return true;
}

}  // namespace

TEST_CASE("dimension multiplies") {
  HopfPairing p = build_pairing("sign-s3-c2");
  CHECK(quantum_double(p).dim == 12);
}

TEST_CASE("trivial pairing collapses to the tensor Hopf algebra") {
  HopfPairing p = build_pairing("trivial-c2-c3");
  HopfAlgebraData d = quantum_double(p);
  HopfAlgebraData expect =
      tensor_product(variant(dual(build_hopf("c2")), Variant::cop), build_hopf("c3"));
  CHECK(same_structure(d, expect));
}

TEST_CASE("axiom suite passes on doubles") {
  for (const auto& name : {"eval-c2", "eval-c3", "eval-sweedler4", "sign-s3-c2",
                           "quot-c4-c2", "trivial-c2-c3"}) {
    HopfAlgebraData d = quantum_double(build_pairing(name));
    VerificationReport rep = verify_hopf(d);
    INFO(name, ": first failure ", rep.first_failure());
    CHECK(rep.overall());
  }
}

TEST_CASE("drinfeld double is the evaluation case") {
  for (const auto& name : {"c2", "sweedler4"}) {
    HopfAlgebraData h = build_hopf(name);
    CHECK(same_structure(drinfeld_double(h),
                         quantum_double(standard_pairing(PairingKind::evaluation, h, h))));
  }
}

TEST_CASE("drinfeld double of c2 is commutative and cocommutative") {
  HopfAlgebraData d = drinfeld_double(build_hopf("c2"));
  CHECK(d.dim == 4);
  CHECK(is_commutative(d));
  CHECK(is_cocommutative(d));
  CHECK(verify_hopf(d).overall());
}

TEST_CASE("both Sweedler-leg routes agree") {
  for (const auto& name : {"eval-c2", "eval-sweedler4", "sign-s3-c2", "eval-taft-3-7-2"}) {
    HopfPairing p = build_pairing(name);
    CHECK(same_structure(quantum_double(p), quantum_double_cop_route(p)));
  }
}

TEST_CASE("coalgebra of the double is the tensor coalgebra of K*cop and H") {
  for (const auto& name : {"eval-sweedler4", "sign-s3-c2"}) {
    HopfPairing p = build_pairing(name);
    HopfAlgebraData d = quantum_double(p);
    HopfAlgebraData t = tensor_product(variant(dual(p.k_alg), Variant::cop), p.h_alg);
    CHECK(d.comult == t.comult);
    CHECK(d.counit == t.counit);
  }
}

TEST_CASE("drinfeld double of the taft algebra verifies") {
  HopfAlgebraData d = drinfeld_double(build_hopf("taft-3-7-2"));
  CHECK(d.dim == 81);
  CHECK(verify_hopf(d).overall());
}
