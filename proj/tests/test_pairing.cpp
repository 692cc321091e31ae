#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfca/registry.hpp"

using namespace hopfca;

TEST_CASE("every registry pairing verifies") {
  for (const auto& name : registry_pairing_names()) {
    HopfPairing p = build_pairing(name);
    VerificationReport rep = verify_pairing(p);
    INFO(name, ": first failure ", rep.first_failure());
    CHECK(rep.overall());
  }
}

TEST_CASE("perturbed evaluation pairing fails with a witness") {
  HopfPairing p = build_pairing("eval-sweedler4");
  p.form.at(0, 1) += Scalar::one(p.k_alg.field);
  VerificationReport rep = verify_pairing(p);
  CHECK_FALSE(rep.overall());
  bool witnessed = false;
  for (const auto& e : rep.entries())
    if (!e.pass) {
      REQUIRE(e.witness.has_value());
      CHECK_FALSE(e.witness->indices.empty());
      witnessed = true;
    }
  CHECK(witnessed);
}

TEST_CASE("induced maps") {
  {
    HopfPairing p = build_pairing("eval-sweedler4");
    InducedMaps m = induced_maps(p);
    CHECK(m.sigma_r.matrix == Matrix::identity(p.k_alg.field, 4));
    CHECK(m.sigma_l.matrix == m.sigma_r.matrix.transpose());
  }
  {
    HopfPairing p = build_pairing("trivial-c2-c3");
    InducedMaps m = induced_maps(p);
    // sigma_r(h) = eps(h) 1_K
    Matrix expect(p.k_alg.field, 2, 3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) expect.at(i, j) = p.k_alg.unit[i] * p.h_alg.counit[j];
    CHECK(m.sigma_r.matrix == expect);
  }
  {
    HopfPairing p = build_pairing("sign-s3-c2");
    InducedMaps m = induced_maps(p);
    CHECK(m.sigma_r.matrix == p.form);
    CHECK(rank(m.sigma_r.matrix) == 2);        // surjective
    CHECK(kernel_basis(m.sigma_r.matrix).size() == 4);  // not injective
    CHECK(m.sigma_l.matrix == m.sigma_r.matrix.transpose());
  }
}

TEST_CASE("from_map rejects non Hopf maps") {
  HopfAlgebraData c2 = build_hopf("c2");
  Matrix m = Matrix::from_rows(c2.field, 2, 2, {0, 1, 1, 0});  // swaps 1 and g
  LinearMap f{"c2", "c2", m};
  CHECK_THROWS_AS(standard_pairing(PairingKind::from_map, c2, c2, &f), NotHopfMap);
}

TEST_CASE("evaluation requires K = H") {
  CHECK_THROWS_AS(
      standard_pairing(PairingKind::evaluation, build_hopf("c2"), build_hopf("c3")),
      AlgebraMismatch);
}

TEST_CASE("sigma_bar") {
  {
    HopfPairing p = build_pairing("trivial-c2-c3");
    CHECK(sigma_bar(p) == p.form);  // counits absorb the inverse antipode
  }
  {
    HopfPairing p = build_pairing("eval-c2");
    CHECK(sigma_bar(p) == p.form);
  }
  {
    HopfPairing p = build_pairing("eval-sweedler4");
    CHECK(sigma_bar(p) == p.form * p.h_alg.antipode_inv);  // assertion inside must pass
  }
  {
    HopfPairing p = build_pairing("eval-taft-3-7-2");
    CHECK(sigma_bar(p) == p.form * p.h_alg.antipode_inv);
  }
}
