#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfca/modcats.hpp"
#include "hopfca/registry.hpp"

using namespace hopfca;

namespace {

// K* with regular actions and the coproduct-with-twist coaction over
// K*cop (x) H*: m -> sum m2 (x) (m1 (x) sigma_l(m3)).
DoiHopfModule regular_doihopf(const HopfPairing& p) {
  HopfAlgebraData Ks = dual(p.k_alg);
  Matrix sl = induced_maps(p).sigma_l.matrix;
  int nk = Ks.dim, nh = p.h_alg.dim;
  Matrix coaction(Ks.field, nk, nk * nk * nh);
  for (int m = 0; m < nk; ++m) {
    SparseTensor t = Ks.delta(Ks.delta(Ks.elem(m), 0), 0);
    t = t.map_leg(2, sl).swap_legs(0, 1);  // legs m2, m1, sigma_l(m3)
    Vec row = t.to_dense();
    for (int c = 0; c < nk * nk * nh; ++c) coaction.at(m, c) = row[c];
  }
  return {"regular(" + p.name + ")", p, nk, Ks.mult, Ks.mult, coaction};
}

}  // namespace

TEST_CASE("trivial modules verify over every registry pairing") {
  for (const auto& name : registry_pairing_names())
    for (int flavor : {1, 2}) {
      YdModule v = trivial_yd(build_pairing(name), flavor);
      VerificationReport rep = verify_object(v);
      INFO(name, " flavor ", flavor, ": first failure ", rep.first_failure());
      CHECK(rep.overall());
    }
}

TEST_CASE("a group-like twisted coaction breaks the compatibility only") {
  HopfPairing p = build_pairing("eval-sweedler4");
  YdModule v = trivial_yd(p, 1);
  // replace v -> v (x) 1 by v -> v (x) g; still a comodule, no longer
  // compatible with the counit action
  v.coaction.at(0, 0) = Scalar::zero(p.k_alg.field);
  v.coaction.at(0, 2) = Scalar::one(p.k_alg.field);
  VerificationReport rep = verify_object(v);
  CHECK_FALSE(rep.overall());
  for (const auto& e : rep.entries()) {
    if (e.check_id == "yd-compatibility") {
      CHECK_FALSE(e.pass);
      REQUIRE(e.witness.has_value());
      CHECK_FALSE(e.witness->indices.empty());
    } else {
      CHECK(e.pass);
    }
  }
}

TEST_CASE("tensor products of modules stay in the category") {
  for (const auto& name : {"eval-sweedler4", "sign-s3-c2", "quot-c4-c2"}) {
    HopfPairing p = build_pairing(name);
    for (int flavor : {1, 2}) {
      YdModule t = trivial_yd(p, flavor);
      YdModule tt = yd_tensor(t, t);
      CHECK(tt.dim == 1);
      CHECK(verify_object(tt).overall());
    }
  }
}

TEST_CASE("tensoring across flavors or pairings is rejected") {
  HopfPairing p = build_pairing("eval-c2");
  CHECK_THROWS_AS(yd_tensor(trivial_yd(p, 1), trivial_yd(p, 2)), FlavorMismatch);
  CHECK_THROWS_AS(yd_tensor(trivial_yd(p, 1), trivial_yd(build_pairing("eval-c3"), 1)),
                  FlavorMismatch);
}

TEST_CASE("the regular coefficient object is a valid relative module") {
  for (const auto& name : {"eval-c3", "eval-sweedler4", "sign-s3-c2"}) {
    DoiHopfModule m = regular_doihopf(build_pairing(name));
    VerificationReport rep = verify_object(m);
    INFO(name, ": first failure ", rep.first_failure());
    CHECK(rep.overall());
  }
}

TEST_CASE("unit objects of the two-sided categories verify") {
  for (const auto& name : {"eval-c2", "eval-sweedler4", "sign-s3-c2", "trivial-c2-c3"}) {
    HopfPairing p = build_pairing(name);
    for (auto side : {TwoSidedModule::Side::primal, TwoSidedModule::Side::dual}) {
      TwoSidedModule u = two_sided_unit(p, side);
      VerificationReport rep = verify_object(u);
      INFO(name, (side == TwoSidedModule::Side::primal ? " primal" : " dual"),
           ": first failure ", rep.first_failure());
      CHECK(rep.overall());
    }
  }
}

TEST_CASE("a perturbed coaction entry fails with a witness") {
  TwoSidedModule u = two_sided_unit(build_pairing("eval-sweedler4"), TwoSidedModule::Side::primal);
  u.right_coaction.at(1, 2) += Scalar::one(u.right_coaction.field());
  VerificationReport rep = verify_object(u);
  CHECK_FALSE(rep.overall());
  for (const auto& e : rep.entries())
    if (!e.pass) {
      REQUIRE(e.witness.has_value());
      CHECK_FALSE(e.witness->indices.empty());
      break;
    }
}

TEST_CASE("two-sided tensor products stay in the category") {
  for (const auto& name : {"eval-sweedler4", "sign-s3-c2"}) {
    HopfPairing p = build_pairing(name);
    for (auto side : {TwoSidedModule::Side::primal, TwoSidedModule::Side::dual}) {
      TwoSidedModule u = two_sided_unit(p, side);
      TwoSidedTensor t = two_sided_tensor(u, u);
      // tensoring with the unit is the identity up to isomorphism
      CHECK(t.object.dim == u.dim);
      CHECK(t.projection * t.section == Matrix::identity(p.k_alg.field, t.object.dim));
      VerificationReport rep = verify_object(t.object);
      INFO(name, (side == TwoSidedModule::Side::primal ? " primal" : " dual"),
           ": first failure ", rep.first_failure());
      CHECK(rep.overall());
    }
  }
}

TEST_CASE("cotensor with the coalgebra itself recovers the module") {
  for (const auto& name : {"c3", "sweedler4", "s3"}) {
    HopfAlgebraData k = build_hopf(name);
    // K [] K inside K (x) K has the dimension of K
    Subspace s = cotensor(k.comult, k.comult, k.dim);
    CHECK(s.dim() == k.dim);
  }
}

TEST_CASE("distinct group-like coactions have zero cotensor") {
  HopfAlgebraData c2 = build_hopf("c2");
  const FieldSpec& f = c2.field;
  Matrix rho(f, 1, 2), lam(f, 1, 2);
  rho.at(0, 1) = Scalar::one(f);  // v -> v (x) g
  lam.at(0, 0) = Scalar::one(f);  // w -> 1 (x) w
  CHECK(cotensor(rho, lam, 2).dim() == 0);
  Matrix lam2(f, 1, 2);
  lam2.at(0, 1) = Scalar::one(f);  // w -> g (x) w
  CHECK(cotensor(rho, lam2, 2).dim() == 1);
}

TEST_CASE("cotensor over the ground field is the full tensor product") {
  FieldSpec f = FieldSpec::rationals();
  Matrix rho(f, 3, 3), lam(f, 2, 2);
  for (int i = 0; i < 3; ++i) rho.at(i, i) = Scalar::one(f);
  for (int i = 0; i < 2; ++i) lam.at(i, i) = Scalar::one(f);
  Subspace s = cotensor(rho, lam, 1);
  CHECK(s.dim() == 6);
}

TEST_CASE("coinvariants of the regular coaction are the scalars") {
  for (const auto& name : {"c4", "s3", "sweedler4", "taft-3-7-2"}) {
    HopfAlgebraData h = build_hopf(name);
    Subspace s = coinvariants(h.comult, h.unit);
    REQUIRE(s.dim() == 1);
    // spanned by the unit element
    Vec col = s.inclusion.col(0);
    Scalar lead = Scalar::zero(h.field);
    for (int i = 0; i < h.dim && lead.is_zero(); ++i) lead = col[i];
    for (int i = 0; i < h.dim; ++i) CHECK(col[i] == lead * h.unit[i]);
  }
}

TEST_CASE("trivial coactions have full coinvariants") {
  HopfAlgebraData c2 = build_hopf("c2");
  Matrix rho(c2.field, 3, 6);
  for (int i = 0; i < 3; ++i) rho.at(i, i * 2) = Scalar::one(c2.field);
  CHECK(coinvariants(rho, c2.unit).dim() == 3);
}

TEST_CASE("tensor over the algebra itself collapses one factor") {
  for (const auto& name : {"c3", "sweedler4"}) {
    HopfAlgebraData k = build_hopf(name);
    HopfAlgebraData ks = dual(k);
    Quotient q = tensor_over_algebra(ks.mult, ks.mult, ks.dim);
    CHECK(q.dim() == ks.dim);
    CHECK(q.projection * q.section == Matrix::identity(k.field, q.dim()));
  }
}

TEST_CASE("tensor over the ground field is the full tensor product") {
  FieldSpec f = FieldSpec::rationals();
  Matrix r(f, 2, 2), l(f, 3, 3);
  for (int i = 0; i < 2; ++i) r.at(i, i) = Scalar::one(f);
  for (int i = 0; i < 3; ++i) l.at(i, i) = Scalar::one(f);
  CHECK(tensor_over_algebra(r, l, 1).dim() == 6);
}

TEST_CASE("tensor over an algebra is dual to cotensor of the duals") {
  HopfAlgebraData a = build_hopf("c2");
  const FieldSpec& f = a.field;
  // M: right regular; N: g acting by a sign
  Matrix ract = a.mult;
  Matrix lact(f, 4, 2);
  lact.at(0, 0) = Scalar::one(f);
  lact.at(1, 1) = Scalar::one(f);
  lact.at(2, 0) = Scalar::one(f);
  lact.at(3, 1) = Scalar::from_long(f, -1);
  Quotient q = tensor_over_algebra(ract, lact, 2);
  // transpose both structures onto the dual spaces
  Matrix rho(f, 2, 4), lam(f, 2, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int x = 0; x < 2; ++x) {
        rho.at(i, j * 2 + x) = ract.at(j * 2 + x, i);
        lam.at(i, x * 2 + j) = lact.at(x * 2 + j, i);
      }
  CHECK(cotensor(rho, lam, 2).dim() == q.dim());
}

TEST_CASE("augmentation quotient of the dual regular module is a line") {
  for (const auto& name : {"c3", "s3", "sweedler4"}) {
    HopfAlgebraData k = build_hopf(name);
    HopfAlgebraData ks = dual(k);
    Quotient q = augmentation_quotient(ks.mult, ks.counit);
    CHECK(q.dim() == 1);
  }
}

TEST_CASE("a trivial right action leaves the quotient whole") {
  HopfAlgebraData k = build_hopf("c2");
  HopfAlgebraData ks = dual(k);
  Matrix ract(k.field, 3 * 2, 3);
  for (int m = 0; m < 3; ++m)
    for (int a = 0; a < 2; ++a) ract.at(m * 2 + a, m) = ks.counit[a];
  CHECK(augmentation_quotient(ract, ks.counit).dim() == 3);
}

TEST_CASE("augmentation quotients and coinvariants are dual in dimension") {
  for (const auto& name : {"c2", "c4", "sweedler4"}) {
    HopfAlgebraData k = build_hopf(name);
    HopfAlgebraData ks = dual(k);
    // N = K* with the regular right action; N* carries the transposed coaction
    Quotient q = augmentation_quotient(ks.mult, ks.counit);
    int n = ks.dim;
    Matrix rho(k.field, n, n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int a = 0; a < n; ++a) rho.at(i, j * n + a) = ks.mult.at(j * n + a, i);
    // the transposed leg is indexed by the K* basis, so the coinvariant
    // condition compares against the counit of K* as a coordinate vector
    CHECK(coinvariants(rho, ks.counit).dim() == q.dim());
  }
}

TEST_CASE("hit actions are inverse index transpositions") {
  HopfAlgebraData sw = build_hopf("sweedler4");
  Matrix rho = sw.comult;  // right self-coaction
  Matrix act = left_action_from_right_coaction(rho, sw.dim);
  CHECK(right_coaction_from_left_action(act, sw.dim) == rho);
  // left comodule side via the coproduct read as a left coaction
  Matrix lam = sw.comult;
  Matrix ract = right_action_from_left_coaction(lam, sw.dim);
  CHECK(left_coaction_from_right_action(ract, sw.dim) == lam);
}

TEST_CASE("the hit action of the dual on a group algebra is diagonal") {
  HopfAlgebraData c2 = build_hopf("c2");
  Matrix act = left_action_from_right_coaction(c2.comult, 2);
  // e_a* picks out the group-like e_a
  for (int a = 0; a < 2; ++a)
    for (int m = 0; m < 2; ++m)
      for (int w = 0; w < 2; ++w) {
        Scalar expect = (a == m && m == w) ? Scalar::one(c2.field) : Scalar::zero(c2.field);
        CHECK(act.at(a * 2 + m, w) == expect);
      }
}

TEST_CASE("regular representations are valid modules") {
  for (const auto& name : {"sweedler4", "s3", "taft-3-7-2"}) {
    HopfAlgebraData h = build_hopf(name);
    RepModule r{"regular(" + h.name + ")", h, h.dim, h.mult};
    CHECK(verify_object(r).overall());
  }
}

TEST_CASE("a zero action fails the unit law") {
  HopfAlgebraData h = build_hopf("c2");
  RepModule r{"zero", h, 2, Matrix::zero(h.field, 4, 2)};
  VerificationReport rep = verify_object(r);
  CHECK_FALSE(rep.overall());
  CHECK(rep.first_failure() == "module");
}

TEST_CASE("shape errors are rejected before any ledger runs") {
  HopfPairing p = build_pairing("eval-c2");
  YdModule v = trivial_yd(p, 1);
  v.coaction = Matrix::zero(p.k_alg.field, 1, 3);
  CHECK_THROWS_AS(verify_object(v), ShapeMismatch);
  CHECK_THROWS_AS(trivial_yd(p, 3), BadParams);
}
