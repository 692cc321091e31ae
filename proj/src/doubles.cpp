#include "hopfca/doubles.hpp"

namespace hopfca {

namespace {

// Multiply two dense elements of an algebra given by a sparse product table.
Vec table_mul(const Vec& u, const Vec& v, const std::vector<std::vector<SparseVecT>>& prod,
              const FieldSpec& f) {
  Vec r(u.size(), Scalar::zero(f));
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      for (const auto& [k, w] : prod[i][j]) r[k] += u[i] * v[j] * w;
    }
  }
  return r;
}

HopfAlgebraData build_double(const HopfPairing& p, bool via_cop_object) {
  const HopfAlgebraData& K = p.k_alg;
  const HopfAlgebraData& H = p.h_alg;
  const FieldSpec& f = K.field;
  HopfAlgebraData Kstar = dual(K);
  HopfAlgebraData Kleg = via_cop_object ? variant(Kstar, Variant::cop) : Kstar;
  int nk = K.dim, nh = H.dim, n = nk * nh;
  Matrix sb = sigma_bar(p);

  // Multiplication: (e_i* join f_j)(e_k* join f_l) with the k* Sweedler legs
  // taken through Delta of K* (or, on the alternative route, through the
  // materialized K*cop coproduct with the leg pattern reversed to match).
  Matrix mult(f, n * n, n);
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < nh; ++j)
      for (int k = 0; k < nk; ++k)
        for (int l = 0; l < nh; ++l) {
          SparseTensor t = SparseTensor::basis(f, {nk, nk, nh, nh}, {i, k, j, l});
          t = Kleg.delta(t, 1);
          t = Kleg.delta(t, 1);  // legs: i, k1, k2, k3, j, l
          t = H.delta(t, 4);
          t = H.delta(t, 4);  // legs: i, k1, k2, k3, j1, j2, j3, l
          if (via_cop_object) {
            // cop legs reverse the K* legs: sigma hits cop leg 1, sigma-bar leg 3
            t = t.contract_form(1, 4, p.form);   // legs: i, c2, c3, j2, j3, l
            t = t.contract_form(2, 4, sb);       // legs: i, c2, j2, l
          } else {
            t = t.contract_form(3, 4, p.form);   // sigma(k*3, h1); legs: i, k1, k2, j2, j3, l
            t = t.contract_form(1, 4, sb);       // sigma-bar(k*1, h3); legs: i, k2, j2, l
          }
          t = Kstar.mu(t, 0);  // e_i* k*2
          t = H.mu(t, 1);      // h2 h'
          Vec row = t.to_dense();  // dims {nk, nh} flat = the double's basis order
          for (int m = 0; m < n; ++m) mult.at((i * nh + j) * n + (k * nh + l), m) = row[m];
        }

  // Tensor coalgebra of K*cop and H.
  Matrix comult(f, n, n * n);
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < nh; ++j) {
      SparseTensor t = SparseTensor::basis(f, {nk, nh}, {i, j});
      t = Kstar.delta(t, 0);  // i1, i2, j
      t = H.delta(t, 2);      // i1, i2, j1, j2
      t = t.swap_legs(0, 1).swap_legs(1, 2);  // i2, j1, i1, j2
      Vec row = t.to_dense();
      for (int m = 0; m < n * n; ++m) comult.at(i * nh + j, m) = row[m];
    }

  Vec unit(n, Scalar::zero(f)), counit(n, Scalar::zero(f));
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < nh; ++j) {
      unit[i * nh + j] = K.counit[i] * H.unit[j];    // eps_K join 1_H
      counit[i * nh + j] = K.unit[i] * H.counit[j];  // <e_i*, 1_K> eps_H
    }

  // S(k* join h) = (eps join S_H(h)) (S_{K*}^{-1}(k*) join 1), computed in
  // the double's own multiplication.
  auto prod = prod_table(mult);
  Matrix antipode(f, n, n);
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < nh; ++j) {
      Vec u(n, Scalar::zero(f)), v(n, Scalar::zero(f));
      for (int m = 0; m < nk; ++m)
        for (int q = 0; q < nh; ++q) u[m * nh + q] = K.counit[m] * H.antipode.at(q, j);
      for (int a = 0; a < nk; ++a)
        for (int b = 0; b < nh; ++b) v[a * nh + b] = Kstar.antipode_inv.at(a, i) * H.unit[b];
      Vec s = table_mul(u, v, prod, f);
      for (int m = 0; m < n; ++m) antipode.at(m, i * nh + j) = s[m];
    }

  return make_hopf("double(" + p.name + ")", f, n, std::move(mult), std::move(unit),
                   std::move(comult), std::move(counit), std::move(antipode));
}

}  // namespace

HopfAlgebraData quantum_double(const HopfPairing& p) { return build_double(p, false); }

HopfAlgebraData quantum_double_cop_route(const HopfPairing& p) { return build_double(p, true); }

HopfAlgebraData drinfeld_double(const HopfAlgebraData& h) {
  HopfAlgebraData d = quantum_double(standard_pairing(PairingKind::evaluation, h, h));
  d.name = "drinfeld(" + h.name + ")";
  return d;
}

}  // namespace hopfca
