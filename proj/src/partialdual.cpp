#include "hopfca/partialdual.hpp"

#include <set>

#include "hopfca/registry.hpp"

namespace hopfca {

namespace {

Scalar coeff_at(const SparseTensor& t, const std::vector<int>& idx) {
  auto it = t.terms().find(idx);
  return it == t.terms().end() ? Scalar::zero(t.field()) : it->second;
}

// Equality with witness extraction; ctx indices prefix the differing
// multi-index so a loop over outer basis elements stays identifiable.
bool tensor_eq(const SparseTensor& a, const SparseTensor& b, const std::vector<int>& ctx,
               Witness& w) {
  SparseTensor d = a;
  d.add(b.scaled(Scalar::from_long(a.field(), -1)));
  if (d.terms().empty()) return true;
  const std::vector<int>& idx = d.terms().begin()->first;
  w.indices = ctx;
  w.indices.insert(w.indices.end(), idx.begin(), idx.end());
  w.lhs = coeff_at(a, idx).str();
  w.rhs = coeff_at(b, idx).str();
  return false;
}

bool mat_eq(const Matrix& a, const Matrix& b, Witness& w) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) {
        w = {{i, j}, a.at(i, j).str(), b.at(i, j).str()};
        return false;
      }
  return true;
}

bool vec_eq(const Vec& a, const Vec& b, Witness& w) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) {
      w = {{static_cast<int>(i)}, a[i].str(), b[i].str()};
      return false;
    }
  return true;
}

// Coaction rows as expansion tables for SparseTensor::expand_leg.
std::vector<SparsePairT> rho_table(const ComoduleAlgebra& b) {
  int na = b.ambient.dim, n = b.carrier_dim;
  std::vector<SparsePairT> t(n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < na; ++a)
      for (int j = 0; j < n; ++j) {
        const Scalar& c = b.coaction.at(i, a * n + j);
        if (!c.is_zero()) t[i].push_back({a, j, c});
      }
  return t;
}

// Right action as a merge table: [carrier index][ambient index] -> result.
std::vector<std::vector<SparseVecT>> act_table(const ModuleCoalgebra& c) {
  int na = c.ambient.dim, n = c.carrier_dim;
  std::vector<std::vector<SparseVecT>> t(n, std::vector<SparseVecT>(na));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < na; ++a)
      for (int j = 0; j < n; ++j) {
        const Scalar& v = c.action.at(i * na + a, j);
        if (!v.is_zero()) t[i][a].push_back({j, v});
      }
  return t;
}

// The dual-basis coaction of C*: e_x* -> sum (C* leg) (x) (ambient* leg),
// determined by pairing against the right action on C.
std::vector<SparsePairT> cstar_coaction_table(const ModuleCoalgebra& c) {
  int na = c.ambient.dim, n = c.carrier_dim;
  std::vector<SparsePairT> t(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int a = 0; a < na; ++a) {
        const Scalar& v = c.action.at(y * na + a, x);
        if (!v.is_zero()) t[x].push_back({y, a, v});
      }
  return t;
}

// The hit action of the ambient on C*: [ambient a][x] -> a harpoon e_x*.
std::vector<std::vector<SparseVecT>> hit_table(const ModuleCoalgebra& c) {
  int na = c.ambient.dim, n = c.carrier_dim;
  std::vector<std::vector<SparseVecT>> t(na, std::vector<SparseVecT>(n));
  for (int a = 0; a < na; ++a)
    for (int x = 0; x < n; ++x)
      for (int z = 0; z < n; ++z) {
        const Scalar& v = c.action.at(z * na + a, x);
        if (!v.is_zero()) t[a][x].push_back({z, v});
      }
  return t;
}

Vec basis_vec(const FieldSpec& f, int n, int i) {
  Vec v(n, Scalar::zero(f));
  v[i] = Scalar::one(f);
  return v;
}

// Flattens consecutive leg pairs (c, b) into single legs of dimension nc*nb.
SparseTensor regroup_pairs(const SparseTensor& t, int nc, int nb) {
  int pairs = t.legs() / 2;
  SparseTensor r(t.field(), std::vector<int>(pairs, nc * nb));
  for (const auto& [idx, c] : t.terms()) {
    std::vector<int> out(pairs);
    for (int p = 0; p < pairs; ++p) out[p] = idx[2 * p] * nb + idx[2 * p + 1];
    r.add_term(out, c);
  }
  return r;
}

// Componentwise product of two sparse elements of a k-fold tensor power of
// the algebra given by prod.
SparseTensor power_mul(const SparseTensor& u, const SparseTensor& v,
                       const std::vector<std::vector<SparseVecT>>& prod) {
  SparseTensor r(u.field(), u.dims());
  int k = u.legs();
  std::vector<int> out(k);
  for (const auto& [iu, cu] : u.terms())
    for (const auto& [iv, cv] : v.terms()) {
      // expand the product leg by leg
      std::vector<std::pair<std::vector<int>, Scalar>> acc{{{}, cu * cv}};
      for (int p = 0; p < k; ++p) {
        std::vector<std::pair<std::vector<int>, Scalar>> next;
        for (const auto& [pref, c] : acc)
          for (const auto& [o, w] : prod[iu[p]][iv[p]]) {
            std::vector<int> np = pref;
            np.push_back(o);
            next.push_back({std::move(np), c * w});
          }
        acc = std::move(next);
      }
      for (const auto& [idx, c] : acc) r.add_term(idx, c);
    }
  return r;
}

// All primal conditions; also run on the dualized system with prefix "dual-".
void verify_pams_core(const Pams& s, const std::string& pre, VerificationReport& rep) {
  const HopfAlgebraData& A = s.ambient;
  const FieldSpec& f = A.field;
  int na = A.dim, nb = s.b.carrier_dim, nc = s.c.carrier_dim;
  auto prodB = prod_table(s.b.algebra_mult);
  auto copC = cop_table(s.c.comult);
  auto rhoT = rho_table(s.b);
  auto actT = act_table(s.c);
  Vec oneC = s.pi.matrix.apply(A.unit);
  Vec epsB = (Matrix::row_vec(A.counit) * s.iota.matrix).row(0);

  // B is a comodule algebra over the ambient.
  {
    bool ok = true;
    Witness w;
    for (int b = 0; b < nb && ok; ++b) {
      SparseTensor t = SparseTensor::basis(f, {nb}, {b});
      SparseTensor r = t.expand_leg(0, rhoT, na, nb);
      ok = tensor_eq(A.delta(r, 0), r.expand_leg(1, rhoT, na, nb), {b}, w) &&
           tensor_eq(r.contract_leg(0, A.counit), t, {b}, w);
    }
    for (int b1 = 0; b1 < nb && ok; ++b1)
      for (int b2 = 0; b2 < nb && ok; ++b2) {
        SparseTensor t = SparseTensor::basis(f, {nb, nb}, {b1, b2});
        SparseTensor lhs = t.merge_legs(0, prodB, nb).expand_leg(0, rhoT, na, nb);
        SparseTensor rhs = t.expand_leg(0, rhoT, na, nb)
                               .expand_leg(2, rhoT, na, nb)
                               .swap_legs(1, 2);
        rhs = A.mu(rhs, 0).merge_legs(1, prodB, nb);
        ok = tensor_eq(lhs, rhs, {b1, b2}, w);
      }
    if (ok) {
      Vec u(static_cast<size_t>(na) * nb, Scalar::zero(f));
      for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b) u[a * nb + b] = A.unit[a] * s.b.algebra_unit[b];
      SparseTensor one = SparseTensor::from_dense(f, {nb}, s.b.algebra_unit);
      ok = tensor_eq(one.expand_leg(0, rhoT, na, nb),
                     SparseTensor::from_dense(f, {na, nb}, u), {}, w);
    }
    rep.add(pre + "B-comodule-algebra", ok, w);
  }

  // C is a module coalgebra over the ambient.
  {
    bool ok = true;
    Witness w;
    for (int c = 0; c < nc && ok; ++c)
      for (int a1 = 0; a1 < na && ok; ++a1)
        for (int a2 = 0; a2 < na && ok; ++a2) {
          SparseTensor t = SparseTensor::basis(f, {nc, na, na}, {c, a1, a2});
          SparseTensor lhs = t.merge_legs(0, actT, nc).merge_legs(0, actT, nc);
          SparseTensor rhs = A.mu(t, 1).merge_legs(0, actT, nc);
          ok = tensor_eq(lhs, rhs, {c, a1, a2}, w);
        }
    for (int c = 0; c < nc && ok; ++c) {
      SparseTensor t = SparseTensor::basis(f, {nc}, {c});
      ok = tensor_eq(t.insert_leg(1, A.unit).merge_legs(0, actT, nc), t, {c}, w);
    }
    for (int c = 0; c < nc && ok; ++c)
      for (int a = 0; a < na && ok; ++a) {
        SparseTensor t = SparseTensor::basis(f, {nc, na}, {c, a});
        SparseTensor acted = t.merge_legs(0, actT, nc);
        SparseTensor lhs = acted.expand_leg(0, copC, nc, nc);
        SparseTensor rhs = t.expand_leg(0, copC, nc, nc);
        rhs = A.delta(rhs, 2).swap_legs(1, 2);
        rhs = rhs.merge_legs(0, actT, nc);
        // legs now: c1 <| a1, c2, a2; act on the trailing pair
        rhs = rhs.merge_legs(1, actT, nc);
        ok = tensor_eq(lhs, rhs, {c, a}, w) &&
             tensor_eq(acted.contract_leg(0, s.c.counit),
                       t.contract_leg(0, s.c.counit).contract_leg(0, A.counit), {c, a}, w);
      }
    rep.add(pre + "C-module-coalgebra", ok, w);
  }

  // (1) iota is an injective comodule algebra map.
  {
    bool ok = rank(s.iota.matrix) == nb;
    Witness w;
    if (!ok) w = {{}, std::to_string(rank(s.iota.matrix)), std::to_string(nb)};
    if (ok) ok = vec_eq(s.iota.matrix.apply(s.b.algebra_unit), A.unit, w);
    for (int b1 = 0; b1 < nb && ok; ++b1)
      for (int b2 = 0; b2 < nb && ok; ++b2) {
        SparseTensor t = SparseTensor::basis(f, {nb, nb}, {b1, b2});
        SparseTensor lhs = t.merge_legs(0, prodB, nb).map_leg(0, s.iota.matrix);
        SparseTensor rhs =
            A.mu(t.map_leg(0, s.iota.matrix).map_leg(1, s.iota.matrix), 0);
        ok = tensor_eq(lhs, rhs, {b1, b2}, w);
      }
    for (int b = 0; b < nb && ok; ++b) {
      SparseTensor t = SparseTensor::basis(f, {nb}, {b});
      SparseTensor lhs = A.delta(t.map_leg(0, s.iota.matrix), 0);
      SparseTensor rhs = t.expand_leg(0, rhoT, na, nb).map_leg(1, s.iota.matrix);
      ok = tensor_eq(lhs, rhs, {b}, w);
    }
    rep.add(pre + "1-iota-comodule-algebra-injection", ok, w);
  }

  // (1) pi is a surjective module coalgebra map.
  {
    bool ok = rank(s.pi.matrix) == nc;
    Witness w;
    if (!ok) w = {{}, std::to_string(rank(s.pi.matrix)), std::to_string(nc)};
    if (ok)
      ok = mat_eq(Matrix::row_vec(s.c.counit) * s.pi.matrix, Matrix::row_vec(A.counit), w);
    for (int x = 0; x < na && ok; ++x) {
      SparseTensor t = SparseTensor::basis(f, {na}, {x});
      SparseTensor lhs = t.map_leg(0, s.pi.matrix).expand_leg(0, copC, nc, nc);
      SparseTensor rhs = A.delta(t, 0).map_leg(0, s.pi.matrix).map_leg(1, s.pi.matrix);
      ok = tensor_eq(lhs, rhs, {x}, w);
    }
    for (int x = 0; x < na && ok; ++x)
      for (int a = 0; a < na && ok; ++a) {
        SparseTensor t = SparseTensor::basis(f, {na, na}, {x, a});
        SparseTensor lhs = A.mu(t, 0).map_leg(0, s.pi.matrix);
        SparseTensor rhs = t.map_leg(0, s.pi.matrix).merge_legs(0, actT, nc);
        ok = tensor_eq(lhs, rhs, {x, a}, w);
      }
    rep.add(pre + "1-pi-module-coalgebra-surjection", ok, w);
  }

  // (2) the image of iota is the coinvariant subspace of (id (x) pi) o Delta.
  std::vector<Vec> coinv;
  {
    Matrix D(f, na * nc, na);
    for (int x = 0; x < na; ++x) {
      for (const auto& [u, v, wgt] : A.cop[x])
        for (int c = 0; c < nc; ++c) D.at(u * nc + c, x) += wgt * s.pi.matrix.at(c, v);
      for (int c = 0; c < nc; ++c) D.at(x * nc + c, x) -= oneC[c];
    }
    coinv = kernel_basis(D);
    Matrix cmat = columns(f, na, coinv);
    Matrix both(f, na, nb + static_cast<int>(coinv.size()));
    for (int i = 0; i < na; ++i) {
      for (int j = 0; j < nb; ++j) both.at(i, j) = s.iota.matrix.at(i, j);
      for (size_t j = 0; j < coinv.size(); ++j) both.at(i, nb + static_cast<int>(j)) = coinv[j][i];
    }
    bool ok = rank(cmat) == nb && rank(both) == nb && rank(s.iota.matrix) == nb;
    Witness w;
    if (!ok) w = {{}, std::to_string(rank(cmat)), std::to_string(nb)};
    rep.add(pre + "2-coinvariants", ok, w);
    bool dok = (na % nc == 0) && static_cast<int>(coinv.size()) == na / nc;
    Witness dw;
    if (!dok) dw = {{}, std::to_string(coinv.size()), std::to_string(na) + "/" + std::to_string(nc)};
    rep.add(pre + "2-dimension", dok, dw);
  }

  // (3) the cached convolution inverses are correct.
  {
    bool ok = true;
    Witness w;
    try {
      AlgebraOps balg{nb, prodB, s.b.algebra_unit};
      ok = mat_eq(convolution_inverse(s.zeta.matrix, A.coalgebra_ops(), balg),
                  s.zeta_bar.matrix, w);
    } catch (const NotConvolutionInvertible&) {
      ok = false;
      w = {{}, "not invertible", "zeta_bar"};
    }
    rep.add(pre + "3-zeta-inverse", ok, w);
    bool gok = true;
    Witness gw;
    try {
      CoalgebraOps ccoa{nc, copC, s.c.counit};
      gok = mat_eq(convolution_inverse(s.gamma.matrix, ccoa, A.algebra_ops()),
                   s.gamma_bar.matrix, gw);
    } catch (const NotConvolutionInvertible&) {
      gok = false;
      gw = {{}, "not invertible", "gamma_bar"};
    }
    rep.add(pre + "3-gamma-inverse", gok, gw);
  }

  // (4) zeta is left B-linear along iota; gamma is right C-colinear along pi.
  {
    bool ok = true;
    Witness w;
    for (int b = 0; b < nb && ok; ++b)
      for (int x = 0; x < na && ok; ++x) {
        SparseTensor t = SparseTensor::basis(f, {nb, na}, {b, x});
        SparseTensor lhs = A.mu(t.map_leg(0, s.iota.matrix), 0).map_leg(0, s.zeta.matrix);
        SparseTensor rhs = t.map_leg(1, s.zeta.matrix).merge_legs(0, prodB, nb);
        ok = tensor_eq(lhs, rhs, {b, x}, w);
      }
    rep.add(pre + "4-zeta-left-linear", ok, w);
    bool gok = true;
    Witness gw;
    for (int c = 0; c < nc && gok; ++c) {
      SparseTensor t = SparseTensor::basis(f, {nc}, {c});
      SparseTensor lhs = A.delta(t.map_leg(0, s.gamma.matrix), 0).map_leg(1, s.pi.matrix);
      SparseTensor rhs = t.expand_leg(0, copC, nc, nc).map_leg(0, s.gamma.matrix);
      gok = tensor_eq(lhs, rhs, {c}, gw);
    }
    rep.add(pre + "4-gamma-right-colinear", gok, gw);
  }

  // (5) units and counits match on both maps.
  {
    bool ok = true;
    Witness w;
    ok = vec_eq(s.zeta.matrix.apply(A.unit), s.b.algebra_unit, w) &&
         mat_eq(Matrix::row_vec(epsB) * s.zeta.matrix, Matrix::row_vec(A.counit), w) &&
         vec_eq(s.gamma.matrix.apply(oneC), A.unit, w) &&
         mat_eq(Matrix::row_vec(A.counit) * s.gamma.matrix, Matrix::row_vec(s.c.counit), w);
    rep.add(pre + "5-units-counits", ok, w);
  }

  // (6) (iota o zeta) * (gamma o pi) is the convolution identity on the ambient.
  {
    Witness w;
    Matrix conv = convolve(s.iota.matrix * s.zeta.matrix, s.gamma.matrix * s.pi.matrix,
                           A.coalgebra_ops(), A.algebra_ops());
    rep.add(pre + "6-convolution-identity", mat_eq(conv, Matrix::identity(f, na), w), w);
  }

  // Consequences of (1)-(6): the compositions collapse.
  {
    Witness w;
    rep.add(pre + "lemma-zeta-iota",
            mat_eq(s.zeta.matrix * s.iota.matrix, Matrix::identity(f, nb), w), w);
  }
  {
    Witness w;
    rep.add(pre + "lemma-pi-gamma",
            mat_eq(s.pi.matrix * s.gamma.matrix, Matrix::identity(f, nc), w), w);
  }
  {
    Witness w;
    Matrix expect(f, nb, nc);
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nc; ++j) expect.at(i, j) = s.b.algebra_unit[i] * s.c.counit[j];
    rep.add(pre + "lemma-zeta-gamma", mat_eq(s.zeta.matrix * s.gamma.matrix, expect, w), w);
  }
}

// Mirrored conditions on the transposed maps, stated over the dual ambient.
// Each one is the transpose of a primal condition, so together they pin the
// explicit dualization of all four maps.
void verify_pams_dual_forms(const Pams& s, VerificationReport& rep) {
  const HopfAlgebraData& A = s.ambient;
  const FieldSpec& f = A.field;
  int na = A.dim, nb = s.b.carrier_dim, nc = s.c.carrier_dim;
  Matrix iotaT = s.iota.matrix.transpose();    // Amb* -> B*
  Matrix zetaT = s.zeta.matrix.transpose();    // B* -> Amb*
  Matrix piT = s.pi.matrix.transpose();        // C* -> Amb*
  Matrix gammaT = s.gamma.matrix.transpose();  // Amb* -> C*
  auto prodAs = prod_table(A.comult.transpose());
  auto copAs = cop_table(A.mult.transpose());
  auto prodCs = prod_table(s.c.comult.transpose());
  auto copBs = cop_table(s.b.algebra_mult.transpose());
  Vec oneC = s.pi.matrix.apply(A.unit);
  Vec epsB = (Matrix::row_vec(A.counit) * s.iota.matrix).row(0);

  // (d1) pi* is an injective algebra map C* -> Amb*.
  {
    bool ok = rank(piT) == nc;
    Witness w;
    if (!ok) w = {{}, std::to_string(rank(piT)), std::to_string(nc)};
    if (ok) ok = vec_eq(piT.apply(s.c.counit), A.counit, w);
    for (int x = 0; x < nc && ok; ++x)
      for (int y = 0; y < nc && ok; ++y) {
        SparseTensor t = SparseTensor::basis(f, {nc, nc}, {x, y});
        SparseTensor lhs = t.merge_legs(0, prodCs, nc).map_leg(0, piT);
        SparseTensor rhs = t.map_leg(0, piT).map_leg(1, piT).merge_legs(0, prodAs, na);
        ok = tensor_eq(lhs, rhs, {x, y}, w);
      }
    rep.add("dual-1-pi-algebra-map", ok, w);
  }

  // (d1) iota* is a surjective coalgebra map Amb* -> B*.
  {
    bool ok = rank(iotaT) == nb;
    Witness w;
    if (!ok) w = {{}, std::to_string(rank(iotaT)), std::to_string(nb)};
    if (ok)
      ok = mat_eq(Matrix::row_vec(s.b.algebra_unit) * iotaT, Matrix::row_vec(A.unit), w);
    for (int x = 0; x < na && ok; ++x) {
      SparseTensor t = SparseTensor::basis(f, {na}, {x});
      SparseTensor lhs = t.map_leg(0, iotaT).expand_leg(0, copBs, nb, nb);
      SparseTensor rhs = t.expand_leg(0, copAs, na, na).map_leg(0, iotaT).map_leg(1, iotaT);
      ok = tensor_eq(lhs, rhs, {x}, w);
    }
    rep.add("dual-1-iota-coalgebra-map", ok, w);
  }

  // (d2) the image of pi* is the coinvariant-style subspace
  // {a* : sum iota*(a*1) (x) a*2 = eps_B (x) a*}.
  {
    Matrix D(f, nb * na, na);
    for (int x = 0; x < na; ++x) {
      for (const auto& [u, v, wgt] : copAs[x])
        for (int b = 0; b < nb; ++b) D.at(b * na + v, x) += wgt * iotaT.at(b, u);
      for (int b = 0; b < nb; ++b) D.at(b * na + x, x) -= epsB[b];
    }
    std::vector<Vec> coinv = kernel_basis(D);
    Matrix cmat = columns(f, na, coinv);
    Matrix both(f, na, nc + static_cast<int>(coinv.size()));
    for (int i = 0; i < na; ++i) {
      for (int j = 0; j < nc; ++j) both.at(i, j) = piT.at(i, j);
      for (size_t j = 0; j < coinv.size(); ++j) both.at(i, nc + static_cast<int>(j)) = coinv[j][i];
    }
    bool ok = rank(cmat) == nc && rank(both) == nc && rank(piT) == nc;
    Witness w;
    if (!ok) w = {{}, std::to_string(rank(cmat)), std::to_string(nc)};
    rep.add("dual-2-coinvariants", ok, w);
  }

  // (d3) the transposed convolution inverses are correct.
  {
    bool ok = true;
    Witness w;
    try {
      CoalgebraOps bsco{nb, copBs, s.b.algebra_unit};
      AlgebraOps asal{na, prodAs, A.counit};
      ok = mat_eq(convolution_inverse(zetaT, bsco, asal), s.zeta_bar.matrix.transpose(), w);
    } catch (const NotConvolutionInvertible&) {
      ok = false;
      w = {{}, "not invertible", "zeta_bar*"};
    }
    rep.add("dual-3-zeta-inverse", ok, w);
    bool gok = true;
    Witness gw;
    try {
      CoalgebraOps asco{na, copAs, A.unit};
      AlgebraOps csal{nc, prodCs, s.c.counit};
      gok = mat_eq(convolution_inverse(gammaT, asco, csal), s.gamma_bar.matrix.transpose(), gw);
    } catch (const NotConvolutionInvertible&) {
      gok = false;
      gw = {{}, "not invertible", "gamma_bar*"};
    }
    rep.add("dual-3-gamma-inverse", gok, gw);
  }

  // (d4) the transposed linearity conditions.
  {
    bool ok = true;
    Witness w;
    for (int y = 0; y < nb && ok; ++y) {
      SparseTensor t = SparseTensor::basis(f, {nb}, {y});
      SparseTensor lhs = t.map_leg(0, zetaT).expand_leg(0, copAs, na, na).map_leg(0, iotaT);
      SparseTensor rhs = t.expand_leg(0, copBs, nb, nb).map_leg(1, zetaT);
      ok = tensor_eq(lhs, rhs, {y}, w);
    }
    rep.add("dual-4-zeta", ok, w);
    bool gok = true;
    Witness gw;
    for (int a = 0; a < na && gok; ++a)
      for (int x = 0; x < nc && gok; ++x) {
        SparseTensor t = SparseTensor::basis(f, {na, nc}, {a, x});
        SparseTensor lhs = t.map_leg(1, piT).merge_legs(0, prodAs, na).map_leg(0, gammaT);
        SparseTensor rhs = t.map_leg(0, gammaT).merge_legs(0, prodCs, nc);
        gok = tensor_eq(lhs, rhs, {a, x}, gw);
      }
    rep.add("dual-4-gamma", gok, gw);
  }

  // (d5) transposed unit and counit preservation.
  {
    bool ok = true;
    Witness w;
    ok = vec_eq(zetaT.apply(epsB), A.counit, w) &&
         mat_eq(Matrix::row_vec(A.unit) * zetaT, Matrix::row_vec(s.b.algebra_unit), w) &&
         vec_eq(gammaT.apply(A.counit), s.c.counit, w) &&
         mat_eq(Matrix::row_vec(oneC) * gammaT, Matrix::row_vec(A.unit), w);
    rep.add("dual-5-units-counits", ok, w);
  }

  // (d6) (zeta* o iota*) * (pi* o gamma*) is the identity of Hom(Amb*, Amb*).
  {
    Witness w;
    CoalgebraOps asco{na, copAs, A.unit};
    AlgebraOps asal{na, prodAs, A.counit};
    Matrix conv = convolve(zetaT * iotaT, piT * gammaT, asco, asal);
    rep.add("dual-6-convolution-identity", mat_eq(conv, Matrix::identity(f, na), w), w);
  }
}

}  // namespace

Pams canonical_pams(const HopfPairing& p) {
  const HopfAlgebraData& K = p.k_alg;
  const HopfAlgebraData& H = p.h_alg;
  const FieldSpec& f = K.field;
  int nk = K.dim, nh = H.dim, na = nk * nh;
  Pams s;
  s.name = "canonical(" + p.name + ")";
  s.ambient = tensor_product(variant(K, Variant::op), H);
  const Matrix& sr = p.form;           // sigma_r : H -> K
  Matrix srs = sr * H.antipode_inv;    // sigma_r o S^-1

  // B = H; rho(h) = (sigma_r(S^-1 h3) (x) h1) (x) h2.
  s.b.ambient = s.ambient;
  s.b.carrier_dim = nh;
  s.b.algebra_mult = H.mult;
  s.b.algebra_unit = H.unit;
  s.b.coaction = Matrix(f, nh, na * nh);
  for (int j = 0; j < nh; ++j) {
    SparseTensor t = H.delta(H.delta(H.elem(j), 0), 0);  // h1, h2, h3
    t = t.map_leg(2, srs).swap_legs(1, 2).swap_legs(0, 1);  // k, h1, h2
    Vec row = t.to_dense();
    for (int m = 0; m < na * nh; ++m) s.b.coaction.at(j, m) = row[m];
  }

  // C = K as a coalgebra; l <| (k (x) h) = k l sigma_r(h), products in K.
  s.c.ambient = s.ambient;
  s.c.carrier_dim = nk;
  s.c.comult = K.comult;
  s.c.counit = K.counit;
  s.c.action = Matrix(f, nk * na, nk);
  for (int l = 0; l < nk; ++l)
    for (int k = 0; k < nk; ++k)
      for (int h = 0; h < nh; ++h) {
        SparseTensor t = SparseTensor::basis(f, {nk, nk, nh}, {k, l, h});
        t = K.mu(K.mu(t.map_leg(2, sr), 0), 0);
        Vec r = t.to_dense();
        for (int m = 0; m < nk; ++m) s.c.action.at(l * na + (k * nh + h), m) = r[m];
      }

  // iota(h) = sigma_r(S^-1 h2) (x) h1; pi(k (x) h) = k sigma_r(h).
  Matrix iota(f, na, nh);
  for (int j = 0; j < nh; ++j) {
    SparseTensor t = H.delta(H.elem(j), 0).map_leg(1, srs).swap_legs(0, 1);
    Vec col = t.to_dense();
    for (int m = 0; m < na; ++m) iota.at(m, j) = col[m];
  }
  Matrix pi(f, nk, na);
  for (int k = 0; k < nk; ++k)
    for (int h = 0; h < nh; ++h) {
      SparseTensor t = K.mu(SparseTensor::basis(f, {nk, nh}, {k, h}).map_leg(1, sr), 0);
      Vec col = t.to_dense();
      for (int m = 0; m < nk; ++m) pi.at(m, k * nh + h) = col[m];
    }

  // zeta(k (x) h) = eps(k) h and its convolution inverse eps(k) S(h);
  // gamma(k) = k (x) 1 and its convolution inverse S^-1(k) (x) 1.
  Matrix zeta(f, nh, na), zeta_bar(f, nh, na), gamma(f, na, nk), gamma_bar(f, na, nk);
  for (int k = 0; k < nk; ++k)
    for (int h = 0; h < nh; ++h)
      for (int m = 0; m < nh; ++m) {
        zeta.at(m, k * nh + h) = K.counit[k] * (m == h ? Scalar::one(f) : Scalar::zero(f));
        zeta_bar.at(m, k * nh + h) = K.counit[k] * H.antipode.at(m, h);
      }
  for (int k = 0; k < nk; ++k)
    for (int m = 0; m < nk; ++m)
      for (int j = 0; j < nh; ++j) {
        gamma.at(m * nh + j, k) = (m == k ? Scalar::one(f) : Scalar::zero(f)) * H.unit[j];
        gamma_bar.at(m * nh + j, k) = K.antipode_inv.at(m, k) * H.unit[j];
      }

  s.iota = {H.name, s.ambient.name, std::move(iota)};
  s.zeta = {s.ambient.name, H.name, std::move(zeta)};
  s.pi = {s.ambient.name, K.name, std::move(pi)};
  s.gamma = {K.name, s.ambient.name, std::move(gamma)};
  s.zeta_bar = {s.ambient.name, H.name, std::move(zeta_bar)};
  s.gamma_bar = {K.name, s.ambient.name, std::move(gamma_bar)};
  return s;
}

VerificationReport verify_pams(const Pams& s) {
  VerificationReport rep(s.name);
  verify_pams_core(s, "", rep);
  verify_pams_dual_forms(s, rep);
  return rep;
}

QuasiHopfData partial_dual(const Pams& s) {
  const HopfAlgebraData& A = s.ambient;
  const FieldSpec& f = A.field;
  int na = A.dim, nb = s.b.carrier_dim, nc = s.c.carrier_dim, n = nc * nb;
  auto prodB = prod_table(s.b.algebra_mult);
  auto prodCs = prod_table(s.c.comult.transpose());
  auto rhoT = rho_table(s.b);
  auto coactCs = cstar_coaction_table(s.c);
  auto hitT = hit_table(s.c);

  QuasiHopfData q;
  q.name = "partial-dual(" + s.name + ")";
  q.field = f;
  q.dim = n;

  // (x* # b)(y* # c) = sum x* (b1 harpoon y*) # b2 c, with b1 (x) b2 the
  // coaction legs of b.
  q.mult = Matrix(f, n * n, n);
  for (int x = 0; x < nc; ++x)
    for (int b = 0; b < nb; ++b)
      for (int y = 0; y < nc; ++y)
        for (int c = 0; c < nb; ++c) {
          SparseTensor t = SparseTensor::basis(f, {nc, nc, nb, nb}, {x, y, b, c});
          t = t.expand_leg(2, rhoT, na, nb);  // x, y, a, b2, c
          t = t.swap_legs(1, 2);              // x, a, y, b2, c
          t = t.merge_legs(1, hitT, nc);      // x, a>y, b2, c
          t = t.merge_legs(0, prodCs, nc).merge_legs(1, prodB, nb);
          Vec row = t.to_dense();
          for (int m = 0; m < n; ++m) q.mult.at((x * nb + b) * n + (y * nb + c), m) = row[m];
        }

  Vec oneC = s.pi.matrix.apply(A.unit);
  Vec epsB = (Matrix::row_vec(A.counit) * s.iota.matrix).row(0);
  q.unit = Vec(n, Scalar::zero(f));
  q.counit = Vec(n, Scalar::zero(f));
  for (int x = 0; x < nc; ++x)
    for (int b = 0; b < nb; ++b) {
      q.unit[x * nb + b] = s.c.counit[x] * s.b.algebra_unit[b];
      q.counit[x * nb + b] = oneC[x] * epsB[b];
    }

  auto prodSmash = prod_table(q.mult);

  // Per C-basis helpers: left multiplication by gamma(x_i) in the ambient,
  // and the two maps a |-> zeta(gamma(x_i) <harpoon a*) and y |-> zeta(gamma(x_i) y).
  std::vector<Matrix> W(nc), Z(nc);
  for (int i = 0; i < nc; ++i) {
    Vec g = s.gamma.matrix.col(i);
    Matrix L(f, na, na), M(f, na, na);
    for (int u = 0; u < na; ++u) {
      if (g[u].is_zero()) continue;
      for (int y = 0; y < na; ++y)
        for (const auto& [o, wgt] : A.prod[u][y]) L.at(o, y) += g[u] * wgt;
      for (const auto& [p1, p2, wgt] : A.cop[u]) M.at(p2, p1) += g[u] * wgt;
    }
    W[i] = s.zeta.matrix * M;
    Z[i] = s.zeta.matrix * L;
  }

  // Coproduct on x* # 1 and on eps # b, then the product rule.
  std::vector<SparseTensor> dx, db;
  dx.reserve(nc);
  db.reserve(nb);
  for (int x = 0; x < nc; ++x) {
    SparseTensor acc(f, {nc, nb, nc, nb});
    SparseTensor t =
        SparseTensor::basis(f, {nc}, {x}).expand_leg(0, coactCs, nc, na);  // x1, a*
    for (int i = 0; i < nc; ++i) {
      SparseTensor u = t.map_leg(1, W[i]);
      u = u.insert_leg(2, basis_vec(f, nc, i)).insert_leg(3, s.b.algebra_unit);
      acc.add(u);
    }
    dx.push_back(regroup_pairs(acc, nc, nb));
  }
  for (int b = 0; b < nb; ++b) {
    SparseTensor acc(f, {nc, nb, nc, nb});
    SparseTensor t = SparseTensor::basis(f, {nb}, {b}).expand_leg(0, rhoT, na, nb);  // a, b2
    for (int i = 0; i < nc; ++i) {
      SparseTensor u = t.map_leg(0, Z[i]);
      u = u.insert_leg(0, s.c.counit).insert_leg(2, basis_vec(f, nc, i));
      acc.add(u);
    }
    db.push_back(regroup_pairs(acc, nc, nb));
  }
  q.comult = Matrix(f, n, n * n);
  for (int x = 0; x < nc; ++x)
    for (int b = 0; b < nb; ++b) {
      Vec row = power_mul(dx[x], db[b], prodSmash).to_dense();
      for (int m = 0; m < n * n; ++m) q.comult.at(x * nb + b, m) = row[m];
    }

  // The inverse associator, then its inverse by sparse elimination in the
  // triple tensor algebra.
  SparseTensor phi_inv(f, {n, n, n});
  for (int j = 0; j < nc; ++j) {
    SparseTensor t = SparseTensor::from_dense(f, {na}, s.gamma.matrix.col(j));
    t = A.delta(t, 0).map_leg(1, s.zeta.matrix);  // p, zeta(q)
    for (int i = 0; i < nc; ++i) {
      SparseTensor u = t.map_leg(0, Z[i]);  // b1, b2
      u = u.insert_leg(0, s.c.counit)
              .insert_leg(2, basis_vec(f, nc, i))
              .insert_leg(4, basis_vec(f, nc, j))
              .insert_leg(5, s.b.algebra_unit);
      phi_inv.add(regroup_pairs(u, nc, nb));
    }
  }
  q.associator_inv = phi_inv.to_dense();

  long N = static_cast<long>(n) * n * n;
  SparseTensor unit3(f, {n, n, n});
  for (int a = 0; a < n; ++a)
    if (!q.unit[a].is_zero())
      for (int b = 0; b < n; ++b)
        if (!q.unit[b].is_zero())
          for (int c = 0; c < n; ++c)
            if (!q.unit[c].is_zero()) unit3.add_term({a, b, c}, q.unit[a] * q.unit[b] * q.unit[c]);

  // Left multiplication by phi_inv as a sparse matrix on the triple space.
  std::vector<std::map<long, Scalar>> rows(N);
  std::vector<std::set<long>> colrows(N);
  for (long e = 0; e < N; ++e) {
    int e1 = static_cast<int>(e / (static_cast<long>(n) * n));
    int e2 = static_cast<int>((e / n) % n);
    int e3 = static_cast<int>(e % n);
    for (const auto& [idx, c] : phi_inv.terms())
      for (const auto& [o1, w1] : prodSmash[idx[0]][e1])
        for (const auto& [o2, w2] : prodSmash[idx[1]][e2])
          for (const auto& [o3, w3] : prodSmash[idx[2]][e3]) {
            long r = (static_cast<long>(o1) * n + o2) * n + o3;
            Scalar v = c * w1 * w2 * w3;
            auto it = rows[r].find(e);
            if (it == rows[r].end()) {
              if (!v.is_zero()) rows[r].emplace(e, v);
            } else {
              it->second += v;
              if (it->second.is_zero()) rows[r].erase(it);
            }
          }
  }
  for (long r = 0; r < N; ++r)
    for (const auto& [c, v] : rows[r]) colrows[c].insert(r);
  Vec y(N, Scalar::zero(f));
  for (const auto& [idx, c] : unit3.terms())
    y[(static_cast<long>(idx[0]) * n + idx[1]) * n + idx[2]] = c;

  std::vector<char> rowused(N, 0);
  std::vector<long> pivot_row(N, -1);
  for (long c = 0; c < N; ++c) {
    long pr = -1;
    for (long r : colrows[c])
      if (!rowused[r] && rows[r].count(c)) {
        pr = r;
        break;
      }
    if (pr < 0) throw AssociatorNotInvertible("no pivot for column " + std::to_string(c));
    rowused[pr] = 1;
    pivot_row[c] = pr;
    Scalar pv = rows[pr].at(c);
    if (pv != Scalar::one(f)) {
      Scalar inv = pv.inv();
      for (auto& [cc, vv] : rows[pr]) vv = vv * inv;
      y[pr] = y[pr] * inv;
    }
    std::vector<long> touched(colrows[c].begin(), colrows[c].end());
    for (long r : touched) {
      if (r == pr) continue;
      auto fit = rows[r].find(c);
      if (fit == rows[r].end()) continue;
      Scalar factor = fit->second;
      for (const auto& [cc, vv] : rows[pr]) {
        auto it = rows[r].find(cc);
        if (it == rows[r].end()) {
          rows[r].emplace(cc, Scalar::zero(f) - factor * vv);
          colrows[cc].insert(r);
        } else {
          it->second -= factor * vv;
          if (it->second.is_zero()) {
            rows[r].erase(it);
            colrows[cc].erase(r);
          }
        }
      }
      y[r] -= factor * y[pr];
    }
  }
  q.associator = Vec(N, Scalar::zero(f));
  for (long c = 0; c < N; ++c) q.associator[c] = y[pivot_row[c]];

  // Confirm two-sidedness of the inverse.
  SparseTensor assoc = SparseTensor::from_dense(f, {n, n, n}, q.associator);
  if (!(power_mul(phi_inv, assoc, prodSmash) == unit3) ||
      !(power_mul(assoc, phi_inv, prodSmash) == unit3))
    throw AssociatorNotInvertible("one-sided inverse only");
  return q;
}

VerificationReport check_double_realization(const HopfPairing& p) {
  Pams s = canonical_pams(p);
  QuasiHopfData q = partial_dual(s);
  HopfAlgebraData d = quantum_double(p);
  const FieldSpec& f = q.field;
  int n = q.dim;
  VerificationReport rep("realization(" + p.name + ")");

  Vec unit3(static_cast<size_t>(n) * n * n, Scalar::zero(f));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        unit3[(static_cast<size_t>(a) * n + b) * n + c] = q.unit[a] * q.unit[b] * q.unit[c];
  {
    Witness w;
    bool ok = vec_eq(q.associator, unit3, w) && vec_eq(q.associator_inv, unit3, w);
    rep.add("associator-trivial", ok, w);
  }
  {
    Witness w;
    bool ok = mat_eq(q.mult, d.mult, w) && vec_eq(q.unit, d.unit, w);
    rep.add("multiplication-matches", ok, w);
  }
  {
    Witness w;
    bool ok = mat_eq(q.comult, d.comult, w) && vec_eq(q.counit, d.counit, w);
    rep.add("coalgebra-matches", ok, w);
  }

  // The dualized action gives K* the coaction k* -> sum k*2 (x) (k*1 (x)
  // sigma_l(k*3)), legs through Delta of K*.
  {
    HopfAlgebraData Kstar = dual(p.k_alg);
    int nk = p.k_alg.dim, nh = p.h_alg.dim;
    auto coactCs = cstar_coaction_table(s.c);
    bool ok = true;
    Witness w;
    for (int x = 0; x < nk && ok; ++x) {
      SparseTensor t = Kstar.delta(Kstar.delta(Kstar.elem(x), 0), 0);  // k1, k2, k3
      t = t.map_leg(2, p.form.transpose()).swap_legs(0, 1);            // k2, k1, sl(k3)
      SparseTensor expect(f, {nk, nk, nh});
      for (const auto& [y, a, c] : coactCs[x]) expect.add_term({y, a / nh, a % nh}, c);
      ok = tensor_eq(expect, t, {x}, w);
    }
    rep.add("coaction-twisted-coproduct", ok, w);
  }
  return rep;
}

Pams mutated_pams(int which) {
  switch (which) {
    case 1: {
      // Swapping zeta with its convolution inverse keeps condition 3 but
      // breaks the convolution identity.
      Pams s = canonical_pams(build_pairing("eval-sweedler4"));
      std::swap(s.zeta.matrix, s.zeta_bar.matrix);
      s.name = "mutant-zeta(" + s.name + ")";
      return s;
    }
    case 2: {
      // gamma twisted by the antipode: pi o gamma is no longer the identity.
      Pams s = canonical_pams(build_pairing("eval-c3"));
      const FieldSpec& f = s.ambient.field;
      HopfAlgebraData k3 = build_hopf("c3");
      int nk = 3, nh = 3;
      Matrix g(f, nk * nh, nk);
      for (int k = 0; k < nk; ++k)
        for (int m = 0; m < nk; ++m)
          for (int j = 0; j < nh; ++j)
            g.at(m * nh + j, k) = k3.antipode.at(m, k) * k3.unit[j];
      s.gamma.matrix = g;
      auto copC = cop_table(s.c.comult);
      CoalgebraOps ccoa{s.c.carrier_dim, copC, s.c.counit};
      s.gamma_bar.matrix = convolution_inverse(s.gamma.matrix, ccoa, s.ambient.algebra_ops());
      s.name = "mutant-gamma(" + s.name + ")";
      return s;
    }
    case 3: {
      // One corrupted coaction entry: B stops being a comodule algebra.
      Pams s = canonical_pams(build_pairing("eval-c2"));
      s.b.coaction.at(0, 1) += Scalar::one(s.ambient.field);
      s.name = "mutant-coaction(" + s.name + ")";
      return s;
    }
    default:
      throw BadParams("unknown mutation fixture " + std::to_string(which));
  }
}

}  // namespace hopfca
