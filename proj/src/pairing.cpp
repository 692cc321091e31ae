#include "hopfca/pairing.hpp"

namespace hopfca {

namespace {

Witness witness(std::vector<int> idx, const Scalar& l, const Scalar& r) {
  return Witness{std::move(idx), l.str(), r.str()};
}

}  // namespace

VerificationReport verify_pairing(const HopfPairing& p) {
  if (!(p.k_alg.field == p.h_alg.field)) throw FieldMismatch("pairing: field mismatch");
  if (p.form.rows() != p.k_alg.dim || p.form.cols() != p.h_alg.dim)
    throw ShapeMismatch("pairing: form must be (dim K, dim H)");
  VerificationReport rep(p.name);
  const HopfAlgebraData& K = p.k_alg;
  const HopfAlgebraData& H = p.h_alg;
  const Matrix& s = p.form;
  const FieldSpec& f = K.field;
  int nk = K.dim, nh = H.dim;

  // (i) products in K* against the coproduct of H
  {
    std::optional<Witness> fail;
    for (int i = 0; i < nk && !fail; ++i)
      for (int j = 0; j < nk && !fail; ++j)
        for (int m = 0; m < nh && !fail; ++m) {
          Scalar lhs = Scalar::zero(f);
          for (int l = 0; l < nk; ++l)
            if (!K.comult.at(l, i * nk + j).is_zero())
              lhs += K.comult.at(l, i * nk + j) * s.at(l, m);
          Scalar rhs = Scalar::zero(f);
          for (const auto& [a, b, w] : H.cop[m]) rhs += w * s.at(i, a) * s.at(j, b);
          if (lhs != rhs) fail = witness({i, j, m}, lhs, rhs);
        }
    rep.add("i-product-left", !fail.has_value(), fail ? *fail : Witness{});
  }

  // (ii) products in H against the coproduct of K*
  {
    std::optional<Witness> fail;
    for (int i = 0; i < nk && !fail; ++i)
      for (int m = 0; m < nh && !fail; ++m)
        for (int m2 = 0; m2 < nh && !fail; ++m2) {
          Scalar lhs = Scalar::zero(f);
          for (const auto& [k, c] : H.prod[m][m2]) lhs += c * s.at(i, k);
          Scalar rhs = Scalar::zero(f);
          for (int a = 0; a < nk; ++a)
            for (int b = 0; b < nk; ++b)
              if (!K.mult.at(a * nk + b, i).is_zero())
                rhs += K.mult.at(a * nk + b, i) * s.at(a, m) * s.at(b, m2);
          if (lhs != rhs) fail = witness({i, m, m2}, lhs, rhs);
        }
    rep.add("ii-product-right", !fail.has_value(), fail ? *fail : Witness{});
  }

  // (iii) sigma(1_{K*}, h) = eps(h); the unit of K* is eps_K
  {
    std::optional<Witness> fail;
    for (int m = 0; m < nh && !fail; ++m) {
      Scalar lhs = Scalar::zero(f);
      for (int i = 0; i < nk; ++i) lhs += K.counit[i] * s.at(i, m);
      if (lhs != H.counit[m]) fail = witness({m}, lhs, H.counit[m]);
    }
    rep.add("iii-unit-left", !fail.has_value(), fail ? *fail : Witness{});
  }

  // (iv) sigma(a, 1_H) = eps(a); on e_i* that is <e_i*, 1_K>
  {
    std::optional<Witness> fail;
    for (int i = 0; i < nk && !fail; ++i) {
      Scalar lhs = Scalar::zero(f);
      for (int j = 0; j < nh; ++j) lhs += s.at(i, j) * H.unit[j];
      if (lhs != K.unit[i]) fail = witness({i}, lhs, K.unit[i]);
    }
    rep.add("iv-unit-right", !fail.has_value(), fail ? *fail : Witness{});
  }

  // (v) sigma(a, S(h)) = sigma(S(a), h)
  {
    Matrix lhs = s * H.antipode;
    Matrix rhs = K.antipode * s;
    std::optional<Witness> fail;
    for (int i = 0; i < nk && !fail; ++i)
      for (int j = 0; j < nh && !fail; ++j)
        if (lhs.at(i, j) != rhs.at(i, j)) fail = witness({i, j}, lhs.at(i, j), rhs.at(i, j));
    rep.add("v-antipode", !fail.has_value(), fail ? *fail : Witness{});
  }

  return rep;
}

bool is_hopf_map(const Matrix& fm, const HopfAlgebraData& h, const HopfAlgebraData& k) {
  if (fm.rows() != k.dim || fm.cols() != h.dim) throw ShapeMismatch("is_hopf_map: shape");
  int nh = h.dim;
  // algebra map
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b) {
      SparseTensor t = SparseTensor::basis(h.field, {nh, nh}, {a, b});
      SparseTensor lhs = h.mu(t, 0).map_leg(0, fm);
      SparseTensor rhs = k.mu(t.map_leg(0, fm).map_leg(1, fm), 0);
      if (!(lhs == rhs)) return false;
    }
  // unit
  {
    Vec img = fm.apply(h.unit);
    if (img != k.unit) return false;
  }
  // coalgebra map
  for (int a = 0; a < nh; ++a) {
    SparseTensor t = h.elem(a);
    SparseTensor lhs = h.delta(t, 0).map_leg(0, fm).map_leg(1, fm);
    SparseTensor rhs = k.delta(t.map_leg(0, fm), 0);
    if (!(lhs == rhs)) return false;
  }
  // counit
  for (int a = 0; a < nh; ++a) {
    Scalar lhs = Scalar::zero(h.field);
    for (int i = 0; i < k.dim; ++i) lhs += k.counit[i] * fm.at(i, a);
    if (lhs != h.counit[a]) return false;
  }
  // antipode
  if (fm * h.antipode != k.antipode * fm) return false;
  return true;
}

InducedMaps induced_maps(const HopfPairing& p) {
  InducedMaps m;
  m.sigma_r = {p.h_alg.name, p.k_alg.name, p.form};
  m.sigma_l = {"dual(" + p.k_alg.name + ")", "dual(" + p.h_alg.name + ")",
               p.form.transpose()};
  if (m.sigma_l.matrix != m.sigma_r.matrix.transpose())
    throw NotHopfMap("sigma_l is not the transpose of sigma_r");
  if (!is_hopf_map(m.sigma_r.matrix, p.h_alg, p.k_alg))
    throw NotHopfMap("sigma_r is not a Hopf algebra map H -> K");
  if (!is_hopf_map(m.sigma_l.matrix, dual(p.k_alg), dual(p.h_alg)))
    throw NotHopfMap("sigma_l is not a Hopf algebra map K* -> H*");
  return m;
}

Matrix sigma_bar(const HopfPairing& p) {
  Matrix sb = p.form * p.h_alg.antipode_inv;
  // Assert the convolution inverse property in Hom(K*cop (x) H, k).
  const HopfAlgebraData& K = p.k_alg;
  const HopfAlgebraData& H = p.h_alg;
  int nk = K.dim, nh = H.dim;
  const FieldSpec& f = K.field;
  CoalgebraOps c;
  c.dim = nk * nh;
  c.cop.resize(c.dim);
  c.counit.assign(c.dim, Scalar::zero(f));
  for (int i = 0; i < nk; ++i)
    for (int m = 0; m < nh; ++m) {
      // Delta of e_i* in K*cop: flip of the dualized multiplication of K.
      SparsePairT kc;
      for (int a = 0; a < nk; ++a)
        for (int b = 0; b < nk; ++b)
          if (!K.mult.at(a * nk + b, i).is_zero())
            kc.emplace_back(b, a, K.mult.at(a * nk + b, i));
      for (const auto& [x, y, wk] : kc)
        for (const auto& [u, v, wh] : H.cop[m])
          c.cop[i * nh + m].emplace_back(x * nh + u, y * nh + v, wk * wh);
      c.counit[i * nh + m] = K.unit[i] * H.counit[m];
    }
  AlgebraOps ground;
  ground.dim = 1;
  ground.prod = {{SparseVecT{{0, Scalar::one(f)}}}};
  ground.unit = {Scalar::one(f)};
  Matrix sf(f, 1, c.dim), sbf(f, 1, c.dim);
  for (int i = 0; i < nk; ++i)
    for (int m = 0; m < nh; ++m) {
      sf.at(0, i * nh + m) = p.form.at(i, m);
      sbf.at(0, i * nh + m) = sb.at(i, m);
    }
  Matrix cu = convolution_unit(c, ground);
  if (convolve(sf, sbf, c, ground) != cu || convolve(sbf, sf, c, ground) != cu)
    throw ValidationError("sigma-bar is not the convolution inverse of sigma");
  return sb;
}

HopfPairing standard_pairing(PairingKind kind, const HopfAlgebraData& k_alg,
                             const HopfAlgebraData& h_alg, const LinearMap* f) {
  if (!(k_alg.field == h_alg.field)) throw FieldMismatch("standard_pairing: fields differ");
  HopfPairing p;
  p.k_alg = k_alg;
  p.h_alg = h_alg;
  switch (kind) {
    case PairingKind::evaluation: {
      bool same = k_alg.dim == h_alg.dim && k_alg.mult == h_alg.mult &&
                  k_alg.comult == h_alg.comult && k_alg.unit == h_alg.unit &&
                  k_alg.counit == h_alg.counit && k_alg.antipode == h_alg.antipode;
      if (!same) throw AlgebraMismatch("evaluation pairing needs K = H");
      p.form = Matrix::identity(k_alg.field, k_alg.dim);
      p.name = "eval(" + h_alg.name + ")";
      break;
    }
    case PairingKind::trivial: {
      p.form = Matrix(k_alg.field, k_alg.dim, h_alg.dim);
      for (int i = 0; i < k_alg.dim; ++i)
        for (int j = 0; j < h_alg.dim; ++j) p.form.at(i, j) = k_alg.unit[i] * h_alg.counit[j];
      p.name = "trivial(" + k_alg.name + "," + h_alg.name + ")";
      break;
    }
    case PairingKind::from_map: {
      if (f == nullptr) throw BadParams("from_map pairing needs a map");
      if (!is_hopf_map(f->matrix, h_alg, k_alg))
        throw NotHopfMap("from_map: f is not a Hopf algebra map H -> K");
      p.form = f->matrix;
      p.name = "from_map(" + h_alg.name + "->" + k_alg.name + ")";
      break;
    }
  }
  VerificationReport rep = verify_pairing(p);
  if (!rep.overall())
    throw ValidationError("standard_pairing: verify_pairing failed at " + rep.first_failure());
  return p;
}

}  // namespace hopfca
