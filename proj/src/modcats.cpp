#include "hopfca/modcats.hpp"

namespace hopfca {

namespace {

Scalar coeff_at(const SparseTensor& t, const std::vector<int>& idx) {
  auto it = t.terms().find(idx);
  return it == t.terms().end() ? Scalar::zero(t.field()) : it->second;
}

void prepend(Witness& w, const std::vector<int>& ctx) {
  w.indices.insert(w.indices.begin(), ctx.begin(), ctx.end());
}

}  // namespace

std::vector<std::vector<SparseVecT>> lact_table(const Matrix& action, int a_dim) {
  int n = action.cols();
  std::vector<std::vector<SparseVecT>> t(a_dim, std::vector<SparseVecT>(n));
  for (int a = 0; a < a_dim; ++a)
    for (int m = 0; m < n; ++m)
      for (int w = 0; w < n; ++w)
        if (!action.at(a * n + m, w).is_zero()) t[a][m].emplace_back(w, action.at(a * n + m, w));
  return t;
}

std::vector<std::vector<SparseVecT>> ract_table(const Matrix& action, int a_dim) {
  int n = action.cols();
  std::vector<std::vector<SparseVecT>> t(n, std::vector<SparseVecT>(a_dim));
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < a_dim; ++a)
      for (int w = 0; w < n; ++w)
        if (!action.at(m * a_dim + a, w).is_zero()) t[m][a].emplace_back(w, action.at(m * a_dim + a, w));
  return t;
}

// Expansion tables for coactions: right lands in (carrier, coalgebra),
// left in (coalgebra, carrier).
std::vector<SparsePairT> rcoact_table(const Matrix& coaction, int c_dim) {
  int n = coaction.rows();
  std::vector<SparsePairT> t(n);
  for (int m = 0; m < n; ++m)
    for (int m2 = 0; m2 < n; ++m2)
      for (int k = 0; k < c_dim; ++k)
        if (!coaction.at(m, m2 * c_dim + k).is_zero())
          t[m].emplace_back(m2, k, coaction.at(m, m2 * c_dim + k));
  return t;
}

std::vector<SparsePairT> lcoact_table(const Matrix& coaction, int c_dim) {
  int n = coaction.rows();
  std::vector<SparsePairT> t(n);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < c_dim; ++k)
      for (int m2 = 0; m2 < n; ++m2)
        if (!coaction.at(m, k * n + m2).is_zero())
          t[m].emplace_back(k, m2, coaction.at(m, k * n + m2));
  return t;
}

// Slices of an action matrix as per-basis operators on the carrier.
std::vector<Matrix> left_slices(const Matrix& action, int a_dim) {
  int n = action.cols();
  std::vector<Matrix> s;
  s.reserve(a_dim);
  for (int a = 0; a < a_dim; ++a) {
    Matrix l(action.field(), n, n);
    for (int m = 0; m < n; ++m)
      for (int w = 0; w < n; ++w) l.at(w, m) = action.at(a * n + m, w);
    s.push_back(std::move(l));
  }
  return s;
}

std::vector<Matrix> right_slices(const Matrix& action, int a_dim) {
  int n = action.cols();
  std::vector<Matrix> s;
  s.reserve(a_dim);
  for (int a = 0; a < a_dim; ++a) {
    Matrix r(action.field(), n, n);
    for (int m = 0; m < n; ++m)
      for (int w = 0; w < n; ++w) r.at(w, m) = action.at(m * a_dim + a, w);
    s.push_back(std::move(r));
  }
  return s;
}

namespace {

// Merging table that flattens two adjacent legs into one row-major index.
std::vector<std::vector<SparseVecT>> flatten_table(const FieldSpec& f, int d1, int d2) {
  std::vector<std::vector<SparseVecT>> t(d1, std::vector<SparseVecT>(d2));
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) t[i][j].emplace_back(i * d2 + j, Scalar::one(f));
  return t;
}

bool slices_satisfy(const std::vector<Matrix>& op, bool right_law, const AlgebraOps& alg,
                    Witness& w) {
  int n = op.empty() ? 0 : op[0].rows();
  const FieldSpec& f = op.empty() ? FieldSpec::rationals() : op[0].field();
  for (int a = 0; a < alg.dim; ++a)
    for (int b = 0; b < alg.dim; ++b) {
      // left law: a.(b.m) = (ab).m; right law: (m.a).b = m.(ab)
      Matrix lhs = right_law ? op[b] * op[a] : op[a] * op[b];
      Matrix rhs = Matrix::zero(f, n, n);
      for (const auto& [c, s] : alg.prod[a][b]) rhs = rhs + op[c].scaled(s);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (lhs.at(i, j) != rhs.at(i, j)) {
            w = {{a, b, i, j}, lhs.at(i, j).str(), rhs.at(i, j).str()};
            return false;
          }
    }
  Matrix u = Matrix::zero(f, n, n);
  for (int a = 0; a < alg.dim; ++a) u = u + op[a].scaled(alg.unit[a]);
  Matrix id = Matrix::identity(f, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (u.at(i, j) != id.at(i, j)) {
        w = {{-1, -1, i, j}, u.at(i, j).str(), id.at(i, j).str()};
        return false;
      }
  return true;
}

}  // namespace

bool tensors_match(const SparseTensor& lhs, const SparseTensor& rhs, Witness& w) {
  SparseTensor d = lhs;
  d.add(rhs.scaled(Scalar::from_long(lhs.field(), -1)));
  if (d.terms().empty()) return true;
  const std::vector<int>& idx = d.terms().begin()->first;
  w.indices = idx;
  w.lhs = coeff_at(lhs, idx).str();
  w.rhs = coeff_at(rhs, idx).str();
  return false;
}

void check_left_module(VerificationReport& rep, const std::string& id, const Matrix& action,
                       const AlgebraOps& a) {
  Witness w;
  rep.add(id, slices_satisfy(left_slices(action, a.dim), false, a, w), w);
}

void check_right_module(VerificationReport& rep, const std::string& id, const Matrix& action,
                        const AlgebraOps& a) {
  Witness w;
  rep.add(id, slices_satisfy(right_slices(action, a.dim), true, a, w), w);
}

void check_right_comodule(VerificationReport& rep, const std::string& id, const Matrix& coaction,
                          const CoalgebraOps& c) {
  const FieldSpec& f = coaction.field();
  int n = coaction.rows();
  auto rc = rcoact_table(coaction, c.dim);
  Witness w;
  bool ok = true;
  for (int m = 0; m < n && ok; ++m) {
    SparseTensor t = SparseTensor::basis(f, {n}, {m}).expand_leg(0, rc, n, c.dim);
    SparseTensor lhs = t.expand_leg(0, rc, n, c.dim);
    SparseTensor rhs = t.expand_leg(1, c.cop, c.dim, c.dim);
    ok = tensors_match(lhs, rhs, w);
    if (ok) ok = tensors_match(t.contract_leg(1, c.counit), SparseTensor::basis(f, {n}, {m}), w);
    if (!ok) prepend(w, {m});
  }
  rep.add(id, ok, w);
}

void check_left_comodule(VerificationReport& rep, const std::string& id, const Matrix& coaction,
                         const CoalgebraOps& c) {
  const FieldSpec& f = coaction.field();
  int n = coaction.rows();
  auto lc = lcoact_table(coaction, c.dim);
  Witness w;
  bool ok = true;
  for (int m = 0; m < n && ok; ++m) {
    SparseTensor t = SparseTensor::basis(f, {n}, {m}).expand_leg(0, lc, c.dim, n);
    SparseTensor lhs = t.expand_leg(0, c.cop, c.dim, c.dim);
    SparseTensor rhs = t.expand_leg(1, lc, c.dim, n);
    ok = tensors_match(lhs, rhs, w);
    if (ok) ok = tensors_match(t.contract_leg(0, c.counit), SparseTensor::basis(f, {n}, {m}), w);
    if (!ok) prepend(w, {m});
  }
  rep.add(id, ok, w);
}

HopfAlgebraData doihopf_ambient(const HopfPairing& p) {
  return tensor_product(variant(dual(p.k_alg), Variant::cop), dual(p.h_alg));
}

VerificationReport verify_object(const YdModule& v) {
  const HopfAlgebraData& K = v.pairing.k_alg;
  const HopfAlgebraData& H = v.pairing.h_alg;
  const FieldSpec& f = K.field;
  int n = v.dim, nk = K.dim, nh = H.dim;
  if (v.flavor != 1 && v.flavor != 2) throw BadParams("flavor must be 1 or 2");
  if (v.action.rows() != nh * n || v.action.cols() != n || v.coaction.rows() != n ||
      v.coaction.cols() != n * nk)
    throw ShapeMismatch("module structure shapes do not match the pairing");
  Matrix sr = induced_maps(v.pairing).sigma_r.matrix;
  VerificationReport rep(v.name);
  Witness w;
  bool ok = true;
  if (v.flavor == 1) {
    check_left_module(rep, "H-module", v.action, H.algebra_ops());
    check_right_comodule(rep, "K-comodule", v.coaction, K.coalgebra_ops());
    auto lact = lact_table(v.action, nh);
    auto rc = rcoact_table(v.coaction, nk);
    Matrix pre = K.antipode_inv * sr;
    for (int h = 0; h < nh && ok; ++h)
      for (int m = 0; m < n && ok; ++m) {
        SparseTensor t = SparseTensor::basis(f, {nh, n}, {h, m});
        SparseTensor lhs = t.merge_legs(0, lact, n).expand_leg(0, rc, n, nk);
        SparseTensor r = H.delta(H.delta(t, 0), 0).expand_leg(3, rc, n, nk);
        r = r.map_leg(0, pre).map_leg(2, sr);
        r = r.swap_legs(0, 1).swap_legs(1, 3).swap_legs(3, 4);
        r = K.mu(K.mu(r.merge_legs(0, lact, n), 1), 1);
        ok = tensors_match(lhs, r, w);
        if (!ok) prepend(w, {h, m});
      }
  } else {
    check_right_module(rep, "H-module", v.action, H.algebra_ops());
    check_left_comodule(rep, "K-comodule", v.coaction, K.coalgebra_ops());
    auto ract = ract_table(v.action, nh);
    auto lc = lcoact_table(v.coaction, nk);
    Matrix pre = K.antipode_inv * sr;
    for (int m = 0; m < n && ok; ++m)
      for (int h = 0; h < nh && ok; ++h) {
        SparseTensor t = SparseTensor::basis(f, {n, nh}, {m, h});
        SparseTensor lhs = t.merge_legs(0, ract, n).expand_leg(0, lc, nk, n);
        SparseTensor r = H.delta(H.delta(t, 1), 1).expand_leg(0, lc, nk, n);
        r = r.map_leg(4, pre).map_leg(2, sr);
        r = r.swap_legs(0, 4).swap_legs(1, 4).swap_legs(3, 4);
        r = K.mu(K.mu(r.merge_legs(3, ract, n), 0), 0);
        ok = tensors_match(lhs, r, w);
        if (!ok) prepend(w, {m, h});
      }
  }
  rep.add("yd-compatibility", ok, w);
  return rep;
}

VerificationReport verify_object(const RepModule& r) {
  if (r.action.rows() != r.algebra.dim * r.dim || r.action.cols() != r.dim)
    throw ShapeMismatch("action shape does not match the algebra");
  VerificationReport rep(r.name);
  check_left_module(rep, "module", r.action, r.algebra.algebra_ops());
  return rep;
}

VerificationReport verify_object(const DoiHopfModule& m) {
  HopfAlgebraData Ks = dual(m.pairing.k_alg);
  HopfAlgebraData W = doihopf_ambient(m.pairing);
  const FieldSpec& f = Ks.field;
  int n = m.dim, nk = Ks.dim, nh = m.pairing.h_alg.dim, nw = W.dim;
  if (m.left_action.rows() != nk * n || m.right_action.rows() != n * nk ||
      m.left_action.cols() != n || m.right_action.cols() != n || m.coaction.rows() != n ||
      m.coaction.cols() != n * nw)
    throw ShapeMismatch("module structure shapes do not match the pairing");
  Matrix sl = induced_maps(m.pairing).sigma_l.matrix;
  VerificationReport rep(m.name);
  check_left_module(rep, "left-module", m.left_action, Ks.algebra_ops());
  check_right_module(rep, "right-module", m.right_action, Ks.algebra_ops());
  {
    auto L = left_slices(m.left_action, nk);
    auto R = right_slices(m.right_action, nk);
    Witness w;
    bool ok = true;
    for (int a = 0; a < nk && ok; ++a)
      for (int b = 0; b < nk && ok; ++b) {
        Matrix lhs = R[b] * L[a], rhs = L[a] * R[b];
        for (int i = 0; i < n && ok; ++i)
          for (int j = 0; j < n && ok; ++j)
            if (lhs.at(i, j) != rhs.at(i, j)) {
              w = {{a, b, i, j}, lhs.at(i, j).str(), rhs.at(i, j).str()};
              ok = false;
            }
      }
    rep.add("bimodule-commute", ok, w);
  }
  check_right_comodule(rep, "comodule", m.coaction, W.coalgebra_ops());

  auto lact = lact_table(m.left_action, nk);
  auto ract = ract_table(m.right_action, nk);
  auto rc = rcoact_table(m.coaction, nw);
  auto flat = flatten_table(f, nk, nh);
  Witness w;
  bool ok = true;
  for (int a = 0; a < nk && ok; ++a)
    for (int v = 0; v < n && ok; ++v) {
      SparseTensor t = SparseTensor::basis(f, {nk, n}, {a, v});
      SparseTensor lhs = t.merge_legs(0, lact, n).expand_leg(0, rc, n, nw);
      SparseTensor r = Ks.delta(Ks.delta(t, 0), 0).expand_leg(3, rc, n, nw);
      r = r.map_leg(2, sl);
      r = r.swap_legs(0, 1).swap_legs(1, 3).swap_legs(2, 3);
      r = W.mu(r.merge_legs(0, lact, n).merge_legs(1, flat, nw), 1);
      ok = tensors_match(lhs, r, w);
      if (!ok) prepend(w, {a, v});
    }
  rep.add("compat-left", ok, w);
  ok = true;
  Witness w2;
  for (int v = 0; v < n && ok; ++v)
    for (int a = 0; a < nk && ok; ++a) {
      SparseTensor t = SparseTensor::basis(f, {n, nk}, {v, a});
      SparseTensor lhs = t.merge_legs(0, ract, n).expand_leg(0, rc, n, nw);
      SparseTensor r = Ks.delta(Ks.delta(t, 1), 1).expand_leg(0, rc, n, nw);
      r = r.map_leg(4, sl);
      r = r.swap_legs(1, 3).swap_legs(2, 3);
      r = W.mu(r.merge_legs(0, ract, n).merge_legs(2, flat, nw), 1);
      ok = tensors_match(lhs, r, w2);
      if (!ok) prepend(w2, {v, a});
    }
  rep.add("compat-right", ok, w2);
  return rep;
}

VerificationReport verify_object(const TwoSidedModule& m) {
  const bool primal = m.side == TwoSidedModule::Side::primal;
  HopfAlgebraData LA = primal ? m.pairing.k_alg : dual(m.pairing.k_alg);
  HopfAlgebraData RA = primal ? m.pairing.h_alg : dual(m.pairing.k_alg);
  HopfAlgebraData LC = primal ? m.pairing.k_alg : dual(m.pairing.k_alg);
  HopfAlgebraData RC = primal ? m.pairing.k_alg : dual(m.pairing.h_alg);
  const FieldSpec& f = LA.field;
  int n = m.dim, dl = LA.dim, dr = RA.dim, cl = LC.dim, cr = RC.dim;
  if (m.left_action.rows() != dl * n || m.right_action.rows() != n * dr ||
      m.left_action.cols() != n || m.right_action.cols() != n || m.left_coaction.rows() != n ||
      m.left_coaction.cols() != cl * n || m.right_coaction.rows() != n ||
      m.right_coaction.cols() != n * cr)
    throw ShapeMismatch("two-sided structure shapes do not match the pairing");
  InducedMaps im = induced_maps(m.pairing);
  const Matrix& sr = im.sigma_r.matrix;
  const Matrix& sl = im.sigma_l.matrix;
  VerificationReport rep(m.name);
  check_left_module(rep, "left-module", m.left_action, LA.algebra_ops());
  check_right_module(rep, "right-module", m.right_action, RA.algebra_ops());
  {
    auto L = left_slices(m.left_action, dl);
    auto R = right_slices(m.right_action, dr);
    Witness w;
    bool ok = true;
    for (int a = 0; a < dl && ok; ++a)
      for (int b = 0; b < dr && ok; ++b) {
        Matrix lhs = R[b] * L[a], rhs = L[a] * R[b];
        for (int i = 0; i < n && ok; ++i)
          for (int j = 0; j < n && ok; ++j)
            if (lhs.at(i, j) != rhs.at(i, j)) {
              w = {{a, b, i, j}, lhs.at(i, j).str(), rhs.at(i, j).str()};
              ok = false;
            }
      }
    rep.add("bimodule-commute", ok, w);
  }
  check_left_comodule(rep, "left-comodule", m.left_coaction, LC.coalgebra_ops());
  check_right_comodule(rep, "right-comodule", m.right_coaction, RC.coalgebra_ops());

  auto lact = lact_table(m.left_action, dl);
  auto ract = ract_table(m.right_action, dr);
  auto lc = lcoact_table(m.left_coaction, cl);
  auto rc = rcoact_table(m.right_coaction, cr);
  {
    Witness w;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      SparseTensor t = SparseTensor::basis(f, {n}, {v});
      SparseTensor lhs = t.expand_leg(0, lc, cl, n).expand_leg(1, rc, n, cr);
      SparseTensor rhs = t.expand_leg(0, rc, n, cr).expand_leg(0, lc, cl, n);
      ok = tensors_match(lhs, rhs, w);
      if (!ok) prepend(w, {v});
    }
    rep.add("bicomodule-commute", ok, w);
  }
  // the four coaction/action compatibilities; on the primal side the H legs
  // enter the K product through sigma_r, on the dual side the K* legs enter
  // the H* product through sigma_l
  {
    Witness w;
    bool ok = true;
    for (int a = 0; a < dl && ok; ++a)
      for (int v = 0; v < n && ok; ++v) {
        SparseTensor t = SparseTensor::basis(f, {dl, n}, {a, v});
        SparseTensor lhs = t.merge_legs(0, lact, n).expand_leg(0, lc, cl, n);
        SparseTensor r = LA.delta(t, 0).expand_leg(2, lc, cl, n).swap_legs(1, 2);
        r = LC.mu(r, 0).merge_legs(1, lact, n);
        ok = tensors_match(lhs, r, w);
        if (!ok) prepend(w, {a, v});
      }
    rep.add("compat-ll", ok, w);
  }
  {
    Witness w;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      for (int b = 0; b < dr && ok; ++b) {
        SparseTensor t = SparseTensor::basis(f, {n, dr}, {v, b});
        SparseTensor lhs = t.merge_legs(0, ract, n).expand_leg(0, lc, cl, n);
        SparseTensor r = RA.delta(t, 1).expand_leg(0, lc, cl, n);
        if (primal) r = r.map_leg(2, sr);
        r = r.swap_legs(1, 2);
        r = LC.mu(r, 0).merge_legs(1, ract, n);
        ok = tensors_match(lhs, r, w);
        if (!ok) prepend(w, {v, b});
      }
    rep.add("compat-rl", ok, w);
  }
  {
    Witness w;
    bool ok = true;
    for (int a = 0; a < dl && ok; ++a)
      for (int v = 0; v < n && ok; ++v) {
        SparseTensor t = SparseTensor::basis(f, {dl, n}, {a, v});
        SparseTensor lhs = t.merge_legs(0, lact, n).expand_leg(0, rc, n, cr);
        SparseTensor r = LA.delta(t, 0).expand_leg(2, rc, n, cr);
        if (!primal) r = r.map_leg(1, sl);
        r = r.swap_legs(1, 2);
        r = RC.mu(r.merge_legs(0, lact, n), 1);
        ok = tensors_match(lhs, r, w);
        if (!ok) prepend(w, {a, v});
      }
    rep.add("compat-lr", ok, w);
  }
  {
    Witness w;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      for (int b = 0; b < dr && ok; ++b) {
        SparseTensor t = SparseTensor::basis(f, {n, dr}, {v, b});
        SparseTensor lhs = t.merge_legs(0, ract, n).expand_leg(0, rc, n, cr);
        SparseTensor r = RA.delta(t, 1).expand_leg(0, rc, n, cr);
        if (primal)
          r = r.map_leg(3, sr);
        else
          r = r.map_leg(3, sl);
        r = r.swap_legs(1, 2);
        r = RC.mu(r.merge_legs(0, ract, n), 1);
        ok = tensors_match(lhs, r, w);
        if (!ok) prepend(w, {v, b});
      }
    rep.add("compat-rr", ok, w);
  }
  return rep;
}

YdModule yd_tensor(const YdModule& v, const YdModule& w) {
  if (v.flavor != w.flavor) throw FlavorMismatch("cannot tensor modules of different flavors");
  if (v.pairing.name != w.pairing.name)
    throw FlavorMismatch("cannot tensor modules over different pairings");
  const HopfAlgebraData& K = v.pairing.k_alg;
  const HopfAlgebraData& H = v.pairing.h_alg;
  const FieldSpec& f = K.field;
  int nv = v.dim, nw = w.dim, nk = K.dim, nh = H.dim, n = nv * nw;
  YdModule r{v.name + "(x)" + w.name, v.flavor, v.pairing, n, Matrix(f, 0, 0), Matrix(f, 0, 0)};
  if (v.flavor == 1) {
    auto lv = lact_table(v.action, nh), lw = lact_table(w.action, nh);
    auto rv = rcoact_table(v.coaction, nk), rw = rcoact_table(w.coaction, nk);
    Matrix action(f, nh * n, n);
    for (int h = 0; h < nh; ++h)
      for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nw; ++b) {
          SparseTensor t = SparseTensor::basis(f, {nh, nv, nw}, {h, a, b});
          t = H.delta(t, 0).swap_legs(1, 2).merge_legs(0, lv, nv).merge_legs(1, lw, nw);
          Vec row = t.to_dense();
          for (int m = 0; m < n; ++m) action.at(h * n + (a * nw + b), m) = row[m];
        }
    Matrix coaction(f, n, n * nk);
    for (int a = 0; a < nv; ++a)
      for (int b = 0; b < nw; ++b) {
        SparseTensor t = SparseTensor::basis(f, {nv, nw}, {a, b});
        t = t.expand_leg(0, rv, nv, nk).expand_leg(2, rw, nw, nk);
        // reversed product: the second tensorand's K leg multiplies first
        t = K.mu(t.swap_legs(1, 2).swap_legs(2, 3), 2);
        Vec row = t.to_dense();
        for (int m = 0; m < n * nk; ++m) coaction.at(a * nw + b, m) = row[m];
      }
    r.action = std::move(action);
    r.coaction = std::move(coaction);
  } else {
    auto rv = ract_table(v.action, nh), rw = ract_table(w.action, nh);
    auto lv = lcoact_table(v.coaction, nk), lw = lcoact_table(w.coaction, nk);
    Matrix action(f, n * nh, n);
    for (int a = 0; a < nv; ++a)
      for (int b = 0; b < nw; ++b)
        for (int h = 0; h < nh; ++h) {
          SparseTensor t = SparseTensor::basis(f, {nv, nw, nh}, {a, b, h});
          t = H.delta(t, 2).swap_legs(1, 2).merge_legs(0, rv, nv).merge_legs(1, rw, nw);
          Vec row = t.to_dense();
          for (int m = 0; m < n; ++m) action.at((a * nw + b) * nh + h, m) = row[m];
        }
    Matrix coaction(f, n, nk * n);
    for (int a = 0; a < nv; ++a)
      for (int b = 0; b < nw; ++b) {
        SparseTensor t = SparseTensor::basis(f, {nv, nw}, {a, b});
        t = t.expand_leg(0, lv, nk, nv).expand_leg(2, lw, nk, nw);
        t = K.mu(t.swap_legs(0, 2).swap_legs(1, 2), 0);
        Vec row = t.to_dense();
        for (int m = 0; m < nk * n; ++m) coaction.at(a * nw + b, m) = row[m];
      }
    r.action = std::move(action);
    r.coaction = std::move(coaction);
  }
  return r;
}

YdModule trivial_yd(const HopfPairing& p, int flavor) {
  if (flavor != 1 && flavor != 2) throw BadParams("flavor must be 1 or 2");
  const HopfAlgebraData& K = p.k_alg;
  const HopfAlgebraData& H = p.h_alg;
  const FieldSpec& f = K.field;
  YdModule v{"trivial", flavor, p, 1, Matrix(f, H.dim, 1), Matrix(f, 1, K.dim)};
  for (int h = 0; h < H.dim; ++h) v.action.at(h, 0) = H.counit[h];
  for (int k = 0; k < K.dim; ++k) v.coaction.at(0, k) = K.unit[k];
  return v;
}

Subspace cotensor(const Matrix& right_coaction, const Matrix& left_coaction, int c_dim) {
  const FieldSpec& f = right_coaction.field();
  int m = right_coaction.rows(), n = left_coaction.rows();
  Matrix d(f, m * c_dim * n, m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      for (int i2 = 0; i2 < m; ++i2)
        for (int k = 0; k < c_dim; ++k)
          d.at((i2 * c_dim + k) * n + j, i * n + j) += right_coaction.at(i, i2 * c_dim + k);
      for (int k = 0; k < c_dim; ++k)
        for (int j2 = 0; j2 < n; ++j2)
          d.at((i * c_dim + k) * n + j2, i * n + j) -= left_coaction.at(j, k * n + j2);
    }
  return {columns(f, m * n, kernel_basis(d))};
}

Subspace coinvariants(const Matrix& coaction, const Vec& c_unit) {
  const FieldSpec& f = coaction.field();
  int n = coaction.rows(), c = static_cast<int>(c_unit.size());
  Matrix d(f, n * c, n);
  for (int v = 0; v < n; ++v)
    for (int v2 = 0; v2 < n; ++v2)
      for (int k = 0; k < c; ++k) {
        d.at(v2 * c + k, v) = coaction.at(v, v2 * c + k);
        if (v == v2) d.at(v2 * c + k, v) -= c_unit[k];
      }
  return {columns(f, n, kernel_basis(d))};
}

Quotient quotient_by_span(const FieldSpec& f, int ambient_dim, const std::vector<Vec>& gens) {
  Matrix e(f, static_cast<int>(gens.size()), ambient_dim);
  for (size_t i = 0; i < gens.size(); ++i)
    for (int j = 0; j < ambient_dim; ++j) e.at(static_cast<int>(i), j) = gens[i][j];
  Echelon ech = row_echelon(e);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (int p : ech.pivot_cols) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  int q = static_cast<int>(free_cols.size());
  Matrix proj(f, q, ambient_dim);
  for (int t = 0; t < q; ++t) proj.at(t, free_cols[t]) = Scalar::one(f);
  for (int r = 0; r < ech.rank(); ++r)
    for (int t = 0; t < q; ++t) proj.at(t, ech.pivot_cols[r]) = -ech.rref.at(r, free_cols[t]);
  return {proj, solve_right_inverse_section(proj)};
}

Quotient tensor_over_algebra(const Matrix& right_action, const Matrix& left_action, int a_dim) {
  const FieldSpec& f = right_action.field();
  int m = right_action.rows() / a_dim, n = left_action.cols();
  std::vector<Vec> gens;
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < a_dim; ++a)
      for (int j = 0; j < n; ++j) {
        Vec g(static_cast<size_t>(m) * n, Scalar::zero(f));
        for (int k = 0; k < m; ++k) g[k * n + j] += right_action.at(i * a_dim + a, k);
        for (int l = 0; l < n; ++l) g[i * n + l] -= left_action.at(a * n + j, l);
        gens.push_back(std::move(g));
      }
  return quotient_by_span(f, m * n, gens);
}

Quotient augmentation_quotient(const Matrix& right_action, const Vec& augmentation) {
  const FieldSpec& f = right_action.field();
  int a_dim = static_cast<int>(augmentation.size());
  int m = right_action.rows() / a_dim;
  std::vector<Vec> gens;
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < a_dim; ++a) {
      Vec g(static_cast<size_t>(m), Scalar::zero(f));
      for (int k = 0; k < m; ++k) g[k] += right_action.at(i * a_dim + a, k);
      g[i] -= augmentation[a];
      gens.push_back(std::move(g));
    }
  return quotient_by_span(f, m, gens);
}

Matrix left_action_from_right_coaction(const Matrix& coaction, int c_dim) {
  int n = coaction.rows();
  Matrix l(coaction.field(), c_dim * n, n);
  for (int a = 0; a < c_dim; ++a)
    for (int m = 0; m < n; ++m)
      for (int m2 = 0; m2 < n; ++m2) l.at(a * n + m, m2) = coaction.at(m, m2 * c_dim + a);
  return l;
}

Matrix right_coaction_from_left_action(const Matrix& action, int c_dim) {
  int n = action.cols();
  Matrix r(action.field(), n, n * c_dim);
  for (int m = 0; m < n; ++m)
    for (int m2 = 0; m2 < n; ++m2)
      for (int a = 0; a < c_dim; ++a) r.at(m, m2 * c_dim + a) = action.at(a * n + m, m2);
  return r;
}

Matrix right_action_from_left_coaction(const Matrix& coaction, int c_dim) {
  int n = coaction.rows();
  Matrix r(coaction.field(), n * c_dim, n);
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < c_dim; ++a)
      for (int m2 = 0; m2 < n; ++m2) r.at(m * c_dim + a, m2) = coaction.at(m, a * n + m2);
  return r;
}

Matrix left_coaction_from_right_action(const Matrix& action, int c_dim) {
  int n = action.cols();
  Matrix l(action.field(), n, c_dim * n);
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < c_dim; ++a)
      for (int m2 = 0; m2 < n; ++m2) l.at(m, a * n + m2) = action.at(m * c_dim + a, m2);
  return l;
}

TwoSidedModule two_sided_unit(const HopfPairing& p, TwoSidedModule::Side side) {
  const HopfAlgebraData& K = p.k_alg;
  const HopfAlgebraData& H = p.h_alg;
  const FieldSpec& f = K.field;
  int nk = K.dim, nh = H.dim;
  InducedMaps im = induced_maps(p);
  TwoSidedModule u;
  u.side = side;
  u.pairing = p;
  u.dim = nk;
  if (side == TwoSidedModule::Side::primal) {
    u.name = "unit-K";
    u.left_action = K.mult;
    u.right_action = Matrix(f, nk * nh, nk);
    for (int m = 0; m < nk; ++m)
      for (int h = 0; h < nh; ++h)
        for (int m2 = 0; m2 < nk; ++m2) {
          Scalar s = Scalar::zero(f);
          for (int a = 0; a < nk; ++a)
            s += im.sigma_r.matrix.at(a, h) * K.mult.at(m * nk + a, m2);
          u.right_action.at(m * nh + h, m2) = s;
        }
    u.left_coaction = K.comult;
    u.right_coaction = K.comult;
  } else {
    HopfAlgebraData Ks = dual(K);
    u.name = "unit-K*";
    u.left_action = Ks.mult;
    u.right_action = Ks.mult;
    u.left_coaction = Ks.comult;
    u.right_coaction = Matrix(f, nk, nk * nh);
    for (int m = 0; m < nk; ++m)
      for (int m2 = 0; m2 < nk; ++m2)
        for (int b = 0; b < nh; ++b) {
          Scalar s = Scalar::zero(f);
          for (int a = 0; a < nk; ++a)
            s += Ks.comult.at(m, m2 * nk + a) * im.sigma_l.matrix.at(b, a);
          u.right_coaction.at(m, m2 * nh + b) = s;
        }
  }
  return u;
}

TwoSidedTensor two_sided_tensor(const TwoSidedModule& m, const TwoSidedModule& n) {
  if (m.side != n.side || m.pairing.name != n.pairing.name)
    throw FlavorMismatch("cannot tensor two-sided modules of different kinds");
  const HopfAlgebraData& K = m.pairing.k_alg;
  const HopfAlgebraData& H = m.pairing.h_alg;
  const FieldSpec& f = K.field;
  int nm = m.dim, nn = n.dim, nk = K.dim, nh = H.dim;
  const bool primal = m.side == TwoSidedModule::Side::primal;
  TwoSidedTensor out;
  out.object.side = m.side;
  out.object.pairing = m.pairing;
  out.object.name = m.name + (primal ? "[]" : "(x)") + n.name;
  if (primal) {
    Subspace sub = cotensor(m.right_coaction, n.left_coaction, nk);
    int d = sub.dim();
    Matrix incl = sub.inclusion;
    Matrix proj = solve_right_inverse_section(incl.transpose()).transpose();
    out.projection = proj;
    out.section = incl;
    out.object.dim = d;
    auto Lm = left_slices(m.left_action, nk), Ln = left_slices(n.left_action, nk);
    auto Rm = right_slices(m.right_action, nh), Rn = right_slices(n.right_action, nh);
    Matrix la(f, nk * d, d), ra(f, d * nh, d);
    for (int a = 0; a < nk; ++a) {
      Matrix big(f, nm * nn, nm * nn);
      for (const auto& [a1, a2, c] : K.cop[a]) big = big + kron(Lm[a1], Ln[a2]).scaled(c);
      Matrix s = proj * big * incl;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) la.at(a * d + i, j) = s.at(j, i);
    }
    for (int h = 0; h < nh; ++h) {
      Matrix big(f, nm * nn, nm * nn);
      for (const auto& [h1, h2, c] : H.cop[h]) big = big + kron(Rm[h1], Rn[h2]).scaled(c);
      Matrix s = proj * big * incl;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) ra.at(i * nh + h, j) = s.at(j, i);
    }
    auto lcm = lcoact_table(m.left_coaction, nk);
    auto rcn = rcoact_table(n.right_coaction, nk);
    Matrix lc(f, d, nk * d), rc(f, d, d * nk);
    for (int s = 0; s < d; ++s) {
      SparseTensor t = SparseTensor::from_dense(f, {nm, nn}, incl.col(s));
      Vec left = t.expand_leg(0, lcm, nk, nm).to_dense();
      Vec right = t.expand_leg(1, rcn, nn, nk).to_dense();
      for (int k = 0; k < nk; ++k) {
        Vec yl(static_cast<size_t>(nm) * nn, Scalar::zero(f));
        Vec yr(static_cast<size_t>(nm) * nn, Scalar::zero(f));
        for (int i = 0; i < nm; ++i)
          for (int j = 0; j < nn; ++j) {
            yl[i * nn + j] = left[(k * nm + i) * nn + j];
            yr[i * nn + j] = right[(i * nn + j) * nk + k];
          }
        Vec pl = proj.apply(yl), pr = proj.apply(yr);
        for (int s2 = 0; s2 < d; ++s2) {
          lc.at(s, k * d + s2) = pl[s2];
          rc.at(s, s2 * nk + k) = pr[s2];
        }
      }
    }
    out.object.left_action = std::move(la);
    out.object.right_action = std::move(ra);
    out.object.left_coaction = std::move(lc);
    out.object.right_coaction = std::move(rc);
  } else {
    HopfAlgebraData Ks = dual(K);
    HopfAlgebraData Hs = dual(H);
    Quotient q = tensor_over_algebra(m.right_action, n.left_action, nk);
    int d = q.dim();
    out.projection = q.projection;
    out.section = q.section;
    out.object.dim = d;
    auto Lm = left_slices(m.left_action, nk);
    auto Rn = right_slices(n.right_action, nk);
    Matrix idm = Matrix::identity(f, nm), idn = Matrix::identity(f, nn);
    Matrix la(f, nk * d, d), ra(f, d * nk, d);
    for (int a = 0; a < nk; ++a) {
      Matrix sl = q.projection * kron(Lm[a], idn) * q.section;
      Matrix sr2 = q.projection * kron(idm, Rn[a]) * q.section;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          la.at(a * d + i, j) = sl.at(j, i);
          ra.at(i * nk + a, j) = sr2.at(j, i);
        }
    }
    auto lcm = lcoact_table(m.left_coaction, nk);
    auto lcn = lcoact_table(n.left_coaction, nk);
    auto rcm = rcoact_table(m.right_coaction, nh);
    auto rcn = rcoact_table(n.right_coaction, nh);
    Matrix lc(f, d, nk * d), rc(f, d, d * nh);
    for (int s = 0; s < d; ++s) {
      SparseTensor t = SparseTensor::from_dense(f, {nm, nn}, q.section.col(s));
      SparseTensor tl = t.expand_leg(0, lcm, nk, nm).expand_leg(2, lcn, nk, nn);
      tl = Ks.mu(tl.swap_legs(1, 2), 0);
      Vec left = tl.to_dense();  // dims {nk, nm, nn}
      SparseTensor tr = t.expand_leg(0, rcm, nm, nh).expand_leg(2, rcn, nn, nh);
      tr = Hs.mu(tr.swap_legs(1, 2), 2);
      Vec right = tr.to_dense();  // dims {nm, nn, nh}
      for (int k = 0; k < nk; ++k) {
        Vec y(static_cast<size_t>(nm) * nn, Scalar::zero(f));
        for (int i = 0; i < nm * nn; ++i) y[i] = left[k * nm * nn + i];
        Vec p = q.projection.apply(y);
        for (int s2 = 0; s2 < d; ++s2) lc.at(s, k * d + s2) = p[s2];
      }
      for (int h = 0; h < nh; ++h) {
        Vec y(static_cast<size_t>(nm) * nn, Scalar::zero(f));
        for (int i = 0; i < nm * nn; ++i) y[i] = right[i * nh + h];
        Vec p = q.projection.apply(y);
        for (int s2 = 0; s2 < d; ++s2) rc.at(s, s2 * nh + h) = p[s2];
      }
    }
    out.object.left_action = std::move(la);
    out.object.right_action = std::move(ra);
    out.object.left_coaction = std::move(lc);
    out.object.right_coaction = std::move(rc);
  }
  return out;
}

}  // namespace hopfca
