#include "hopfca/hopf.hpp"

namespace hopfca {

std::vector<std::vector<SparseVecT>> prod_table(const Matrix& mult) {
  int n = mult.cols();
  if (mult.rows() != n * n) throw ShapeMismatch("mult tensor must be (n*n, n)");
  std::vector<std::vector<SparseVecT>> t(n, std::vector<SparseVecT>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& c = mult.at(i * n + j, k);
        if (!c.is_zero()) t[i][j].emplace_back(k, c);
      }
  return t;
}

std::vector<SparsePairT> cop_table(const Matrix& comult) {
  int n = comult.rows();
  if (comult.cols() != n * n) throw ShapeMismatch("comult tensor must be (n, n*n)");
  std::vector<SparsePairT> t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& c = comult.at(i, j * n + k);
        if (!c.is_zero()) t[i].emplace_back(j, k, c);
      }
  return t;
}

SparseTensor HopfAlgebraData::unit_elem() const {
  SparseTensor t(field, {dim});
  for (int i = 0; i < dim; ++i) t.add_term({i}, unit[i]);
  return t;
}

SparseTensor HopfAlgebraData::delta(const SparseTensor& t, int leg) const {
  return t.expand_leg(leg, cop, dim, dim);
}

SparseTensor HopfAlgebraData::mu(const SparseTensor& t, int leg) const {
  return t.merge_legs(leg, prod, dim);
}

HopfAlgebraData make_hopf(std::string name, const FieldSpec& field, int dim, Matrix mult,
                          Vec unit, Matrix comult, Vec counit, Matrix antipode) {
  if (mult.rows() != dim * dim || mult.cols() != dim)
    throw ShapeMismatch("make_hopf: mult must be (n*n, n)");
  if (comult.rows() != dim || comult.cols() != dim * dim)
    throw ShapeMismatch("make_hopf: comult must be (n, n*n)");
  if (static_cast<int>(unit.size()) != dim || static_cast<int>(counit.size()) != dim)
    throw ShapeMismatch("make_hopf: unit/counit length");
  if (antipode.rows() != dim || antipode.cols() != dim)
    throw ShapeMismatch("make_hopf: antipode must be (n, n)");
  HopfAlgebraData h{std::move(name), field,          dim, std::move(mult), std::move(unit),
                    std::move(comult), std::move(counit), std::move(antipode), Matrix(),
                    {}, {}};
  h.antipode_inv = invert(h.antipode);
  h.prod = prod_table(h.mult);
  h.cop = cop_table(h.comult);
  return h;
}

namespace {

// First index tuple where two sparse tensors differ, with both values.
std::optional<Witness> diff_witness(const std::vector<int>& at, const SparseTensor& lhs,
                                    const SparseTensor& rhs) {
  const FieldSpec& f = lhs.field();
  std::map<std::vector<int>, std::pair<Scalar, Scalar>> merged;
  for (const auto& [i, c] : lhs.terms()) merged[i].first = c;
  for (const auto& [i, c] : rhs.terms()) merged[i].second = c;
  for (auto& [i, pr] : merged) {
    Scalar a = pr.first.field() == f ? pr.first : Scalar::zero(f);
    Scalar b = pr.second.field() == f ? pr.second : Scalar::zero(f);
    if (a != b) {
      Witness w;
      w.indices = at;
      w.indices.insert(w.indices.end(), i.begin(), i.end());
      w.lhs = a.str();
      w.rhs = b.str();
      return w;
    }
  }
  return std::nullopt;
}

// Adds one entry: scans the given index ranges, evaluating lhs/rhs pipelines.
template <typename F>
void check_over(VerificationReport& rep, const std::string& id, const std::vector<int>& ranges,
                F&& eval) {
  std::vector<int> idx(ranges.size(), 0);
  std::optional<Witness> fail;
  auto advance = [&]() {
    for (int p = static_cast<int>(idx.size()) - 1; p >= 0; --p) {
      if (++idx[p] < ranges[p]) return true;
      idx[p] = 0;
    }
    return false;
  };
  if (ranges.empty()) {
    auto [l, r] = eval(idx);
    fail = diff_witness(idx, l, r);
  } else {
    do {
      auto [l, r] = eval(idx);
      fail = diff_witness(idx, l, r);
      if (fail) break;
    } while (advance());
  }
  rep.add(id, !fail.has_value(), fail ? *fail : Witness{});
}

}  // namespace

VerificationReport verify_hopf(const HopfAlgebraData& h) {
  VerificationReport rep(h.name);
  int n = h.dim;
  const FieldSpec& f = h.field;

  auto basis = [&](const std::vector<int>& idx) {
    return SparseTensor::basis(f, std::vector<int>(idx.size(), n), idx);
  };

  check_over(rep, "associativity", {n, n, n}, [&](const std::vector<int>& i) {
    SparseTensor t = basis(i);
    return std::pair{h.mu(h.mu(t, 0), 0), h.mu(h.mu(t, 1), 0)};
  });

  {
    std::optional<Witness> fail;
    for (int i = 0; i < n && !fail; ++i) {
      SparseTensor t = h.elem(i);
      fail = diff_witness({i, 0}, h.mu(t.insert_leg(0, h.unit), 0), t);
      if (!fail) fail = diff_witness({i, 1}, h.mu(t.insert_leg(1, h.unit), 0), t);
    }
    rep.add("unit", !fail.has_value(), fail ? *fail : Witness{});
  }

  check_over(rep, "coassociativity", {n}, [&](const std::vector<int>& i) {
    SparseTensor t = basis(i);
    return std::pair{h.delta(h.delta(t, 0), 0), h.delta(h.delta(t, 0), 1)};
  });

  {
    std::optional<Witness> fail;
    for (int i = 0; i < n && !fail; ++i) {
      SparseTensor t = h.elem(i);
      fail = diff_witness({i, 0}, h.eps(h.delta(t, 0), 0), t);
      if (!fail) fail = diff_witness({i, 1}, h.eps(h.delta(t, 0), 1), t);
    }
    rep.add("counit", !fail.has_value(), fail ? *fail : Witness{});
  }

  {
    std::optional<Witness> fail;
    for (int i = 0; i < n && !fail; ++i)
      for (int j = 0; j < n && !fail; ++j) {
        SparseTensor t = SparseTensor::basis(f, {n, n}, {i, j});
        SparseTensor lhs = h.delta(h.mu(t, 0), 0);
        SparseTensor rhs = h.delta(h.delta(t, 0), 2).swap_legs(1, 2);
        rhs = h.mu(h.mu(rhs, 0), 1);
        fail = diff_witness({i, j}, lhs, rhs);
      }
    if (!fail) {
      SparseTensor uu(f, {n, n});
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) uu.add_term({i, j}, h.unit[i] * h.unit[j]);
      fail = diff_witness({}, h.delta(h.unit_elem(), 0), uu);
    }
    rep.add("delta-is-algebra-map", !fail.has_value(), fail ? *fail : Witness{});
  }

  {
    std::optional<Witness> fail;
    for (int i = 0; i < n && !fail; ++i)
      for (int j = 0; j < n && !fail; ++j) {
        SparseTensor t = SparseTensor::basis(f, {n, n}, {i, j});
        SparseTensor lhs = h.eps(h.mu(t, 0), 0);
        SparseTensor rhs = h.eps(h.eps(t, 1), 0);
        fail = diff_witness({i, j}, lhs, rhs);
      }
    if (!fail) {
      SparseTensor e1 = h.eps(h.unit_elem(), 0);
      SparseTensor one(f, {});
      one.add_term({}, Scalar::one(f));
      fail = diff_witness({}, e1, one);
    }
    rep.add("epsilon-is-algebra-map", !fail.has_value(), fail ? *fail : Witness{});
  }

  check_over(rep, "antipode-left", {n}, [&](const std::vector<int>& i) {
    SparseTensor t = basis(i);
    SparseTensor lhs = h.mu(h.delta(t, 0).map_leg(0, h.antipode), 0);
    SparseTensor rhs = h.unit_elem().scaled(h.counit[i[0]]);
    return std::pair{lhs, rhs};
  });

  check_over(rep, "antipode-right", {n}, [&](const std::vector<int>& i) {
    SparseTensor t = basis(i);
    SparseTensor lhs = h.mu(h.delta(t, 0).map_leg(1, h.antipode), 0);
    SparseTensor rhs = h.unit_elem().scaled(h.counit[i[0]]);
    return std::pair{lhs, rhs};
  });

  return rep;
}

HopfAlgebraData dual(const HopfAlgebraData& h) {
  int n = h.dim;
  // On dual bases: products dualize coproducts and vice versa.
  Matrix dmult = h.comult.transpose();  // (n*n, n)
  Matrix dcomult = h.mult.transpose();  // (n, n*n)
  return make_hopf("dual(" + h.name + ")", h.field, n, std::move(dmult), h.counit,
                   std::move(dcomult), h.unit, h.antipode.transpose());
}

HopfAlgebraData variant(const HopfAlgebraData& h, Variant which) {
  int n = h.dim;
  Matrix mult = h.mult;
  Matrix comult = h.comult;
  std::string tag;
  if (which == Variant::op || which == Variant::op_cop) {
    Matrix flipped(h.field, n * n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) flipped.at(i * n + j, k) = h.mult.at(j * n + i, k);
    mult = std::move(flipped);
  }
  if (which == Variant::cop || which == Variant::op_cop) {
    Matrix flipped(h.field, n, n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) flipped.at(i, j * n + k) = h.comult.at(i, k * n + j);
    comult = std::move(flipped);
  }
  Matrix s = which == Variant::op_cop ? h.antipode : h.antipode_inv;
  switch (which) {
    case Variant::op: tag = "op"; break;
    case Variant::cop: tag = "cop"; break;
    case Variant::op_cop: tag = "opcop"; break;
  }
  return make_hopf(tag + "(" + h.name + ")", h.field, n, std::move(mult), h.unit,
                   std::move(comult), h.counit, std::move(s));
}

HopfAlgebraData tensor_product(const HopfAlgebraData& h, const HopfAlgebraData& k) {
  if (!(h.field == k.field)) throw FieldMismatch("tensor_product: different ground fields");
  int nh = h.dim, nk = k.dim, n = nh * nk;
  Matrix mult(h.field, n * n, n);
  for (int i = 0; i < nh; ++i)
    for (int j = 0; j < nk; ++j)
      for (int a = 0; a < nh; ++a)
        for (int b = 0; b < nk; ++b) {
          int row = (i * nk + j) * n + (a * nk + b);
          for (const auto& [m, cm] : h.prod[i][a])
            for (const auto& [l, cl] : k.prod[j][b]) mult.at(row, m * nk + l) = cm * cl;
        }
  Matrix comult(h.field, n, n * n);
  for (int i = 0; i < nh; ++i)
    for (int j = 0; j < nk; ++j)
      for (const auto& [a, b, ch] : h.cop[i])
        for (const auto& [c, d, ck] : k.cop[j])
          comult.at(i * nk + j, (a * nk + c) * n + (b * nk + d)) = ch * ck;
  Vec unit(n, Scalar::zero(h.field)), counit(n, Scalar::zero(h.field));
  for (int i = 0; i < nh; ++i)
    for (int j = 0; j < nk; ++j) {
      unit[i * nk + j] = h.unit[i] * k.unit[j];
      counit[i * nk + j] = h.counit[i] * k.counit[j];
    }
  Matrix antipode = kron(h.antipode, k.antipode);
  return make_hopf("tensor(" + h.name + "," + k.name + ")", h.field, n, std::move(mult),
                   std::move(unit), std::move(comult), std::move(counit), std::move(antipode));
}

Matrix convolve(const Matrix& f, const Matrix& g, const CoalgebraOps& c, const AlgebraOps& a) {
  if (f.cols() != c.dim || g.cols() != c.dim || f.rows() != a.dim || g.rows() != a.dim)
    throw ShapeMismatch("convolve: map shapes");
  Matrix r(f.field(), a.dim, c.dim);
  for (int i = 0; i < c.dim; ++i)
    for (const auto& [j, k, w] : c.cop[i])
      for (int p = 0; p < a.dim; ++p) {
        if (f.at(p, j).is_zero()) continue;
        for (int q = 0; q < a.dim; ++q) {
          if (g.at(q, k).is_zero()) continue;
          Scalar coeff = w * f.at(p, j) * g.at(q, k);
          for (const auto& [out, cw] : a.prod[p][q]) r.at(out, i) += coeff * cw;
        }
      }
  return r;
}

Matrix convolution_unit(const CoalgebraOps& c, const AlgebraOps& a) {
  Matrix r(a.unit[0].field(), a.dim, c.dim);
  for (int p = 0; p < a.dim; ++p)
    for (int i = 0; i < c.dim; ++i) r.at(p, i) = a.unit[p] * c.counit[i];
  return r;
}

Matrix convolution_inverse(const Matrix& f, const CoalgebraOps& c, const AlgebraOps& a) {
  // Vectorize Hom(C, A): g(q, k) at flat index q * dimC + k.  The equation
  // f * g = unit o counit is linear in g.
  int nc = c.dim, na = a.dim, N = na * nc;
  Matrix t(f.field(), N, N);
  for (int i = 0; i < nc; ++i)
    for (const auto& [j, k, w] : c.cop[i])
      for (int p = 0; p < na; ++p) {
        if (f.at(p, j).is_zero()) continue;
        Scalar coeff = w * f.at(p, j);
        for (int q = 0; q < na; ++q)
          for (const auto& [out, cw] : a.prod[p][q])
            t.at(out * nc + i, q * nc + k) += coeff * cw;
      }
  Matrix e(f.field(), N, 1);
  for (int p = 0; p < na; ++p)
    for (int i = 0; i < nc; ++i) e.at(p * nc + i, 0) = a.unit[p] * c.counit[i];
  Matrix gv;
  try {
    gv = solve(t, e);
  } catch (const SingularMatrix&) {
    throw NotConvolutionInvertible("no right convolution inverse exists");
  }
  Matrix g(f.field(), na, nc);
  for (int q = 0; q < na; ++q)
    for (int k = 0; k < nc; ++k) g.at(q, k) = gv.at(q * nc + k, 0);
  if (convolve(g, f, c, a) != convolution_unit(c, a))
    throw NotConvolutionInvertible("right inverse is not a left inverse");
  return g;
}

LinearMap convolution_inverse(const LinearMap& f, const HopfAlgebraData& c,
                              const HopfAlgebraData& a) {
  return {f.source, f.target,
          convolution_inverse(f.matrix, c.coalgebra_ops(), a.algebra_ops())};
}

}  // namespace hopfca
