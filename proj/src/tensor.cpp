#include "hopfca/tensor.hpp"

namespace hopfca {

SparseTensor SparseTensor::basis(const FieldSpec& f, std::vector<int> dims,
                                 std::vector<int> idx) {
  SparseTensor t(f, std::move(dims));
  t.terms_[std::move(idx)] = Scalar::one(f);
  return t;
}

void SparseTensor::add_term(const std::vector<int>& idx, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    terms_.emplace(idx, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SparseTensor::add(const SparseTensor& o) {
  for (const auto& [idx, c] : o.terms_) add_term(idx, c);
}

SparseTensor SparseTensor::scaled(const Scalar& c) const {
  SparseTensor t(spec_, dims_);
  if (c.is_zero()) return t;
  for (const auto& [idx, v] : terms_) t.terms_[idx] = v * c;
  return t;
}

bool SparseTensor::operator==(const SparseTensor& o) const {
  return dims_ == o.dims_ && terms_ == o.terms_;
}

SparseTensor SparseTensor::expand_leg(int leg, const std::vector<SparsePairT>& table, int d1,
                                      int d2) const {
  std::vector<int> nd = dims_;
  nd[leg] = d1;
  nd.insert(nd.begin() + leg + 1, d2);
  SparseTensor t(spec_, nd);
  std::vector<int> ni;
  for (const auto& [idx, c] : terms_) {
    for (const auto& [j, k, w] : table[idx[leg]]) {
      ni = idx;
      ni[leg] = j;
      ni.insert(ni.begin() + leg + 1, k);
      t.add_term(ni, c * w);
    }
  }
  return t;
}

SparseTensor SparseTensor::merge_legs(int leg, const std::vector<std::vector<SparseVecT>>& table,
                                      int d_out) const {
  std::vector<int> nd = dims_;
  nd[leg] = d_out;
  nd.erase(nd.begin() + leg + 1);
  SparseTensor t(spec_, nd);
  std::vector<int> ni;
  for (const auto& [idx, c] : terms_) {
    for (const auto& [k, w] : table[idx[leg]][idx[leg + 1]]) {
      ni = idx;
      ni[leg] = k;
      ni.erase(ni.begin() + leg + 1);
      t.add_term(ni, c * w);
    }
  }
  return t;
}

SparseTensor SparseTensor::map_leg(int leg, const Matrix& m) const {
  if (m.cols() != dims_[leg]) throw ShapeMismatch("map_leg: dimension mismatch");
  std::vector<int> nd = dims_;
  nd[leg] = m.rows();
  SparseTensor t(spec_, nd);
  std::vector<int> ni;
  for (const auto& [idx, c] : terms_) {
    for (int o = 0; o < m.rows(); ++o) {
      const Scalar& w = m.at(o, idx[leg]);
      if (w.is_zero()) continue;
      ni = idx;
      ni[leg] = o;
      t.add_term(ni, c * w);
    }
  }
  return t;
}

SparseTensor SparseTensor::map_leg_table(int leg, const std::vector<SparseVecT>& table,
                                         int d_out) const {
  std::vector<int> nd = dims_;
  nd[leg] = d_out;
  SparseTensor t(spec_, nd);
  std::vector<int> ni;
  for (const auto& [idx, c] : terms_) {
    for (const auto& [o, w] : table[idx[leg]]) {
      ni = idx;
      ni[leg] = o;
      t.add_term(ni, c * w);
    }
  }
  return t;
}

SparseTensor SparseTensor::contract_leg(int leg, const Vec& covec) const {
  if (static_cast<int>(covec.size()) != dims_[leg])
    throw ShapeMismatch("contract_leg: dimension mismatch");
  std::vector<int> nd = dims_;
  nd.erase(nd.begin() + leg);
  SparseTensor t(spec_, nd);
  std::vector<int> ni;
  for (const auto& [idx, c] : terms_) {
    const Scalar& w = covec[idx[leg]];
    if (w.is_zero()) continue;
    ni = idx;
    ni.erase(ni.begin() + leg);
    t.add_term(ni, c * w);
  }
  return t;
}

SparseTensor SparseTensor::contract_form(int a, int b, const Matrix& form) const {
  if (form.rows() != dims_[a] || form.cols() != dims_[b])
    throw ShapeMismatch("contract_form: shape mismatch");
  std::vector<int> nd = dims_;
  int hi = std::max(a, b), lo = std::min(a, b);
  nd.erase(nd.begin() + hi);
  nd.erase(nd.begin() + lo);
  SparseTensor t(spec_, nd);
  std::vector<int> ni;
  for (const auto& [idx, c] : terms_) {
    const Scalar& w = form.at(idx[a], idx[b]);
    if (w.is_zero()) continue;
    ni = idx;
    ni.erase(ni.begin() + hi);
    ni.erase(ni.begin() + lo);
    t.add_term(ni, c * w);
  }
  return t;
}

SparseTensor SparseTensor::swap_legs(int a, int b) const {
  std::vector<int> nd = dims_;
  std::swap(nd[a], nd[b]);
  SparseTensor t(spec_, nd);
  std::vector<int> ni;
  for (const auto& [idx, c] : terms_) {
    ni = idx;
    std::swap(ni[a], ni[b]);
    t.add_term(ni, c);
  }
  return t;
}

SparseTensor SparseTensor::insert_leg(int pos, const Vec& v) const {
  std::vector<int> nd = dims_;
  nd.insert(nd.begin() + pos, static_cast<int>(v.size()));
  SparseTensor t(spec_, nd);
  std::vector<int> ni;
  for (const auto& [idx, c] : terms_) {
    for (int j = 0; j < static_cast<int>(v.size()); ++j) {
      if (v[j].is_zero()) continue;
      ni = idx;
      ni.insert(ni.begin() + pos, j);
      t.add_term(ni, c * v[j]);
    }
  }
  return t;
}

Vec SparseTensor::to_dense() const {
  size_t total = 1;
  for (int d : dims_) total *= static_cast<size_t>(d);
  Vec v(total, Scalar::zero(spec_));
  for (const auto& [idx, c] : terms_) {
    size_t flat = 0;
    for (size_t l = 0; l < idx.size(); ++l) flat = flat * dims_[l] + idx[l];
    v[flat] = c;
  }
  return v;
}

SparseTensor SparseTensor::from_dense(const FieldSpec& f, std::vector<int> dims, const Vec& v) {
  SparseTensor t(f, dims);
  for (size_t flat = 0; flat < v.size(); ++flat) {
    if (v[flat].is_zero()) continue;
    std::vector<int> idx(dims.size());
    size_t rem = flat;
    for (int l = static_cast<int>(dims.size()) - 1; l >= 0; --l) {
      idx[l] = static_cast<int>(rem % dims[l]);
      rem /= dims[l];
    }
    t.terms_[idx] = v[flat];
  }
  return t;
}

}  // namespace hopfca
