#include "hopfca/registry.hpp"

#include "hopfca/functors.hpp"

#include <array>
#include <map>

namespace hopfca {

namespace {

// Group algebra from a multiplication table: basis = group elements,
// grouplike coproduct, antipode by inversion.
HopfAlgebraData group_algebra(const std::string& name, const FieldSpec& f,
                              const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  Matrix mult(f, n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult.at(i * n + j, table[i][j]) = Scalar::one(f);
  Vec unit(n, Scalar::zero(f));
  unit[0] = Scalar::one(f);
  Matrix comult(f, n, n * n);
  for (int i = 0; i < n; ++i) comult.at(i, i * n + i) = Scalar::one(f);
  Vec counit(n, Scalar::one(f));
  Matrix antipode(f, n, n);
  for (int j = 0; j < n; ++j) {
    int inv = -1;
    for (int i = 0; i < n; ++i)
      if (table[j][i] == 0) {
        inv = i;
        break;
      }
    antipode.at(inv, j) = Scalar::one(f);
  }
  return make_hopf(name, f, n, std::move(mult), std::move(unit), std::move(comult),
                   std::move(counit), std::move(antipode));
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

// S3 basis order: identity, the two 3-cycles, the three transpositions,
// lexicographic in cycle notation:
//   0: e, 1: (123), 2: (132), 3: (12), 4: (13), 5: (23)
std::vector<std::vector<int>> s3_table() {
  using Perm = std::array<int, 3>;
  std::vector<Perm> els = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  auto compose = [](const Perm& g, const Perm& h) {  // g after h
    return Perm{g[h[0]], g[h[1]], g[h[2]]};
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      Perm p = compose(els[i], els[j]);
      for (int k = 0; k < 6; ++k)
        if (p == els[k]) t[i][j] = k;
    }
  return t;
}

// Sparse element of H (x) H, used while deriving Taft coproducts.
using Elt2 = std::map<std::pair<int, int>, Scalar>;

Elt2 mul2(const Elt2& a, const Elt2& b, const std::vector<std::vector<SparseVecT>>& prod) {
  Elt2 r;
  for (const auto& [ia, ca] : a)
    for (const auto& [ib, cb] : b)
      for (const auto& [k1, w1] : prod[ia.first][ib.first])
        for (const auto& [k2, w2] : prod[ia.second][ib.second]) {
          Scalar c = ca * cb * w1 * w2;
          auto key = std::pair{k1, k2};
          auto it = r.find(key);
          if (it == r.end())
            r.emplace(key, c);
          else {
            it->second += c;
            if (it->second.is_zero()) r.erase(it);
          }
        }
  return r;
}

// Taft algebra on basis g^a x^b (index a*n + b): g^n = 1, x^n = 0,
// x g = q g x, Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x.
// Sweedler's 4-dimensional algebra is the n = 2, q = -1 case over Q.
HopfAlgebraData taft_like(const std::string& name, const FieldSpec& f, int n, const Scalar& q) {
  // primitivity of q
  Scalar pw = Scalar::one(f);
  for (int m = 1; m <= n; ++m) {
    pw *= q;
    if (m < n && pw.is_one()) throw BadParams("taft: q is not a primitive n-th root of unity");
  }
  if (!pw.is_one()) throw BadParams("taft: q^n != 1");

  int d = n * n;
  auto idx = [n](int a, int b) { return a * n + b; };
  Matrix mult(f, d * d, d);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          if (b + e >= n) continue;  // x^n = 0
          Scalar coeff = Scalar::one(f);
          for (int m = 0; m < b * c; ++m) coeff *= q;
          mult.at(idx(a, b) * d + idx(c, e), idx((a + c) % n, b + e)) = coeff;
        }
  auto prod = prod_table(mult);

  Vec unit(d, Scalar::zero(f));
  unit[idx(0, 0)] = Scalar::one(f);
  Vec counit(d, Scalar::zero(f));
  for (int a = 0; a < n; ++a) counit[idx(a, 0)] = Scalar::one(f);

  // Coproduct as an algebra map: Delta(g^a x^b) = (g(x)g)^a (x(x)1 + g(x)x)^b.
  Elt2 dg{{{idx(1, 0), idx(1, 0)}, Scalar::one(f)}};
  Elt2 dx{{{idx(0, 1), idx(0, 0)}, Scalar::one(f)}, {{idx(1, 0), idx(0, 1)}, Scalar::one(f)}};
  Matrix comult(f, d, d * d);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Elt2 acc{{{idx(0, 0), idx(0, 0)}, Scalar::one(f)}};
      for (int m = 0; m < a; ++m) acc = mul2(acc, dg, prod);
      for (int m = 0; m < b; ++m) acc = mul2(acc, dx, prod);
      for (const auto& [key, c] : acc) comult.at(idx(a, b), key.first * d + key.second) = c;
    }

  // Antipode: S(g) = g^{n-1}, S(x) = -g^{n-1} x, extended anti-multiplicatively:
  // S(g^a x^b) = S(x)^b S(g)^a.
  auto mul1 = [&prod, &f, d](const Vec& u, const Vec& v) {
    Vec r(d, Scalar::zero(f));
    for (int i = 0; i < d; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (v[j].is_zero()) continue;
        for (const auto& [k, w] : prod[i][j]) r[k] += u[i] * v[j] * w;
      }
    }
    return r;
  };
  Vec sg(d, Scalar::zero(f));
  sg[idx(n - 1, 0)] = Scalar::one(f);
  Vec sx(d, Scalar::zero(f));
  sx[idx(n - 1, 1)] = -Scalar::one(f);
  Matrix antipode(f, d, d);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vec acc(d, Scalar::zero(f));
      acc[idx(0, 0)] = Scalar::one(f);
      for (int m = 0; m < b; ++m) acc = mul1(acc, sx);
      for (int m = 0; m < a; ++m) acc = mul1(acc, sg);
      for (int i = 0; i < d; ++i) antipode.at(i, idx(a, b)) = acc[i];
    }

  return make_hopf(name, f, d, std::move(mult), std::move(unit), std::move(comult),
                   std::move(counit), std::move(antipode));
}

}  // namespace

HopfAlgebraData build_hopf(const ExampleKey& key) {
  FieldSpec q = FieldSpec::rationals();
  switch (key.family) {
    case ExampleKey::Family::cyclic_group:
      if (key.order < 1) throw BadParams("cyclic group order must be positive");
      return group_algebra("c" + std::to_string(key.order), q, cyclic_table(key.order));
    case ExampleKey::Family::symmetric_group_3:
      return group_algebra("s3", q, s3_table());
    case ExampleKey::Family::dual_group: {
      HopfAlgebraData g = key.dual_of_s3
                              ? group_algebra("s3", q, s3_table())
                              : group_algebra("c" + std::to_string(key.order), q,
                                              cyclic_table(key.order));
      HopfAlgebraData d = dual(g);
      d.name = "dual-" + g.name;
      return d;
    }
    case ExampleKey::Family::sweedler4:
      return taft_like("sweedler4", q, 2, Scalar::from_long(q, -1));
    case ExampleKey::Family::taft: {
      FieldSpec fp = FieldSpec::prime_field(key.taft_p);
      return taft_like("taft-" + std::to_string(key.taft_n) + "-" +
                           std::to_string(key.taft_p) + "-" + std::to_string(key.taft_q),
                       fp, key.taft_n, Scalar::from_long(fp, key.taft_q));
    }
  }
  throw BadParams("unknown example family");
}

HopfAlgebraData build_hopf(const std::string& name) {
  if (name.size() == 2 && name[0] == 'c' && name[1] >= '2' && name[1] <= '6')
    return build_hopf({ExampleKey::Family::cyclic_group, name[1] - '0'});
  if (name == "s3") return build_hopf({ExampleKey::Family::symmetric_group_3});
  if (name.rfind("dual-c", 0) == 0 && name.size() == 7) {
    ExampleKey k{ExampleKey::Family::dual_group, name[6] - '0'};
    return build_hopf(k);
  }
  if (name == "dual-s3") {
    ExampleKey k{ExampleKey::Family::dual_group};
    k.dual_of_s3 = true;
    return build_hopf(k);
  }
  if (name == "sweedler4") return build_hopf({ExampleKey::Family::sweedler4});
  if (name == "taft-3-7-2") {
    ExampleKey k{ExampleKey::Family::taft};
    k.taft_n = 3;
    k.taft_p = 7;
    k.taft_q = 2;
    return build_hopf(k);
  }
  throw UnknownExample("unknown algebra name: " + name);
}

HopfPairing build_pairing(const std::string& name) {
  auto eval = [](const std::string& alg) {
    HopfAlgebraData h = build_hopf(alg);
    return standard_pairing(PairingKind::evaluation, h, h);
  };
  if (name == "eval-c2") return eval("c2");
  if (name == "eval-c3") return eval("c3");
  if (name == "eval-s3") return eval("s3");
  if (name == "eval-sweedler4") return eval("sweedler4");
  if (name == "eval-taft-3-7-2") return eval("taft-3-7-2");
  if (name == "trivial-c2-c3")
    return standard_pairing(PairingKind::trivial, build_hopf("c2"), build_hopf("c3"));
  if (name == "sign-s3-c2") {
    HopfAlgebraData s3 = build_hopf("s3");
    HopfAlgebraData c2 = build_hopf("c2");
    // sign character: identity and 3-cycles -> 1, transpositions -> g
    Matrix m(s3.field, 2, 6);
    for (int j = 0; j < 6; ++j) m.at(j < 3 ? 0 : 1, j) = Scalar::one(s3.field);
    LinearMap f{"s3", "c2", m};
    return standard_pairing(PairingKind::from_map, c2, s3, &f);
  }
  if (name == "quot-c4-c2") {
    HopfAlgebraData c4 = build_hopf("c4");
    HopfAlgebraData c2 = build_hopf("c2");
    Matrix m(c4.field, 2, 4);
    for (int j = 0; j < 4; ++j) m.at(j % 2, j) = Scalar::one(c4.field);
    LinearMap f{"c4", "c2", m};
    return standard_pairing(PairingKind::from_map, c2, c4, &f);
  }
  throw UnknownExample("unknown pairing name: " + name);
}

std::vector<std::string> registry_hopf_names() {
  return {"c2", "c3", "c4", "c5", "c6", "s3", "dual-c2", "dual-c3", "dual-c4", "dual-c5",
          "dual-c6", "dual-s3", "sweedler4", "taft-3-7-2"};
}

std::vector<std::string> registry_pairing_names() {
  return {"eval-c2", "eval-c3", "eval-s3", "eval-sweedler4", "eval-taft-3-7-2",
          "trivial-c2-c3", "sign-s3-c2", "quot-c4-c2"};
}

std::vector<YdModule> build_test_modules(const HopfPairing& p) {
  HopfAlgebraData d = quantum_double(p);
  int n = d.dim;
  Matrix act = d.mult;
  RepModule reg{"regular(" + d.name + ")", std::move(d), n, std::move(act)};
  std::vector<YdModule> out;
  out.push_back(trivial_yd(p, 1));
  out.push_back(rep_to_yd(reg, p));
  out.push_back(yd_tensor(out[0], out[1]));
  out.push_back(seeded_yd_sample(p, 7));
  return out;
}

}  // namespace hopfca
