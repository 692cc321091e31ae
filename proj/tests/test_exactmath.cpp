#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfca/matrix.hpp"

using namespace hopfca;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F7 = FieldSpec::prime_field(7);

Matrix random_matrix(const FieldSpec& f, int r, int c, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Scalar::from_long(f, d(rng));
  return m;
}

}  // namespace

TEST_CASE("scalar canonical form and arithmetic") {
  CHECK(Scalar::from_ratio(Q, 2, 4) == Scalar::from_ratio(Q, 1, 2));
  CHECK(Scalar::from_ratio(Q, -3, -6) == Scalar::from_ratio(Q, 1, 2));
  CHECK(Scalar::from_ratio(Q, 1, -2).str() == "-1/2");
  CHECK(Scalar::from_long(Q, 7).str() == "7");
  CHECK(Scalar::from_string(Q, "22/7") == Scalar::from_ratio(Q, 22, 7));
  CHECK(Scalar::from_long(F7, 10) == Scalar::from_long(F7, 3));
  CHECK(Scalar::from_ratio(F7, 1, 2) == Scalar::from_long(F7, 4));  // 2*4 = 8 = 1
  CHECK_THROWS_AS(Scalar::from_long(Q, 1) / Scalar::zero(Q), SingularMatrix);
  CHECK_THROWS_AS(FieldSpec::prime_field(6), BadParams);
}

TEST_CASE("scalar field axioms on randomized samples") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> d(-20, 20);
  for (const FieldSpec& f : {Q, F7}) {
    for (int t = 0; t < 200; ++t) {
      Scalar a = Scalar::from_long(f, d(rng));
      Scalar b = Scalar::from_long(f, d(rng));
      Scalar c = Scalar::from_long(f, d(rng));
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + Scalar::zero(f) == a);
      CHECK(a * Scalar::one(f) == a);
      CHECK(a - a == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * a.inv() == Scalar::one(f));
    }
  }
}

TEST_CASE("kron examples") {
  CHECK(kron(Matrix::identity(Q, 2), Matrix::identity(Q, 3)) == Matrix::identity(Q, 6));
  Matrix m = Matrix::from_rows(Q, 2, 2, {1, 2, 3, 4});
  CHECK(kron(Matrix::zero(Q, 1, 1), m) == Matrix::zero(Q, 2, 2));
  Matrix a = Matrix::from_rows(Q, 1, 2, {1, 2});
  Matrix b = Matrix::from_rows(Q, 2, 1, {3, 4});
  CHECK(kron(a, b) == Matrix::from_rows(Q, 2, 2, {3, 6, 4, 8}));
}

TEST_CASE("kron associativity") {
  std::mt19937 rng(99);
  for (int t = 0; t < 5; ++t) {
    Matrix a = random_matrix(Q, 2, 3, rng);
    Matrix b = random_matrix(Q, 3, 2, rng);
    Matrix c = random_matrix(Q, 2, 2, rng);
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  }
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(Matrix::identity(Q, 2)).empty());
  auto kb = kernel_basis(Matrix::zero(Q, 2, 3));
  REQUIRE(kb.size() == 3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) CHECK(kb[j][i] == (i == j ? Scalar::one(Q) : Scalar::zero(Q)));
  Matrix m = Matrix::from_rows(Q, 2, 2, {1, 1, 2, 2});
  auto kb2 = kernel_basis(m);
  REQUIRE(kb2.size() == 1);
  CHECK(m.apply(kb2[0]) == Vec{Scalar::zero(Q), Scalar::zero(Q)});
  CHECK(kb2.size() == 2 - rank(m));
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(7);
  for (const FieldSpec& f : {Q, F7}) {
    for (int t = 0; t < 20; ++t) {
      Matrix m = random_matrix(f, 4, 6, rng);
      auto kb = kernel_basis(m);
      CHECK(rank(m) + static_cast<int>(kb.size()) == m.cols());
      for (const auto& v : kb) {
        Vec img = m.apply(v);
        for (const auto& s : img) CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("invert examples and errors") {
  CHECK(invert(Matrix::identity(Q, 4)) == Matrix::identity(Q, 4));
  Matrix two = Matrix::from_rows(Q, 1, 1, {2});
  CHECK(invert(two).at(0, 0) == Scalar::from_ratio(Q, 1, 2));
  Matrix sw = Matrix::from_rows(Q, 2, 2, {0, 1, 1, 0});
  CHECK(invert(sw) == sw);
  CHECK(invert(sw) * sw == Matrix::identity(Q, 2));
  CHECK_THROWS_AS(invert(Matrix::from_rows(Q, 2, 2, {1, 1, 2, 2})), SingularMatrix);
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    Matrix m = random_matrix(F7, 4, 4, rng);
    if (rank(m) < 4) continue;
    CHECK(invert(m) * m == Matrix::identity(F7, 4));
    CHECK(m * invert(m) == Matrix::identity(F7, 4));
  }
}

TEST_CASE("solve_right_inverse_section") {
  CHECK(solve_right_inverse_section(Matrix::identity(Q, 3)) == Matrix::identity(Q, 3));
  Matrix q = Matrix::from_rows(Q, 2, 3, {1, 0, 0, 0, 1, 0});
  CHECK(solve_right_inverse_section(q) == Matrix::from_rows(Q, 3, 2, {1, 0, 0, 1, 0, 0}));
  Matrix q2 = Matrix::from_rows(Q, 1, 2, {1, 1});
  CHECK(solve_right_inverse_section(q2) == Matrix::from_rows(Q, 2, 1, {1, 0}));
  CHECK_THROWS_AS(solve_right_inverse_section(Matrix::from_rows(Q, 2, 2, {1, 1, 1, 1})),
                  NotSurjective);
  std::mt19937 rng(11);
  for (int t = 0; t < 10; ++t) {
    Matrix m = random_matrix(Q, 3, 5, rng);
    if (rank(m) < 3) continue;
    CHECK(m * solve_right_inverse_section(m) == Matrix::identity(Q, 3));
  }
}

TEST_CASE("solve handles inconsistent systems") {
  Matrix a = Matrix::from_rows(Q, 2, 1, {1, 1});
  Matrix b = Matrix::from_rows(Q, 2, 1, {1, 2});
  CHECK_THROWS_AS(solve(a, b), SingularMatrix);
  Matrix b2 = Matrix::from_rows(Q, 2, 1, {3, 3});
  CHECK(solve(a, b2) == Matrix::from_rows(Q, 1, 1, {3}));
}
