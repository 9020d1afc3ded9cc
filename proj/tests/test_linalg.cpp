#include <doctest.h>

#include <random>

#include "quiverdom/matrix.hpp"

using namespace quiverdom;

namespace {

Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-4, 4);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::of_int(f, entry(rng));
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("field spec validation") {
  CHECK(FieldSpec::prime(2).p == 2);
  CHECK(FieldSpec::prime(2147483647).p == 2147483647);  // 2^31 - 1 is prime
  CHECK_THROWS_AS(FieldSpec::prime(1), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(4), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(2147483649LL), FieldError);
  CHECK(FieldSpec::rationals().str() == "Q");
  CHECK(FieldSpec::prime(7).str() == "F7");
}

TEST_CASE("scalar parsing and canonical forms") {
  auto Q = FieldSpec::rationals();
  CHECK(Scalar::parse(Q, "2/5").str() == "2/5");
  CHECK(Scalar::parse(Q, "-6/4").str() == "-3/2");
  CHECK(Scalar::parse(Q, "-0").str() == "0");
  CHECK(Scalar::parse(Q, "17").str() == "17");
  CHECK_THROWS_AS(Scalar::parse(Q, "2/0"), FieldError);
  CHECK_THROWS_AS(Scalar::parse(Q, "x"), FieldError);
  CHECK_THROWS_AS(Scalar::parse(Q, "1.5"), FieldError);
  CHECK_THROWS_AS(Scalar::parse(Q, ""), FieldError);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/-2"), FieldError);

  auto F3 = FieldSpec::prime(3);
  CHECK(Scalar::parse(F3, "-1").str() == "2");
  CHECK(Scalar::parse(F3, "2/5") == Scalar::of_int(F3, 1));  // 2 * 5^{-1} = 2*2 = 4 = 1
  CHECK_THROWS_AS(Scalar::parse(F3, "1/3"), FieldError);     // denominator 0 mod 3

  auto F2 = FieldSpec::prime(2);
  CHECK_THROWS_AS(Scalar::parse(F2, "1/2"), FieldError);
}

TEST_CASE("scalar arithmetic is exact") {
  auto Q = FieldSpec::rationals();
  Scalar third = Scalar::parse(Q, "1/3");
  Scalar sum = Scalar::zero(Q);
  for (int i = 0; i < 3; ++i) sum = sum + third;
  CHECK(sum.is_one());

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(1, 40);
  for (int t = 0; t < 50; ++t) {
    Scalar a = Scalar::parse(Q, std::to_string(d(rng)) + "/" + std::to_string(d(rng)));
    CHECK((a * a.inverse()).is_one());
    CHECK((a - a).is_zero());
  }

  auto F101 = FieldSpec::prime(101);
  for (long v = 1; v < 101; ++v) {
    Scalar a = Scalar::of_int(F101, v);
    CHECK((a * a.inverse()).is_one());
  }
  CHECK_THROWS_AS(Scalar::zero(F101).inverse(), FieldError);

  // field mismatch must be loud
  CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(F101), FieldError);
}

TEST_CASE("rank on pinned examples") {
  auto Q = FieldSpec::rationals();
  CHECK(rank(Matrix::identity(Q, 2)) == 2);
  CHECK(rank(Matrix(Q, 3, 4)) == 0);
  CHECK(rank(Matrix::from_rows(Q, {{"1", "2"}, {"2", "4"}})) == 1);
  CHECK(rank(Matrix(Q, 0, 5)) == 0);
  CHECK(rank(Matrix(Q, 5, 0)) == 0);
}

TEST_CASE("kernel on pinned examples") {
  auto Q = FieldSpec::rationals();
  CHECK(kernel_basis(Matrix::identity(Q, 3)).cols() == 0);

  Matrix z22(Q, 2, 2);
  CHECK(kernel_basis(z22) == Matrix::identity(Q, 2));

  auto F2 = FieldSpec::prime(2);
  Matrix m = Matrix::from_rows(F2, {{"1", "1"}});
  Matrix k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0).is_one());
  CHECK(k.at(1, 0).is_one());
}

TEST_CASE("complement on pinned examples") {
  auto Q = FieldSpec::rationals();
  Matrix e1(Q, 2, 1);
  e1.at(0, 0) = Scalar::one(Q);
  Matrix c = complement_basis(e1, 2);
  REQUIRE(c.cols() == 1);
  CHECK(c.at(1, 0).is_one());  // complement of span{e1} is {e2}

  CHECK(complement_basis(Matrix(Q, 3, 0), 3) == Matrix::identity(Q, 3));

  auto F2 = FieldSpec::prime(2);
  Matrix v(F2, 2, 1);
  v.at(0, 0) = v.at(1, 0) = Scalar::one(F2);
  Matrix c2 = complement_basis(v, 2);
  REQUIRE(c2.cols() == 1);
  CHECK(c2.at(0, 0).is_one());  // greedy rule picks e1, not e2
  CHECK(c2.at(1, 0).is_zero());
}

TEST_CASE("solve on pinned examples") {
  auto Q = FieldSpec::rationals();
  Matrix rhs(Q, 2, 1);
  rhs.at(0, 0) = Scalar::of_int(Q, 3);
  rhs.at(1, 0) = Scalar::of_int(Q, -1);
  auto x = solve(Matrix::identity(Q, 2), rhs);
  REQUIRE(x.has_value());
  CHECK(*x == rhs);

  Matrix bad(Q, 2, 1);
  bad.at(0, 0) = Scalar::one(Q);
  CHECK_FALSE(solve(Matrix(Q, 2, 2), bad).has_value());

  Matrix half = Matrix::from_rows(Q, {{"2"}});
  auto y = solve(half, Matrix::from_rows(Q, {{"1"}}));
  REQUIRE(y.has_value());
  CHECK(y->at(0, 0) == Scalar::parse(Q, "1/2"));
}

TEST_CASE("rank-nullity and solve consistency on random matrices") {
  std::mt19937 rng(20260814);
  std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime(2),
                                   FieldSpec::prime(3), FieldSpec::prime(7)};
  std::uniform_int_distribution<std::size_t> dim(0, 7);
  for (int t = 0; t < 200; ++t) {
    const FieldSpec& f = fields[t % fields.size()];
    Matrix m = random_matrix(f, dim(rng), dim(rng), rng);
    Matrix k = kernel_basis(m);
    CHECK(rank(m) + k.cols() == m.cols());
    if (k.cols() > 0) CHECK((m * k).is_zero());
    CHECK(rank(k) == k.cols());  // kernel basis is independent

    // m applied to a solve() result reproduces a consistent rhs
    Matrix probe = random_matrix(f, m.cols(), 1, rng);
    Matrix rhs = m * probe;
    auto x = solve(m, rhs);
    REQUIRE(x.has_value());
    CHECK(m * *x == rhs);
  }
}

TEST_CASE("complement property: basis of subspace plus complement spans ambient") {
  std::mt19937 rng(99);
  std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime(2),
                                   FieldSpec::prime(5)};
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int t = 0; t < 100; ++t) {
    const FieldSpec& f = fields[t % fields.size()];
    std::size_t n = dim(rng);
    Matrix sub = random_matrix(f, n, dim(rng) % (n + 1), rng);
    Matrix comp = complement_basis(sub, n);
    CHECK(rank(sub) + comp.cols() == n);
    CHECK(rank(sub.hstack(comp)) == n);
  }
}

TEST_CASE("span helpers") {
  auto Q = FieldSpec::rationals();
  Matrix a = Matrix::from_rows(Q, {{"1", "0"}, {"0", "1"}, {"0", "0"}});
  Matrix b = Matrix::from_rows(Q, {{"1", "1"}, {"1", "-1"}, {"0", "0"}});
  CHECK(same_column_span(a, b));
  Matrix c = Matrix::from_rows(Q, {{"1"}, {"0"}, {"1"}});
  CHECK_FALSE(same_column_span(a, c));
  CHECK(in_column_span(a, b));
  CHECK_FALSE(in_column_span(a, c));
}

TEST_SUITE_END();
