#include <doctest.h>

#include <random>

#include "genrank/error.hpp"
#include "genrank/field.hpp"
#include "testkit.hpp"

using namespace genrank;

TEST_SUITE_BEGIN("field");

TEST_CASE("rank of small matrices") {
  CHECK(rank(Matrix::identity(2)) == 2);
  CHECK(rank(Matrix(3, 4)) == 0);
  CHECK(rank(Matrix::from_rows({{1, 1}, {1, 1}})) == 1);
  CHECK(rank(Matrix(0, 5)) == 0);
  CHECK(rank(Matrix(5, 0)) == 0);
  CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}}, 5)) == 1);
  CHECK(rank(Matrix::from_rows({{1, 2}, {2, 1}}, 3)) == 1);
  CHECK(rank(Matrix::from_rows({{1, 2}, {2, 1}}, 5)) == 2);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(Matrix::identity(3)).cols() == 0);
  Matrix z(2, 3);
  Matrix k = kernel_basis(z);
  CHECK(k == Matrix::identity(3));
  Matrix k1 = kernel_basis(Matrix::from_rows({{1, 1}}));
  REQUIRE(k1.cols() == 1);
  CHECK(k1 == Matrix::from_rows({{1}, {1}}));
}

TEST_CASE("cokernel projection") {
  Cokernel c0 = cokernel_projection(Matrix(2, 0));
  CHECK(c0.dim == 2);
  CHECK(rank(c0.projection) == 2);
  CHECK(cokernel_projection(Matrix::identity(3)).dim == 0);
  Cokernel c = cokernel_projection(Matrix::from_rows({{1}, {1}}));
  CHECK(c.dim == 1);
  CHECK(c.projection == Matrix::from_rows({{1, 1}}));
}

TEST_CASE("products and stacking") {
  Matrix a = Matrix::from_rows({{1, 1}, {0, 1}});
  Matrix b = Matrix::from_rows({{1, 0}, {1, 1}});
  CHECK(a * b == Matrix::from_rows({{0, 1}, {1, 1}}));
  CHECK(a * Matrix::identity(2) == a);
  CHECK(hstack(Matrix(2, 1), Matrix(2, 2)).cols() == 3);
  CHECK(vstack(Matrix(1, 2), Matrix(3, 2)).rows() == 4);
  CHECK_THROWS_AS(a * Matrix(3, 1), Error);
  CHECK_THROWS_AS(hstack(Matrix(2, 1), Matrix(3, 1)), Error);
  CHECK_THROWS_AS(Matrix(2, 2, 2) * Matrix(2, 2, 3), Error);
}

TEST_CASE("field validation and arithmetic") {
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  PrimeField f(7);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.mul(f.inv(3), 3) == 1);
  CHECK(Matrix::from_rows({{-1}}, 7)(0, 0) == 6);
  CHECK(Matrix::from_rows({{3}}, 7).at(0, 0) == FieldElem{3, 7});
}

TEST_CASE("random properties against image-cardinality oracle") {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 150; ++trial) {
      std::uniform_int_distribution<std::size_t> sz(0, p == 2 ? 5 : 3);
      std::size_t r = sz(rng), c = sz(rng), c2 = sz(rng);
      Matrix m = testkit::random_matrix(rng, r, c, p);
      Matrix n = testkit::random_matrix(rng, c, c2, p);
      std::size_t rk = rank(m);
      CHECK(rk == testkit::brute_rank(m));
      Matrix k = kernel_basis(m);
      CHECK(k.cols() + rk == c);
      CHECK((m * k).is_zero());
      CHECK(rank(k) == k.cols());
      Cokernel q = cokernel_projection(m);
      CHECK(q.dim + rk == r);
      CHECK((q.projection * m).is_zero());
      CHECK(rank(q.projection) == q.dim);
      CHECK(rank(m * n) <= std::min(rk, rank(n)));
    }
  }
}

TEST_SUITE_END();
