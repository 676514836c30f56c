// test_linalg.cpp
//
// Exact matrix layer: row reduction, kernels, solving, subspace calculus,
// and the prime-field mode. Property checks run on seeded random inputs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "strat/matrix.hpp"
#include "testutil.hpp"

using namespace strat;

TEST_CASE("rational literals canonicalize") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat("2/4") == rat("1/2"));
  CHECK(rat(-3) == rat("-3"));
  CHECK(Field::is_zero(rat(0, 7)));
  CHECK_THROWS_AS(rat(1, 0), FieldError);
}

TEST_CASE("prime field arithmetic") {
  Field f5 = Field::prime(5);
  CHECK(f5.canon(rat(7)) == rat(2));
  CHECK(f5.canon(rat(-1)) == rat(4));
  CHECK(f5.canon(rat(1, 2)) == rat(3));  // 2^-1 = 3 mod 5
  CHECK(f5.inv(rat(3)) == rat(2));
  CHECK(f5.mul(rat(3), rat(4)) == rat(2));
  CHECK_THROWS_AS(Field::prime(6), FieldError);
  CHECK_THROWS_AS(f5.canon(rat(1, 5)), FieldError);
}

TEST_CASE("rref of identity and zero") {
  Mat id = Mat::identity(3);
  Rref r = rref(id);
  CHECK(r.r == id);
  CHECK(r.pivots == std::vector<int>{0, 1, 2});
  Mat z(2, 3);
  CHECK(rref(z).pivots.empty());
  CHECK(rank(z) == 0);
}

TEST_CASE("rref of a rank one matrix") {
  Mat m = Mat::of({{2, 4}, {1, 2}});
  Rref r = rref(m);
  CHECK(r.pivots == std::vector<int>{0});
  CHECK(r.r == Mat::of({{1, 2}, {0, 0}}));
  Mat k = kernel_basis(m);
  REQUIRE(k.cols == 1);
  CHECK((m * k).is_zero());
  CHECK(k.at(0, 0) == rat(-2));
  CHECK(k.at(1, 0) == rat(1));
}

TEST_CASE("rref is idempotent and rank respects products") {
  auto g = testutil::rng(1);
  for (int t = 0; t < 20; ++t) {
    Mat m = testutil::rand_mat(g, 4, 5);
    Rref r1 = rref(m);
    Rref r2 = rref(r1.r);
    CHECK(r1.r == r2.r);
    CHECK(r1.pivots == r2.pivots);
    Mat p = testutil::rand_mat(g, 5, 3);
    CHECK(rank(m * p) <= std::min(rank(m), rank(p)));
  }
}

TEST_CASE("rank plus nullity equals column count") {
  auto g = testutil::rng(2);
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    for (int t = 0; t < 15; ++t) {
      Mat m = testutil::rand_mat(g, 3 + t % 3, 4 + t % 4, f);
      Mat k = kernel_basis(m);
      CHECK(rank(m) + k.cols == m.cols);
      if (k.cols > 0) CHECK((m * k).is_zero());
      CHECK(rank(k) == k.cols);
    }
  }
}

TEST_CASE("solve returns a particular solution or nothing") {
  auto g = testutil::rng(3);
  for (int t = 0; t < 20; ++t) {
    Mat m = testutil::rand_mat(g, 4, 3);
    Mat x = testutil::rand_mat(g, 3, 2);
    Mat b = m * x;
    auto y = solve(m, b);
    REQUIRE(y.has_value());
    CHECK(m * *y == b);
  }
  Mat a = Mat::of({{1}, {1}});
  CHECK_FALSE(solve(a, Mat::of({{1}, {2}})).has_value());
  CHECK(solve(a, Mat::of({{3}, {3}})).has_value());
}

TEST_CASE("colspace is basis independent") {
  auto g = testutil::rng(4);
  for (int t = 0; t < 10; ++t) {
    Mat m = testutil::rand_mat(g, 4, 3);
    // postcomposing with an invertible change of coordinates keeps the span
    Mat c;
    do {
      c = testutil::rand_mat(g, 3, 3);
    } while (rank(c) < 3);
    CHECK(colspace(m) == colspace(m * c));
    CHECK(rank(colspace(m)) == rank(m));
  }
}

TEST_CASE("subspace dimension formula holds") {
  auto g = testutil::rng(5);
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    for (int t = 0; t < 15; ++t) {
      Mat u = testutil::rand_mat(g, 5, 1 + t % 4, f);
      Mat v = testutil::rand_mat(g, 5, 1 + (t + 2) % 4, f);
      SubspaceOps ops = subspace_ops(u, v);
      int du = rank(u), dv = rank(v);
      int ds = rank(ops.sum), di = rank(ops.intersection);
      CHECK(ds + di == du + dv);
      CHECK(ops.complement.cols == ds - du);
      if (ops.complement.cols > 0) CHECK(rank(hstack(u, ops.complement)) == ds);
      // intersection vectors live in both spans
      for (int j = 0; j < ops.intersection.cols; ++j) {
        CHECK(in_colspan(u, ops.intersection.col(j)));
        CHECK(in_colspan(v, ops.intersection.col(j)));
      }
      CHECK(ops.sum == colspace(hstack(u, v)));
    }
  }
}

TEST_CASE("rank drops mod p when determinant is divisible by p") {
  Mat m = Mat::of({{1, 0}, {0, 5}});
  CHECK(rank(m) == 2);
  Field f5 = Field::prime(5);
  Mat mp(2, 2, f5);
  mp.at(0, 0) = 1;
  mp.at(1, 1) = f5.canon(rat(5));
  CHECK(rank(mp) == 1);
}

TEST_CASE("field mismatch is rejected") {
  Mat a = Mat::identity(2);
  Mat b = Mat::identity(2, Field::prime(3));
  CHECK_THROWS_AS(a * b, LinalgError);
}
