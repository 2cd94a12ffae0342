#include "doctest.h"

#include "kmorbit/error.hpp"
#include "kmorbit/normalform.hpp"
#include "kmorbit/sampling.hpp"
#include "oracles.hpp"

using namespace kmorbit;
using oracle::lit;
using oracle::mat;

TEST_CASE("ring operations") {
  const MatK x = mat({{"t", "t^-1"}, {"3", "1 + t"}});
  CHECK(mat_mul(identity(2), x) == x);
  CHECK(mat_mul(unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)) == unit_matrix(2, 0, 0));
  const MatK shift = mat_add(unit_matrix(3, 0, 1), unit_matrix(3, 1, 2));
  CHECK(mat_pow(shift, 2) == unit_matrix(3, 0, 2));
  CHECK(is_zero(mat_pow(shift, 3)) == Truth::yes);
  CHECK(mat_pow(x, 0) == identity(2));
  CHECK_THROWS_AS(mat_mul(identity(2), identity(3)), DimensionMismatch);
  CHECK_THROWS_AS(mat_add(identity(2), identity(3)), DimensionMismatch);
}

TEST_CASE("determinant") {
  CHECK(det(identity(4)) == lit("1"));
  CHECK(det(shear(2, 1, 0, lit("t^-1"))) == lit("1"));
  CHECK(det(diagonal({lit("t"), lit("t^-1")})) == lit("1"));
  CHECK(det(zero_matrix(3)).is_exact_zero());
  CHECK(det(mat({{"0", "1"}, {"1", "0"}})) == lit("-1"));
  CHECK(det(mat({{"1", "t"}, {"t^-1", "1"}})).is_exact_zero());
  // a division in the elimination that does not come out exact
  const MatK a = mat({{"1 + t", "1"}, {"1", "1 - t"}});
  CHECK(det(a) == lit("-t^2"));
}

TEST_CASE("determinant matches cofactor expansion for n <= 4") {
  Rng rng(3);
  for (int c = 0; c < 150; ++c) {
    const int n = 1 + c % 4;
    MatK a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rng() % 3)
          a(i, j) = random_laurent(rng, 2, -2, 2);
    const LaurentSeries d = det(a);
    CAPTURE(c);
    CHECK(d.is_exact());
    CHECK(d == oracle::cofactor_det(a));
  }
}

TEST_CASE("determinant is multiplicative") {
  Rng rng(5);
  for (int c = 0; c < 60; ++c) {
    const int n = 1 + c % 4;
    const MatK a = random_traceless(rng, n), b = random_shear_word(rng, n).matrix();
    CHECK(compare(det(mat_mul(a, b)), det(a) * det(b)) == Truth::yes);
    CHECK(det(b) == lit("1"));
  }
}

TEST_CASE("inverse") {
  CHECK(mat_inv(shear(2, 1, 0, lit("t^-1"))) == shear(2, 1, 0, lit("-t^-1")));
  CHECK(mat_inv(diagonal({lit("1"), lit("t")})) == diagonal({lit("1"), lit("t^-1")}));
  CHECK_THROWS_AS(mat_inv(zero_matrix(2)), Singular);
  CHECK_THROWS_AS(mat_inv(mat({{"1", "t"}, {"t^-1", "1"}})), Singular);

  // non-unimodular: the inverse needs 1/(1+t) as a series
  const MatK a = mat({{"1 + t", "0"}, {"1", "1"}});
  const MatK ai = mat_inv(a, 16);
  CHECK_FALSE(is_exact(ai));
  CHECK(is_zero(mat_sub(mat_mul(a, ai), identity(2))) != Truth::no);
  CHECK(is_zero(mat_sub(mat_mul(ai, a), identity(2))) != Truth::no);
}

TEST_CASE("inverse of shear products is exact and two-sided") {
  Rng rng(9);
  for (int c = 0; c < 80; ++c) {
    const int n = 2 + c % 4;
    const MatK g = random_shear_word(rng, n).matrix();
    const MatK gi = mat_inv(g);
    CHECK(is_exact(gi));
    CHECK(is_zero(mat_sub(mat_mul(g, gi), identity(n))) == Truth::yes);
    CHECK(is_zero(mat_sub(mat_mul(gi, g), identity(n))) == Truth::yes);
  }
}

TEST_CASE("rank") {
  CHECK(rank_to_precision(unit_matrix(2, 0, 1)) == 1);
  CHECK(rank_to_precision(zero_matrix(3)) == 0);
  CHECK(rank_to_precision(identity(3)) == 3);
  const MatK d = canonical_rep({4}, 2);
  CHECK(rank_to_precision(d) == 3);
  CHECK(rank_to_precision(mat_pow(d, 2)) == 2);
  CHECK(rank_to_precision(mat_pow(d, 3)) == 1);
  CHECK(rank_to_precision(mat({{"t + O(t^3)", "O(t)"}, {"0", "1"}})) == 2);
  CHECK_THROWS_AS(rank_to_precision(mat({{"O(t^2)", "0"}, {"0", "O(t^2)"}})), PrecisionExhausted);
}

TEST_CASE("rank of powers is non-increasing") {
  Rng rng(13);
  for (int c = 0; c < 40; ++c) {
    const int n = 1 + c % 4;
    const MatK x = random_traceless(rng, n);
    int prev = n;
    MatK p = identity(n);
    CHECK(rank_to_precision(p) == n);
    for (int j = 1; j <= n; ++j) {
      p = mat_mul(p, x);
      const int r = rank_to_precision(p);
      CHECK(r <= prev);
      prev = r;
    }
  }
}

TEST_CASE("left kernel") {
  const MatK x = mat({{"0", "t", "0"}, {"0", "0", "1"}, {"0", "0", "0"}});
  const auto ker = left_kernel(x);
  REQUIRE(ker.size() == 1);
  CHECK(is_zero(mat_mul(MatK(ker[0]), x)) == Truth::yes);
  CHECK(ker[0] == RowK(mat({{"0", "0", "1"}})));

  Rng rng(17);
  for (int c = 0; c < 40; ++c) {
    const int n = 2 + c % 3;
    MatK a = random_traceless(rng, n);
    for (int j = 0; j < n; ++j) // force a dependency
      a(n - 1, j) = a(0, j) + a(n - 2, j) * lit("t^-1");
    for (const RowK& v : left_kernel(a))
      CHECK(is_zero(mat_mul(MatK(v), a)) == Truth::yes);
    CHECK(static_cast<int>(left_kernel(a).size()) == n - rank_to_precision(a));
  }
}

TEST_CASE("entrywise derivative") {
  CHECK(is_zero(mat_d_dt(identity(3))) == Truth::yes);
  CHECK(mat_d_dt(unit_matrix(2, 0, 1, lit("t"))) == unit_matrix(2, 0, 1));
  CHECK(mat_d_dt(shear(2, 1, 0, lit("t^-1"))) == unit_matrix(2, 1, 0, lit("-t^-2")));

  Rng rng(19);
  for (int c = 0; c < 40; ++c) {
    const int n = 1 + c % 4;
    const MatK a = random_traceless(rng, n), b = random_traceless(rng, n);
    CHECK(mat_d_dt(mat_mul(a, b)) == mat_add(mat_mul(mat_d_dt(a), b), mat_mul(a, mat_d_dt(b))));
  }
}

TEST_CASE("t -> z t on matrices") {
  const MatK a = mat({{"t", "t^-1"}, {"3", "-t"}});
  CHECK(mat_scale_t(a, 2) == mat({{"2*t", "1/2*t^-1"}, {"3", "-2*t"}}));
}
