#include "doctest.h"

#include "kmorbit/error.hpp"
#include "kmorbit/sampling.hpp"
#include "oracles.hpp"

using namespace kmorbit;
using oracle::lit;
using oracle::mat;

namespace {

MatK conjugate(const MatK& g, const MatK& x) { return mat_mul(mat_mul(g, x), mat_inv(g)); }

QuasiJordanBlock block(std::initializer_list<const char*> superdiag) {
  QuasiJordanBlock b;
  for (const char* e : superdiag)
    b.superdiag.push_back(lit(e));
  b.size = static_cast<int>(b.superdiag.size()) + 1;
  return b;
}

int floor_mod(int a, int m) { return ((a % m) + m) % m; }

} // namespace

TEST_CASE("partition validation and formatting") {
  CHECK_NOTHROW(validate_partition({3, 1, 1}));
  CHECK_THROWS_AS(validate_partition({}), InvalidPartition);
  CHECK_THROWS_AS(validate_partition({1, 2}), InvalidPartition);
  CHECK_THROWS_AS(validate_partition({2, 0}), InvalidPartition);
  CHECK(format_partition({4, 1, 1}) == "[4,1,1]");
}

TEST_CASE("quasi-Jordan forms from matrices") {
  const QuasiJordanForm f = QuasiJordanForm::from_matrix(canonical_rep({2, 2}, 1));
  CHECK(f.partition() == Partition{2, 2});
  CHECK(f.blocks[1].superdiag[0] == lit("t"));
  CHECK(f.matrix() == canonical_rep({2, 2}, 1));
  CHECK(QuasiJordanForm::from_matrix(zero_matrix(3)).partition() == Partition{1, 1, 1});
  CHECK_THROWS_AS(QuasiJordanForm::from_matrix(unit_matrix(3, 0, 2)), ShapeMismatch);
  CHECK_THROWS_AS(QuasiJordanForm::from_matrix(unit_matrix(3, 1, 2)), ShapeMismatch);
}

TEST_CASE("rank profile partition") {
  CHECK(rank_profile_partition(zero_matrix(4)) == Partition{1, 1, 1, 1});
  CHECK(rank_profile_partition(unit_matrix(3, 0, 1)) == Partition{2, 1});
  CHECK(rank_profile_partition(canonical_rep({4}, 2)) == Partition{4});
  CHECK_THROWS_AS(rank_profile_partition(identity(2)), NotNilpotent);
}

TEST_CASE("canonical representatives keep their rank profile") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& sigma : partitions(n))
      for (int k = 0; k < sigma.back(); ++k) {
        CAPTURE(format_partition(sigma));
        CAPTURE(k);
        CHECK(rank_profile_partition(canonical_rep(sigma, k)) == sigma);
        CHECK(mult_order(canonical_form(sigma, k)) == k);
      }
}

TEST_CASE("jordan transform examples") {
  const JordanTransform a = jordan_transform(jordan_matrix({3, 1}));
  CHECK(a.T == identity(4));
  CHECK(a.sigma == Partition{3, 1});

  const JordanTransform b = jordan_transform(unit_matrix(2, 0, 1, lit("t")));
  CHECK(b.T == diagonal({lit("1"), lit("t")}));
  CHECK(det(b.T) == lit("t"));

  const MatK j1t = mat({{"0", "1", "0"}, {"0", "0", "t"}, {"0", "0", "0"}});
  const JordanTransform c = jordan_transform(j1t);
  CHECK(c.T == diagonal({lit("1"), lit("1"), lit("t")}));
  CHECK(conjugate(c.T, j1t) == jordan_matrix({3}));
}

TEST_CASE("jordan transform of random conjugates") {
  Rng rng(47);
  for (int c = 0; c < 80; ++c) {
    const int n = 1 + c % 5;
    const auto [sigma, k] = random_canonical_label(rng, n);
    const MatK x = conjugate(random_shear_word(rng, n, 4).matrix(), canonical_rep(sigma, k));
    CAPTURE(format_partition(sigma));
    const JordanTransform jt = jordan_transform(x);
    CHECK(jt.sigma == sigma);
    CHECK(compare(conjugate(jt.T, x), jordan_matrix(sigma)) != Truth::no);
    CHECK(rank_profile_partition(x) == sigma);
  }
}

TEST_CASE("quasi_jordanize examples") {
  for (int n = 1; n <= 5; ++n)
    for (const Partition& sigma : partitions(n)) {
      const QuasiJordanization q = quasi_jordanize(canonical_rep(sigma, 0));
      CHECK(q.h.g == identity(n));
      CHECK(q.D.matrix() == canonical_rep(sigma, 0));
    }

  const QuasiJordanization a = quasi_jordanize(unit_matrix(2, 0, 1, lit("t")));
  CHECK(a.h.g == diagonal({lit("t^-1"), lit("t")}));
  CHECK(a.h.det_mode == DetMode::exact_one);
  CHECK(a.D.matrix() == unit_matrix(2, 0, 1, lit("t^-1")));

  const MatK x = unit_matrix(2, 0, 1, lit("4*t^2 + 4*t^3"));
  const QuasiJordanization b = quasi_jordanize(x);
  const JordanTransform jt = jordan_transform(x);
  const int l = floor_mod(order(det(jt.T)), 2);
  CHECK(l == 0);
  CHECK(b.D.matrix() == unit_matrix(2, 0, 1, lit(l == 0 ? "1" : "t^-1")));
  CHECK(compare(conjugate(b.h.g, x), b.D.matrix()) != Truth::no);
  CHECK(order(det(b.h.g)) % 2 == 0);
}

TEST_CASE("quasi_jordanize on random conjugates") {
  Rng rng(53);
  for (int c = 0; c < 80; ++c) {
    const int n = 1 + c % 5;
    const auto [sigma, k] = random_canonical_label(rng, n);
    const MatK x = conjugate(random_shear_word(rng, n, 4).matrix(), canonical_rep(sigma, k));
    const QuasiJordanization q = quasi_jordanize(x);
    CHECK(q.D.partition() == sigma);
    CHECK(compare(conjugate(q.h.g, x), q.D.matrix()) != Truth::no);
    CHECK(floor_mod(order(det(q.h.g)), n) == 0);
    // first superdiagonal entry is t^-l, the others are 1
    int units = 0;
    for (const auto& b : q.D.blocks)
      for (const auto& p : b.superdiag)
        units += p == lit("1");
    CHECK(units >= n - static_cast<int>(sigma.size()) - 1);
  }
  CHECK_THROWS_AS(quasi_jordanize(identity(2)), NotNilpotent);
}

TEST_CASE("block multiplicity and its order") {
  CHECK(block_multiplicity(block({"1", "1", "1"})) == lit("1"));
  CHECK(block_multiplicity(block({"t", "1", "1"})) == lit("t^3"));
  CHECK(block_multiplicity(block({"1", "1", "t"})) == lit("t"));
  CHECK(block_multiplicity(block({})) == lit("1"));

  CHECK(mult_order(canonical_form({3, 1}, 0)) == 0);
  QuasiJordanForm f;
  f.blocks = {block({"t", "1", "1"}), block({"t"})};
  CHECK(mult_order(f) == 4);
  f.blocks = {block({"t^-1"})};
  CHECK(mult_order(f) == -1);

  Rng rng(59);
  for (int c = 0; c < 60; ++c) {
    const int m = 2 + c % 4;
    QuasiJordanBlock b;
    b.size = m;
    std::vector<int> orders;
    for (int j = 0; j + 1 < m; ++j) {
      const int e = static_cast<int>(rng() % 7) - 3;
      orders.push_back(e);
      b.superdiag.push_back(LaurentSeries::monomial(random_scalar(rng), e) * lit("1 + t"));
    }
    CHECK(order(block_multiplicity(b)) == oracle::single_block_mult_order(orders));
  }
}

TEST_CASE("canonical representatives") {
  const MatK a = canonical_rep({2, 2}, 1);
  CHECK(a == mat({{"0", "1", "0", "0"}, {"0", "0", "0", "0"}, {"0", "0", "0", "t"}, {"0", "0", "0", "0"}}));
  CHECK(canonical_rep({4}, 2) == mat({{"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "t^2"}, {"0", "0", "0", "0"}}));
  CHECK(canonical_rep({1, 1, 1, 1}, 0) == zero_matrix(4));
  CHECK_THROWS_AS(canonical_rep({2, 2}, 2), InvalidShift);
  CHECK_THROWS_AS(canonical_rep({2, 2}, -1), InvalidShift);
  CHECK_THROWS_AS(canonical_rep({2, 3}, 0), InvalidPartition);
}

TEST_CASE("D_[3,2],0 and D_[3,2],1 are conjugate under SL_5(K)") {
  const MatK g = diagonal({lit("t"), lit("t"), lit("t"), lit("t^-1"), lit("t^-2")});
  CHECK(det(g) == lit("1"));
  CHECK(conjugate(g, canonical_rep({3, 2}, 0)) == canonical_rep({3, 2}, 1));
  const AffineElement moved = adjoint_act(GroupElement{1, g, DetMode::exact_one}, AffineElement(canonical_rep({3, 2}, 0)));
  CHECK(moved == AffineElement(canonical_rep({3, 2}, 1)));
}
