#include "doctest.h"

#include "kmorbit/error.hpp"
#include "kmorbit/sampling.hpp"
#include "oracles.hpp"

using namespace kmorbit;
using oracle::lit;

namespace {

GaussianRational q(long num, long den = 1) { return GaussianRational(mpq_class(num, den)); }

} // namespace

TEST_CASE("gaussian rationals stay canonical") {
  const GaussianRational a(mpq_class(2, 4), mpq_class(-3, 6));
  CHECK(a.re() == mpq_class(1, 2));
  CHECK(a.im() == mpq_class(-1, 2));
  CHECK((a - a).is_zero());
  CHECK(a * a.inverse() == GaussianRational(1));
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK(GaussianRational(mpq_class(1, 2), mpq_class(3, 4)).to_string() == "(1/2+3/4i)");
  CHECK(GaussianRational(0, -1).to_string() == "(0-i)");
  CHECK_THROWS_AS(GaussianRational().inverse(), DivisionByZero);
}

TEST_CASE("exact roots in Q(i)") {
  CHECK(exact_root(4, 2) == GaussianRational(2));
  CHECK(exact_root(q(9, 4), 2) == q(3, 2));
  CHECK(exact_root(-8, 3).has_value());
  CHECK(exact_root(-8, 3)->pow(3) == GaussianRational(-8));
  CHECK(exact_root(GaussianRational(0, 2), 2) == GaussianRational(1, 1)); // (1+i)^2 = 2i
  CHECK_FALSE(exact_root(2, 2).has_value());
  CHECK_FALSE(exact_root(q(1, 3), 2).has_value());
}

TEST_CASE("parse literals") {
  const LaurentSeries a = lit("t^-2 + 3*t");
  CHECK(a.terms() == std::map<int, GaussianRational>{{-2, 1}, {1, 3}});
  CHECK(a.is_exact());
  CHECK(lit("0").is_exact_zero());
  CHECK(lit("(1/2+3/4i)*t^5").terms() ==
        std::map<int, GaussianRational>{{5, GaussianRational(mpq_class(1, 2), mpq_class(3, 4))}});
  CHECK(lit("-t").terms() == std::map<int, GaussianRational>{{1, -1}});
  CHECK(lit("2 t^3 - t^3").terms() == std::map<int, GaussianRational>{{3, 1}});
  CHECK(lit("(1 - i)").terms() == std::map<int, GaussianRational>{{0, GaussianRational(1, -1)}});
  CHECK(lit("t - t").is_exact_zero());

  const LaurentSeries trunc = lit("1 + t + O(t^3)");
  CHECK(trunc.precision() == 3);
  CHECK(lit("O(t^-1)").is_zero() == Truth::unknown);
}

TEST_CASE("malformed literals report a position") {
  for (const char* bad : {"", "t^", "3*", "(1+2)", "1/0", "t^1.5", "t +", "1 ++ t", "O(t^2) + t",
                          "t^5 + O(t^2)", "x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_laurent(bad), SyntaxError);
  }
  try {
    parse_laurent("t + 3*q");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("canonical formatting") {
  CHECK(format_laurent(lit("3*t + t^-2")) == "t^-2 + 3*t");
  CHECK(format_laurent(lit("-t^2 - 1")) == "-1 - t^2");
  CHECK(format_laurent(lit("0")) == "0");
  CHECK(format_laurent(lit("(1/2+3/4i)*t^5")) == "(1/2+3/4i)*t^5");
  CHECK(format_laurent(lit("(0+i) t")) == "(0+i)*t");
  CHECK(format_laurent(lit("2/4")) == "1/2");
  CHECK(format_laurent(inv(lit("1 - t"), 3)) == "1 + t + t^2 + O(t^3)");
  CHECK(format_laurent(LaurentSeries::big_o(1)) == "O(t)");
  CHECK(format_laurent(LaurentSeries::big_o(-2)) == "O(t^-2)");
}

TEST_CASE("order") {
  CHECK(order(lit("t^-2 + 3*t")) == -2);
  CHECK(order(lit("5")) == 0);
  const LaurentSeries p = lit("t^-1 + 1"), r = lit("t");
  CHECK(order(p * r) == order(p) + order(r));
  CHECK(order(p * r) == 0);
  CHECK_THROWS_AS(order(LaurentSeries()), ZeroHasNoOrder);
  CHECK_THROWS_AS(order(LaurentSeries::big_o(4)), PrecisionExhausted);
}

TEST_CASE("ring operations and precision") {
  CHECK(lit("t + 1") + lit("-t") == lit("1"));
  CHECK(lit("t^-1") * lit("t") == lit("1"));
  CHECK(lit("t^-1 + 1") * lit("t") == lit("1 + t"));
  // (1 + O(t^4)) * t^-2 is known modulo t^2
  const LaurentSeries a = lit("1 + O(t^4)") * lit("t^-2");
  CHECK(a.precision() == 2);
  // min(a.prec + ord b, b.prec + ord a) = min(3 + 1, 5 - 1)
  const LaurentSeries b = lit("t^-1 + O(t^3)") * lit("t + O(t^5)");
  CHECK(b.precision() == 4);
  CHECK(compare(lit("1 + O(t^2)"), lit("1 + t^3")) == Truth::unknown);
  CHECK(compare(lit("1 + O(t^2)"), lit("1 + t")) == Truth::no);
}

TEST_CASE("inverse") {
  const LaurentSeries it = inv(lit("t"));
  CHECK(it == lit("t^-1"));
  CHECK(it.is_exact());

  const int W = 10;
  const LaurentSeries s = inv(lit("1 - t"), W);
  CHECK(s.precision() == W);
  CHECK(order(s) == 0);
  for (int e = 0; e < W; ++e)
    CHECK(s.coeff(e) == GaussianRational(1));
  // multiply back with the schoolbook oracle: 1 - t^W
  const LaurentSeries back = oracle::naive_mul(LaurentSeries::from_terms(s.terms()), lit("1 - t"));
  CHECK(back == lit("1 - t^10"));

  const LaurentSeries u = inv(lit("2*t^-3 + t"), 8);
  CHECK(order(u) == 3);
  CHECK(u.precision() == 3 + 8);
  CHECK_THROWS_AS(inv(LaurentSeries()), DivisionByZero);
  CHECK_THROWS_AS(inv(LaurentSeries::big_o(3)), PrecisionExhausted);
}

TEST_CASE("exact division") {
  const LaurentSeries a = lit("1 + 2*t + t^2");
  CHECK(divide_exact(a, lit("1 + t")) == lit("1 + t"));
  CHECK_FALSE(divide_exact(lit("1"), lit("1 + t")).has_value());
  CHECK(divide(lit("t^3 - t"), lit("t^-1 + 1")) == lit("t^3 - t^2"));
  CHECK(divide(lit("1"), lit("1 + t"), 5).precision() == 5);
}

TEST_CASE("residue") {
  CHECK(residue(lit("t^-1")) == GaussianRational(1));
  CHECK(residue(lit("3 + t^2")).is_zero());
  // the scalar factor of the cocycle on P = t, Q = t^-1
  CHECK(residue(d_dt(lit("t")) * lit("t^-1")) == GaussianRational(1));
  CHECK(residue(lit("t^-2 + O(t^0)")).is_zero());
  CHECK_THROWS_AS(residue(lit("t^-3 + O(t^-1)")), PrecisionExhausted);
}

TEST_CASE("n-th roots") {
  CHECK(nth_root_exists(lit("t^2"), 2));
  CHECK_FALSE(nth_root_exists(lit("t^3"), 2));
  CHECK(nth_root_exists(lit("4*t^2 + 4*t^3"), 2));
  CHECK_THROWS_AS(nth_root_exists(LaurentSeries(), 2), ZeroHasNoOrder);

  CHECK(nth_root(lit("t^4"), 2) == lit("t^2"));
  CHECK(nth_root(lit("1 + 2*t + t^2"), 2) == lit("1 + t"));

  const LaurentSeries r = nth_root(lit("4*t^2 + 4*t^3"), 2, 12);
  CHECK(r.coeff(1) == GaussianRational(2));
  CHECK(r.coeff(2) == GaussianRational(1));
  CHECK(r.coeff(3) == q(-1, 4));
  // squaring the truncated root reproduces 4t^2 + 4t^3 to its precision
  const LaurentSeries sq = r * r;
  CHECK(compare(sq, lit("4*t^2 + 4*t^3")) == Truth::unknown);
  CHECK(sq.precision() == 2 + 12);
  for (int e = 2; e < *sq.precision(); ++e)
    CHECK(sq.coeff(e) == (e == 2 || e == 3 ? GaussianRational(4) : GaussianRational()));

  CHECK_THROWS_AS(nth_root(lit("2*t^2"), 2), RootNotRepresentable);
  CHECK_THROWS_AS(nth_root(lit("t^3"), 2), NoRoot);
}

TEST_CASE("t -> z t") {
  const GaussianRational z(mpq_class(1, 3), 2);
  CHECK(scale_t(lit("t^2"), z) == LaurentSeries::monomial(z * z, 2));
  const LaurentSeries s = lit("t^-3 + 5 + (1+i)*t^4");
  CHECK(scale_t(s, 1) == s);
  CHECK(scale_t(lit("t^-1 + t"), 2) == lit("1/2*t^-1 + 2*t"));
  CHECK(scale_t(lit("t + O(t^3)"), 2).precision() == 3);
  CHECK_THROWS_AS(scale_t(s, 0), ZeroScale);
}

TEST_CASE("derivative") {
  CHECK(d_dt(lit("t^3")) == lit("3*t^2"));
  CHECK(d_dt(lit("7")).is_exact_zero());
  CHECK(d_dt(lit("t^-1")) == lit("-t^-2"));
  CHECK(d_dt(lit("1 + t + O(t^5)")).precision() == 4);
}

TEST_CASE("field properties on random exact elements") {
  Rng rng(7);
  for (int c = 0; c < 300; ++c) {
    const LaurentSeries p = random_laurent(rng, 4), r = random_laurent(rng, 4), s = random_laurent(rng, 4);
    CAPTURE(format_laurent(p));
    CAPTURE(format_laurent(r));
    CAPTURE(format_laurent(s));
    CHECK((p * r) * s == p * (r * s));
    CHECK(p * (r + s) == p * r + p * s);
    CHECK(p * r == r * p);
    CHECK(p * r == oracle::naive_mul(p, r));
    CHECK((p + r) - r == p);
    CHECK(order(p * r) == order(p) + order(r));
    const LaurentSeries pi = inv(p, 20);
    CHECK(order(pi) == -order(p));
    CHECK(compare(pi * p, 1) != Truth::no);
    CHECK(residue(d_dt(p)).is_zero());
    CHECK(parse_laurent(format_laurent(p)) == p);
    CHECK(parse_laurent(format_laurent(pi)) == pi);
    CHECK(format_laurent(parse_laurent(format_laurent(p))) == format_laurent(p));
  }
}

TEST_CASE("roots of random squares and cubes") {
  Rng rng(11);
  for (int c = 0; c < 100; ++c) {
    const int n = 2 + c % 2;
    const LaurentSeries base = random_laurent(rng, 3, -2, 3);
    const LaurentSeries s = pow(base, n);
    CAPTURE(format_laurent(s));
    const LaurentSeries r = nth_root(s, n, 16);
    CHECK(order(r) == order(s) / n);
    CHECK(compare(pow(r, n), s) != Truth::no);
  }
  // a unit whose root is a genuine series
  const LaurentSeries s = lit("t^-4 + t^-3 + 7");
  const LaurentSeries r = nth_root(s, 2, 24);
  CHECK_FALSE(r.is_exact());
  CHECK(compare(r * r, s) == Truth::unknown);
}
