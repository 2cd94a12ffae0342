#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>

namespace kmorbit {

/// Exact element of Q(i): a pair of GMP rationals kept in lowest terms.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {} // NOLINT: literals convert implicitly
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_one() const noexcept { return is_real() && re_ == 1; }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;
  /// Integer power; negative exponents require a nonzero base.
  GaussianRational pow(long exponent) const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  /// *this += a * b without temporaries for the real case.
  void add_mul(const GaussianRational& a, const GaussianRational& b);
  void sub_mul(const GaussianRational& a, const GaussianRational& b);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical literal: `3`, `-1/2`, `(1/2+3/4i)`, `(0-i)`.
  std::string to_string() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& q);

/// An r in Q(i) with r^n = a, if one exists. Picks the root with the largest
/// real part (ties: largest imaginary part) so the answer is deterministic.
std::optional<GaussianRational> exact_root(const GaussianRational& a, int n);

} // namespace kmorbit
