#pragma once

#include "kmorbit/gaussian_rational.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace kmorbit {

/// Default number of series terms kept by inverses and roots.
inline constexpr int kDefaultWorkingPrecision = 64;

/// Answer of a zero test on data that may only be known modulo t^N.
enum class Truth { no, yes, unknown };

/// Element of K = C[[t]][t^-1] with Q(i) coefficients.
///
/// Stored as a dense run of coefficients starting at exponent `low()`, trimmed
/// so the first and last stored coefficients are nonzero. The precision is
/// either exact (the stored terms are the whole element) or a bound N meaning
/// the element is known modulo t^N; every stored exponent is then below N.
class LaurentSeries {
public:
  /// Exact zero.
  LaurentSeries() = default;
  LaurentSeries(long constant); // NOLINT: integer literals convert implicitly
  LaurentSeries(const GaussianRational& constant); // NOLINT

  static LaurentSeries monomial(const GaussianRational& coeff, int exponent);
  /// The variable t raised to `exponent`.
  static LaurentSeries t_pow(int exponent) { return monomial(1, exponent); }
  /// Zero known only modulo t^n.
  static LaurentSeries big_o(int n);
  /// Builds from a sparse map; zero coefficients are dropped and terms at or
  /// above `precision` discarded.
  static LaurentSeries from_terms(const std::map<int, GaussianRational>& terms,
                                  std::optional<int> precision = std::nullopt);
  /// Dense constructor: coeffs[j] multiplies t^(low + j).
  static LaurentSeries from_dense(int low, std::vector<GaussianRational> coeffs,
                                  std::optional<int> precision = std::nullopt);

  bool is_exact() const noexcept { return !precision_.has_value(); }
  std::optional<int> precision() const noexcept { return precision_; }

  /// Stored support is empty.
  bool stored_zero() const noexcept { return coeffs_.empty(); }
  bool is_exact_zero() const noexcept { return coeffs_.empty() && is_exact(); }
  Truth is_zero() const noexcept;
  bool is_monomial() const noexcept { return is_exact() && coeffs_.size() == 1; }

  /// Lowest / highest stored exponent; only meaningful when !stored_zero().
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_span() const noexcept { return coeffs_.size(); }

  /// Coefficient of t^e. Throws PrecisionExhausted when e is at or beyond the
  /// precision bound.
  GaussianRational coeff(int exponent) const;
  /// Coefficient of the lowest-order term.
  const GaussianRational& leading_coeff() const;
  /// Stored nonzero terms in increasing exponent order.
  std::map<int, GaussianRational> terms() const;

  /// Lower bound for the valuation: the order if a term is stored, else the
  /// precision bound (exact zero: a very large value).
  int valuation_bound() const noexcept;

  /// Drops everything at or above t^n and records the bound.
  LaurentSeries truncated(int n) const;

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(const LaurentSeries& o);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(LaurentSeries a);

  /// Structural equality: same stored terms and same precision.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  /// Multiplies every coefficient by a scalar.
  LaurentSeries scaled(const GaussianRational& s) const;
  /// Multiplies by t^shift.
  LaurentSeries shifted(int shift) const;

private:
  void normalize();

  int low_ = 0;
  std::vector<GaussianRational> coeffs_;
  std::optional<int> precision_;
};

/// Three-valued equality.
Truth compare(const LaurentSeries& a, const LaurentSeries& b);

/// Minimal exponent with nonzero coefficient. Throws ZeroHasNoOrder on an exact
/// zero and PrecisionExhausted on a zero known only to precision.
int order(const LaurentSeries& s);

/// Field inverse. Monomials invert exactly; everything else is expanded to
/// `working_prec` terms past the leading one.
LaurentSeries inv(const LaurentSeries& s, int working_prec = kDefaultWorkingPrecision);

/// a / b as an exact Laurent polynomial when both are exact and b divides a.
std::optional<LaurentSeries> divide_exact(const LaurentSeries& a, const LaurentSeries& b);

/// a / b: exact whenever possible, otherwise a * inv(b).
LaurentSeries divide(const LaurentSeries& a, const LaurentSeries& b,
                     int working_prec = kDefaultWorkingPrecision);

/// Coefficient of t^-1.
GaussianRational residue(const LaurentSeries& s);

bool nth_root_exists(const LaurentSeries& s, int n);
LaurentSeries nth_root(const LaurentSeries& s, int n, int working_prec = kDefaultWorkingPrecision);

/// The substitution t -> z t.
LaurentSeries scale_t(const LaurentSeries& s, const GaussianRational& z);

LaurentSeries d_dt(const LaurentSeries& s);

/// Integer power; negative exponents go through inv().
LaurentSeries pow(const LaurentSeries& s, int exponent, int working_prec = kDefaultWorkingPrecision);

/// Parses the literal grammar (see README). Throws SyntaxError.
LaurentSeries parse_laurent(std::string_view text);
/// Parses a literal that must be a constant (exponent 0 only).
GaussianRational parse_scalar(std::string_view text);
/// Canonical literal: increasing exponents, unit coefficients elided,
/// truncated elements end in `+ O(t^N)`.
std::string format_laurent(const LaurentSeries& s);

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

} // namespace kmorbit
