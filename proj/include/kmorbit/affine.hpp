#pragma once

#include "kmorbit/matk.hpp"

namespace kmorbit {

/// Normalization of the invariant form on sl_n.
enum class FormNormalization {
  killing, // <x, y> = 2n tr(xy)
  trace,   // <x, y> = tr(xy)
};

/// Knobs shared by the algebra and classification routines.
struct AlgebraOptions {
  int working_prec = kDefaultWorkingPrecision;
  FormNormalization form = FormNormalization::killing;

  GaussianRational kappa(int n) const {
    return form == FormNormalization::killing ? GaussianRational(2L * n) : GaussianRational(1);
  }
};

/// X + lambda c + mu d in the completed affine algebra, X traceless over K.
class AffineElement {
public:
  AffineElement() = default;
  /// Validates that `mat` is square with trace zero (InvalidInput otherwise;
  /// PrecisionExhausted if the trace cannot be decided).
  AffineElement(MatK mat, GaussianRational c = {}, GaussianRational d = {});

  /// Element with zero matrix part.
  static AffineElement central(int n, const GaussianRational& c, const GaussianRational& d = {});

  int n() const noexcept { return static_cast<int>(mat_.rows()); }
  const MatK& mat() const noexcept { return mat_; }
  const GaussianRational& c() const noexcept { return c_; }
  const GaussianRational& d() const noexcept { return d_; }

  friend AffineElement operator+(const AffineElement& a, const AffineElement& b);
  friend AffineElement operator-(const AffineElement& a, const AffineElement& b);
  friend AffineElement operator*(const GaussianRational& s, const AffineElement& a);

  /// Structural equality of every component.
  friend bool operator==(const AffineElement& a, const AffineElement& b);

private:
  MatK mat_;
  GaussianRational c_;
  GaussianRational d_;
};

/// Three-valued equality of two affine elements.
Truth compare(const AffineElement& a, const AffineElement& b);

enum class DetMode {
  exact_one,           // det g = 1
  nth_power_certified, // order(det g) is a multiple of n: g = r * (element of SL_n(K))
};

/// (z, g) in C* x| SL_n(K). Acts as Ad d_z o Ad g.
struct GroupElement {
  GaussianRational z = 1;
  MatK g;
  DetMode det_mode = DetMode::exact_one;

  int n() const noexcept { return static_cast<int>(g.rows()); }

  static GroupElement identity(int n);
  /// Computes det g and picks the mode; throws InvalidInput if the
  /// determinant order is not a multiple of n, or z = 0.
  static GroupElement certify(MatK g, const GaussianRational& z = 1,
                              int working_prec = kDefaultWorkingPrecision);
};

/// <a, b>_t = kappa tr(ab).
LaurentSeries form_t(const MatK& a, const MatK& b, const GaussianRational& kappa_coef);

/// Lie bracket including the cocycle res<dX_a/dt, X_b>_t c and the action of d
/// as t d/dt.
AffineElement bracket(const AffineElement& a, const AffineElement& b, const AlgebraOptions& opts = {});

/// mu = 0 and X^n = 0.
bool is_nilpotent(const AffineElement& a);

/// Adjoint action of (z, g).
AffineElement adjoint_act(const GroupElement& g, const AffineElement& a, const AlgebraOptions& opts = {});

} // namespace kmorbit
