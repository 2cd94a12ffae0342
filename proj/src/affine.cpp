#include "kmorbit/affine.hpp"

#include "kmorbit/error.hpp"

namespace kmorbit {

namespace {

void require_same_n(int a, int b, const char* op) {
  if (a != b)
    throw DimensionMismatch(std::string(op) + ": sl_" + std::to_string(a) + " vs sl_" + std::to_string(b));
}

const LaurentSeries& t_var() {
  static const LaurentSeries t = LaurentSeries::t_pow(1);
  return t;
}

} // namespace

AffineElement::AffineElement(MatK mat, GaussianRational c, GaussianRational d)
    : mat_(std::move(mat)), c_(std::move(c)), d_(std::move(d)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() == 0)
    throw InvalidInput("matrix part must be a nonempty square matrix");
  if (trace(mat_).is_zero() == Truth::no)
    throw InvalidInput("matrix part has nonzero trace: " + format_laurent(trace(mat_)));
}

AffineElement AffineElement::central(int n, const GaussianRational& c, const GaussianRational& d) {
  return AffineElement(zero_matrix(n), c, d);
}

AffineElement operator+(const AffineElement& a, const AffineElement& b) {
  require_same_n(a.n(), b.n(), "add");
  return AffineElement(mat_add(a.mat_, b.mat_), a.c_ + b.c_, a.d_ + b.d_);
}

AffineElement operator-(const AffineElement& a, const AffineElement& b) {
  require_same_n(a.n(), b.n(), "subtract");
  return AffineElement(mat_sub(a.mat_, b.mat_), a.c_ - b.c_, a.d_ - b.d_);
}

AffineElement operator*(const GaussianRational& s, const AffineElement& a) {
  return AffineElement(mat_scale(a.mat_, s), s * a.c_, s * a.d_);
}

bool operator==(const AffineElement& a, const AffineElement& b) {
  return a.c_ == b.c_ && a.d_ == b.d_ && a.mat_.rows() == b.mat_.rows() && a.mat_ == b.mat_;
}

Truth compare(const AffineElement& a, const AffineElement& b) {
  if (a.n() != b.n() || !(a.c() == b.c()) || !(a.d() == b.d()))
    return Truth::no;
  return compare(a.mat(), b.mat());
}

GroupElement GroupElement::identity(int n) { return {1, kmorbit::identity(n), DetMode::exact_one}; }

GroupElement GroupElement::certify(MatK g, const GaussianRational& z, int working_prec) {
  if (z.is_zero())
    throw InvalidInput("group element needs z != 0");
  if (g.rows() != g.cols() || g.rows() == 0)
    throw InvalidInput("group matrix must be a nonempty square matrix");
  const int n = static_cast<int>(g.rows());
  const LaurentSeries q = det(g, working_prec);
  if (compare(q, 1) != Truth::no)
    return {z, std::move(g), DetMode::exact_one};
  if (q.is_zero() != Truth::no)
    throw InvalidInput("group matrix is singular");
  if (order(q) % n != 0)
    throw InvalidInput("determinant " + format_laurent(q) + " has order not divisible by " + std::to_string(n));
  return {z, std::move(g), DetMode::nth_power_certified};
}

LaurentSeries form_t(const MatK& a, const MatK& b, const GaussianRational& kappa_coef) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("form_t: shapes differ");
  // tr(ab) without forming the product
  LaurentSeries s;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_exact_zero() && !b(k, i).is_exact_zero())
        s += a(i, k) * b(k, i);
  return s.scaled(kappa_coef);
}

AffineElement bracket(const AffineElement& a, const AffineElement& b, const AlgebraOptions& opts) {
  require_same_n(a.n(), b.n(), "bracket");
  MatK m = mat_sub(mat_mul(a.mat(), b.mat()), mat_mul(b.mat(), a.mat()));
  if (!a.d().is_zero())
    m = mat_add(m, mat_scale(mat_d_dt(b.mat()), t_var().scaled(a.d())));
  if (!b.d().is_zero())
    m = mat_sub(m, mat_scale(mat_d_dt(a.mat()), t_var().scaled(b.d())));
  const GaussianRational c = residue(form_t(mat_d_dt(a.mat()), b.mat(), opts.kappa(a.n())));
  return AffineElement(std::move(m), c, 0);
}

bool is_nilpotent(const AffineElement& a) {
  if (!a.d().is_zero())
    return false;
  switch (is_zero(mat_pow(a.mat(), a.n()))) {
  case Truth::yes:
    return true;
  case Truth::no:
    return false;
  case Truth::unknown:
    break;
  }
  throw PrecisionExhausted("cannot decide whether X^n vanishes at this precision");
}

AffineElement adjoint_act(const GroupElement& g, const AffineElement& a, const AlgebraOptions& opts) {
  require_same_n(g.n(), a.n(), "adjoint_act");
  const GaussianRational& mu = a.d();
  if (!mu.is_zero() && g.det_mode != DetMode::exact_one)
    throw CertifiedDetWithDerivation();

  const MatK g_inv = mat_inv(g.g, opts.working_prec);
  const MatK g_dot = mat_d_dt(g.g);
  const MatK log_deriv = mat_mul(g_inv, g_dot); // g^-1 dg/dt

  MatK m = mat_mul(mat_mul(g.g, a.mat()), g_inv);
  MatK paired = a.mat();
  if (!mu.is_zero()) {
    m = mat_sub(m, mat_scale(mat_mul(g_dot, g_inv), t_var().scaled(mu)));
    paired = mat_sub(paired, mat_scale(log_deriv, t_var().scaled(mu / GaussianRational(2))));
  }
  const GaussianRational c = a.c() - residue(form_t(log_deriv, paired, opts.kappa(a.n())));
  if (!g.z.is_one())
    m = mat_scale_t(m, g.z);
  return AffineElement(std::move(m), c, mu);
}

} // namespace kmorbit
