#include "kmorbit/gaussian_rational.hpp"

#include "kmorbit/error.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace kmorbit {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0)
    im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0)
    im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  // Most coefficients in practice are real; skip the complex product then.
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

void GaussianRational::add_mul(const GaussianRational& a, const GaussianRational& b) {
  thread_local mpq_class tmp;
  if (a.is_real() && b.is_real()) {
    mpq_mul(tmp.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    re_ += tmp;
    return;
  }
  *this += a * b;
}

void GaussianRational::sub_mul(const GaussianRational& a, const GaussianRational& b) {
  thread_local mpq_class tmp;
  if (a.is_real() && b.is_real()) {
    mpq_mul(tmp.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    re_ -= tmp;
    return;
  }
  *this -= a * b;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero())
    throw DivisionByZero();
  if (is_real())
    return {1 / re_, 0};
  const mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero())
    throw DivisionByZero();
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0)
      im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussianRational GaussianRational::pow(long exponent) const {
  if (exponent < 0)
    return inverse().pow(-exponent);
  GaussianRational result(1);
  GaussianRational base = *this;
  while (exponent > 0) {
    if (exponent & 1)
      result *= base;
    exponent >>= 1;
    if (exponent > 0)
      base *= base;
  }
  return result;
}

std::string GaussianRational::to_string() const {
  if (is_real())
    return re_.get_str();
  std::string out = "(" + re_.get_str();
  out += sgn(im_) < 0 ? "-" : "+";
  const mpq_class mag = abs(im_);
  if (mag != 1)
    out += mag.get_str();
  out += "i)";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& q) { return os << q.to_string(); }

namespace {

struct GaussInt {
  mpz_class re, im;
  bool operator==(const GaussInt&) const = default;
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt power(GaussInt base, int n) {
  GaussInt r{1, 0};
  for (int k = 0; k < n; ++k)
    r = mul(r, base);
  return r;
}

mpz_class round_div(const mpz_class& num, const mpz_class& den) {
  // floor((2 num + den) / (2 den)) for den > 0
  mpz_class q;
  mpz_class twice = 2 * num + den;
  mpz_class d2 = 2 * den;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), d2.get_mpz_t());
  return q;
}

long double to_ld_scaled(const mpz_class& z, long exp_shift) {
  long e = 0;
  const double mant = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(e - exp_shift));
}

// Newton iteration z <- z - (z^n - beta) / (n z^(n-1)) rounded to Z[i].
std::optional<GaussInt> refine_root(GaussInt z, const GaussInt& beta, int n) {
  for (int iter = 0; iter < 256; ++iter) {
    const GaussInt zn1 = power(z, n - 1);
    const GaussInt zn = mul(zn1, z);
    if (zn == beta)
      return z;
    const GaussInt num{zn.re - beta.re, zn.im - beta.im};
    const GaussInt den{n * zn1.re, n * zn1.im};
    const mpz_class den_norm = den.re * den.re + den.im * den.im;
    if (den_norm == 0)
      return std::nullopt;
    // num / den = num * conj(den) / |den|^2
    const GaussInt q{num.re * den.re + num.im * den.im, num.im * den.re - num.re * den.im};
    GaussInt next{z.re - round_div(q.re, den_norm), z.im - round_div(q.im, den_norm)};
    if (next == z)
      return std::nullopt;
    z = std::move(next);
  }
  return std::nullopt;
}

} // namespace

std::optional<GaussianRational> exact_root(const GaussianRational& a, int n) {
  if (n <= 0)
    throw std::invalid_argument("root degree must be positive");
  if (n == 1 || a.is_zero())
    return a;

  // a = alpha / d with alpha in Z[i]; r^n = a  <=>  (r d)^n = alpha d^(n-1).
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), a.re().get_den_mpz_t(), a.im().get_den_mpz_t());
  GaussInt alpha{a.re().get_num() * (d / a.re().get_den()), a.im().get_num() * (d / a.im().get_den())};
  mpz_class dpow;
  mpz_pow_ui(dpow.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n - 1));
  const GaussInt beta{alpha.re * dpow, alpha.im * dpow};

  // Floating-point seeds, scaled so huge components do not overflow.
  const long bits = static_cast<long>(std::max(mpz_sizeinbase(beta.re.get_mpz_t(), 2),
                                               mpz_sizeinbase(beta.im.get_mpz_t(), 2)));
  const long shift = std::max(0L, bits - 60);
  const std::complex<long double> b(to_ld_scaled(beta.re, shift), to_ld_scaled(beta.im, shift));
  const long double mag = std::pow(std::abs(b), 1.0L / n);
  const long double scale_log2 = static_cast<long double>(shift) / n;
  const long double theta = std::arg(b);

  std::vector<GaussInt> roots;
  for (int j = 0; j < n; ++j) {
    const long double ang = (theta + 2 * std::numbers::pi_v<long double> * j) / n;
    const long double re = mag * std::cos(ang);
    const long double im = mag * std::sin(ang);
    auto seed = [&](long double v) {
      // v * 2^scale_log2, split so that the integer part fits
      long double whole = std::floor(scale_log2);
      long double frac = scale_log2 - whole;
      long double base = v * std::exp2(frac);
      mpz_class z(static_cast<double>(std::round(base * 1048576.0L)));
      if (whole >= 20)
        z <<= static_cast<mp_bitcnt_t>(whole - 20);
      else
        z = round_div(z, mpz_class(1) << static_cast<mp_bitcnt_t>(20 - whole));
      return z;
    };
    if (auto z = refine_root(GaussInt{seed(re), seed(im)}, beta, n))
      roots.push_back(*z);
  }
  if (roots.empty())
    return std::nullopt;
  auto best = roots.front();
  for (const auto& r : roots)
    if (r.re > best.re || (r.re == best.re && r.im > best.im))
      best = r;
  return GaussianRational(mpq_class(best.re, d), mpq_class(best.im, d));
}

} // namespace kmorbit
