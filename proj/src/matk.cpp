#include "kmorbit/matk.hpp"

#include "kmorbit/error.hpp"

#include <string>

namespace kmorbit {

namespace {

void require_square(const MatK& a, const char* op) {
  if (a.rows() != a.cols())
    throw DimensionMismatch(std::string(op) + ": matrix is not square");
}

void require_same_shape(const MatK& a, const MatK& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
}

Truth combine(Truth acc, Truth next) {
  if (acc == Truth::no || next == Truth::no)
    return Truth::no;
  if (acc == Truth::unknown || next == Truth::unknown)
    return Truth::unknown;
  return Truth::yes;
}

} // namespace

MatK identity(int n) {
  MatK m(n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

MatK zero_matrix(int n) { return MatK(n, n); }

MatK unit_matrix(int n, int i, int j, const LaurentSeries& p) {
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw DimensionMismatch("unit matrix index out of range");
  MatK m(n, n);
  m(i, j) = p;
  return m;
}

MatK shear(int n, int i, int j, const LaurentSeries& p) {
  if (i == j)
    throw std::invalid_argument("a shear needs i != j");
  MatK m = identity(n);
  m(i, j) = p;
  return m;
}

MatK diagonal(const std::vector<LaurentSeries>& entries) {
  const int n = static_cast<int>(entries.size());
  MatK m(n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = entries[static_cast<std::size_t>(i)];
  return m;
}

MatK mat_mul(const MatK& a, const MatK& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("mat_mul: inner dimensions " + std::to_string(a.cols()) + " and " +
                            std::to_string(b.rows()));
  MatK r(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const LaurentSeries& aik = a(i, k);
      if (aik.is_exact_zero())
        continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_exact_zero())
          r(i, j) += aik * b(k, j);
    }
  return r;
}

MatK mat_add(const MatK& a, const MatK& b) {
  require_same_shape(a, b, "mat_add");
  MatK r = a;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r(i, j) += b(i, j);
  return r;
}

MatK mat_sub(const MatK& a, const MatK& b) {
  require_same_shape(a, b, "mat_sub");
  MatK r = a;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r(i, j) -= b(i, j);
  return r;
}

MatK mat_pow(const MatK& a, int exponent) {
  require_square(a, "mat_pow");
  if (exponent < 0)
    throw std::invalid_argument("mat_pow: negative exponent");
  MatK r = identity(static_cast<int>(a.rows()));
  for (int k = 0; k < exponent; ++k)
    r = mat_mul(r, a);
  return r;
}

MatK mat_scale(const MatK& a, const LaurentSeries& s) {
  MatK r = a;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_exact_zero())
        r(i, j) = a(i, j) * s;
  return r;
}

LaurentSeries trace(const MatK& a) {
  require_square(a, "trace");
  LaurentSeries s;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    s += a(i, i);
  return s;
}

Truth is_zero(const MatK& a) {
  Truth acc = Truth::yes;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      acc = combine(acc, a(i, j).is_zero());
  return acc;
}

Truth compare(const MatK& a, const MatK& b) {
  require_same_shape(a, b, "compare");
  Truth acc = Truth::yes;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      acc = combine(acc, compare(a(i, j), b(i, j)));
  return acc;
}

bool is_exact(const MatK& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_exact())
        return false;
  return true;
}

Echelon fraction_free_echelon(MatK a, bool reduced, int working_prec, int pivot_limit) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  if (pivot_limit < 0 || pivot_limit > cols)
    pivot_limit = cols;

  Echelon e;
  LaurentSeries prev = 1;
  int r = 0;
  for (int c = 0; c < pivot_limit && r < rows; ++c) {
    int best = -1;
    int best_order = 0;
    bool undetermined = false;
    for (int i = r; i < rows; ++i) {
      switch (a(i, c).is_zero()) {
      case Truth::no:
        if (best < 0 || a(i, c).low() < best_order) {
          best = i;
          best_order = a(i, c).low();
        }
        break;
      case Truth::unknown:
        undetermined = true;
        break;
      case Truth::yes:
        break;
      }
    }
    if (best < 0) {
      if (undetermined)
        throw PrecisionExhausted("elimination: cannot decide whether column " + std::to_string(c) +
                                 " has a pivot; raise the working precision");
      continue;
    }
    if (best != r) {
      a.row(best).swap(a.row(r));
      e.sign = -e.sign;
    }
    const LaurentSeries pivot = a(r, c);
    for (int i = 0; i < rows; ++i) {
      if (i == r || (!reduced && i < r))
        continue;
      const LaurentSeries factor = a(i, c);
      for (int j = reduced ? 0 : c + 1; j < cols; ++j) {
        if (j == c)
          continue;
        LaurentSeries& x = a(i, j);
        const LaurentSeries& y = a(r, j);
        const bool cross = !factor.is_exact_zero() && !y.is_exact_zero();
        if (x.is_exact_zero() && !cross)
          continue;
        LaurentSeries num = pivot * x;
        if (cross)
          num -= factor * y;
        x = divide(num, prev, working_prec);
      }
      a(i, c) = LaurentSeries();
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.last_pivot = prev;
  e.rows = std::move(a);
  return e;
}

LaurentSeries det(const MatK& a, int working_prec) {
  require_square(a, "det");
  const auto n = a.rows();
  if (n == 0)
    return 1;
  const Echelon e = fraction_free_echelon(a, false, working_prec);
  if (static_cast<Eigen::Index>(e.pivot_cols.size()) < n)
    return {};
  return e.sign > 0 ? e.last_pivot : -e.last_pivot;
}

MatK mat_inv(const MatK& a, int working_prec) {
  require_square(a, "mat_inv");
  const int n = static_cast<int>(a.rows());
  MatK aug(n, 2 * n);
  aug.leftCols(n) = a;
  for (int i = 0; i < n; ++i)
    aug(i, n + i) = 1;
  const Echelon e = fraction_free_echelon(std::move(aug), true, working_prec, n);
  if (static_cast<int>(e.pivot_cols.size()) < n)
    throw Singular();
  MatK inv_a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      inv_a(i, j) = divide(e.rows(i, n + j), e.last_pivot, working_prec);
  return inv_a;
}

int rank_to_precision(const MatK& a, int working_prec) {
  return static_cast<int>(fraction_free_echelon(a, false, working_prec).pivot_cols.size());
}

std::vector<RowK> left_kernel(const MatK& a, int working_prec) {
  const MatK at = a.transpose();
  const Echelon e = fraction_free_echelon(at, true, working_prec);
  const int n = static_cast<int>(at.cols());
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : e.pivot_cols)
    is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<RowK> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)])
      continue;
    RowK v(n);
    v(f) = e.last_pivot;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      v(e.pivot_cols[r]) = -e.rows(static_cast<Eigen::Index>(r), f);
    // Clear the common power of t and make the first nonzero entry monic.
    int shift = 0;
    bool seen = false;
    GaussianRational lead;
    for (int j = 0; j < n; ++j) {
      if (v(j).stored_zero())
        continue;
      if (!seen)
        lead = v(j).leading_coeff();
      shift = seen ? std::min(shift, v(j).low()) : v(j).low();
      seen = true;
    }
    if (seen) {
      const GaussianRational s = lead.inverse();
      for (int j = 0; j < n; ++j)
        v(j) = v(j).scaled(s).shifted(-shift);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

MatK mat_d_dt(const MatK& a) {
  MatK r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r(i, j) = d_dt(a(i, j));
  return r;
}

MatK mat_scale_t(const MatK& a, const GaussianRational& z) {
  MatK r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r(i, j) = scale_t(a(i, j), z);
  return r;
}

} // namespace kmorbit
