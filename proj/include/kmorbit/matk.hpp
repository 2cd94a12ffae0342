#pragma once

#include "kmorbit/laurent.hpp"

#include <Eigen/Core>

#include <vector>

namespace Eigen {

template <>
struct NumTraits<kmorbit::LaurentSeries> : GenericNumTraits<kmorbit::LaurentSeries> {
  using Real = kmorbit::LaurentSeries;
  using NonInteger = kmorbit::LaurentSeries;
  using Nested = kmorbit::LaurentSeries;
  using Literal = kmorbit::LaurentSeries;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 100
  };
  // Only consulted when printing; entries print as exact literals.
  static constexpr int digits10() { return 0; }
  static constexpr int max_digits10() { return 0; }
};

} // namespace Eigen

namespace kmorbit {

/// Square matrix over K.
using MatK = Eigen::Matrix<LaurentSeries, Eigen::Dynamic, Eigen::Dynamic>;
/// Row vector over K (matrices act on the right: v -> v X).
using RowK = Eigen::Matrix<LaurentSeries, 1, Eigen::Dynamic>;

MatK identity(int n);
MatK zero_matrix(int n);
/// Elementary matrix p * E_ij (0-based indices).
MatK unit_matrix(int n, int i, int j, const LaurentSeries& p = 1);
/// Shear I + p E_ij, i != j.
MatK shear(int n, int i, int j, const LaurentSeries& p);
MatK diagonal(const std::vector<LaurentSeries>& entries);

MatK mat_mul(const MatK& a, const MatK& b);
MatK mat_add(const MatK& a, const MatK& b);
MatK mat_sub(const MatK& a, const MatK& b);
/// Non-negative integer power.
MatK mat_pow(const MatK& a, int exponent);
MatK mat_scale(const MatK& a, const LaurentSeries& s);

LaurentSeries trace(const MatK& a);
/// Three-valued: every entry zero.
Truth is_zero(const MatK& a);
/// Three-valued entrywise equality.
Truth compare(const MatK& a, const MatK& b);
bool is_exact(const MatK& a);

/// Determinant by fraction-free elimination with minimal-valuation pivots.
LaurentSeries det(const MatK& a, int working_prec = kDefaultWorkingPrecision);
/// Inverse; exact when the determinant divides the adjugate exactly.
MatK mat_inv(const MatK& a, int working_prec = kDefaultWorkingPrecision);
/// Rank over K; throws PrecisionExhausted rather than guessing.
int rank_to_precision(const MatK& a, int working_prec = kDefaultWorkingPrecision);

/// Basis of {v : v a = 0} as rows, entries cleared of denominators.
std::vector<RowK> left_kernel(const MatK& a, int working_prec = kDefaultWorkingPrecision);

MatK mat_d_dt(const MatK& a);
/// Entrywise t -> z t.
MatK mat_scale_t(const MatK& a, const GaussianRational& z);

/// Result of fraction-free row reduction. With `reduced`, every pivot column
/// holds `last_pivot` in its pivot row and zero elsewhere.
struct Echelon {
  MatK rows;
  std::vector<int> pivot_cols;
  LaurentSeries last_pivot = 1;
  int sign = 1; // parity of row swaps
};

/// Fraction-free Gaussian (or Gauss-Jordan, with `reduced`) elimination,
/// pivoting on the entry of least valuation in each column (ties: lowest row).
/// Only the first `pivot_limit` columns are eligible as pivots (-1: all).
Echelon fraction_free_echelon(MatK a, bool reduced, int working_prec = kDefaultWorkingPrecision,
                              int pivot_limit = -1);

} // namespace kmorbit
