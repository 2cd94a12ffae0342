#pragma once

#include "kmorbit/affine.hpp"

#include <string>
#include <vector>

namespace kmorbit {

/// Parts of an integer partition, non-increasing.
using Partition = std::vector<int>;

/// Throws InvalidPartition unless `p` is non-empty, positive and non-increasing.
void validate_partition(const Partition& p);
/// `[4,1,1]`
std::string format_partition(const Partition& p);

/// Nilpotent block with arbitrary nonzero superdiagonal entries.
struct QuasiJordanBlock {
  int size = 1;
  std::vector<LaurentSeries> superdiag; // size - 1 entries
};

/// Block-diagonal matrix of quasi-Jordan blocks with non-increasing sizes.
struct QuasiJordanForm {
  std::vector<QuasiJordanBlock> blocks;

  int n() const;
  Partition partition() const;
  MatK matrix() const;

  /// Reads the block structure off a matrix that is zero away from the
  /// superdiagonal. Throws ShapeMismatch if `m` is not of that form or the
  /// block sizes increase.
  static QuasiJordanForm from_matrix(const MatK& m);
};

/// Throws NotNilpotent unless x^n = 0, PrecisionExhausted when undecidable.
void require_nilpotent(const MatK& x);

/// Jordan type of a nilpotent matrix from the ranks of its powers.
Partition rank_profile_partition(const MatK& x, int working_prec = kDefaultWorkingPrecision);

/// Nilpotent Jordan matrix of type `sigma` (unit superdiagonals).
MatK jordan_matrix(const Partition& sigma);

struct JordanTransform {
  MatK T;
  Partition sigma;
};

/// T with T x T^-1 = jordan_matrix(sigma), built from Jordan chains
/// (rows w, wx, ..., wx^(m-1)).
JordanTransform jordan_transform(const MatK& x, int working_prec = kDefaultWorkingPrecision);

struct QuasiJordanization {
  GroupElement h;
  QuasiJordanForm D;
};

/// h.g = S T with S = diag(t^-l, 1, ..., 1), l = order(det T) mod n, so that
/// order(det h.g) is a multiple of n and h.g x h.g^-1 = D.
QuasiJordanization quasi_jordanize(const MatK& x, int working_prec = kDefaultWorkingPrecision);

/// p_1^(m-1) p_2^(m-2) ... p_(m-1) for a block of size m.
LaurentSeries block_multiplicity(const QuasiJordanBlock& block);
/// Order of the product of all block multiplicities.
int mult_order(const QuasiJordanForm& form);

/// D_{sigma,k}: unit Jordan blocks except t^k in the last superdiagonal slot
/// of the final (smallest) block.
QuasiJordanForm canonical_form(const Partition& sigma, int k);
MatK canonical_rep(const Partition& sigma, int k);

} // namespace kmorbit
