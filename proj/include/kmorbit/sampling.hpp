#pragma once

#include "kmorbit/orbits.hpp"

#include <random>
#include <string>
#include <vector>

namespace kmorbit {

using Rng = std::mt19937_64;

/// Nonzero small integer, or with `gaussian` an element a + bi of small height.
GaussianRational random_scalar(Rng& rng, bool gaussian = false);

/// Nonzero exact Laurent polynomial with at most max_terms terms, exponents in
/// [lo, hi].
LaurentSeries random_laurent(Rng& rng, int max_terms = 3, int lo = -3, int hi = 3);

/// Traceless exact matrix with Laurent-polynomial entries; about a third of the
/// entries are zero.
MatK random_traceless(Rng& rng, int n, int max_terms = 2, int lo = -3, int hi = 3);

/// A word in elementary shears I + p E_ij followed by d_z.
struct ShearWord {
  struct Shear {
    int i = 0;
    int j = 0;
    LaurentSeries p;
  };
  int n = 1;
  std::vector<Shear> shears;
  GaussianRational z = 1;

  MatK matrix() const;
  GroupElement group() const;
  std::string to_string() const;
};

/// Up to `max_shears` shears with 1..3-term polynomials, exponents in [-3, 3],
/// and z drawn from {1, 2, 1+i}.
ShearWord random_shear_word(Rng& rng, int n, int max_shears = 5);

/// Uniform (sigma, k) among the canonical labels for n.
std::pair<Partition, int> random_canonical_label(Rng& rng, int n);

} // namespace kmorbit
