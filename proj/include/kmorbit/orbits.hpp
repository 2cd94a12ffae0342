#pragma once

#include "kmorbit/normalform.hpp"

#include <string>
#include <vector>

namespace kmorbit {

/// (sigma, k, level): the classification label of a nilpotent orbit.
struct OrbitLabel {
  Partition partition;
  int k = 0;
  GaussianRational level;

  /// `partition=[4] k=2 level=0`
  std::string to_string() const;
  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
};

std::ostream& operator<<(std::ostream& os, const OrbitLabel& label);

/// Partitions of n in reverse-lexicographic order: [n], [n-1,1], ..., [1^n].
std::vector<Partition> partitions(int n);

/// Label of the orbit through a nilpotent element. Throws NotNilpotent.
OrbitLabel classify(const AffineElement& a, const AlgebraOptions& opts = {});

/// Equality of labels.
bool are_conjugate(const AffineElement& a, const AffineElement& b, const AlgebraOptions& opts = {});

/// Diagonal h with h.g M(src) h.g^-1 = M(dst). Throws ShapeMismatch when the
/// block sizes differ and NotConjugate when the multiplicity orders differ by
/// a non-multiple of the smallest part.
GroupElement conjugator_quasi_jordan(const QuasiJordanForm& src, const QuasiJordanForm& dst,
                                     int working_prec = kDefaultWorkingPrecision);

struct OrbitEntry {
  OrbitLabel label;
  MatK rep;
};

/// One canonical representative per (sigma, k), in partition order, k ascending.
std::vector<OrbitEntry> enumerate_orbits(int n, const GaussianRational& level);

GaussianRational level_of(const AffineElement& a, const AlgebraOptions& opts = {});

} // namespace kmorbit
