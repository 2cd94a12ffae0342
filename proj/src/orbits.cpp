#include "kmorbit/orbits.hpp"

#include "kmorbit/error.hpp"

#include <stdexcept>

namespace kmorbit {

namespace {

int floor_mod(int a, int m) { return ((a % m) + m) % m; }

void partitions_into(int remaining, int max_part, Partition& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::string OrbitLabel::to_string() const {
  return "partition=" + format_partition(partition) + " k=" + std::to_string(k) +
         " level=" + level.to_string();
}

std::ostream& operator<<(std::ostream& os, const OrbitLabel& label) { return os << label.to_string(); }

std::vector<Partition> partitions(int n) {
  if (n < 1)
    throw InvalidPartition("n must be positive");
  std::vector<Partition> out;
  Partition prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

OrbitLabel classify(const AffineElement& a, const AlgebraOptions& opts) {
  if (!a.d().is_zero())
    throw NotNilpotent("element has nonzero derivation component");
  require_nilpotent(a.mat());

  const QuasiJordanization qj = quasi_jordanize(a.mat(), opts.working_prec);
  OrbitLabel label;
  label.partition = qj.D.partition();
  label.k = floor_mod(mult_order(qj.D), label.partition.back());

  // c-component of Ad h with mu = 0; a scalar factor in h.g drops out since
  // tr X = 0.
  const MatK& g = qj.h.g;
  const MatK log_deriv = mat_mul(mat_inv(g, opts.working_prec), mat_d_dt(g));
  label.level = a.c() - residue(form_t(log_deriv, a.mat(), opts.kappa(a.n())));
  return label;
}

bool are_conjugate(const AffineElement& a, const AffineElement& b, const AlgebraOptions& opts) {
  return classify(a, opts) == classify(b, opts);
}

GroupElement conjugator_quasi_jordan(const QuasiJordanForm& src, const QuasiJordanForm& dst,
                                     int working_prec) {
  if (src.partition() != dst.partition())
    throw ShapeMismatch("block sizes differ: " + format_partition(src.partition()) + " vs " +
                        format_partition(dst.partition()));
  const int n = src.n();
  const int last = src.blocks.back().size;
  const int diff = mult_order(dst) - mult_order(src);
  if (diff % last != 0)
    throw NotConjugate("multiplicity orders differ by " + std::to_string(diff) +
                       ", not a multiple of the smallest block size " + std::to_string(last));

  // Per block: a_1 = t_k, a_(j+1) = a_j p_j / q_j. Only the final block gets a
  // nontrivial t_d = t^m, chosen so that order(det) = 0.
  std::vector<LaurentSeries> diag;
  for (std::size_t b = 0; b < src.blocks.size(); ++b) {
    const auto& p = src.blocks[b].superdiag;
    const auto& q = dst.blocks[b].superdiag;
    LaurentSeries a = b + 1 == src.blocks.size() ? LaurentSeries::t_pow(diff / last) : LaurentSeries(1);
    diag.push_back(a);
    for (std::size_t j = 0; j < p.size(); ++j) {
      a = divide(a * p[j], q[j], working_prec);
      diag.push_back(a);
    }
  }
  MatK g = diagonal(diag);

  const MatK ms = src.matrix();
  const MatK md = dst.matrix();
  if (compare(mat_mul(g, ms), mat_mul(md, g)) == Truth::no)
    throw std::logic_error("conjugator_quasi_jordan: conjugation identity fails");
  const LaurentSeries q = det(g, working_prec);
  if (floor_mod(order(q), n) != 0)
    throw std::logic_error("conjugator_quasi_jordan: determinant order not a multiple of n");
  const DetMode mode = compare(q, 1) == Truth::yes ? DetMode::exact_one : DetMode::nth_power_certified;
  return {1, std::move(g), mode};
}

std::vector<OrbitEntry> enumerate_orbits(int n, const GaussianRational& level) {
  std::vector<OrbitEntry> out;
  for (const Partition& sigma : partitions(n))
    for (int k = 0; k < sigma.back(); ++k)
      out.push_back({{sigma, k, level}, canonical_rep(sigma, k)});
  return out;
}

GaussianRational level_of(const AffineElement& a, const AlgebraOptions& opts) {
  return classify(a, opts).level;
}

} // namespace kmorbit
