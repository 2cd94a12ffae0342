#include "kmorbit/sampling.hpp"

#include <sstream>

namespace kmorbit {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

} // namespace

GaussianRational random_scalar(Rng& rng, bool gaussian) {
  for (;;) {
    GaussianRational s(mpq_class(uniform(rng, -4, 4)), gaussian ? mpq_class(uniform(rng, -2, 2)) : 0);
    if (!s.is_zero())
      return s;
  }
}

LaurentSeries random_laurent(Rng& rng, int max_terms, int lo, int hi) {
  for (;;) {
    std::map<int, GaussianRational> terms;
    const int count = uniform(rng, 1, max_terms);
    for (int k = 0; k < count; ++k)
      terms[uniform(rng, lo, hi)] += random_scalar(rng, uniform(rng, 0, 3) == 0);
    LaurentSeries s = LaurentSeries::from_terms(terms);
    if (!s.stored_zero())
      return s;
  }
}

MatK random_traceless(Rng& rng, int n, int max_terms, int lo, int hi) {
  MatK m(n, n);
  LaurentSeries diag_sum;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == n - 1 && j == n - 1)
        continue;
      if (uniform(rng, 0, 2) == 0)
        continue;
      m(i, j) = random_laurent(rng, max_terms, lo, hi);
      if (i == j)
        diag_sum += m(i, j);
    }
  m(n - 1, n - 1) = -diag_sum;
  return m;
}

MatK ShearWord::matrix() const {
  MatK g = identity(n);
  for (const auto& s : shears)
    g = mat_mul(g, shear(n, s.i, s.j, s.p));
  return g;
}

GroupElement ShearWord::group() const { return {z, matrix(), DetMode::exact_one}; }

std::string ShearWord::to_string() const {
  std::ostringstream os;
  os << "z=" << z;
  for (const auto& s : shears)
    os << " * (I + (" << s.p << ") E" << s.i + 1 << s.j + 1 << ")";
  return os.str();
}

ShearWord random_shear_word(Rng& rng, int n, int max_shears) {
  static const GaussianRational zs[] = {GaussianRational(1), GaussianRational(2), GaussianRational(1, 1)};
  ShearWord w;
  w.n = n;
  w.z = zs[uniform(rng, 0, 2)];
  if (n < 2)
    return w;
  const int count = uniform(rng, 0, max_shears);
  for (int k = 0; k < count; ++k) {
    const int i = uniform(rng, 0, n - 1);
    int j = uniform(rng, 0, n - 2);
    if (j >= i)
      ++j;
    w.shears.push_back({i, j, random_laurent(rng, 3, -3, 3)});
  }
  return w;
}

std::pair<Partition, int> random_canonical_label(Rng& rng, int n) {
  std::vector<std::pair<Partition, int>> labels;
  for (const Partition& p : partitions(n))
    for (int k = 0; k < p.back(); ++k)
      labels.emplace_back(p, k);
  return labels[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(labels.size()) - 1))];
}

} // namespace kmorbit
