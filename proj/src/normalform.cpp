#include "kmorbit/normalform.hpp"

#include "kmorbit/error.hpp"

#include <sstream>
#include <stdexcept>

namespace kmorbit {

namespace {

int floor_mod(int a, int m) { return ((a % m) + m) % m; }

MatK stack_rows(const std::vector<RowK>& rows, int n) {
  MatK m(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) = rows[i];
  return m;
}

RowK row_times(const RowK& v, const MatK& x) {
  MatK r = mat_mul(MatK(v), x);
  return r.row(0);
}

int rank_of(const std::vector<RowK>& rows, int n, int working_prec) {
  if (rows.empty())
    return 0;
  return rank_to_precision(stack_rows(rows, n), working_prec);
}

} // namespace

void validate_partition(const Partition& p) {
  if (p.empty())
    throw InvalidPartition("empty partition");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0)
      throw InvalidPartition("partition parts must be positive: " + format_partition(p));
    if (i > 0 && p[i] > p[i - 1])
      throw InvalidPartition("partition parts must be non-increasing: " + format_partition(p));
  }
}

std::string format_partition(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i)
    os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

int QuasiJordanForm::n() const {
  int s = 0;
  for (const auto& b : blocks)
    s += b.size;
  return s;
}

Partition QuasiJordanForm::partition() const {
  Partition p;
  for (const auto& b : blocks)
    p.push_back(b.size);
  return p;
}

MatK QuasiJordanForm::matrix() const {
  const int n = this->n();
  MatK m(n, n);
  int base = 0;
  for (const auto& b : blocks) {
    for (int j = 0; j + 1 < b.size; ++j)
      m(base + j, base + j + 1) = b.superdiag[static_cast<std::size_t>(j)];
    base += b.size;
  }
  return m;
}

QuasiJordanForm QuasiJordanForm::from_matrix(const MatK& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw ShapeMismatch("quasi-Jordan form needs a nonempty square matrix");
  const int n = static_cast<int>(m.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i + 1 && m(i, j).is_zero() != Truth::yes)
        throw ShapeMismatch("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") off the superdiagonal is not zero");
  QuasiJordanForm f;
  QuasiJordanBlock cur;
  for (int i = 0; i + 1 < n; ++i) {
    const LaurentSeries& p = m(i, i + 1);
    const Truth z = p.is_zero();
    if (z == Truth::unknown)
      throw PrecisionExhausted("superdiagonal entry (" + std::to_string(i + 1) + "," +
                               std::to_string(i + 2) + ") is zero to precision");
    if (z == Truth::no) {
      cur.superdiag.push_back(p);
      ++cur.size;
    } else {
      f.blocks.push_back(std::move(cur));
      cur = {};
    }
  }
  f.blocks.push_back(std::move(cur));
  for (std::size_t b = 1; b < f.blocks.size(); ++b)
    if (f.blocks[b].size > f.blocks[b - 1].size)
      throw ShapeMismatch("quasi-Jordan block sizes must be non-increasing, got " +
                          format_partition(f.partition()));
  return f;
}

void require_nilpotent(const MatK& x) {
  if (x.rows() != x.cols())
    throw DimensionMismatch("nilpotency test needs a square matrix");
  switch (is_zero(mat_pow(x, static_cast<int>(x.rows())))) {
  case Truth::yes:
    return;
  case Truth::no:
    throw NotNilpotent("matrix is not nilpotent");
  case Truth::unknown:
    throw PrecisionExhausted("cannot decide whether X^n vanishes at this precision");
  }
}

Partition rank_profile_partition(const MatK& x, int working_prec) {
  require_nilpotent(x);
  const int n = static_cast<int>(x.rows());
  // ranks[j] = rank(x^j); blocks of size >= j number ranks[j-1] - ranks[j]
  std::vector<int> ranks{n};
  MatK p = identity(n);
  while (ranks.back() > 0) {
    p = mat_mul(p, x);
    ranks.push_back(rank_to_precision(p, working_prec));
  }
  Partition sigma;
  for (int j = static_cast<int>(ranks.size()) - 1; j >= 1; --j) {
    const int at_least_j = ranks[j - 1] - ranks[j];
    const int at_least_next = j + 1 < static_cast<int>(ranks.size()) ? ranks[j] - ranks[j + 1] : 0;
    for (int c = 0; c < at_least_j - at_least_next; ++c)
      sigma.push_back(j);
  }
  return sigma;
}

MatK jordan_matrix(const Partition& sigma) {
  QuasiJordanForm f;
  for (int s : sigma)
    f.blocks.push_back({s, std::vector<LaurentSeries>(static_cast<std::size_t>(s - 1), 1)});
  return f.matrix();
}

JordanTransform jordan_transform(const MatK& x, int working_prec) {
  const Partition sigma = rank_profile_partition(x, working_prec);
  const int n = static_cast<int>(x.rows());

  // kernels[m] = basis of {v : v x^m = 0}
  std::vector<std::vector<RowK>> kernels{{}};
  MatK p = identity(n);
  for (int m = 1; m <= sigma.front(); ++m) {
    p = mat_mul(p, x);
    kernels.push_back(left_kernel(p, working_prec));
  }

  struct Chain {
    int size;
    std::vector<RowK> rows;
  };
  std::vector<Chain> chains;
  for (std::size_t b = 0; b < sigma.size();) {
    const int m = sigma[b];
    std::size_t count = 0;
    while (b + count < sigma.size() && sigma[b + count] == m)
      ++count;

    // New tops must be independent of ker x^(m-1) and of the level-m vectors
    // already sitting in longer chains.
    std::vector<RowK> span = kernels[static_cast<std::size_t>(m - 1)];
    for (const auto& c : chains)
      span.push_back(c.rows[static_cast<std::size_t>(c.size - m)]);
    int rank = rank_of(span, n, working_prec);
    std::size_t taken = 0;
    for (const RowK& w : kernels[static_cast<std::size_t>(m)]) {
      if (taken == count)
        break;
      span.push_back(w);
      const int r = rank_of(span, n, working_prec);
      if (r == rank) {
        span.pop_back();
        continue;
      }
      rank = r;
      Chain c{m, {w}};
      for (int j = 1; j < m; ++j)
        c.rows.push_back(row_times(c.rows.back(), x));
      chains.push_back(std::move(c));
      ++taken;
    }
    if (taken != count)
      throw std::logic_error("jordan_transform: kernel filtration did not yield enough chains");
    b += count;
  }

  std::vector<RowK> rows;
  for (auto& c : chains)
    for (auto& r : c.rows)
      rows.push_back(std::move(r));
  MatK T = stack_rows(rows, n);
  if (compare(mat_mul(T, x), mat_mul(jordan_matrix(sigma), T)) == Truth::no)
    throw std::logic_error("jordan_transform: T x != J T");
  return {std::move(T), sigma};
}

QuasiJordanization quasi_jordanize(const MatK& x, int working_prec) {
  JordanTransform jt = jordan_transform(x, working_prec);
  const int n = static_cast<int>(x.rows());
  const int l = floor_mod(order(det(jt.T, working_prec)), n);

  MatK g = std::move(jt.T);
  QuasiJordanForm D;
  for (int s : jt.sigma)
    D.blocks.push_back({s, std::vector<LaurentSeries>(static_cast<std::size_t>(s - 1), 1)});
  if (l != 0) {
    const LaurentSeries s = LaurentSeries::t_pow(-l);
    for (int j = 0; j < n; ++j)
      if (!g(0, j).is_exact_zero())
        g(0, j) = g(0, j) * s;
    if (D.blocks.front().size > 1)
      D.blocks.front().superdiag.front() = s;
  }

  const LaurentSeries q = det(g, working_prec);
  if (order(q) % n != 0)
    throw std::logic_error("quasi_jordanize: determinant order not a multiple of n");
  const DetMode mode = compare(q, 1) == Truth::yes ? DetMode::exact_one : DetMode::nth_power_certified;
  return {GroupElement{1, std::move(g), mode}, std::move(D)};
}

LaurentSeries block_multiplicity(const QuasiJordanBlock& block) {
  LaurentSeries m = 1;
  for (int j = 0; j + 1 < block.size; ++j)
    m = m * pow(block.superdiag[static_cast<std::size_t>(j)], block.size - 1 - j);
  return m;
}

int mult_order(const QuasiJordanForm& form) {
  int total = 0;
  for (const auto& b : form.blocks)
    total += order(block_multiplicity(b));
  return total;
}

QuasiJordanForm canonical_form(const Partition& sigma, int k) {
  validate_partition(sigma);
  const int last = sigma.back();
  if (k < 0 || k >= last)
    throw InvalidShift("shift k=" + std::to_string(k) + " outside [0, " + std::to_string(last) + ")");
  QuasiJordanForm f;
  for (int s : sigma)
    f.blocks.push_back({s, std::vector<LaurentSeries>(static_cast<std::size_t>(s - 1), 1)});
  if (last > 1)
    f.blocks.back().superdiag.back() = LaurentSeries::t_pow(k);
  return f;
}

MatK canonical_rep(const Partition& sigma, int k) { return canonical_form(sigma, k).matrix(); }

} // namespace kmorbit
