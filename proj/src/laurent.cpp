#include "kmorbit/laurent.hpp"

#include "kmorbit/error.hpp"

#include <algorithm>
#include <climits>

namespace kmorbit {

namespace {

constexpr int kExactZeroValuation = INT_MAX / 4;

std::optional<int> min_precision(std::optional<int> a, std::optional<int> b) {
  if (!a)
    return b;
  if (!b)
    return a;
  return std::min(*a, *b);
}

} // namespace

LaurentSeries::LaurentSeries(long constant) {
  if (constant != 0)
    coeffs_.emplace_back(constant);
}

LaurentSeries::LaurentSeries(const GaussianRational& constant) {
  if (!constant.is_zero())
    coeffs_.push_back(constant);
}

LaurentSeries LaurentSeries::monomial(const GaussianRational& coeff, int exponent) {
  LaurentSeries s;
  if (!coeff.is_zero()) {
    s.low_ = exponent;
    s.coeffs_.push_back(coeff);
  }
  return s;
}

LaurentSeries LaurentSeries::big_o(int n) {
  LaurentSeries s;
  s.precision_ = n;
  return s;
}

LaurentSeries LaurentSeries::from_terms(const std::map<int, GaussianRational>& terms,
                                        std::optional<int> precision) {
  LaurentSeries s;
  s.precision_ = precision;
  if (terms.empty())
    return s;
  s.low_ = terms.begin()->first;
  s.coeffs_.resize(static_cast<std::size_t>(terms.rbegin()->first - s.low_ + 1));
  for (const auto& [e, c] : terms)
    s.coeffs_[static_cast<std::size_t>(e - s.low_)] = c;
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::from_dense(int low, std::vector<GaussianRational> coeffs,
                                        std::optional<int> precision) {
  LaurentSeries s;
  s.low_ = low;
  s.coeffs_ = std::move(coeffs);
  s.precision_ = precision;
  s.normalize();
  return s;
}

void LaurentSeries::normalize() {
  if (precision_) {
    const int keep = *precision_ - low_;
    if (keep <= 0)
      coeffs_.clear();
    else if (static_cast<std::size_t>(keep) < coeffs_.size())
      coeffs_.resize(static_cast<std::size_t>(keep));
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero())
    ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty())
    low_ = 0;
}

Truth LaurentSeries::is_zero() const noexcept {
  if (!coeffs_.empty())
    return Truth::no;
  return is_exact() ? Truth::yes : Truth::unknown;
}

GaussianRational LaurentSeries::coeff(int exponent) const {
  if (precision_ && exponent >= *precision_)
    throw PrecisionExhausted("coefficient of t^" + std::to_string(exponent) +
                             " lies beyond the precision bound t^" + std::to_string(*precision_));
  if (coeffs_.empty() || exponent < low_ || exponent > high())
    return {};
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

const GaussianRational& LaurentSeries::leading_coeff() const {
  if (coeffs_.empty()) {
    if (is_exact())
      throw ZeroHasNoOrder();
    throw PrecisionExhausted("series is zero to precision t^" + std::to_string(*precision_));
  }
  return coeffs_.front();
}

std::map<int, GaussianRational> LaurentSeries::terms() const {
  std::map<int, GaussianRational> out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (!coeffs_[j].is_zero())
      out.emplace(low_ + static_cast<int>(j), coeffs_[j]);
  return out;
}

int LaurentSeries::valuation_bound() const noexcept {
  if (!coeffs_.empty())
    return low_;
  return precision_ ? *precision_ : kExactZeroValuation;
}

LaurentSeries LaurentSeries::truncated(int n) const {
  LaurentSeries s = *this;
  s.precision_ = min_precision(precision_, n);
  s.normalize();
  return s;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  precision_ = min_precision(precision_, o.precision_);
  if (!o.coeffs_.empty()) {
    if (coeffs_.empty()) {
      low_ = o.low_;
      coeffs_ = o.coeffs_;
    } else {
      const int lo = std::min(low_, o.low_);
      const int hi = std::max(high(), o.high());
      if (lo < low_)
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), GaussianRational());
      low_ = lo;
      coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        coeffs_[static_cast<std::size_t>(o.low_ - lo) + j] += o.coeffs_[j];
    }
  }
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries operator-(LaurentSeries a) {
  for (auto& c : a.coeffs_)
    c = -c;
  return a;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.is_exact_zero() || b.is_exact_zero())
    return {};
  std::optional<int> prec;
  if (a.precision_)
    prec = *a.precision_ + b.valuation_bound();
  if (b.precision_)
    prec = min_precision(prec, *b.precision_ + a.valuation_bound());

  LaurentSeries r;
  r.precision_ = prec;
  if (a.coeffs_.empty() || b.coeffs_.empty())
    return r;
  r.low_ = a.low_ + b.low_;
  int hi = a.high() + b.high();
  if (prec)
    hi = std::min(hi, *prec - 1);
  if (hi < r.low_) {
    r.normalize();
    return r;
  }
  r.coeffs_.resize(static_cast<std::size_t>(hi - r.low_ + 1));
  const int na = static_cast<int>(a.coeffs_.size());
  const int nb = static_cast<int>(b.coeffs_.size());
  const int nr = static_cast<int>(r.coeffs_.size());
  for (int i = 0; i < na && i < nr; ++i) {
    const GaussianRational& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai.is_zero())
      continue;
    const int jmax = std::min(nb, nr - i);
    for (int j = 0; j < jmax; ++j) {
      const GaussianRational& bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (!bj.is_zero())
        r.coeffs_[static_cast<std::size_t>(i + j)].add_mul(ai, bj);
    }
  }
  r.normalize();
  return r;
}

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& o) { return *this = *this * o; }

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.precision_ == b.precision_ && a.coeffs_.size() == b.coeffs_.size() &&
         (a.coeffs_.empty() || a.low_ == b.low_) && a.coeffs_ == b.coeffs_;
}

LaurentSeries LaurentSeries::scaled(const GaussianRational& s) const {
  if (s.is_zero())
    return precision_ ? big_o(*precision_) : LaurentSeries();
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_)
    c *= s;
  return r;
}

LaurentSeries LaurentSeries::shifted(int shift) const {
  LaurentSeries r = *this;
  if (!r.coeffs_.empty())
    r.low_ += shift;
  if (r.precision_)
    *r.precision_ += shift;
  return r;
}

Truth compare(const LaurentSeries& a, const LaurentSeries& b) { return (a - b).is_zero(); }

int order(const LaurentSeries& s) {
  if (s.stored_zero()) {
    if (s.is_exact())
      throw ZeroHasNoOrder();
    throw PrecisionExhausted("cannot determine the order: series is zero to precision t^" +
                             std::to_string(*s.precision()));
  }
  return s.low();
}

namespace {

// Coefficients u_0..u_{count-1} of s / (lead * t^v); u_0 = 1.
std::vector<GaussianRational> normalized_unit(const LaurentSeries& s, int count) {
  const GaussianRational lead_inv = s.leading_coeff().inverse();
  std::vector<GaussianRational> u(static_cast<std::size_t>(count));
  const int v = s.low();
  for (int j = 0; j < count && v + j <= s.high(); ++j)
    u[static_cast<std::size_t>(j)] = s.coeff(v + j) * lead_inv;
  return u;
}

int relative_terms(const LaurentSeries& s, int working_prec) {
  int rel = std::max(1, working_prec);
  if (!s.is_exact())
    rel = std::min(rel, *s.precision() - s.low());
  return rel;
}

} // namespace

LaurentSeries inv(const LaurentSeries& s, int working_prec) {
  if (s.is_exact_zero())
    throw DivisionByZero();
  if (s.stored_zero())
    throw PrecisionExhausted("cannot invert a series that is zero to precision t^" +
                             std::to_string(*s.precision()));
  const int v = s.low();
  if (s.is_monomial())
    return LaurentSeries::monomial(s.leading_coeff().inverse(), -v);

  const int rel = relative_terms(s, working_prec);
  const auto u = normalized_unit(s, rel);
  const int support = std::min<int>(rel, static_cast<int>(s.term_span()));
  std::vector<GaussianRational> b(static_cast<std::size_t>(rel));
  b[0] = 1;
  for (int j = 1; j < rel; ++j) {
    GaussianRational acc;
    for (int i = 1; i <= j && i < support; ++i)
      acc.sub_mul(u[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j - i)]);
    b[static_cast<std::size_t>(j)] = std::move(acc);
  }
  const GaussianRational lead_inv = s.leading_coeff().inverse();
  for (auto& c : b)
    c *= lead_inv;
  return LaurentSeries::from_dense(-v, std::move(b), -v + rel);
}

std::optional<LaurentSeries> divide_exact(const LaurentSeries& a, const LaurentSeries& b) {
  if (!a.is_exact() || !b.is_exact())
    return std::nullopt;
  if (b.is_exact_zero())
    throw DivisionByZero();
  if (a.is_exact_zero())
    return LaurentSeries();
  if (b.is_monomial())
    return a.scaled(b.leading_coeff().inverse()).shifted(-b.low());
  const int qlen = (a.high() - b.high()) - (a.low() - b.low()) + 1;
  if (qlen <= 0)
    return std::nullopt;

  std::vector<GaussianRational> rem(a.term_span());
  for (int e = a.low(); e <= a.high(); ++e)
    rem[static_cast<std::size_t>(e - a.low())] = a.coeff(e);
  std::vector<GaussianRational> bc(b.term_span());
  for (int e = b.low(); e <= b.high(); ++e)
    bc[static_cast<std::size_t>(e - b.low())] = b.coeff(e);
  const GaussianRational b0_inv = bc.front().inverse();

  std::vector<GaussianRational> q(static_cast<std::size_t>(qlen));
  for (int j = 0; j < qlen; ++j) {
    if (rem[static_cast<std::size_t>(j)].is_zero())
      continue;
    GaussianRational c = rem[static_cast<std::size_t>(j)] * b0_inv;
    for (std::size_t i = 0; i < bc.size(); ++i)
      if (!bc[i].is_zero())
        rem[static_cast<std::size_t>(j) + i].sub_mul(c, bc[i]);
    q[static_cast<std::size_t>(j)] = std::move(c);
  }
  for (const auto& r : rem)
    if (!r.is_zero())
      return std::nullopt;
  return LaurentSeries::from_dense(a.low() - b.low(), std::move(q));
}

LaurentSeries divide(const LaurentSeries& a, const LaurentSeries& b, int working_prec) {
  if (b.is_exact_zero())
    throw DivisionByZero();
  if (a.is_exact_zero())
    return {};
  if (auto q = divide_exact(a, b))
    return *q;
  return a * inv(b, working_prec);
}

GaussianRational residue(const LaurentSeries& s) {
#ifdef KMORBIT_INJECT_RESIDUE_SIGN_FLIP
  return -s.coeff(-1);
#else
  return s.coeff(-1);
#endif
}

bool nth_root_exists(const LaurentSeries& s, int n) {
  if (n <= 0)
    throw std::invalid_argument("root degree must be positive");
  const int v = order(s);
  return v % n == 0;
}

LaurentSeries nth_root(const LaurentSeries& s, int n, int working_prec) {
  if (!nth_root_exists(s, n))
    throw NoRoot("order " + std::to_string(order(s)) + " is not a multiple of " + std::to_string(n));
  const int v = s.low();
  const auto lead_root = exact_root(s.leading_coeff(), n);
  if (!lead_root)
    throw RootNotRepresentable("leading coefficient " + s.leading_coeff().to_string() +
                               " has no " + std::to_string(n) + "-th root in Q(i)");
  if (s.is_monomial())
    return LaurentSeries::monomial(*lead_root, v / n);

  // (1 + u)^(1/n) by the power recurrence f_j = 1/j sum_{i=1}^{j} ((a+1) i - j) u_i f_{j-i}.
  auto expand = [&](int count) {
    const auto u = normalized_unit(s, count);
    const int support = std::min<int>(count, static_cast<int>(s.term_span()));
    const GaussianRational alpha_plus_one(mpq_class(n + 1, n), 0);
    std::vector<GaussianRational> f(static_cast<std::size_t>(count));
    f[0] = 1;
    for (int j = 1; j < count; ++j) {
      GaussianRational acc;
      for (int i = 1; i <= j && i < support; ++i) {
        GaussianRational w = alpha_plus_one * GaussianRational(i) - GaussianRational(j);
        acc.add_mul(w * u[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j - i)]);
      }
      f[static_cast<std::size_t>(j)] = acc / GaussianRational(j);
    }
    for (auto& c : f)
      c *= *lead_root;
    return f;
  };

  if (s.is_exact() && (s.high() - v) % n == 0) {
    // Try for an exact polynomial root first.
    const int count = (s.high() - v) / n + 1;
    auto candidate = LaurentSeries::from_dense(v / n, expand(count));
    if (compare(pow(candidate, n), s) == Truth::yes)
      return candidate;
  }
  const int rel = relative_terms(s, working_prec);
  return LaurentSeries::from_dense(v / n, expand(rel), v / n + rel);
}

LaurentSeries scale_t(const LaurentSeries& s, const GaussianRational& z) {
  if (z.is_zero())
    throw ZeroScale();
  if (s.stored_zero() || z.is_one())
    return s;
  std::map<int, GaussianRational> out;
  GaussianRational zp = z.pow(s.low());
  for (int e = s.low(); e <= s.high(); ++e) {
    const GaussianRational c = s.coeff(e);
    if (!c.is_zero())
      out.emplace(e, c * zp);
    zp *= z;
  }
  return LaurentSeries::from_terms(out, s.precision());
}

LaurentSeries d_dt(const LaurentSeries& s) {
  std::optional<int> prec = s.precision();
  if (prec)
    *prec -= 1;
  if (s.stored_zero())
    return prec ? LaurentSeries::big_o(*prec) : LaurentSeries();
  std::vector<GaussianRational> out(s.term_span());
  for (int e = s.low(); e <= s.high(); ++e)
    if (e != 0)
      out[static_cast<std::size_t>(e - s.low())] = s.coeff(e) * GaussianRational(e);
  return LaurentSeries::from_dense(s.low() - 1, std::move(out), prec);
}

LaurentSeries pow(const LaurentSeries& s, int exponent, int working_prec) {
  if (exponent < 0)
    return pow(inv(s, working_prec), -exponent, working_prec);
  LaurentSeries result(1);
  LaurentSeries base = s;
  while (exponent > 0) {
    if (exponent & 1)
      result *= base;
    exponent >>= 1;
    if (exponent > 0)
      base = base * base;
  }
  return result;
}

} // namespace kmorbit
