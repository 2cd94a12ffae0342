#include "kmorbit/selfcheck.hpp"

#include "kmorbit/error.hpp"
#include "kmorbit/orbits.hpp"
#include "kmorbit/sampling.hpp"

#include <functional>
#include <sstream>

namespace kmorbit {

namespace {

// A case returns an empty string on success, otherwise a description.
using Case = std::function<std::string(Rng&)>;

std::string show(const AffineElement& a) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < a.n(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < a.n(); ++j)
      os << (j ? ", " : "") << a.mat()(i, j);
  }
  os << "] + " << a.c() << " c + " << a.d() << " d";
  return os.str();
}

AffineElement random_element(Rng& rng, int n, bool with_d) {
  const GaussianRational c = std::uniform_int_distribution<int>(0, 1)(rng) ? random_scalar(rng) : 0;
  const GaussianRational d = with_d && std::uniform_int_distribution<int>(0, 1)(rng) ? random_scalar(rng) : 0;
  return AffineElement(random_traceless(rng, n), c, d);
}

int pick_n(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool same(const AffineElement& a, const AffineElement& b) { return compare(a, b) != Truth::no; }

std::string known_values(const AlgebraOptions& base) {
  AlgebraOptions opts = base;
  opts.form = FormNormalization::killing;
  if (!(residue(LaurentSeries::t_pow(-1)) == GaussianRational(1)))
    return "residue(t^-1) != 1";
  const MatK e11 = unit_matrix(2, 0, 0), e22 = unit_matrix(2, 1, 1);
  const MatK te12 = unit_matrix(2, 0, 1, LaurentSeries::t_pow(1));
  const MatK ti21 = unit_matrix(2, 1, 0, LaurentSeries::t_pow(-1));

  const AffineElement br = bracket(AffineElement(te12), AffineElement(ti21), opts);
  if (!(br == AffineElement(mat_sub(e11, e22), 4)))
    return "[t E12, t^-1 E21] = " + show(br) + ", expected E11 - E22 + 4c";

  const GroupElement g{1, shear(2, 1, 0, LaurentSeries::t_pow(-1)), DetMode::exact_one};
  const AffineElement moved = adjoint_act(g, AffineElement(te12), opts);
  const AffineElement expected(mat_sub(mat_sub(mat_add(te12, e22), e11), ti21), 4);
  if (!(moved == expected))
    return "Ad(I + t^-1 E21)(t E12) = " + show(moved) + ", expected " + show(expected);

  const OrbitLabel label = classify(moved, opts);
  if (!(label == OrbitLabel{{2}, 1, 0}))
    return "classify(Ad(I + t^-1 E21)(t E12) + 4c) = " + label.to_string();
  const OrbitLabel d42 = classify(AffineElement(canonical_rep({4}, 2)), opts);
  if (!(d42 == OrbitLabel{{4}, 2, 0}))
    return "classify(D_[4],2) = " + d42.to_string();
  return {};
}

std::string laurent_field(Rng& rng) {
  const LaurentSeries p = random_laurent(rng, 4), q = random_laurent(rng, 4), r = random_laurent(rng, 4);
  if (!((p * q) * r == p * (q * r)))
    return "associativity fails for p=" + format_laurent(p) + " q=" + format_laurent(q) +
           " r=" + format_laurent(r);
  if (!(p * (q + r) == p * q + p * r))
    return "distributivity fails for p=" + format_laurent(p) + " q=" + format_laurent(q) +
           " r=" + format_laurent(r);
  if (!(p * q == q * p))
    return "commutativity fails for p=" + format_laurent(p) + " q=" + format_laurent(q);
  if (order(p * q) != order(p) + order(q))
    return "order(pq) != order(p) + order(q) for p=" + format_laurent(p) + " q=" + format_laurent(q);
  if (order(inv(p, 16)) != -order(p))
    return "order(1/p) != -order(p) for p=" + format_laurent(p);
  if (compare(inv(p, 16) * p, 1) == Truth::no)
    return "p * (1/p) != 1 for p=" + format_laurent(p);
  if (!residue(d_dt(p)).is_zero())
    return "res(dp/dt) != 0 for p=" + format_laurent(p);
  if (!(parse_laurent(format_laurent(p)) == p))
    return "literal round trip fails for " + format_laurent(p);
  return {};
}

std::string matrix_ring(Rng& rng, const AlgebraOptions& opts) {
  const int n = pick_n(rng, 1, 3);
  const MatK a = random_traceless(rng, n), b = random_traceless(rng, n);
  const int W = opts.working_prec;
  if (compare(det(mat_mul(a, b), W), det(a, W) * det(b, W)) == Truth::no)
    return "det(AB) != det(A) det(B)";
  const MatK g = random_shear_word(rng, n).matrix();
  const MatK gi = mat_inv(g, W);
  if (!is_exact(gi))
    return "inverse of a shear product is not exact";
  if (is_zero(mat_sub(mat_mul(g, gi), identity(n))) != Truth::yes)
    return "g g^-1 != I";
  if (!(mat_d_dt(mat_mul(a, b)) == mat_add(mat_mul(mat_d_dt(a), b), mat_mul(a, mat_d_dt(b)))))
    return "product rule fails";
  return {};
}

std::string bracket_axioms(Rng& rng, const AlgebraOptions& opts) {
  const int n = pick_n(rng, 1, 4);
  const AffineElement x = random_element(rng, n, true), y = random_element(rng, n, true),
                      z = random_element(rng, n, true);
  const AffineElement xy = bracket(x, y, opts);
  if (!same(xy, GaussianRational(-1) * bracket(y, x, opts)))
    return "antisymmetry fails for x=" + show(x) + " y=" + show(y);
  const AffineElement jac = bracket(x, bracket(y, z, opts), opts) + bracket(y, bracket(z, x, opts), opts) +
                            bracket(z, xy, opts);
  if (!same(jac, AffineElement::central(n, 0)))
    return "Jacobi fails for x=" + show(x) + " y=" + show(y) + " z=" + show(z);
  return {};
}

// With the c-part convention lambda - res<g^-1 g', x>, Ad g matches the bracket
// on the matrix part while the residue corrections enter with opposite signs:
// c(Ad g [x,y]) - nu(x,y) = -(c([Ad g x, Ad g y]) - nu(x,y)).
std::string adjoint_vs_bracket(Rng& rng, const AlgebraOptions& opts) {
  const int n = pick_n(rng, 1, 4);
  const ShearWord w = random_shear_word(rng, n, 3);
  const GroupElement g = w.group();
  const AffineElement x = random_element(rng, n, false), y = random_element(rng, n, false);
  const AffineElement xy = bracket(x, y, opts);
  const AffineElement lhs = adjoint_act(g, xy, opts);
  const AffineElement rhs = bracket(adjoint_act(g, x, opts), adjoint_act(g, y, opts), opts);
  if (compare(lhs.mat(), rhs.mat()) == Truth::no)
    return "matrix parts of Ad g [x,y] and [Ad g x, Ad g y] differ for g = " + w.to_string() + ", x=" + show(x) +
           " y=" + show(y);
  if (!(lhs.c() - xy.c() == xy.c() - rhs.c()))
    return "residue corrections of Ad g [x,y] and [Ad g x, Ad g y] are not opposite for g = " + w.to_string() +
           ", x=" + show(x) + " y=" + show(y);
  if (is_nilpotent(x) != is_nilpotent(adjoint_act(g, x, opts)))
    return "nilpotency not preserved by g = " + w.to_string() + " on x=" + show(x);
  return {};
}

std::string group_law(Rng& rng, const AlgebraOptions& opts) {
  const int n = pick_n(rng, 1, 4);
  ShearWord a = random_shear_word(rng, n, 3), b = random_shear_word(rng, n, 3);
  a.z = b.z = 1;
  const AffineElement x = random_element(rng, n, true);
  const GroupElement ab{1, mat_mul(a.matrix(), b.matrix()), DetMode::exact_one};
  const AffineElement lhs = adjoint_act(ab, x, opts);
  const AffineElement rhs = adjoint_act(a.group(), adjoint_act(b.group(), x, opts), opts);
  if (!same(lhs, rhs))
    return "Ad(gh) != Ad g Ad h for g = " + a.to_string() + ", h = " + b.to_string() + ", x=" + show(x);
  return {};
}

std::string orbit_invariance_case(const ShearWord& w, const Partition& sigma, int k,
                                  const GaussianRational& level, const AlgebraOptions& opts) {
  const AffineElement rep(canonical_rep(sigma, k), level);
  try {
    const OrbitLabel before = classify(rep, opts);
    const OrbitLabel after = classify(adjoint_act(w.group(), rep, opts), opts);
    if (before == after)
      return {};
    return "classify(D_" + format_partition(sigma) + "," + std::to_string(k) + " + " + level.to_string() +
           "c) = " + before.to_string() + " but after g = " + w.to_string() + " it is " + after.to_string();
  } catch (const Error& e) {
    return "D_" + format_partition(sigma) + "," + std::to_string(k) + " under g = " + w.to_string() +
           ": " + e.what();
  }
}

std::string orbit_invariance(Rng& rng, const AlgebraOptions& opts) {
  static const GaussianRational levels[] = {GaussianRational(0), GaussianRational(1),
                                            GaussianRational(mpq_class(-3, 2))};
  const int n = pick_n(rng, 1, 5);
  const auto [sigma, k] = random_canonical_label(rng, n);
  const GaussianRational& level = levels[std::uniform_int_distribution<int>(0, 2)(rng)];
  ShearWord w = random_shear_word(rng, n, 5);
  std::string failure = orbit_invariance_case(w, sigma, k, level, opts);
  if (failure.empty())
    return failure;
  // Drop shears while the case keeps failing.
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (std::size_t i = 0; i < w.shears.size(); ++i) {
      ShearWord smaller = w;
      smaller.shears.erase(smaller.shears.begin() + static_cast<std::ptrdiff_t>(i));
      std::string f = orbit_invariance_case(smaller, sigma, k, level, opts);
      if (!f.empty()) {
        w = std::move(smaller);
        failure = std::move(f);
        shrunk = true;
        break;
      }
    }
  }
  return failure;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::uint64_t index, int cases,
                      const Case& body) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  Rng rng(seq);
  SuiteReport report;
  report.name = name;
  for (int c = 0; c < cases; ++c) {
    std::string failure;
    try {
      failure = body(rng);
    } catch (const Error& e) {
      failure = std::string("unexpected error: ") + e.what();
    }
    if (failure.empty()) {
      ++report.passed;
    } else {
      ++report.failed;
      if (report.counterexample.empty())
        report.counterexample = "case " + std::to_string(c) + ": " + failure;
    }
  }
  return report;
}

} // namespace

std::vector<SuiteReport> run_selfcheck(const SelfcheckOptions& opts) {
  const AlgebraOptions& a = opts.algebra;
  std::vector<SuiteReport> out;
  out.push_back(run_suite("known values", opts.seed, 0, 1, [&](Rng&) { return known_values(a); }));
  out.push_back(run_suite("laurent field", opts.seed, 1, opts.cases, laurent_field));
  out.push_back(run_suite("matrix ring", opts.seed, 2, opts.cases, [&](Rng& r) { return matrix_ring(r, a); }));
  out.push_back(
      run_suite("bracket axioms", opts.seed, 3, opts.cases, [&](Rng& r) { return bracket_axioms(r, a); }));
  out.push_back(run_suite("adjoint vs bracket", opts.seed, 4, opts.cases,
                          [&](Rng& r) { return adjoint_vs_bracket(r, a); }));
  out.push_back(run_suite("group law", opts.seed, 5, opts.cases, [&](Rng& r) { return group_law(r, a); }));
  out.push_back(
      run_suite("orbit invariance", opts.seed, 6, opts.cases, [&](Rng& r) { return orbit_invariance(r, a); }));
  return out;
}

} // namespace kmorbit
