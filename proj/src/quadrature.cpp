#include "specgap/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "specgap/errors.hpp"

namespace specgap {

namespace {

// Legendre P_q and P_q' at x by the three-term recurrence.
void legendre(int q, double x, double* value, double* deriv) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= q; ++k) {
    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  *value = (q == 0) ? p0 : p1;
  *deriv = (q == 0) ? 0.0 : q * (x * p1 - p0) / (x * x - 1.0);
}

QuadratureRule build_rule(int order) {
  QuadratureRule r;
  r.order = order;
  r.nodes.resize(order);
  r.weights.resize(order);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    // Newton from the Chebyshev-like initial guess; converges in a few steps.
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double v = 0.0, d = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre(order, x, &v, &d);
      const double dx = v / d;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(order, x, &v, &d);
    const double w = 2.0 / ((1.0 - x * x) * d * d);
    r.nodes[i] = -x;
    r.weights[i] = w;
    r.nodes[order - 1 - i] = x;
    r.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) {
    double v = 0.0, d = 1.0;
    legendre(order, 0.0, &v, &d);
    r.nodes[order / 2] = 0.0;
    r.weights[order / 2] = 2.0 / (d * d);
  }
  return r;
}

}  // namespace

const QuadratureRule& gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be >= 1");
  static std::map<int, QuadratureRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
  return it->second;
}

double integrate_panel(const QuadratureRule& rule, const Integrand& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < rule.order; ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

double integrate_composite(const Integrand& f, double a, double b, int panels,
                           int nodes_per_panel) {
  if (panels < 1 || nodes_per_panel < 1)
    throw DomainError("integrate_composite: panels and nodes must be >= 1");
  const QuadratureRule& rule = gauss_legendre(nodes_per_panel);
  const double w = (b - a) / panels;
  double acc = 0.0;
  for (int k = 0; k < panels; ++k)
    acc += integrate_panel(rule, f, a + k * w, a + (k + 1) * w);
  return acc;
}

namespace {

double adaptive_rec(const Integrand& f, double a, double b, double budget,
                    double rel_tol, int depth, int max_depth,
                    const QuadratureRule& lo, const QuadratureRule& hi) {
  const double coarse = integrate_panel(lo, f, a, b);
  const double fine = integrate_panel(hi, f, a, b);
  const double err = std::abs(fine - coarse);
  if (err <= budget || err <= rel_tol * std::abs(fine)) return fine;
  if (depth >= max_depth)
    throw NumericalError("integrate_adaptive: depth cap reached on [" +
                         std::to_string(a) + ", " + std::to_string(b) + "]");
  const double m = 0.5 * (a + b);
  return adaptive_rec(f, a, m, 0.5 * budget, rel_tol, depth + 1, max_depth, lo, hi) +
         adaptive_rec(f, m, b, 0.5 * budget, rel_tol, depth + 1, max_depth, lo, hi);
}

}  // namespace

double integrate_adaptive(const Integrand& f, double a, double b, double abs_tol,
                          double rel_tol, int max_depth) {
  if (!(b >= a)) throw DomainError("integrate_adaptive: requires b >= a");
  if (a == b) return 0.0;
  return adaptive_rec(f, a, b, abs_tol, rel_tol, 0, max_depth, gauss_legendre(7),
                      gauss_legendre(15));
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol_abs, int max_iter) {
  if (!(hi >= lo)) throw DomainError("bisect_root: invalid bracket");
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw DomainError("bisect_root: no sign change over the bracket");
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= tol_abs) return mid;
    // bracket exhausted at ULP resolution; no tighter answer exists
    if (mid == lo || mid == hi) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  if (hi - lo <= tol_abs) return 0.5 * (lo + hi);
  throw NumericalError("bisect_root: did not reach tolerance " + std::to_string(tol_abs));
}

}  // namespace specgap
