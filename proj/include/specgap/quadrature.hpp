#pragma once

#include <functional>
#include <vector>

namespace specgap {

// Gauss-Legendre rule on (-1,1). Nodes ascending, weights positive,
// sum of weights = 2; exact for polynomials of degree <= 2*order-1.
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Rules are computed once per order and cached; safe for concurrent use.
const QuadratureRule& gauss_legendre(int order);

using Integrand = std::function<double(double)>;

// Single mapped panel [a,b].
double integrate_panel(const QuadratureRule& rule, const Integrand& f, double a, double b);

// Equal-width composite rule.
double integrate_composite(const Integrand& f, double a, double b, int panels,
                           int nodes_per_panel);

// Adaptive bisection driven by a 7/15 point Gauss pair. All evaluation
// points are interior, so endpoint blow-up of at most logarithmic strength
// and interior kinks are tolerated; power-law endpoint singularities keep a
// scale-invariant error ratio and must be substituted away by the caller.
// Throws NumericalError when the depth cap is hit before the tolerance.
double integrate_adaptive(const Integrand& f, double a, double b, double abs_tol,
                          double rel_tol = 1e-12, int max_depth = 48);

// Root of a continuous function with f(lo) and f(hi) of opposite sign (either
// may be zero). Plain bisection; throws NumericalError if the bracket does not
// shrink below tol_abs within max_iter steps.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol_abs, int max_iter = 200);

}  // namespace specgap
