#pragma once

#include <vector>

namespace specgap {

// Open-uniform knot sequence on [0,1]: p+1 zeros, the interior knots i/n for
// i = 1..n-1, then p+1 ones. Length 2p + n + 1.
struct KnotVector {
  int degree = 0;  // p >= 1
  int spans = 0;   // n >= 2
  std::vector<double> knots;

  int basis_count() const { return degree + spans; }
};

KnotVector open_uniform_knots(int p, int n);

// N_j^p(t) by the two-term recursion on the knot sequence; terms with a zero
// knot difference drop out. Spans are half-open [t_j, t_{j+1}) except that the
// last nonempty span is closed at t = 1, so the basis sums to 1 there too.
// Valid for 0 <= j <= p+n-1 and t in [0,1].
double basis_eval(const KnotVector& kv, int j, double t);

// d/dt N_j^p(t), taken one-sided at span boundaries (from the right except at
// t = 1, where the closed last span gives the left-sided value).
double basis_deriv(const KnotVector& kv, int j, double t);

// Cardinal B-spline of degree p on the integer knots 0,1,...,p+1; supported
// on [0, p+1], C^{p-1} for p >= 1.
double cardinal_eval(int p, double x);

// order-th derivative via the first-difference recursion applied `order`
// times. Requires 0 <= order <= p-1 so the result is still continuous.
double cardinal_deriv(int p, double x, int order);

}  // namespace specgap
