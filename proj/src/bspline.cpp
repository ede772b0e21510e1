#include "specgap/bspline.hpp"

#include <string>

#include "specgap/errors.hpp"

namespace specgap {

KnotVector open_uniform_knots(int p, int n) {
  if (p < 1)
    throw DomainError("open_uniform_knots: degree must be >= 1, got " + std::to_string(p));
  if (n < 2)
    throw DomainError("open_uniform_knots: span count must be >= 2, got " + std::to_string(n));
  KnotVector kv;
  kv.degree = p;
  kv.spans = n;
  kv.knots.assign(2 * p + n + 1, 0.0);
  for (int i = 1; i < n; ++i) kv.knots[p + i] = double(i) / double(n);
  for (int i = p + n; i <= 2 * p + n; ++i) kv.knots[i] = 1.0;
  return kv;
}

namespace {

// Degree-0 factor: the indicator of [t_j, t_{j+1}), closed at the right end
// of the domain so evaluation at t = 1 lands in the last nonempty span.
double span_indicator(const std::vector<double>& t, int j, double x) {
  if (x >= t[j] && x < t[j + 1]) return 1.0;
  if (x == 1.0 && t[j] < 1.0 && t[j + 1] == 1.0) return 1.0;
  return 0.0;
}

double eval_rec(const std::vector<double>& t, int j, int p, double x) {
  if (p == 0) return span_indicator(t, j, x);
  double acc = 0.0;
  const double dl = t[j + p] - t[j];
  if (dl > 0.0) acc += (x - t[j]) / dl * eval_rec(t, j, p - 1, x);
  const double dr = t[j + p + 1] - t[j + 1];
  if (dr > 0.0) acc += (t[j + p + 1] - x) / dr * eval_rec(t, j + 1, p - 1, x);
  return acc;
}

void check_index(const KnotVector& kv, int j, const char* who) {
  if (j < 0 || j >= kv.basis_count())
    throw DomainError(std::string(who) + ": basis index " + std::to_string(j) +
                      " outside 0.." + std::to_string(kv.basis_count() - 1));
}

}  // namespace

double basis_eval(const KnotVector& kv, int j, double t) {
  check_index(kv, j, "basis_eval");
  return eval_rec(kv.knots, j, kv.degree, t);
}

double basis_deriv(const KnotVector& kv, int j, double t) {
  check_index(kv, j, "basis_deriv");
  const auto& kt = kv.knots;
  const int p = kv.degree;
  double acc = 0.0;
  const double dl = kt[j + p] - kt[j];
  if (dl > 0.0) acc += double(p) / dl * eval_rec(kt, j, p - 1, t);
  const double dr = kt[j + p + 1] - kt[j + 1];
  if (dr > 0.0) acc -= double(p) / dr * eval_rec(kt, j + 1, p - 1, t);
  return acc;
}

double cardinal_eval(int p, double x) {
  if (p < 0) throw DomainError("cardinal_eval: degree must be >= 0, got " + std::to_string(p));
  if (p == 0) return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
  if (x <= 0.0 || x >= double(p + 1)) return 0.0;
  return x / p * cardinal_eval(p - 1, x) +
         (double(p + 1) - x) / p * cardinal_eval(p - 1, x - 1.0);
}

double cardinal_deriv(int p, double x, int order) {
  if (order < 0)
    throw DomainError("cardinal_deriv: order must be >= 0, got " + std::to_string(order));
  if (order > p - 1 && order != 0)
    throw DomainError("cardinal_deriv: order " + std::to_string(order) +
                      " exceeds smoothness of degree " + std::to_string(p));
  if (order == 0) return cardinal_eval(p, x);
  return cardinal_deriv(p - 1, x, order - 1) - cardinal_deriv(p - 1, x - 1.0, order - 1);
}

}  // namespace specgap
