#include "specgap/spectral_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "specgap/errors.hpp"
#include "specgap/quadrature.hpp"

namespace specgap {

int outlier_count_formula(int p) {
  if (p < 1) throw DomainError("outlier_count_formula: degree must be >= 1");
  return 2 * ((p - 1) / 2);
}

int outlier_count_observed(const Spectrum& s, const MonotoneRearrangement& r, double tol) {
  if (!(tol >= 0.0)) throw DomainError("outlier_count_observed: tol must be >= 0");
  const double cut = r.range_max() * (1.0 + tol);
  int count = 0;
  for (int k = 0; k < s.size(); ++k)
    if (s.sqrt_normalized(k) > cut) ++count;
  return count;
}

GapReport compute_gap(const Spectrum& s, const MonotoneRearrangement& r,
                      double outlier_tol) {
  const int N = s.size();
  if (N < 2) throw DomainError("compute_gap: need at least two eigenvalues");
  GapReport g;
  g.p = s.p;
  g.n = s.n;
  g.phi_label = s.phi_label;
  g.gamma = r.gamma();
  g.out_count_formula = outlier_count_formula(s.p);
  g.out_count_observed = outlier_count_observed(s, r, outlier_tol);

  g.delta = std::numeric_limits<double>::infinity();
  g.m_of_n = 0;
  for (int k = 1; k <= N - 1; ++k) {  // 1-based gap index
    const double gap = std::sqrt(s.eigenvalues[k]) - std::sqrt(s.eigenvalues[k - 1]);
    if (gap < g.delta) {
      g.delta = gap;
      g.m_of_n = k;
    }
  }

  const int top = N - 1 - g.out_count_formula;
  g.delta_out = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= top; ++k)
    g.delta_out = std::min(g.delta_out,
                           std::sqrt(s.eigenvalues[k]) - std::sqrt(s.eigenvalues[k - 1]));

  if (r.degree() == 1 && s.n >= 3) g.approx_delta = approximate_gap(r, s.n);
  return g;
}

double approximate_gap(const MonotoneRearrangement& r, int n) {
  if (r.degree() != 1)
    throw DomainError("approximate_gap: defined for degree 1 only");
  if (n < 3) throw DomainError("approximate_gap: need n >= 3");
  // March the quantile over i/n; each value brackets the next, which keeps
  // the bisections short.
  double best = std::numeric_limits<double>::infinity();
  double prev = r.quantile(1.0 / n);
  for (int i = 1; i <= n - 2; ++i) {
    const double x = double(i + 1) / n;
    const double target = M_PI * x;
    double next;
    if (x >= 1.0) {
      next = r.range_max();
    } else {
      next = bisect_root([&](double y) { return r.measure(y) - target; }, prev,
                         r.range_max(), 1e-12, 200);
    }
    best = std::min(best, next - prev);
    prev = next;
  }
  return double(n) * best;
}

WeylReport weyl_statistic(const Spectrum& s, const MonotoneRearrangement& r,
                          int grid_size) {
  const int N = s.size();
  if (N < 2) throw DomainError("weyl_statistic: need at least two eigenvalues");
  if (grid_size < 2) throw DomainError("weyl_statistic: grid must have >= 2 points");
  WeylReport w;

  std::vector<double> sq(N);
  for (int k = 0; k < N; ++k) sq[k] = s.sqrt_normalized(k);

  const double rm = r.range_max();
  for (int i = 0; i < grid_size; ++i) {
    const double y = rm * double(i) / (grid_size - 1);
    const auto hi = std::upper_bound(sq.begin(), sq.end(), y);
    const double G = double(hi - sq.begin()) / double(N + 1);
    w.sup_G_error = std::max(w.sup_G_error, std::abs(G - r.measure(y) / M_PI));
  }

  // Quantile samples at k/(N+1) for indices below the outlier tail; the
  // bisections march left to right on a shared bracket.
  const int out = outlier_count_formula(s.p);
  const int kmax = N - out;
  double prev = 0.0;
  for (int k = 1; k <= kmax; ++k) {
    const double target = M_PI * double(k) / double(N + 1);
    const double q = bisect_root([&](double y) { return r.measure(y) - target; }, prev,
                                 rm, 1e-12, 200);
    prev = q;
    const double err = std::abs(sq[k - 1] - q);
    w.sampling_sup_error = std::max(w.sampling_sup_error, err);
    w.weighted_sup_error = std::max(w.weighted_sup_error, double(s.n) / double(k) * err);
  }

  double acc = 0.0;
  for (int k = 1; k <= N - 1; ++k) acc += double(k) * (sq[k] - sq[k - 1]);
  w.avg_gap_lhs = acc / double(N - 1);
  w.avg_gap_rhs =
      integrate_composite([&](double y) { return r.measure(y) / M_PI; }, 0.0, rm, 64, 8);
  return w;
}

PackReport pack_counts(const Spectrum& s, double y0, double yr, int r) {
  if (!(y0 >= 0.0) || !(yr > y0)) throw DomainError("pack_counts: need 0 <= y0 < yr");
  if (r < 2) throw DomainError("pack_counts: need at least 2 bins");
  PackReport rep;
  rep.bin_edges.resize(r + 1);
  for (int i = 0; i <= r; ++i) rep.bin_edges[i] = y0 + (yr - y0) * double(i) / r;
  rep.counts.assign(r, 0);
  for (int k = 0; k < s.size(); ++k) {
    const double v = s.sqrt_normalized(k);
    if (v <= y0 || v > yr) continue;
    int bin = int(std::ceil((v - y0) / (yr - y0) * r)) - 1;
    bin = std::clamp(bin, 0, r - 1);
    // guard against rounding at bin edges: membership is (edge_{i-1}, edge_i]
    while (bin > 0 && v <= rep.bin_edges[bin]) --bin;
    while (bin < r - 1 && v > rep.bin_edges[bin + 1]) ++bin;
    ++rep.counts[bin];
  }
  return rep;
}

OrderReport compare_orderings(const Reparametrization& phi_a, const Reparametrization& phi_b,
                              int p, int n, std::pair<double, double> window,
                              const QuadratureConfig& quad) {
  const auto [lo, hi] = window;
  if (!(lo >= 0.0) || !(hi > lo)) throw DomainError("compare_orderings: bad window");
  const CardinalSymbol sym(p);
  const double top = sym.eval_at_pi() /
                     std::pow(std::max(phi_a.deriv1_min(), phi_b.deriv1_min()), 2);
  if (hi > top * (1.0 + 1e-12))
    throw DomainError("compare_orderings: window exceeds a symbol range");

  OrderReport rep;
  rep.min_measure_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 200; ++i) {
    const double y = lo + (hi - lo) * double(i) / 199.0;
    const double diff = sublevel_measure(phi_a, sym, std::sqrt(y)) -
                        sublevel_measure(phi_b, sym, std::sqrt(y));
    rep.min_measure_gap = std::min(rep.min_measure_gap, diff);
  }

  const Spectrum sa = solve_eigenproblem(phi_a, p, n, quad);
  const Spectrum sb = solve_eigenproblem(phi_b, p, n, quad);
  for (int k = 0; k < std::min(sa.size(), sb.size()); ++k) {
    const double a = sa.normalized(k), b = sb.normalized(k);
    if (a >= lo && a <= hi && b >= lo && b <= hi)
      rep.pairs.push_back({k + 1, a, b});
  }
  rep.ordering_holds = !rep.pairs.empty();
  for (const auto& pr : rep.pairs)
    if (!(pr.a_value < pr.b_value)) rep.ordering_holds = false;
  return rep;
}

}  // namespace specgap
