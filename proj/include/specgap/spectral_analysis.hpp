#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specgap/eigensolve.hpp"
#include "specgap/symbol.hpp"

namespace specgap {

// Gap statistics of one computed spectrum against its rearranged symbol.
struct GapReport {
  int p = 0;
  int n = 0;
  std::string phi_label;
  double delta = 0.0;   // smallest gap of the square-rooted eigenvalues
  int m_of_n = 0;       // smallest 1-based index attaining that gap
  double delta_out = 0.0;  // same inf restricted below the outlier tail; +inf if empty
  std::optional<double> approx_delta;  // quantile-based estimate, degree 1 only
  double gamma = 0.0;
  int out_count_formula = 0;
  int out_count_observed = 0;
};

// Number of spurious top eigenvalues the theory predicts: 2*floor((p-1)/2).
int outlier_count_formula(int p);

// Count of normalized sqrt-eigenvalues exceeding range_max * (1 + tol).
int outlier_count_observed(const Spectrum& s, const MonotoneRearrangement& r, double tol);

GapReport compute_gap(const Spectrum& s, const MonotoneRearrangement& r,
                      double outlier_tol = 1e-6);

// n times the smallest increment of quantile(i/n) over i = 1..n-2. Degree 1
// only; needs n >= 3.
double approximate_gap(const MonotoneRearrangement& r, int n);

// Weyl-law comparison of the normalized spectrum with the rearranged symbol.
struct WeylReport {
  double sup_G_error = 0.0;       // eigenvalue-counting step vs measure/pi, over a y-grid
  double sampling_sup_error = 0.0;    // eigenvalues vs quantile samples, outliers excluded
  double weighted_sup_error = 0.0;    // same with the (n/k) weight
  double avg_gap_lhs = 0.0;       // index-weighted mean gap of normalized sqrt-eigenvalues
  double avg_gap_rhs = 0.0;       // integral of measure/pi over the symbol range
};

WeylReport weyl_statistic(const Spectrum& s, const MonotoneRearrangement& r,
                          int grid_size = 512);

// Histogram of normalized sqrt-eigenvalues over r equal bins of (y0, yr].
struct PackReport {
  std::vector<double> bin_edges;  // r+1 edges
  std::vector<int> counts;        // r counts, (edge_{i-1}, edge_i]
};

PackReport pack_counts(const Spectrum& s, double y0, double yr, int r);

// Two-map comparison on a normalized-eigenvalue window [lo, hi] (symbol
// scale, i.e. squared): the measure-ordering margin on a y-grid and the
// per-index eigenvalue ordering at one discretization size.
struct OrderPair {
  int k = 0;  // 1-based eigenvalue index
  double a_value = 0.0, b_value = 0.0;  // normalized eigenvalues of the two maps
};

struct OrderReport {
  double min_measure_gap = 0.0;  // min over the grid of measure_A - measure_B at sqrt(y)
  std::vector<OrderPair> pairs;  // indices whose normalized values both fall in the window
  bool ordering_holds = false;   // nonempty and a_value < b_value for every pair
};

OrderReport compare_orderings(const Reparametrization& phi_a, const Reparametrization& phi_b,
                              int p, int n, std::pair<double, double> window,
                              const QuadratureConfig& quad = {});

}  // namespace specgap
