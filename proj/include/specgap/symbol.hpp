#pragma once

#include <vector>

#include "specgap/reparam.hpp"

namespace specgap {

// Cosine-series symbol pair of the uniform-grid discretization, built from
// samples of the cardinal B-spline of degree 2p+1 (and its second derivative)
// at the integer offsets p+1-k. mass_series is positive on [0,pi] with value
// 1 at 0; the ratio eval = stiff_series/mass_series increases from 0 to its
// value at pi and behaves like theta^2 near 0.
class CardinalSymbol {
 public:
  explicit CardinalSymbol(int p);

  int degree() const { return p_; }
  const std::vector<double>& mass_samples() const { return mass_; }
  const std::vector<double>& stiff_samples() const { return stiff_; }

  double mass_series(double theta) const;   // even cosine series of mass samples
  double stiff_series(double theta) const;  // same for the second-derivative samples
  double eval(double theta) const;          // their ratio, for theta in [0, pi]
  double eval_at_pi() const { return at_pi_; }

  // Unique theta in [0, pi] with eval(theta) = v; requires 0 <= v <= eval_at_pi.
  double inverse(double v) const;

 private:
  int p_;
  std::vector<double> mass_, stiff_;
  double at_pi_;
};

// Mass-sample cosine series for any degree >= 0 (used by the cross-degree
// ratio identities).
double mass_series(int p, double theta);

// Frequency-symbol value eval(theta) / phi'(x)^2 of the reparametrized pencil.
double symbol_value(const Reparametrization& phi, const CardinalSymbol& sym, double x,
                    double theta);

// Distribution function of the square-rooted symbol: the plane measure of
// {(x, theta) in [0,1] x [0,pi] : sqrt(symbol_value) <= y}. Computed as a
// single theta-integral of x-interval lengths through the inverse of phi';
// for affine maps the measure collapses to the symbol inverse directly.
double sublevel_measure(const Reparametrization& phi, const CardinalSymbol& sym, double y);

// Degree-1 closed form of the same measure, written as an x-integral of
// arccos terms with a split once some x exhausts the whole theta range.
// Strictly convex maps are handled directly; strictly concave maps go
// through the mirror reflection (same measure). Affine maps are rejected.
double sublevel_measure_linear_closed(const Reparametrization& phi, double y);

// Analytic derivative in y of the degree-1 measure. Defined on both branches;
// the branch point itself (where the two formulas meet with one-sided
// derivatives) is rejected. y = 0 returns the right-derivative, which equals
// the integral of phi' (that is, 1).
double sublevel_measure_linear_deriv(const Reparametrization& phi, double y);

// Monotone rearrangement of the symbol: quantile(x) is the increasing
// function on [0,1] whose sublevel measure matches the symbol's, i.e. the
// solution y of measure(y) = pi * x.
class MonotoneRearrangement {
 public:
  MonotoneRearrangement(Reparametrization phi, CardinalSymbol sym,
                        double bisect_tol = 1e-12);

  double measure(double y) const;   // sublevel measure of the sqrt symbol
  double quantile(double x) const;  // bisection inverse on [0, range_max]
  double range_max() const { return range_max_; }
  double slope_at_zero() const { return slope0_; }  // right-derivative of measure at 0
  double gamma() const { return gamma_; }           // pi / slope_at_zero

  const Reparametrization& phi() const { return phi_; }
  const CardinalSymbol& symbol() const { return sym_; }
  int degree() const { return sym_.degree(); }

 private:
  Reparametrization phi_;
  CardinalSymbol sym_;
  double bisect_tol_;
  double range_max_;
  double slope0_;
  double gamma_;
};

MonotoneRearrangement rearrange(const Reparametrization& phi, const CardinalSymbol& sym);

}  // namespace specgap
