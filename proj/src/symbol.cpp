#include "specgap/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "specgap/bspline.hpp"
#include "specgap/errors.hpp"
#include "specgap/quadrature.hpp"

namespace specgap {

namespace {

constexpr double kSqrt12 = 3.4641016151377543864;  // sqrt(12)

double cos_series(const std::vector<double>& samples, double theta) {
  double acc = samples[0];
  for (std::size_t k = 1; k < samples.size(); ++k)
    acc += 2.0 * samples[k] * std::cos(double(k) * theta);
  return acc;
}

}  // namespace

CardinalSymbol::CardinalSymbol(int p) : p_(p) {
  if (p < 1) throw DomainError("CardinalSymbol: degree must be >= 1, got " + std::to_string(p));
  mass_.resize(p + 1);
  stiff_.resize(p + 1);
  for (int k = 0; k <= p; ++k) {
    mass_[k] = cardinal_eval(2 * p + 1, double(p + 1 - k));
    stiff_[k] = -cardinal_deriv(2 * p + 1, double(p + 1 - k), 2);
  }
  at_pi_ = eval(M_PI);
}

double CardinalSymbol::mass_series(double theta) const { return cos_series(mass_, theta); }

double CardinalSymbol::stiff_series(double theta) const { return cos_series(stiff_, theta); }

double CardinalSymbol::eval(double theta) const {
  if (theta < 0.0 || theta > M_PI)
    throw DomainError("CardinalSymbol::eval: theta outside [0, pi]");
  return cos_series(stiff_, theta) / cos_series(mass_, theta);
}

double CardinalSymbol::inverse(double v) const {
  if (v < 0.0 || v > at_pi_)
    throw DomainError("CardinalSymbol::inverse: value outside [0, eval_at_pi]");
  if (v == 0.0) return 0.0;
  return bisect_root([this, v](double t) { return eval(t) - v; }, 0.0, M_PI, 1e-12, 200);
}

double mass_series(int p, double theta) {
  if (p < 0) throw DomainError("mass_series: degree must be >= 0");
  std::vector<double> samples(p + 1);
  for (int k = 0; k <= p; ++k) samples[k] = cardinal_eval(2 * p + 1, double(p + 1 - k));
  return cos_series(samples, theta);
}

double symbol_value(const Reparametrization& phi, const CardinalSymbol& sym, double x,
                    double theta) {
  if (x < 0.0 || x > 1.0) throw DomainError("symbol_value: x outside [0,1]");
  const double d = phi.deriv1(x);
  return sym.eval(theta) / (d * d);
}

double sublevel_measure(const Reparametrization& phi, const CardinalSymbol& sym, double y) {
  if (y < 0.0) throw DomainError("sublevel_measure: y must be >= 0");
  if (y == 0.0) return 0.0;
  const double ep_pi = sym.eval_at_pi();

  if (phi.convexity == Convexity::Affine) {
    const double d = phi.deriv1(0.5);
    return sym.inverse(std::min(y * y * d * d, ep_pi));
  }

  const double mn = phi.deriv1_min();
  const double mx = phi.deriv1_max();
  if (y * y * mn * mn >= ep_pi) return M_PI;  // past the top of the symbol range

  // Below theta_lo every x qualifies; above theta_hi none does. Between the
  // two, the qualifying set is one interval whose free end comes from the
  // inverse of phi'.
  const double theta_lo = sym.inverse(y * y * mn * mn);
  const double v_hi = y * y * mx * mx;
  const double theta_hi =
      (std::isfinite(v_hi) && v_hi < ep_pi) ? sym.inverse(v_hi) : M_PI;

  const bool convex = phi.convexity == Convexity::StrictlyConvex;
  auto frac = [&](double theta) {
    const double c = std::sqrt(sym.eval(theta)) / y;
    if (c <= mn) return 1.0;
    if (c >= mx) return 0.0;
    const double xi = std::clamp(phi.deriv1_inverse(c), 0.0, 1.0);
    return convex ? 1.0 - xi : xi;
  };
  if (std::isfinite(mx) || theta_lo <= 0.0)
    return theta_lo + integrate_composite(frac, theta_lo, theta_hi, 64, 8);
  // Unbounded phi' stretches the transition band to all of [theta_lo, pi],
  // with the integrand decaying like a power of theta; geometric panels keep
  // every panel equally easy for the Gauss rule.
  const double rho = std::pow(theta_hi / theta_lo, 1.0 / 64);
  double acc = theta_lo;
  double a = theta_lo;
  const QuadratureRule& rule = gauss_legendre(8);
  for (int k = 0; k < 64; ++k) {
    const double b = (k == 63) ? theta_hi : a * rho;
    acc += integrate_panel(rule, frac, a, b);
    a = b;
  }
  return acc;
}

namespace {

// arccos of the theta-threshold for one x at sub-level y, degree 1:
// sqrt(e(theta)) <= y phi'(x)  iff  cos(theta) >= (6 - 2u^2)/(6 + u^2),
// u = y phi'(x).
double theta_span(double u) {
  const double beta = (6.0 - 2.0 * u * u) / (6.0 + u * u);
  return std::acos(std::clamp(beta, -1.0, 1.0));
}

void require_curved(const Reparametrization& phi, const char* who) {
  if (phi.convexity == Convexity::Affine)
    throw DomainError(std::string(who) + ": affine maps have no x-split form; use the"
                                         " direct symbol-inverse branch");
}

}  // namespace

double sublevel_measure_linear_closed(const Reparametrization& phi, double y) {
  require_curved(phi, "sublevel_measure_linear_closed");
  if (phi.convexity == Convexity::StrictlyConcave)
    return sublevel_measure_linear_closed(mirrored(phi), y);
  if (y < 0.0) throw DomainError("sublevel_measure_linear_closed: y must be >= 0");
  if (y == 0.0) return 0.0;

  const double d0 = phi.deriv1(0.0), d1 = phi.deriv1(1.0);
  const double range_max = kSqrt12 / d0;
  const double branch = kSqrt12 / d1;
  if (y >= range_max) return M_PI;

  auto d = phi.deriv1;
  if (y <= branch) {
    // No x exhausts the full theta range yet: one smooth x-integral.
    return integrate_adaptive([&](double x) { return theta_span(y * d(x)); }, 0.0, 1.0,
                              1e-11, 1e-12);
  }
  // Past the branch, x above the phi' level-set split contributes pi. The
  // substitution x = xs - s^2 absorbs the square-root kink at the split.
  const double xs = phi.deriv1_inverse(kSqrt12 / y);
  const double integral = integrate_adaptive(
      [&](double s) { return 2.0 * s * theta_span(y * d(xs - s * s)); }, 0.0,
      std::sqrt(xs), 1e-11, 1e-12);
  return integral + M_PI * (1.0 - xs);
}

double sublevel_measure_linear_deriv(const Reparametrization& phi, double y) {
  require_curved(phi, "sublevel_measure_linear_deriv");
  if (phi.convexity == Convexity::StrictlyConcave)
    return sublevel_measure_linear_deriv(mirrored(phi), y);
  if (y < 0.0) throw DomainError("sublevel_measure_linear_deriv: y must be >= 0");
  // The right-derivative at 0 is the integral of phi' over a bijection of
  // [0,1], which is exactly 1. Maps with unbounded phi' put their branch
  // point at 0 as well, so this must come before the proximity test.
  if (y == 0.0) return 1.0;

  const double d0 = phi.deriv1(0.0), d1 = phi.deriv1(1.0);
  const double range_max = kSqrt12 / d0;
  const double branch = kSqrt12 / d1;
  if (y >= range_max)
    throw DomainError("sublevel_measure_linear_deriv: y beyond the symbol range");
  if (std::abs(y - branch) <= 1e-14 * branch)
    throw DomainError("sublevel_measure_linear_deriv: derivative is one-sided at the"
                      " branch point");

  auto d = phi.deriv1;
  // d/dy of the arccos term for one x; integrable square-root blow-up as
  // y phi'(x) approaches sqrt(12).
  auto rate = [&](double x) {
    const double u = y * d(x);
    const double s = 1.0 - (u / kSqrt12) * (u / kSqrt12);
    return d(x) * 6.0 / ((6.0 + u * u) * std::sqrt(s));
  };
  if (y < branch)
    return integrate_adaptive(rate, 0.0, 1.0, 1e-11, 1e-10);
  // On the upper branch the boundary terms cancel (the arccos term equals pi
  // exactly at the split), leaving the same integrand up to the split; the
  // x = xs - s^2 substitution tames its endpoint singularity.
  const double xs = phi.deriv1_inverse(kSqrt12 / y);
  return integrate_adaptive([&](double s) { return 2.0 * s * rate(xs - s * s); }, 0.0,
                            std::sqrt(xs), 1e-11, 1e-10);
}

MonotoneRearrangement::MonotoneRearrangement(Reparametrization phi, CardinalSymbol sym,
                                             double bisect_tol)
    : phi_(std::move(phi)), sym_(std::move(sym)), bisect_tol_(bisect_tol) {
  const double ep_pi = sym_.eval_at_pi();
  if (phi_.convexity == Convexity::Affine) {
    const double d = phi_.deriv1(0.5);
    range_max_ = std::sqrt(ep_pi) / d;
    slope0_ = d;  // measure(y) = inverse(y^2 d^2) ~ y d near 0
  } else {
    range_max_ = std::sqrt(ep_pi) / phi_.deriv1_min();
    if (sym_.degree() == 1) {
      slope0_ = sublevel_measure_linear_deriv(phi_, 0.0);
    } else {
      // One-sided difference quotients at three halved steps, extrapolated
      // by one Aitken step.
      const double h0 = 1e-3;
      double s[3];
      for (int i = 0; i < 3; ++i) {
        const double h = h0 / double(1 << i);
        s[i] = sublevel_measure(phi_, sym_, h) / h;
      }
      const double den = (s[2] - s[1]) - (s[1] - s[0]);
      double slope = s[2];
      if (den != 0.0) slope = s[2] - (s[2] - s[1]) * (s[2] - s[1]) / den;
      slope0_ = std::max(slope, 0.0);
    }
  }
  gamma_ = slope0_ > 0.0 ? M_PI / slope0_ : std::numeric_limits<double>::infinity();
}

double MonotoneRearrangement::measure(double y) const {
  return sublevel_measure(phi_, sym_, y);
}

double MonotoneRearrangement::quantile(double x) const {
  if (x < -1e-12 || x > 1.0 + 1e-12)
    throw DomainError("MonotoneRearrangement::quantile: x outside [0,1]");
  x = std::clamp(x, 0.0, 1.0);
  if (x == 0.0) return 0.0;
  if (x == 1.0) return range_max_;
  const double target = M_PI * x;
  return bisect_root([&](double y) { return measure(y) - target; }, 0.0, range_max_,
                     bisect_tol_, 200);
}

MonotoneRearrangement rearrange(const Reparametrization& phi, const CardinalSymbol& sym) {
  return MonotoneRearrangement(phi, sym);
}

}  // namespace specgap
