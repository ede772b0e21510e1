#pragma once

#include <functional>
#include <string>
#include <vector>

namespace specgap {

enum class Convexity { StrictlyConvex, StrictlyConcave, Affine };

const char* to_string(Convexity c);

// C^2 increasing bijection of [0,1] with one-signed curvature. Carries the
// maps the symbol machinery consumes: phi, phi', phi'', and the inverse of
// phi' (phi' is strictly monotone when the map is non-affine).
struct Reparametrization {
  std::function<double(double)> value;
  std::function<double(double)> deriv1;
  std::function<double(double)> deriv2;
  std::function<double(double)> deriv1_inverse;  // unset when affine
  bool has_deriv1_inverse = false;
  Convexity convexity = Convexity::Affine;
  std::string label;

  // Growth exponent of phi' at each endpoint: phi'(x) ~ x^power as x -> 0+
  // (and mirrored at 1). Zero for maps with bounded phi'; the power maps with
  // a vertical tangent carry 1/k - 1 here so quadrature can remove the
  // singularity by substitution.
  double deriv1_power_at0 = 0.0;
  double deriv1_power_at1 = 0.0;

  // phi' is monotone, so its extremes sit at the endpoints. deriv1_max may
  // be +inf (power-law maps with a vertical tangent at x = 0).
  double deriv1_min() const;
  double deriv1_max() const;
};

Reparametrization make_phi1();              // log-based concave map ln(x+1)/ln 2
Reparametrization make_phi2();              // exponential convex map (e^x-1)/(e-1)
Reparametrization make_phi3(double theta);  // sqrt((2t+1)x + t^2) - t, concave
// phi3 composed with the 1/p power; concave, vertical tangent at 0 for p >= 2.
Reparametrization make_power_of_phi3(int p, double theta);
// Convex exponential family pinned to phi'(0) = gamma; requires a > 0,
// 0 < gamma < 1.
Reparametrization make_exp_family(double a, double gamma);
// Concave logarithmic family pinned to phi'(1) = gamma; the pin is solvable
// only for gamma in (3/2 - ln 2, 1).
Reparametrization make_log_family(double a, double gamma);
Reparametrization make_identity();

// Reflection x -> 1 - phi(1-x): swaps convexity and the roles of phi'(0) and
// phi'(1) while preserving the distribution of phi' values.
Reparametrization mirrored(const Reparametrization& phi);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  double worst_point = 0.0;  // probe location of the worst violation
  double worst_value = 0.0;  // size of that violation
  std::string note;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed() const;
  const ValidationCheck* find(const std::string& name) const;
};

// Probes the map on a uniform grid: endpoint interpolation, positivity of
// phi', one-signed phi'' (affine maps fail this check by construction), and
// the phi' inverse round-trip on deterministic pseudo-random points.
ValidationReport validate(const Reparametrization& phi, int grid_points = 1001);

// Spec-string grammar, also used by the CLI and config files:
//   phi1 | phi2 | phi3:theta=<v> | Phi:p=<k>,theta=<v> |
//   expfam:a=<v>,gamma=<v> | logfam:a=<v>,gamma=<v> | identity
// Unknown names or keys raise ParseError; admissible-range violations raise
// DomainError.
Reparametrization parse_phi_spec(const std::string& spec);

}  // namespace specgap
