#include "specgap/assembly.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "specgap/bspline.hpp"
#include "specgap/errors.hpp"
#include "specgap/quadrature.hpp"

namespace specgap {

namespace {

// Power of the x = a + (b-a)u^k substitution that makes the span integrand
// smooth again when phi' behaves like a power of the distance to an endpoint
// (vertical tangent at x = 0 or x = 1). k = 1 is the identity map.
int substitution_order(const Reparametrization& phi, int span, int n) {
  double power = 0.0;
  if (span == 0) power = phi.deriv1_power_at0;
  if (span == n - 1) power = phi.deriv1_power_at1;
  if (power >= 0.0) return 1;
  if (power <= -1.0)
    throw DomainError("assemble: phi' must be integrable, endpoint power " +
                      std::to_string(power));
  return std::max(1, int(std::ceil(1.0 / (1.0 + power) - 1e-9)));
}

// One span's (p+1) x (p+1) Galerkin block with a q-node Gauss rule. The
// active functions on span s are N_s..N_{s+p} over the full basis. With
// sub_order = k > 1 the rule is applied in the u variable of x = a + w u^k
// (or its mirror image when the rough endpoint is x = b), which absorbs an
// x^{1/k - 1} endpoint singularity of the weight.
std::vector<double> span_block(const KnotVector& kv, const Reparametrization& phi,
                               bool stiffness, int span, int q, int sub_order) {
  const int p = kv.degree;
  const int n = kv.spans;
  const double a = double(span) / n, b = double(span + 1) / n;
  const bool from_right = sub_order > 1 && span == n - 1;
  const QuadratureRule& rule = gauss_legendre(q);
  std::vector<double> blk((p + 1) * (p + 1), 0.0);
  std::vector<double> vals(p + 1);
  for (int g = 0; g < rule.order; ++g) {
    const double u = 0.5 + 0.5 * rule.nodes[g];  // map to (0,1)
    const double uk = std::pow(u, sub_order);
    const double t = from_right ? b - (b - a) * uk : a + (b - a) * uk;
    const double jac = 0.5 * (b - a) * sub_order * std::pow(u, sub_order - 1);
    const double d1 = phi.deriv1(t);
    const double w = rule.weights[g] * jac * (stiffness ? 1.0 / d1 : d1);
    for (int l = 0; l <= p; ++l)
      vals[l] = stiffness ? basis_deriv(kv, span + l, t) : basis_eval(kv, span + l, t);
    for (int r = 0; r <= p; ++r)
      for (int c = 0; c <= p; ++c) blk[r * (p + 1) + c] += w * vals[r] * vals[c];
  }
  return blk;
}

SymmetricBandedMatrix assemble(const Reparametrization& phi, int p, int n,
                               bool stiffness, const QuadratureConfig& quad) {
  if (p < 1) throw DomainError("assemble: degree must be >= 1, got " + std::to_string(p));
  if (n < p + 1)
    throw DomainError("assemble: need n >= p+1, got n = " + std::to_string(n) +
                      " for p = " + std::to_string(p));
  const int N = n + p - 2;
  const KnotVector kv = open_uniform_knots(p, n);
  SymmetricBandedMatrix m = SymmetricBandedMatrix::zero(N, std::min(p, N - 1));

  const int base = quad.base_nodes > 0 ? quad.base_nodes : p + 5;
  for (int s = 0; s < n; ++s) {
    const int sub = substitution_order(phi, s, n);
    int q = base;
    std::vector<double> coarse = span_block(kv, phi, stiffness, s, q, sub);
    std::vector<double> fine;
    bool converged = false;
    for (int round = 0; round < quad.max_doublings && !converged; ++round) {
      fine = span_block(kv, phi, stiffness, s, 2 * q, sub);
      double scale = 0.0, diff = 0.0;
      for (std::size_t k = 0; k < fine.size(); ++k) {
        scale = std::max(scale, std::abs(fine[k]));
        diff = std::max(diff, std::abs(fine[k] - coarse[k]));
      }
      converged = diff <= quad.rel_tol * scale;
      coarse.swap(fine);
      q *= 2;
    }
    if (!converged)
      throw NumericalError("assemble: quadrature did not settle on span " +
                           std::to_string(s) + " after " +
                           std::to_string(quad.max_doublings) + " doublings");
    // Interior basis functions are 1..n+p-2; matrix row r holds function r+1.
    for (int r = 0; r <= p; ++r) {
      const int fi = s + r;
      if (fi < 1 || fi > N) continue;
      for (int c = 0; c <= r; ++c) {
        const int fj = s + c;
        if (fj < 1 || fj > N) continue;
        m.add(fi - 1, fj - 1, coarse[r * (p + 1) + c]);
      }
    }
  }
  return m;
}

}  // namespace

SymmetricBandedMatrix assemble_mass(const Reparametrization& phi, int p, int n,
                                    const QuadratureConfig& quad) {
  return assemble(phi, p, n, false, quad);
}

SymmetricBandedMatrix assemble_stiffness(const Reparametrization& phi, int p, int n,
                                         const QuadratureConfig& quad) {
  return assemble(phi, p, n, true, quad);
}

}  // namespace specgap
