#include "specgap/eigensolve.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "specgap/errors.hpp"

namespace specgap {

double Spectrum::normalized(int k) const {
  return eigenvalues.at(std::size_t(k)) / (double(n) * double(n));
}

double Spectrum::sqrt_normalized(int k) const { return std::sqrt(normalized(k)); }

namespace {

Eigen::MatrixXd to_dense(const SymmetricBandedMatrix& m) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m.order, m.order);
  for (int i = 0; i < m.order; ++i)
    for (int j = std::max(0, i - m.bandwidth); j <= i; ++j) d(i, j) = d(j, i) = m.at(i, j);
  return d;
}

}  // namespace

Spectrum generalized_eig(const SymmetricBandedMatrix& K, const SymmetricBandedMatrix& M,
                         bool want_vectors) {
  if (K.order != M.order)
    throw DomainError("generalized_eig: pencil orders differ (" + std::to_string(K.order) +
                      " vs " + std::to_string(M.order) + ")");
  const int N = K.order;
  const Eigen::MatrixXd Kd = to_dense(K);
  const Eigen::MatrixXd Md = to_dense(M);

  // Probe definiteness up front so a singular mass matrix reports as a domain
  // problem rather than an iteration failure.
  Eigen::LLT<Eigen::MatrixXd> llt(Md);
  if (llt.info() != Eigen::Success)
    throw DomainError("generalized_eig: mass matrix is not positive definite");

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.compute(Kd, Md, want_vectors ? (Eigen::ComputeEigenvectors | Eigen::Ax_lBx)
                                  : (Eigen::EigenvaluesOnly | Eigen::Ax_lBx));
  if (es.info() != Eigen::Success)
    throw NumericalError("generalized_eig: eigenvalue iteration did not converge");

  Spectrum s;
  s.p = std::max(K.bandwidth, M.bandwidth);
  s.n = N - s.p + 2;
  s.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + N);
  if (want_vectors) {
    s.eigenvectors.assign(es.eigenvectors().data(), es.eigenvectors().data() + std::size_t(N) * N);
    s.has_vectors = true;
  }
  return s;
}

Spectrum solve_eigenproblem(const Reparametrization& phi, int p, int n,
                            const QuadratureConfig& quad, bool want_vectors) {
  const SymmetricBandedMatrix M = assemble_mass(phi, p, n, quad);
  const SymmetricBandedMatrix K = assemble_stiffness(phi, p, n, quad);
  Spectrum s = generalized_eig(K, M, want_vectors);
  s.p = p;
  s.n = n;
  s.phi_label = phi.label;
  return s;
}

}  // namespace specgap
