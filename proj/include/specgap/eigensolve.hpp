#pragma once

#include <string>
#include <vector>

#include "specgap/assembly.hpp"
#include "specgap/banded.hpp"
#include "specgap/reparam.hpp"

namespace specgap {

// Eigenpairs of the symmetric definite pencil K u = lambda M u.
struct Spectrum {
  int p = 0;  // bandwidth of the pencil (spline degree for assembled pairs)
  int n = 0;  // span count recovered from the matrix order
  std::string phi_label;
  std::vector<double> eigenvalues;   // ascending
  std::vector<double> eigenvectors;  // column-major N x N when requested
  bool has_vectors = false;

  int size() const { return int(eigenvalues.size()); }
  // Normalized values n^{-2} lambda_k and their square roots; k is 0-based.
  double normalized(int k) const;
  double sqrt_normalized(int k) const;
};

// Dense symmetric-definite solve: Cholesky of M, fold into a standard
// symmetric problem, tridiagonalize, implicit-shift iteration. Eigenvectors,
// when requested, come back M-orthonormal. M must be positive definite.
Spectrum generalized_eig(const SymmetricBandedMatrix& K, const SymmetricBandedMatrix& M,
                         bool want_vectors = false);

// Assemble the weighted mass/stiffness pair for (phi, p, n) and solve it.
Spectrum solve_eigenproblem(const Reparametrization& phi, int p, int n,
                            const QuadratureConfig& quad = {}, bool want_vectors = false);

}  // namespace specgap
