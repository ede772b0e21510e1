#pragma once

#include "specgap/banded.hpp"
#include "specgap/reparam.hpp"

namespace specgap {

struct QuadratureConfig {
  int base_nodes = 0;      // 0 means degree + 5 nodes per span
  double rel_tol = 1e-13;  // per-entry agreement required under node doubling
  // Spans holding a steep boundary layer of phi' (phi3 with small theta) need
  // a few hundred nodes before the doubling gate closes, so the cap is
  // generous; smooth spans exit after the first round.
  int max_doublings = 8;
};

// Galerkin mass matrix of the interior basis functions N_1..N_{n+p-2} on the
// open-uniform knot grid, weighted by phi': entries  integral of
// phi'(t) N_i(t) N_j(t) dt. Order n+p-2, bandwidth p, symmetric positive
// definite. Spans are integrated with Gauss rules, doubling the node count
// until entries settle to quad.rel_tol.
SymmetricBandedMatrix assemble_mass(const Reparametrization& phi, int p, int n,
                                    const QuadratureConfig& quad = {});

// Stiffness matrix: entries  integral of (1/phi'(t)) N_i'(t) N_j'(t) dt.
SymmetricBandedMatrix assemble_stiffness(const Reparametrization& phi, int p, int n,
                                         const QuadratureConfig& quad = {});

}  // namespace specgap
