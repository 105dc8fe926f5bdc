#pragma once

#include <cstdint>
#include <vector>

#include "bergman/conformal.hpp"

namespace bergman {

/// Masked finite-difference grid for the torsion problem
///   Laplacian(v) = -2 in the domain, v = 0 on the boundary.
/// Nodes are cell-centered on a bounding box with a two-cell margin; a node
/// belongs to the interior when its winding number with respect to the
/// boundary polygon is nonzero.  v is stored for every node and is zero on
/// exterior nodes, which imposes the Dirichlet data at first order.
struct GridProblem {
  double h = 0.0;
  double x0 = 0.0, y0 = 0.0;  // box corner; node (i,j) sits at x0+(i+0.5)h, y0+(j+0.5)h
  int nx = 0, ny = 0;
  std::vector<std::uint8_t> interior;
  std::vector<double> v;
  double residual_inf = 0.0;
  long sweeps = 0;

  int index(int i, int j) const { return j * nx + i; }
  double x_of(int i) const { return x0 + (i + 0.5) * h; }
  double y_of(int j) const { return y0 + (j + 0.5) * h; }
};

/// Five-point SOR solve (omega = 1.9) run until the interior residual
/// max-norm of Laplacian(v) + 2 drops below tol.  Caps at 10^6 sweeps and
/// throws NonConvergenceError beyond that.  The polygon must be closed and
/// simple; a grid with no interior nodes is an error.
GridProblem solve_dirichlet(const std::vector<Complex>& polygon, double h, double tol);

/// Same solve against the sampled boundary of a conformal domain.
GridProblem solve_dirichlet(const ConformalDomain& domain, double h, double tol);

/// 2 h^2 sum v: the grid torsional rigidity in physical units.
double torsional_rigidity_fd(const GridProblem& grid);

}  // namespace bergman
