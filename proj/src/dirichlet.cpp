#include "bergman/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

struct Crossing {
  double x;
  int dir;
};

// Nonzero-winding scanline fill: for each grid row, accumulate the signed
// crossings of the polygon edges with the row's horizontal line; a node is
// interior when the running winding number at its x is nonzero.
void fill_interior(const std::vector<Complex>& poly, GridProblem& g) {
  const size_t nv = poly.size();
  std::vector<Crossing> row;
  for (int j = 0; j < g.ny; ++j) {
    const double y = g.y_of(j);
    row.clear();
    for (size_t e = 0; e < nv; ++e) {
      const Complex a = poly[e];
      const Complex b = poly[(e + 1) % nv];
      const bool below_a = a.imag() <= y;
      const bool below_b = b.imag() <= y;
      if (below_a == below_b) continue;
      const double t = (y - a.imag()) / (b.imag() - a.imag());
      row.push_back({a.real() + t * (b.real() - a.real()), below_a ? +1 : -1});
    }
    std::sort(row.begin(), row.end(), [](const Crossing& u, const Crossing& v) { return u.x < v.x; });
    int wind = 0;
    size_t k = 0;
    for (int i = 0; i < g.nx; ++i) {
      const double x = g.x_of(i);
      while (k < row.size() && row[k].x <= x) wind += row[k++].dir;
      g.interior[static_cast<size_t>(g.index(i, j))] = wind != 0 ? 1 : 0;
    }
  }
}

GridProblem solve_on_polygon(const std::vector<Complex>& polygon, double h, double tol) {
  if (polygon.size() < 3) throw std::invalid_argument("solve_dirichlet: need a closed polygon");
  if (!(h > 0.0)) throw std::invalid_argument("solve_dirichlet: h must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("solve_dirichlet: tol must be positive");

  double xmin = polygon[0].real(), xmax = xmin, ymin = polygon[0].imag(), ymax = ymin;
  for (const Complex& p : polygon) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }

  GridProblem g;
  g.h = h;
  g.x0 = xmin - 2.0 * h;
  g.y0 = ymin - 2.0 * h;
  g.nx = static_cast<int>(std::ceil((xmax - xmin) / h)) + 4;
  g.ny = static_cast<int>(std::ceil((ymax - ymin) / h)) + 4;
  g.interior.assign(static_cast<size_t>(g.nx) * g.ny, 0);
  g.v.assign(static_cast<size_t>(g.nx) * g.ny, 0.0);
  fill_interior(polygon, g);

  std::vector<int> nodes;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      if (g.interior[static_cast<size_t>(g.index(i, j))]) nodes.push_back(g.index(i, j));
  if (nodes.empty())
    throw std::invalid_argument("solve_dirichlet: no interior nodes at this grid spacing");

  constexpr double omega = 1.9;
  constexpr long kSweepCap = 1000000;
  const double h2 = h * h;
  const int nx = g.nx;
  double* v = g.v.data();
  double residual = std::numeric_limits<double>::infinity();
  long sweeps = 0;
  while (sweeps < kSweepCap) {
    ++sweeps;
    for (int l : nodes) {
      const double nb = v[l - 1] + v[l + 1] + v[l - nx] + v[l + nx];
      v[l] += omega * (0.25 * (nb + 2.0 * h2) - v[l]);
    }
    if (sweeps % 32 == 0) {
      residual = 0.0;
      for (int l : nodes) {
        const double nb = v[l - 1] + v[l + 1] + v[l - nx] + v[l + nx];
        residual = std::max(residual, std::abs((nb - 4.0 * v[l]) / h2 + 2.0));
      }
      if (residual < tol) break;
    }
  }
  g.sweeps = sweeps;
  g.residual_inf = residual;
  if (!(residual < tol))
    throw NonConvergenceError("solve_dirichlet: SOR residual did not reach tolerance");
  return g;
}

}  // namespace

GridProblem solve_dirichlet(const std::vector<Complex>& polygon, double h, double tol) {
  return solve_on_polygon(polygon, h, tol);
}

GridProblem solve_dirichlet(const ConformalDomain& domain, double h, double tol) {
  return solve_on_polygon(domain.boundary(), h, tol);
}

double torsional_rigidity_fd(const GridProblem& grid) {
  double s = 0.0;
  for (double x : grid.v) s += x;
  return 2.0 * grid.h * grid.h * s;
}

}  // namespace bergman
