#pragma once

#include <vector>

#include "bergman/power_series.hpp"
#include "bergman/weights.hpp"

namespace bergman {

/// Ratio D_n/D_{n-k} = product_{j=n-k+1}^{n} j/(j+alpha+1), the coefficient
/// picked up when the conjugate-monomial product zbar^k z^n is projected back
/// onto z^{n-k}.  Zero when k > n.
double projection_coefficient(int k, int n, WeightParam alpha);

/// Squared norm of the Hankel image of f under an anti-analytic polynomial
/// symbol conj(psi), psi(0) == 0, on the weighted disk space:
///
///   (I)  sum_{n,m>=0, k>=1} a_n conj(a_m) c_{k+m} conj(c_{k+n}) D_{n+m+k}
///   (II) sum_{k>=0} sum_{n,m>=k+1} a_n conj(a_m) c_{m-k} conj(c_{n-k})
///          * (D_{n+m-k} - D_n D_m / D_k)
///
/// Both k-sums terminate at the symbol degree.  At alpha = -1 the bracket in
/// (II) vanishes identically and only (I) survives.
double hankel_norm_sq(const PowerSeries& f, const PowerSeries& psi, WeightParam alpha);

/// Dense Hermitian matrix of the quadratic form behind hankel_norm_sq:
/// conj(a)^T M a = hankel_norm_sq(sum a_n z^n, psi, alpha) for coefficient
/// vectors of length dim.
struct HankelForm {
  PowerSeries symbol;
  WeightParam alpha;
  int dim;
  std::vector<Complex> matrix;  // row-major dim x dim

  Complex at(int m, int n) const { return matrix[static_cast<size_t>(m) * dim + n]; }
};

HankelForm build_form(const PowerSeries& psi, WeightParam alpha, int dim);

/// Largest eigenvalue of the form normalized by the monomial norms, i.e. the
/// squared operator norm of the Hankel operator compressed to polynomials of
/// degree < dim.  Compression from below: nondecreasing in dim, never above
/// the true squared norm.
///
/// Computed by a Krylov (Lanczos) dominant-eigenvalue iteration with a
/// deterministic all-ones start vector, run until the Ritz residual drops
/// below 1e-10 relative; failure to converge within the iteration cap throws
/// NonConvergenceError.
double operator_norm_sq(const HankelForm& form);

/// dirichlet_energy(psi) / (2 + alpha): the closed-form ceiling for
/// operator_norm_sq, attained by the coordinate symbol.
double theorem_bound_sq(const PowerSeries& psi, WeightParam alpha);

/// Pointwise value of the Hankel image at |z| < 1:
///   conj(psi(z)) f(z) - sum_{n>=1} sum_{k=0}^{n-1} (D_n/D_k) a_n conj(c_{n-k}) z^k.
/// For the coordinate symbol, d/dzbar of this field recovers f.
Complex evaluate_hankel(const PowerSeries& f, const PowerSeries& psi, WeightParam alpha,
                        Complex z);

}  // namespace bergman
