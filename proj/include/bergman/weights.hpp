#pragma once

#include <utility>
#include <vector>

#include "bergman/power_series.hpp"

namespace bergman {

/// Weight exponent for the radial measure (1+a)(1-|z|^2)^a on the unit disk.
/// a > -1 is the weighted Bergman range; a == -1 is the Hardy-space limit,
/// where the measure degenerates to normalized arclength on the circle.
class WeightParam {
 public:
  explicit WeightParam(double alpha);
  double value() const { return alpha_; }

 private:
  double alpha_;
};

/// Squared monomial norms D_n = ||z^n||^2 for a fixed weight, n = 0..order.
struct MonomialNorms {
  double alpha;
  std::vector<double> values;  // values[n] = D_n

  double operator[](int n) const { return values[static_cast<size_t>(n)]; }
  int order() const { return static_cast<int>(values.size()) - 1; }
};

/// D_0 = 1, D_n = n/(n+alpha+1) * D_{n-1}.  At alpha = 0 this is 1/(n+1),
/// at alpha = -1 identically 1.
MonomialNorms monomial_norms(WeightParam alpha, int order);

/// Bare norm values without the wrapper, same recurrence.
std::vector<double> monomial_norm_values(double alpha, int order);

/// ||f||^2 = sum |a_n|^2 D_n over the stored coefficients.
double weighted_norm_sq(const PowerSeries& f, WeightParam alpha);

/// sum_{m>=1} m |c_m|^2, the squared unweighted Bergman norm of psi'.
double dirichlet_energy(const PowerSeries& psi);

/// Both sides of the partial-sum identity
///   sum_{l=0}^{v} 1/D_l = (v+1)/(2+alpha) * 1/D_{v+1},
/// returned as (lhs, rhs) so tests can compare them.
std::pair<double, double> lemma_sum_check(WeightParam alpha, int v);

}  // namespace bergman
