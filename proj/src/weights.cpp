#include "bergman/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

WeightParam::WeightParam(double alpha) : alpha_(alpha) {
  if (!(alpha >= -1.0))
    throw std::invalid_argument("WeightParam: alpha must satisfy alpha >= -1");
}

std::vector<double> monomial_norm_values(double alpha, int order) {
  if (order < 0) throw std::invalid_argument("monomial_norm_values: negative order");
  std::vector<double> d(static_cast<size_t>(order) + 1);
  d[0] = 1.0;
  for (int n = 1; n <= order; ++n)
    d[static_cast<size_t>(n)] = static_cast<double>(n) / (n + alpha + 1.0) * d[static_cast<size_t>(n - 1)];
  return d;
}

MonomialNorms monomial_norms(WeightParam alpha, int order) {
  return MonomialNorms{alpha.value(), monomial_norm_values(alpha.value(), order)};
}

double weighted_norm_sq(const PowerSeries& f, WeightParam alpha) {
  const std::vector<double> d = monomial_norm_values(alpha.value(), f.order());
  double s = 0.0;
  for (int n = 0; n <= f.order(); ++n) s += std::norm(f.coeff(n)) * d[static_cast<size_t>(n)];
  return s;
}

double dirichlet_energy(const PowerSeries& psi) {
  double s = 0.0;
  for (int m = 1; m <= psi.order(); ++m) s += static_cast<double>(m) * std::norm(psi.coeff(m));
  return s;
}

std::pair<double, double> lemma_sum_check(WeightParam alpha, int v) {
  if (v < 0) throw std::invalid_argument("lemma_sum_check: v must be nonnegative");
  const std::vector<double> d = monomial_norm_values(alpha.value(), v + 1);
  double lhs = 0.0;
  for (int l = 0; l <= v; ++l) lhs += 1.0 / d[static_cast<size_t>(l)];
  const double rhs = (v + 1.0) / (2.0 + alpha.value()) / d[static_cast<size_t>(v + 1)];
  return {lhs, rhs};
}

}  // namespace bergman
