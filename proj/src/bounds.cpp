#include "bergman/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bergman {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTransportOrder = 512;
constexpr double kFlagTol = 1e-7;

bool is_coordinate(const PowerSeries& psi) {
  if (psi.coeff(1) != Complex(1.0)) return false;
  for (int k = 0; k <= psi.order(); ++k)
    if (k != 1 && psi.coeff(k) != 0.0) return false;
  return true;
}

}  // namespace

double commutator_norm_sq(const PowerSeries& F, const PowerSeries& psi_on_domain,
                          WeightParam alpha, int dim) {
  const PowerSeries psi_t = transport_symbol(psi_on_domain, F);
  return operator_norm_sq(build_form(psi_t, alpha, dim));
}

double rigidity(const PowerSeries& F, WeightParam alpha) {
  const PowerSeries g = detail::transported_one(F, alpha, kTransportOrder, true);
  const PowerSeries psi_t = transport_symbol(PowerSeries::monomial(1), F);
  return hankel_norm_sq(g, psi_t, alpha);
}

double rigidity_lower_bound(const PowerSeries& F, WeightParam alpha) {
  const PowerSeries g = detail::transported_one(F, alpha, kTransportOrder, true);
  const PowerSeries psi_t = transport_symbol(PowerSeries::monomial(1), F);
  return hankel_norm_sq(g, psi_t, alpha) / weighted_norm_sq(g, alpha);
}

double khavinson_lower_bound(const PowerSeries& F, int samples) {
  const double a = area(F);
  const double p = perimeter(F, samples);
  return 4.0 * a * a / (p * p);
}

double putnam_bound(const PowerSeries& F) {
  double s = 0.0;
  for (int n = 1; n <= F.order(); ++n) s += static_cast<double>(n) * std::norm(F.coeff(n));
  return s;
}

std::pair<double, double> st_venant_check(const PowerSeries& F) {
  const double a = area(F);
  return {kPi * rigidity(F, WeightParam(0.0)), a * a / (2.0 * kPi)};
}

BoundReport full_report(const PowerSeries& F, const PowerSeries& psi_on_domain,
                        WeightParam alpha, int dim, const std::string& domain_id,
                        int samples) {
  BoundReport r;
  r.domain_id = domain_id;
  r.alpha = alpha.value();
  r.dim = dim;

  const PowerSeries psi_t = transport_symbol(psi_on_domain, F);
  r.commutator_norm = operator_norm_sq(build_form(psi_t, alpha, dim));
  r.upper_sharp = dirichlet_energy(psi_t) / (2.0 + alpha.value());

  // Truncating the transported constant to degree < dim keeps the Rayleigh
  // vector inside the compression span, so the left inequality holds at the
  // working dim exactly, not just in the limit.
  const int span_order = std::min(dim - 1, kTransportOrder);
  const PowerSeries g = detail::transported_one(F, alpha, span_order, false);
  r.lower_rigidity = hankel_norm_sq(g, psi_t, alpha) / weighted_norm_sq(g, alpha);

  if (is_coordinate(psi_on_domain)) r.upper_putnam = putnam_bound(F);
  if (alpha.value() == -1.0) r.khavinson_lower = khavinson_lower_bound(F, samples);

  r.lower_le_commutator = r.lower_rigidity <= r.commutator_norm + kFlagTol;
  r.commutator_le_sharp = r.commutator_norm <= r.upper_sharp + kFlagTol;
  if (alpha.value() == 0.0 && r.upper_putnam)
    r.sharp_le_putnam = r.upper_sharp <= *r.upper_putnam + kFlagTol;
  return r;
}

}  // namespace bergman
